use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(String),
    /// A quoted "p/q" coordinate inside a scalar array.
    Str(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Hash,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn lex(src: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (li, line) in src.lines().enumerate() {
        let line_no = li + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let push = |out: &mut Vec<Spanned>, tok| out.push(Spanned { tok, line: line_no, col });
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '-' && chars.get(i + 1) == Some(&'-') {
                break;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                push(&mut out, Tok::Ident(chars[start..i].iter().collect()));
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                push(&mut out, Tok::Int(chars[start..i].iter().collect()));
                continue;
            }
            if c == '"' {
                let start = i + 1;
                i += 1;
                while i < chars.len() && chars[i] != '"' {
                    i += 1;
                }
                if i == chars.len() {
                    return Err(Error::Syntax { line: line_no, col, msg: "unterminated string".into() });
                }
                push(&mut out, Tok::Str(chars[start..i].iter().collect()));
                i += 1;
                continue;
            }
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                '#' => Tok::Hash,
                '=' => Tok::Eq,
                other => {
                    return Err(Error::Syntax { line: line_no, col, msg: format!("unexpected character '{other}'") });
                }
            };
            push(&mut out, tok);
            i += 1;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_and_comments() {
        let t = lex("gens g, x -- comment\nrels g^2 - 1").unwrap();
        assert_eq!(t.len(), 10);
        assert_eq!(t[5].tok, Tok::Ident("g".into()));
        assert_eq!((t[5].line, t[5].col), (2, 6));
    }

    #[test]
    fn bad_character_position() {
        match lex("gens g | rels") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (1, 8)),
            other => panic!("{other:?}"),
        }
    }
}
