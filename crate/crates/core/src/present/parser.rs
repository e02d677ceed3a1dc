use super::lexer::{lex, Spanned, Tok};
use super::poly::{NcPoly, Word};
use crate::cyclo::{parse_rational, CycScalar, FieldSpec};
use crate::error::{Error, Result};

const KEYWORDS: [&str; 9] = ["algebra", "over", "cyclotomic", "gens", "rels", "delta", "counit", "i", "zeta"];

/// Σ left ⊗ right.
pub type TensorSum = Vec<(NcPoly, NcPoly)>;

/// Generators, relations and coalgebra data as written in a `.hpf` source.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub name: String,
    pub field: FieldSpec,
    pub gens: Vec<String>,
    pub rels: Vec<NcPoly>,
    /// Aligned with `gens`.
    pub delta: Vec<TensorSum>,
    pub counit: Vec<CycScalar>,
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    field: FieldSpec,
    gens: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col),
            None => self.toks.last().map(|s| (s.line, s.col + 1)).unwrap_or((1, 1)),
        };
        Err(Error::Syntax { line, col, msg: msg.into() })
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.peek().cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {want:?}"))
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(format!("expected '{kw}'")),
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) if !KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => self.err("expected a name"),
        }
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek() {
            Some(Tok::Int(s)) => {
                let v = s.parse().or_else(|_| self.err("integer too large"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn at_statement_start(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if ["gens", "rels", "delta", "counit", "algebra"].contains(&s.as_str()))
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(Tok::Ident(s)) => !["algebra", "over", "cyclotomic", "gens", "rels", "delta", "counit"].contains(&s.as_str()),
            Some(Tok::Int(_) | Tok::LParen | Tok::LBracket) => true,
            _ => false,
        }
    }

    fn scalar_array(&mut self) -> Result<CycScalar> {
        self.expect(Tok::LBracket)?;
        let mut items = Vec::new();
        loop {
            match self.next() {
                Some(Tok::Str(s)) => items.push(s),
                _ => {
                    self.pos -= 1;
                    return self.err("expected a quoted coordinate");
                }
            }
            match self.next() {
                Some(Tok::Comma) => continue,
                Some(Tok::RBracket) => break,
                _ => {
                    self.pos -= 1;
                    return self.err("expected ',' or ']'");
                }
            }
        }
        CycScalar::from_text(&items, Some(self.field))
    }

    fn atom(&mut self) -> Result<NcPoly> {
        let f = self.field;
        match self.peek().cloned() {
            Some(Tok::Ident(s)) if s == "i" => {
                self.pos += 1;
                Ok(NcPoly::constant(CycScalar::imag_unit(f)?))
            }
            Some(Tok::Ident(s)) if s == "zeta" => {
                self.pos += 1;
                Ok(NcPoly::constant(CycScalar::zeta(f)))
            }
            Some(Tok::Ident(s)) => match self.gens.iter().position(|g| *g == s) {
                Some(k) => {
                    self.pos += 1;
                    Ok(NcPoly::generator(f, k))
                }
                None => self.err(format!("unknown generator '{s}'")),
            },
            Some(Tok::Int(s)) => {
                self.pos += 1;
                let mut text = s.clone();
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Int(d)) => text = format!("{s}/{d}"),
                        _ => {
                            self.pos -= 1;
                            return self.err("expected a denominator");
                        }
                    }
                }
                match parse_rational(&text) {
                    Some(q) => Ok(NcPoly::constant(CycScalar::from_rational(f, &q))),
                    None => self.err(format!("bad rational '{text}'")),
                }
            }
            Some(Tok::LBracket) => Ok(NcPoly::constant(self.scalar_array()?)),
            Some(Tok::LParen) => {
                self.pos += 1;
                let p = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(p)
            }
            _ => self.err("expected a generator, scalar or '('"),
        }
    }

    fn factor(&mut self) -> Result<NcPoly> {
        let a = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let n = self.int()?;
            return Ok(a.pow(n as u32));
        }
        Ok(a)
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut p = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                p = p.mul(&self.factor()?);
            } else if self.starts_factor() {
                p = p.mul(&self.factor()?);
            } else {
                return Ok(p);
            }
        }
    }

    fn sign(&mut self) -> bool {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        }
    }

    fn sum(&mut self) -> Result<NcPoly> {
        let neg = self.sign();
        let t = self.term()?;
        let mut p = if neg { t.neg() } else { t };
        while matches!(self.peek(), Some(Tok::Plus | Tok::Minus)) {
            let neg = self.sign();
            let t = self.term()?;
            p = if neg { p.sub(&t) } else { p.add(&t) };
        }
        Ok(p)
    }

    fn tensor_sum(&mut self) -> Result<TensorSum> {
        let mut out = Vec::new();
        let mut first = true;
        while first || matches!(self.peek(), Some(Tok::Plus | Tok::Minus)) {
            first = false;
            let neg = self.sign();
            let left = self.term()?;
            self.expect(Tok::Hash)?;
            let right = self.term()?;
            out.push((if neg { left.neg() } else { left }, right));
        }
        Ok(out)
    }

    fn constant(&mut self) -> Result<CycScalar> {
        let p = self.sum()?;
        if p.terms.keys().any(|w| !w.is_empty()) {
            return self.err("expected a scalar");
        }
        Ok(p.terms.get(&Word::one()).cloned().unwrap_or_else(|| CycScalar::zero(self.field)))
    }
}

pub fn parse_presentation(src: &str) -> Result<Presentation> {
    let mut p = Parser { toks: lex(src)?, pos: 0, field: FieldSpec::default(), gens: Vec::new() };
    p.keyword("algebra")?;
    let name = p.ident()?;
    p.keyword("over")?;
    p.keyword("cyclotomic")?;
    p.expect(Tok::LParen)?;
    let n = p.int()?;
    p.field = FieldSpec::new(n as u32)?;
    p.expect(Tok::RParen)?;
    let mut rels = Vec::new();
    let mut delta: Vec<Option<TensorSum>> = Vec::new();
    let mut counit: Vec<Option<CycScalar>> = Vec::new();
    let mut seen_gens = false;
    while p.peek().is_some() {
        match p.peek() {
            Some(Tok::Ident(s)) if s == "gens" => {
                if seen_gens {
                    return p.err("generators already declared");
                }
                seen_gens = true;
                p.pos += 1;
                loop {
                    let g = p.ident()?;
                    if p.gens.contains(&g) {
                        return Err(Error::DuplicateGenerator(g));
                    }
                    p.gens.push(g);
                    if p.peek() != Some(&Tok::Comma) {
                        break;
                    }
                    p.pos += 1;
                }
                delta = vec![None; p.gens.len()];
                counit = vec![None; p.gens.len()];
            }
            Some(Tok::Ident(s)) if s == "rels" => {
                p.pos += 1;
                loop {
                    rels.push(p.sum()?);
                    if p.peek() != Some(&Tok::Comma) {
                        break;
                    }
                    p.pos += 1;
                }
            }
            Some(Tok::Ident(s)) if s == "delta" => {
                p.pos += 1;
                let g = p.ident()?;
                let Some(k) = p.gens.iter().position(|x| *x == g) else {
                    p.pos -= 1;
                    return p.err(format!("unknown generator '{g}'"));
                };
                if delta[k].is_some() {
                    p.pos -= 1;
                    return p.err(format!("comultiplication of '{g}' given twice"));
                }
                p.expect(Tok::Eq)?;
                delta[k] = Some(p.tensor_sum()?);
            }
            Some(Tok::Ident(s)) if s == "counit" => {
                p.pos += 1;
                loop {
                    let g = p.ident()?;
                    let Some(k) = p.gens.iter().position(|x| *x == g) else {
                        p.pos -= 1;
                        return p.err(format!("unknown generator '{g}'"));
                    };
                    p.expect(Tok::Eq)?;
                    counit[k] = Some(p.constant()?);
                    if p.peek() != Some(&Tok::Comma) {
                        break;
                    }
                    p.pos += 1;
                }
            }
            _ => return p.err("expected 'gens', 'rels', 'delta' or 'counit'"),
        }
        if p.peek().is_some() && !p.at_statement_start() {
            return p.err("unexpected token");
        }
    }
    if !seen_gens {
        return p.err("missing 'gens'");
    }
    let delta = delta
        .into_iter()
        .zip(&p.gens)
        .map(|(d, g)| d.ok_or_else(|| Error::MissingDelta(g.clone())))
        .collect::<Result<_>>()?;
    let counit = counit
        .into_iter()
        .zip(&p.gens)
        .map(|(c, g)| c.ok_or_else(|| Error::MissingCounit(g.clone())))
        .collect::<Result<_>>()?;
    Ok(Presentation { name, field: p.field, gens: p.gens, rels, delta, counit })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SWEEDLER: &str = "algebra T over cyclotomic(8)
gens g, x
rels g^2 - 1, x^2, x*g + g*x
delta g = g # g
delta x = x # g + 1 # x
counit g = 1, x = 0
";

    #[test]
    fn sweedler_source() {
        let p = parse_presentation(SWEEDLER).unwrap();
        assert_eq!(p.gens, vec!["g", "x"]);
        assert_eq!(p.rels.len(), 3);
        assert_eq!(p.delta[1].len(), 2);
        assert!(p.counit[0].is_one() && p.counit[1].is_zero());
    }

    #[test]
    fn syntax_error_position() {
        match parse_presentation("algebra T over cyclotomic(8)\ngens g | rels") {
            Err(Error::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 8)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn duplicate_and_missing() {
        let dup = "algebra T over cyclotomic(8)\ngens g, g";
        assert!(matches!(parse_presentation(dup), Err(Error::DuplicateGenerator(_))));
        let missing = "algebra T over cyclotomic(8)\ngens g\nrels g^2 - 1\ncounit g = 1";
        assert!(matches!(parse_presentation(missing), Err(Error::MissingDelta(_))));
    }

    #[test]
    fn scalar_forms() {
        let src = "algebra Q over cyclotomic(8)\ngens g\nrels g^4 - 1\ndelta g = g # g\ncounit g = 1\nrels i*g - [\"0/1\",\"1/1\",\"0/1\",\"0/1\"]^2 g, 1/2 g - 2/4 g";
        let p = parse_presentation(src).unwrap();
        assert!(p.rels[1].is_zero());
        assert!(p.rels[2].is_zero());
    }
}
