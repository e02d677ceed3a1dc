use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::cyclo::{CycScalar, FieldSpec};

/// Word in the generators, compared degree-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<usize>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn one() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// First position where `sub` occurs.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        if sub.len() > self.len() {
            return None;
        }
        (0..=self.len() - sub.len()).find(|&p| self.0[p..p + sub.len()] == sub.0[..])
    }

    pub fn positions(&self, sub: &Word) -> Vec<usize> {
        if sub.len() > self.len() {
            return Vec::new();
        }
        (0..=self.len() - sub.len()).filter(|&p| self.0[p..p + sub.len()] == sub.0[..]).collect()
    }

    /// Label such as "g^2x"; multi-letter generators are joined with '*'.
    pub fn label(&self, names: &[String]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let sep = if names.iter().all(|n| n.chars().count() == 1) { "" } else { "*" };
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let g = self.0[i];
            let mut j = i;
            while j < self.len() && self.0[j] == g {
                j += 1;
            }
            let n = j - i;
            parts.push(if n == 1 { names[g].clone() } else { format!("{}^{}", names[g], n) });
            i = j;
        }
        parts.join(sep)
    }
}

/// Noncommutative polynomial: sparse map word → coefficient, zero terms removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly {
    pub field: FieldSpec,
    pub terms: BTreeMap<Word, CycScalar>,
}

impl NcPoly {
    pub fn zero(field: FieldSpec) -> NcPoly {
        NcPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(c: CycScalar) -> NcPoly {
        NcPoly::monomial(c, Word::one())
    }

    pub fn monomial(c: CycScalar, w: Word) -> NcPoly {
        let field = c.field();
        let mut p = NcPoly::zero(field);
        p.add_term(w, &c);
        p
    }

    pub fn generator(field: FieldSpec, g: usize) -> NcPoly {
        NcPoly::monomial(CycScalar::one(field), Word(vec![g]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let c = c.lift(self.field);
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn leading(&self) -> Option<(&Word, &CycScalar)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(&-&CycScalar::one(self.field))
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CycScalar) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), &(x * c));
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), &(x * y));
            }
        }
        out
    }

    /// u · self · v
    pub fn sandwich(&self, u: &Word, v: &Word) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (w, x) in &self.terms {
            out.add_term(u.concat(w).concat(v), x);
        }
        out
    }

    pub fn pow(&self, n: u32) -> NcPoly {
        let mut out = NcPoly::constant(CycScalar::one(self.field));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deglex_order() {
        assert!(Word(vec![1]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn labels() {
        let names = vec!["g".to_string(), "x".to_string()];
        assert_eq!(Word(vec![0, 0, 1]).label(&names), "g^2x");
        assert_eq!(Word::one().label(&names), "1");
    }
}
