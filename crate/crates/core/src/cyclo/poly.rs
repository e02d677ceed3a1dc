use std::fmt;

use super::scalar::{CycScalar, FieldSpec};
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ(ζ_N), coefficients listed from the constant term up.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CycPoly {
    field: FieldSpec,
    coeffs: Vec<CycScalar>,
}

impl CycPoly {
    pub fn new(field: FieldSpec, coeffs: Vec<CycScalar>) -> Self {
        let mut p = CycPoly {
            field,
            coeffs: coeffs.into_iter().map(|c| c.lift(field.join(c.field()))).collect(),
        };
        if let Some(f) = p.coeffs.iter().map(|c| c.field()).max_by_key(|f| f.conductor()) {
            p.field = p.field.join(f);
            let field = p.field;
            p.coeffs.iter_mut().for_each(|c| *c = c.lift(field));
        }
        p.trim();
        p
    }

    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| CycScalar::from_int(field, c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        CycPoly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: CycScalar) -> Self {
        Self::new(c.field(), vec![c])
    }

    /// x − r
    pub fn linear(r: &CycScalar) -> Self {
        Self::new(r.field(), vec![-r, CycScalar::one(r.field())])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycScalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &CycPoly) -> CycPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let field = self.field.join(other.field);
        let zero = CycScalar::zero(field);
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
            .collect();
        CycPoly::new(field, coeffs)
    }

    pub fn neg(&self) -> CycPoly {
        CycPoly { field: self.field, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &CycPoly) -> CycPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &CycPoly) -> CycPoly {
        let field = self.field.join(other.field);
        if self.is_zero() || other.is_zero() {
            return CycPoly::zero(field);
        }
        let mut out = vec![CycScalar::zero(field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        CycPoly::new(field, out)
    }

    pub fn scale(&self, c: &CycScalar) -> CycPoly {
        CycPoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder; errors on a zero divisor.
    pub fn divmod(&self, divisor: &CycPoly) -> Result<(CycPoly, CycPoly)> {
        let field = self.field.join(divisor.field);
        let lead_inv = divisor.leading().ok_or(Error::DivisionByZero)?.inv()?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((CycPoly::zero(field), CycPoly::new(field, rem)));
        }
        let mut quot = vec![CycScalar::zero(field); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((CycPoly::new(field, quot), CycPoly::new(field, rem)))
    }

    pub fn monic(&self) -> CycPoly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &CycPoly) -> CycPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &CycScalar) -> CycScalar {
        let mut acc = CycScalar::zero(self.field.join(x.field()));
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> CycPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &CycScalar::from_int(self.field, i as i64))
            .collect();
        CycPoly::new(self.field, coeffs)
    }

    /// p / gcd(p, p′), monic.
    pub fn squarefree_part(&self) -> CycPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divmod(&g).expect("gcd is nonzero").0.monic()
    }

    /// Image under ζ ↦ ζ^j applied to every coefficient.
    pub fn conj(&self, j: u32) -> Result<CycPoly> {
        Ok(CycPoly::new(
            self.field,
            self.coeffs.iter().map(|c| c.conj(j)).collect::<Result<Vec<_>>>()?,
        ))
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({})x^{}", c, i))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldSpec {
        FieldSpec::new(8).unwrap()
    }

    #[test]
    fn gcd_of_x2_minus_1_and_x_minus_1() {
        let p = CycPoly::from_ints(f8(), &[-1, 0, 1]);
        let q = CycPoly::from_ints(f8(), &[-1, 1]);
        assert_eq!(p.gcd(&q), q);
    }

    #[test]
    fn divmod_x3_by_x2() {
        let p = CycPoly::from_ints(f8(), &[0, 0, 0, 1]);
        let q = CycPoly::from_ints(f8(), &[0, 0, 1]);
        let (quot, rem) = p.divmod(&q).unwrap();
        assert_eq!(quot, CycPoly::from_ints(f8(), &[0, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divmod_by_zero_fails() {
        let p = CycPoly::from_ints(f8(), &[1, 1]);
        assert!(matches!(p.divmod(&CycPoly::zero(f8())), Err(Error::DivisionByZero)));
    }

    #[test]
    fn eval_x2_plus_1_at_i() {
        let p = CycPoly::from_ints(f8(), &[1, 0, 1]);
        let i = CycScalar::imag_unit(f8()).unwrap();
        // oracle: substitute by hand, i·i + 1
        assert!((&(&i * &i) + &CycScalar::one(f8())).is_zero());
        assert!(p.eval(&i).is_zero());
    }

    #[test]
    fn squarefree_part_removes_repeats() {
        // (x − 1)²(x + 1)
        let p = CycPoly::from_ints(f8(), &[1, -1, -1, 1]);
        assert_eq!(p.squarefree_part(), CycPoly::from_ints(f8(), &[-1, 0, 1]));
    }
}
