use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Conductors supported by the scalar layer.
pub const CONDUCTORS: [u32; 5] = [2, 4, 8, 16, 32];

/// Default conductor: ℚ(ζ₈) contains i, √2 and ζ₈ itself.
pub const DEFAULT_CONDUCTOR: u32 = 8;

/// The field ℚ(ζ_N) for N a power of two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    conductor: u32,
}

impl FieldSpec {
    pub fn new(conductor: u32) -> Result<Self> {
        if CONDUCTORS.contains(&conductor) {
            Ok(FieldSpec { conductor })
        } else {
            Err(Error::InvalidField(conductor))
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// φ(N), which for a power of two is N/2 (and 1 for N = 2).
    pub fn degree(&self) -> usize {
        (self.conductor / 2).max(1) as usize
    }

    /// Odd residues mod N: the Galois group and the embedding indices.
    pub fn galois_indices(&self) -> Vec<u32> {
        (1..self.conductor.max(2)).step_by(2).collect()
    }

    /// The larger of two fields (power-of-two cyclotomic fields form a chain).
    pub fn join(self, other: FieldSpec) -> FieldSpec {
        if self.conductor >= other.conductor {
            self
        } else {
            other
        }
    }

    /// Field spec from the `HOPFKIT_FIELD` environment variable, or the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var("HOPFKIT_FIELD") {
            Ok(v) => {
                let n: u32 = v.trim().parse().map_err(|_| Error::InvalidFieldText(v.clone()))?;
                FieldSpec::new(n)
            }
            Err(_) => Ok(FieldSpec::default()),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { conductor: DEFAULT_CONDUCTOR }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cyclotomic({})", self.conductor)
    }
}

/// An element of ℚ(ζ_N), stored as integer numerators over a common positive
/// denominator in the power basis 1, ζ, …, ζ^{d−1}. The relation ζ^d = −1
/// (d = N/2) keeps the representation canonical.
#[derive(Clone)]
pub struct CycScalar {
    field: FieldSpec,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    pub fn zero(field: FieldSpec) -> Self {
        CycScalar {
            field,
            num: vec![BigInt::zero(); field.degree()],
            den: BigInt::one(),
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: FieldSpec, n: i64) -> Self {
        let mut s = Self::zero(field);
        s.num[0] = BigInt::from(n);
        s
    }

    pub fn from_rational(field: FieldSpec, q: &BigRational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree()];
        num[0] = q.numer().clone();
        let mut s = CycScalar { field, num, den: q.denom().clone() };
        s.normalize();
        s
    }

    pub fn from_ratio(field: FieldSpec, p: i64, q: i64) -> Self {
        Self::from_rational(field, &BigRational::new(p.into(), q.into()))
    }

    /// Build from rational coordinates in the power basis; extra coordinates
    /// beyond the degree are reduced with ζ^d = −1.
    pub fn from_coords(field: FieldSpec, coords: &[BigRational]) -> Self {
        let mut acc = Self::zero(field);
        for (e, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += &(&Self::zeta_pow(field, e as i64) * &Self::from_rational(field, c));
        }
        acc
    }

    /// ζ_N^e for any integer exponent.
    pub fn zeta_pow(field: FieldSpec, e: i64) -> Self {
        let n = field.conductor as i64;
        let d = field.degree() as i64;
        let mut e = e.rem_euclid(n);
        let mut sign = 1;
        // for N = 2, ζ = −1 and d = 1
        while e >= d {
            e -= d;
            sign = -sign;
        }
        let mut s = Self::zero(field);
        s.num[e as usize] = BigInt::from(sign);
        s
    }

    pub fn zeta(field: FieldSpec) -> Self {
        Self::zeta_pow(field, 1)
    }

    /// i = ζ_N^{N/4}; needs N ≥ 4.
    pub fn imag_unit(field: FieldSpec) -> Result<Self> {
        if field.conductor < 4 {
            return Err(Error::NotInField("i".into(), field.conductor));
        }
        Ok(Self::zeta_pow(field, (field.conductor / 4) as i64))
    }

    /// √2 = ζ₈ − ζ₈³ (lifted); needs N ≥ 8.
    pub fn sqrt2(field: FieldSpec) -> Result<Self> {
        if field.conductor < 8 {
            return Err(Error::NotInField("sqrt(2)".into(), field.conductor));
        }
        let k = (field.conductor / 8) as i64;
        Ok(&Self::zeta_pow(field, k) - &Self::zeta_pow(field, 3 * k))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Rational coordinates in lowest terms.
    pub fn coords(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Some(q) when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Re-express in a larger field of the chain.
    pub fn lift(&self, target: FieldSpec) -> Self {
        if target.conductor == self.field.conductor {
            return self.clone();
        }
        assert!(
            target.conductor > self.field.conductor,
            "cannot lift from {} down to {}",
            self.field,
            target
        );
        let step = (target.conductor / self.field.conductor.max(1)) as i64;
        let mut out = Self::zero(target);
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // ζ_N = ζ_M^{M/N}; for N = 2 the coordinate is a plain rational
            let z = if self.field.conductor == 2 {
                Self::one(target)
            } else {
                Self::zeta_pow(target, e as i64 * step)
            };
            for (o, zc) in out.num.iter_mut().zip(z.num.iter()) {
                *o += zc * c;
            }
        }
        out.den = self.den.clone();
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for n in self.num.iter_mut() {
                *n = -n.clone();
            }
        }
        if self.den.is_one() {
            return;
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(n);
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for n in self.num.iter_mut() {
                *n = &*n / &g;
            }
        }
    }

    fn aligned<'a>(a: &'a CycScalar, b: &'a CycScalar) -> (FieldSpec, std::borrow::Cow<'a, CycScalar>, std::borrow::Cow<'a, CycScalar>) {
        use std::borrow::Cow;
        if a.field == b.field {
            (a.field, Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let f = a.field.join(b.field);
            (f, Cow::Owned(a.lift(f)), Cow::Owned(b.lift(f)))
        }
    }

    fn add_impl(&self, other: &CycScalar, sign: i32) -> CycScalar {
        let (field, a, b) = Self::aligned(self, other);
        let mut num = Vec::with_capacity(field.degree());
        let den;
        if a.den == b.den {
            for (x, y) in a.num.iter().zip(b.num.iter()) {
                num.push(if sign > 0 { x + y } else { x - y });
            }
            den = a.den.clone();
        } else {
            for (x, y) in a.num.iter().zip(b.num.iter()) {
                let l = x * &b.den;
                let r = y * &a.den;
                num.push(if sign > 0 { l + r } else { l - r });
            }
            den = &a.den * &b.den;
        }
        let mut s = CycScalar { field, num, den };
        s.normalize();
        s
    }

    fn mul_impl(&self, other: &CycScalar) -> CycScalar {
        let (field, a, b) = Self::aligned(self, other);
        let d = field.degree();
        let mut num = vec![BigInt::zero(); d];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let p = x * y;
                let k = i + j;
                if k < d {
                    num[k] += p;
                } else {
                    num[k - d] -= p;
                }
            }
        }
        let mut s = CycScalar { field, num, den: &a.den * &b.den };
        s.normalize();
        s
    }

    /// Galois automorphism ζ ↦ ζ^j, j odd.
    pub fn conj(&self, j: u32) -> Result<CycScalar> {
        let n = self.field.conductor;
        if j % 2 == 0 || j >= n.max(2) {
            return Err(Error::InvalidGaloisIndex(j, n));
        }
        if n == 2 {
            return Ok(self.clone());
        }
        let mut out = Self::zero(self.field);
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let z = Self::zeta_pow(self.field, e as i64 * j as i64);
            for (o, zc) in out.num.iter_mut().zip(z.num.iter()) {
                *o += zc * c;
            }
        }
        out.den = self.den.clone();
        out.normalize();
        Ok(out)
    }

    /// Field norm down to ℚ: the product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        let mut acc = self.clone();
        for j in self.field.galois_indices().into_iter().skip(1) {
            acc = &acc * &self.conj(j).expect("odd index");
        }
        acc.as_rational().expect("norm of a cyclotomic element is rational")
    }

    pub fn inv(&self) -> Result<CycScalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // a⁻¹ = (∏_{j≠1} σ_j(a)) / N(a)
        let mut co = Self::one(self.field);
        for j in self.field.galois_indices().into_iter().skip(1) {
            co = &co * &self.conj(j)?;
        }
        let norm = (&co * self).as_rational().expect("rational norm");
        Ok(&co * &Self::from_rational(self.field, &norm.recip()))
    }

    pub fn checked_div(&self, other: &CycScalar) -> Result<CycScalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> CycScalar {
        let mut acc = Self::one(self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Complex value under the embedding ζ ↦ e^{2πik/N} (k odd). The result is
    /// a display/heuristic approximation, accurate to about 2⁻⁵⁰ relative to the
    /// coordinate size; it never feeds an exact path.
    pub fn embed(&self, k: u32) -> Result<Complex64> {
        let n = self.field.conductor;
        if k % 2 == 0 || k >= n.max(2) {
            return Err(Error::InvalidGaloisIndex(k, n));
        }
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut z = Complex64::new(0.0, 0.0);
        for (e, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * ((e as u64 * k as u64) % n as u64) as f64 / n as f64;
            let root = if n == 2 { Complex64::new(1.0, 0.0) } else { Complex64::from_polar(1.0, angle) };
            z += root * (c.to_f64().unwrap_or(f64::NAN) / den);
        }
        Ok(z)
    }

    /// Canonical text form: one "p/q" string per power-basis coordinate.
    pub fn to_text(&self) -> Vec<String> {
        self.coords()
            .iter()
            .map(|q| format!("{}/{}", q.numer(), q.denom()))
            .collect()
    }

    /// Parse the text form. The field is the one implied by the coordinate count
    /// unless a (larger) target field is given.
    pub fn from_text(items: &[String], target: Option<FieldSpec>) -> Result<CycScalar> {
        let n = items.len();
        let conductor = if n == 1 { 2 } else { 2 * n as u32 };
        let field = FieldSpec::new(conductor).map_err(|_| Error::InvalidScalarText(items.join(",")))?;
        let mut coords = Vec::with_capacity(n);
        for s in items {
            coords.push(parse_rational(s).ok_or_else(|| Error::InvalidScalarText(s.clone()))?);
        }
        let v = CycScalar::from_coords(field, &coords);
        match target {
            Some(t) if t.conductor > field.conductor => Ok(v.lift(t)),
            Some(t) if t.conductor < field.conductor => Err(Error::FieldMismatch(field.conductor, t.conductor)),
            _ => Ok(v),
        }
    }
}

/// Parse "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.field == other.field {
            self.den == other.den && self.num == other.num
        } else {
            let (_, a, b) = Self::aligned(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, q) in self.coords().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (e, a.is_one()) {
                (0, _) => write!(f, "{}", a)?,
                (_, true) => write!(f, "z^{}", e)?,
                (_, false) => write!(f, "{}*z^{}", a, e)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &'a CycScalar) -> CycScalar {
                let f: fn(&CycScalar, &CycScalar) -> CycScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                let f: fn(&CycScalar, &CycScalar) -> CycScalar = $body;
                f(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, 1));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, -1));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if rhs.is_zero() {
            return;
        }
        if self.field == rhs.field && self.den == rhs.den && self.den.is_one() {
            for (x, y) in self.num.iter_mut().zip(rhs.num.iter()) {
                *x += y;
            }
        } else {
            *self = self.add_impl(rhs, 1);
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        if rhs.is_zero() {
            return;
        }
        *self = self.add_impl(rhs, -1);
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            field: self.field,
            num: self.num.iter().map(|n| -n).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldSpec {
        FieldSpec::new(8).unwrap()
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn zeta_squared_is_i() {
        let z = CycScalar::zeta(f8());
        let zz = &z * &z;
        assert_eq!(zz.to_text(), vec!["0/1", "0/1", "1/1", "0/1"]);
        assert_eq!(zz, CycScalar::imag_unit(f8()).unwrap());
    }

    #[test]
    fn inverse_of_zeta() {
        let z = CycScalar::zeta(f8());
        let expect = -CycScalar::zeta_pow(f8(), 3);
        assert_eq!(z.inv().unwrap(), expect);
    }

    #[test]
    fn embed_one_plus_sqrt2() {
        let s = &CycScalar::one(f8()) + &CycScalar::sqrt2(f8()).unwrap();
        // oracle: direct complex evaluation at e^{iπ/4}
        let z = num_complex::Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let oracle = 1.0 + z - z * z * z;
        let got = s.embed(1).unwrap();
        assert!((got - oracle).norm() < 1e-14);
        assert!((got.re - 2.414213562).abs() < 1e-9);
        assert!(got.im.abs() < 1e-14);
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = CycScalar::sqrt2(f8()).unwrap();
        assert_eq!(&s * &s, CycScalar::from_int(f8(), 2));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert!(matches!(CycScalar::zero(f8()).inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn invalid_galois_index() {
        let z = CycScalar::zeta(f8());
        assert!(matches!(z.conj(2), Err(Error::InvalidGaloisIndex(2, 8))));
        assert!(matches!(z.embed(9), Err(Error::InvalidGaloisIndex(9, 8))));
        assert_eq!(z.conj(3).unwrap(), CycScalar::zeta_pow(f8(), 3));
    }

    #[test]
    fn lifting_preserves_value() {
        let f4 = FieldSpec::new(4).unwrap();
        let f16 = FieldSpec::new(16).unwrap();
        let i4 = CycScalar::imag_unit(f4).unwrap();
        assert_eq!(i4.lift(f16), CycScalar::imag_unit(f16).unwrap());
        // mixed-field arithmetic lifts to the larger field
        let s = &i4 + &CycScalar::zeta(f8());
        assert_eq!(s.field(), f8());
        assert_eq!(CycScalar::sqrt2(f8()).unwrap().lift(f16), CycScalar::sqrt2(f16).unwrap());
        let minus_one = CycScalar::zeta(FieldSpec::new(2).unwrap());
        assert_eq!(minus_one.lift(f8()), CycScalar::from_int(f8(), -1));
    }

    #[test]
    fn text_round_trip() {
        let s = CycScalar::from_coords(f8(), &[q(1, 2), q(0, 1), q(-3, 4), q(5, 1)]);
        let t = s.to_text();
        assert_eq!(t, vec!["1/2", "0/1", "-3/4", "5/1"]);
        assert_eq!(CycScalar::from_text(&t, None).unwrap(), s);
        assert!(CycScalar::from_text(&["1/0".into()], None).is_err());
    }

    #[test]
    fn normalization_keeps_lowest_terms() {
        let a = CycScalar::from_coords(f8(), &[q(1, 2), q(1, 2), q(0, 1), q(0, 1)]);
        let b = &a + &a;
        assert_eq!(b.to_text(), vec!["1/1", "1/1", "0/1", "0/1"]);
        assert!((&a - &a).is_zero());
    }
}
