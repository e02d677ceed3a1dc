//! Root extraction: numeric isolation under every embedding, exact
//! reconstruction of power-basis coordinates, exact verification.
//!
//! Returned roots are always exact roots. Completeness is only claimed when
//! the multiplicities found by exact division add up to the degree.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::CycPoly;
use super::scalar::{CycScalar, FieldSpec, CONDUCTORS};

/// Default bound on reconstructed denominators.
pub const DEFAULT_DENOM_BOUND: u64 = 1 << 16;

/// Cap on the number of embedding-matched candidate tuples examined.
const MAX_COMBINATIONS: usize = 400_000;

#[derive(Clone, Debug)]
pub struct RootSet {
    /// Distinct exact roots with their multiplicities in the input polynomial.
    pub roots: Vec<(CycScalar, usize)>,
    pub certified_complete: bool,
}

impl RootSet {
    pub fn distinct(&self) -> Vec<CycScalar> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }
}

/// All roots of `p` in its field with denominators bounded by `denom_bound`.
pub fn verified_roots(p: &CycPoly, denom_bound: u64) -> RootSet {
    let Some(deg) = p.degree() else {
        return RootSet { roots: Vec::new(), certified_complete: false };
    };
    if deg == 0 {
        return RootSet { roots: Vec::new(), certified_complete: true };
    }
    let sf = p.squarefree_part();
    let mut distinct: Vec<CycScalar> = Vec::new();
    if sf.degree() == Some(1) {
        distinct.push(-&sf.coeffs()[0]);
    } else {
        for cand in candidates(&sf, denom_bound) {
            if sf.eval(&cand).is_zero() && !distinct.contains(&cand) {
                distinct.push(cand);
            }
        }
    }
    let mut roots = Vec::new();
    let mut total = 0;
    for r in distinct {
        let lin = CycPoly::linear(&r);
        let mut rest = p.clone();
        let mut mult = 0;
        loop {
            let (q, rem) = rest.divmod(&lin).expect("linear divisor");
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        debug_assert!(mult > 0);
        total += mult;
        roots.push((r, mult));
    }
    RootSet { roots, certified_complete: total == deg }
}

/// Smallest conductor (≥ the current one) in which `p` splits completely, if any.
pub fn splitting_conductor(p: &CycPoly) -> Option<u32> {
    CONDUCTORS
        .iter()
        .copied()
        .filter(|&n| n >= p.field().conductor())
        .find(|&n| {
            let f = FieldSpec::new(n).expect("supported conductor");
            let lifted = CycPoly::new(f, p.coeffs().iter().map(|c| c.lift(f)).collect());
            verified_roots(&lifted, DEFAULT_DENOM_BOUND).certified_complete
        })
}

fn candidates(p: &CycPoly, denom_bound: u64) -> Vec<CycScalar> {
    let field = p.field();
    let n = field.conductor();
    let d = field.degree();
    // embeddings up to complex conjugation
    let half: Vec<u32> = if n == 2 { vec![1] } else { (1..n / 2).step_by(2).collect() };
    let mut per_embedding: Vec<Vec<Complex64>> = Vec::with_capacity(half.len());
    for &k in &half {
        let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| c.embed(k).expect("odd index")).collect();
        per_embedding.push(numeric_roots(&coeffs));
    }
    let sizes: Vec<usize> = per_embedding.iter().map(Vec::len).collect();
    let total: usize = sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s)).unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut idx = vec![0usize; half.len()];
    for _ in 0..total.min(MAX_COMBINATIONS) {
        let values: Vec<Complex64> = idx.iter().enumerate().map(|(e, &i)| per_embedding[e][i]).collect();
        if let Some(x) = reconstruct(field, &half, &values, d, denom_bound) {
            out.push(x);
        }
        // odometer increment
        for e in (0..idx.len()).rev() {
            idx[e] += 1;
            if idx[e] < sizes[e] {
                break;
            }
            idx[e] = 0;
        }
    }
    out
}

fn reconstruct(field: FieldSpec, half: &[u32], values: &[Complex64], d: usize, bound: u64) -> Option<CycScalar> {
    let n = field.conductor();
    if n == 2 {
        return rationalize(values[0].re, bound).map(|q| CycScalar::from_rational(field, &q));
    }
    // c_j = (1/d) Σ_{k odd} σ_k(x) ζ^{−jk}, using σ_{N−k}(x) = conj(σ_k(x))
    let mut coords = Vec::with_capacity(d);
    for j in 0..d {
        let mut acc = Complex64::new(0.0, 0.0);
        for (&k, &v) in half.iter().zip(values) {
            let ang = -2.0 * std::f64::consts::PI * ((j as u64 * k as u64) % n as u64) as f64 / n as f64;
            let term = v * Complex64::from_polar(1.0, ang);
            acc += term + term.conj();
        }
        coords.push(rationalize(acc.re / d as f64, bound)?);
    }
    Some(CycScalar::from_coords(field, &coords))
}

/// Best rational approximation with denominator ≤ bound, accepted only when
/// it is numerically indistinguishable from `x`.
fn rationalize(x: f64, bound: u64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    // denominators up to 2^16 are dense at ~1e-10, so demand near machine precision
    let tol = 1e-11 * (1.0 + x.abs());
    let (mut h0, mut h1): (i128, i128) = (0, 1);
    let (mut k0, mut k1): (i128, i128) = (1, 0);
    let mut r = x;
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a_i = a as i128;
        let h2 = a_i * h1 + h0;
        let k2 = a_i * k1 + k0;
        if k2 > bound as i128 {
            break;
        }
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        if (x - h1 as f64 / k1 as f64).abs() <= tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a;
        if frac.abs() < 1e-300 {
            break;
        }
        r = 1.0 / frac;
    }
    if k1 != 0 && (x - h1 as f64 / k1 as f64).abs() <= tol {
        Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)))
    } else if x.abs() <= tol {
        Some(BigRational::zero())
    } else {
        None
    }
}

/// Aberth–Ehrlich iteration followed by Newton polishing.
fn numeric_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if n == 1 {
        return vec![-monic[0]];
    }
    // Cauchy bound for the initial circle
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius * 0.5 + 0.1, 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64 + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (pv, dv) = horner(&monic, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if i != j {
                    let diff = z[i] - z[j];
                    if diff.norm() > 0.0 {
                        sum += Complex64::new(1.0, 0.0) / diff;
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-16 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..4 {
            let (pv, dv) = horner(&monic, *zi);
            if dv.norm() == 0.0 {
                break;
            }
            let step = pv / dv;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
        }
    }
    z
}

fn horner(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

/// Exact polynomial with roots at the given scalars (testing convenience).
pub fn poly_from_roots(field: FieldSpec, roots: &[CycScalar]) -> CycPoly {
    let mut p = CycPoly::constant(CycScalar::one(field));
    for r in roots {
        p = p.mul(&CycPoly::linear(r));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> FieldSpec {
        FieldSpec::new(8).unwrap()
    }

    #[test]
    fn x2_plus_1() {
        let p = CycPoly::from_ints(f8(), &[1, 0, 1]);
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        assert!(rs.certified_complete);
        let i = CycScalar::imag_unit(f8()).unwrap();
        let got = rs.distinct();
        assert_eq!(got.len(), 2);
        assert!(got.contains(&i) && got.contains(&-&i));
    }

    #[test]
    fn x2_minus_2() {
        let p = CycPoly::from_ints(f8(), &[-2, 0, 1]);
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        assert!(rs.certified_complete);
        let s = CycScalar::sqrt2(f8()).unwrap();
        // oracle: both candidates square to 2
        assert_eq!(&s * &s, CycScalar::from_int(f8(), 2));
        let got = rs.distinct();
        assert!(got.contains(&s) && got.contains(&-&s));
    }

    #[test]
    fn cube_roots_of_unity_are_absent() {
        let p = CycPoly::from_ints(f8(), &[1, 1, 1]);
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        assert!(rs.roots.is_empty());
        assert!(!rs.certified_complete);
        assert_eq!(splitting_conductor(&p), None);
    }

    #[test]
    fn multiplicities_are_counted() {
        let one = CycScalar::one(f8());
        let i = CycScalar::imag_unit(f8()).unwrap();
        let p = poly_from_roots(f8(), &[one.clone(), one.clone(), i.clone()]);
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        assert!(rs.certified_complete);
        let m: Vec<usize> = rs.roots.iter().map(|(_, m)| *m).collect();
        assert_eq!(m.iter().sum::<usize>(), 3);
        assert!(rs.roots.contains(&(one, 2)));
    }

    #[test]
    fn rational_roots_with_denominators() {
        let p = CycPoly::new(
            f8(),
            vec![
                CycScalar::from_ratio(f8(), -3, 4),
                CycScalar::from_ratio(f8(), 1, 2),
                CycScalar::one(f8()),
            ],
        );
        // (x − 1/2)(x + 3/2) = x² + x − 3/4; use a different one: roots of x² + x/2 − 3/4
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        for (r, _) in &rs.roots {
            assert!(p.eval(r).is_zero());
        }
    }

    #[test]
    fn sixteenth_roots_of_unity() {
        let f16 = FieldSpec::new(16).unwrap();
        let mut c = vec![0i64; 17];
        c[0] = -1;
        c[16] = 1;
        let p = CycPoly::from_ints(f16, &c);
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        assert!(rs.certified_complete);
        assert_eq!(rs.roots.len(), 16);
        // x^16 − 1 over ℚ(ζ₈) only has the eighth roots of unity
        let p8 = CycPoly::from_ints(f8(), &c);
        let rs8 = verified_roots(&p8, DEFAULT_DENOM_BOUND);
        assert_eq!(rs8.roots.len(), 8);
        assert!(!rs8.certified_complete);
        assert_eq!(splitting_conductor(&p8), Some(16));
    }

    #[test]
    fn zeta8_is_found() {
        let z = CycScalar::zeta(f8());
        let p = poly_from_roots(f8(), &[z.clone(), CycScalar::from_ratio(f8(), 1, 3)]);
        let rs = verified_roots(&p, DEFAULT_DENOM_BOUND);
        assert!(rs.certified_complete);
        assert!(rs.distinct().contains(&z));
    }
}
