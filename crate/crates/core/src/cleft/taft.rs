use std::sync::OnceLock;

use crate::cyclo::{splitting_conductor, verified_roots, CycPoly, CycScalar, DEFAULT_DENOM_BOUND};
use crate::error::{Error, Result};
use crate::exactla::{Subspace, Vector};
use crate::hopf::HopfAlgebra;
use crate::present::{hopf_from_source, DEFAULT_DEGREE_CAP};

pub const TAFT_SOURCE: &str = include_str!("../catalog/data/T.hpf");

/// Basis positions of 1, g, x, gx in the Sweedler algebra.
pub const ONE: usize = 0;
pub const G: usize = 1;
pub const X: usize = 2;
pub const GX: usize = 3;

/// The Sweedler Hopf algebra on the basis 1, g, x, gx.
pub fn taft() -> &'static HopfAlgebra {
    static CELL: OnceLock<HopfAlgebra> = OnceLock::new();
    CELL.get_or_init(|| hopf_from_source(TAFT_SOURCE, DEFAULT_DEGREE_CAP).expect("bundled Sweedler source"))
}

pub fn taft_element(a: i64, b: i64, c: i64, d: i64) -> Vector {
    let f = taft().field();
    [a, b, c, d].iter().map(|&n| CycScalar::from_int(f, n)).collect()
}

/// Rad T = k·x ⊕ k·gx, checked against the trace-form radical.
pub fn radical_basis() -> Result<Subspace> {
    let t = taft();
    let rad = crate::algebra::radical(t.alg())?;
    let expected = Subspace::from_vectors(t.field(), 4, vec![t.basis_vector(X), t.basis_vector(GX)]);
    if rad != expected {
        return Err(Error::Internal("radical of the Sweedler algebra is not span{x, gx}".into()));
    }
    Ok(rad)
}

/// a + bg + h is a unit exactly when a² − b² ≠ 0.
pub fn is_unit(v: &[CycScalar]) -> bool {
    !(&(&v[ONE] * &v[ONE]) - &(&v[G] * &v[G])).is_zero()
}

/// t² = 1, that is t ∈ {±1, ±g + h : h ∈ Rad T}.
pub fn is_involution(v: &[CycScalar]) -> bool {
    let t = taft();
    t.mul(v, v) == *t.unit()
}

/// Root of t² − c chosen canonically: positive real part, then positive imaginary part.
fn principal_sqrt(c: &CycScalar) -> Result<CycScalar> {
    let field = c.field();
    if c.is_zero() {
        return Ok(CycScalar::zero(field));
    }
    let p = CycPoly::new(field, vec![-c, CycScalar::zero(field), CycScalar::one(field)]);
    let roots = verified_roots(&p, DEFAULT_DENOM_BOUND).distinct();
    let key = |r: &CycScalar| {
        let z = r.embed(1).unwrap_or_default();
        let re = if z.re.abs() < 1e-12 { 0.0 } else { z.re };
        (re, z.im)
    };
    roots
        .into_iter()
        .max_by(|a, b| key(a).partial_cmp(&key(b)).unwrap_or(std::cmp::Ordering::Equal))
        .ok_or_else(|| Error::SqrtMissing { conductor: field.conductor(), hint: splitting_conductor(&p) })
}

/// s ∈ k[G(T)] with s² = h for h = a + bg: (u+v)² = a+b and (u−v)² = a−b.
pub fn group_sqrt(h: &[CycScalar]) -> Result<Vector> {
    if !h[X].is_zero() || !h[GX].is_zero() {
        return Err(Error::InvalidInput("square roots are taken inside k[G(T)]".into()));
    }
    let field = h[ONE].field();
    let p = principal_sqrt(&(&h[ONE] + &h[G]))?;
    let m = principal_sqrt(&(&h[ONE] - &h[G]))?;
    let half = CycScalar::from_ratio(field, 1, 2);
    let u = &(&p + &m) * &half;
    let v = &(&p - &m) * &half;
    let s = vec![u, v, CycScalar::zero(field), CycScalar::zero(field)];
    debug_assert_eq!(taft().mul(&s, &s), h.to_vec());
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radical_is_rad_span() {
        assert_eq!(radical_basis().unwrap().dim(), 2);
    }

    #[test]
    fn one_plus_g_is_not_a_unit() {
        assert!(!is_unit(&taft_element(1, 1, 0, 0)));
        assert!(is_unit(&taft_element(2, 1, 5, 0)));
    }

    #[test]
    fn g_plus_x_is_an_involution() {
        assert!(is_involution(&taft_element(0, 1, 1, 0)));
        assert!(!is_involution(&taft_element(1, 1, 0, 0)));
    }

    #[test]
    fn square_root_of_g() {
        let f = taft().field();
        let i = CycScalar::imag_unit(f).unwrap();
        let half = CycScalar::from_ratio(f, 1, 2);
        let one = CycScalar::one(f);
        let s = group_sqrt(&taft_element(0, 1, 0, 0)).unwrap();
        assert_eq!(s[ONE], &(&one + &i) * &half);
        assert_eq!(s[G], &(&one - &i) * &half);
        assert_eq!(taft().mul(&s, &s), taft_element(0, 1, 0, 0));
    }

    #[test]
    fn missing_root_reports_hint() {
        // √3 lies outside ℚ(ζ₈)
        match group_sqrt(&taft_element(3, 0, 0, 0)) {
            Err(Error::SqrtMissing { conductor, hint }) => {
                assert_eq!(conductor, 8);
                assert_eq!(hint, None);
            }
            other => panic!("{other:?}"),
        }
    }
}
