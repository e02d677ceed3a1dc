use rand::Rng;
use serde::Serialize;

use super::datum::{datum_validate, CleftDatum};
use super::inverse_element;
use super::taft::{taft, taft_element, G, GX, ONE, X};
use crate::algebra::StructAlgebra;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{add_vectors, sub_vectors, Mat, Vector};

/// A change of datum (s, t) with s a unit of A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatumTransform {
    pub s: Vector,
    pub t: Vector,
}

/// The conditions ε(s) = 1, ε(t) = 0, ε(F(t)) = 0 under which a change of datum
/// keeps a Hopf exact sequence exact. None when A has no counit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EpsilonFlags {
    pub counit_s_is_one: bool,
    pub counit_t_is_zero: bool,
    pub counit_ft_is_zero: bool,
}

impl EpsilonFlags {
    pub fn all(&self) -> bool {
        self.counit_s_is_one && self.counit_t_is_zero && self.counit_ft_is_zero
    }
}

#[derive(Clone, Debug)]
pub struct Transformed {
    pub datum: CleftDatum,
    /// φ(1), φ(g), φ(x), φ(gx) as elements of A.
    pub phi: [Vector; 4],
    pub flags: Option<EpsilonFlags>,
}

impl DatumTransform {
    pub fn identity(a: &StructAlgebra) -> DatumTransform {
        DatumTransform { s: a.unit().clone(), t: crate::exactla::zero_vector(a.field(), a.dim()) }
    }

    pub fn flags(&self, dt: &CleftDatum) -> Option<EpsilonFlags> {
        let one = CycScalar::one(dt.base.field());
        Some(EpsilonFlags {
            counit_s_is_one: dt.counit_of(&self.s)? == one,
            counit_t_is_zero: dt.counit_of(&self.t)?.is_zero(),
            counit_ft_is_zero: dt.counit_of(&dt.apply_f(&self.t))?.is_zero(),
        })
    }
}

/// (s₁, t₁) followed by (s₂, t₂) acts as (s₂s₁, t₁ + t₂s₁).
pub fn compose(a: &StructAlgebra, first: &DatumTransform, second: &DatumTransform) -> DatumTransform {
    DatumTransform { s: a.mul(&second.s, &first.s), t: add_vectors(&first.t, &a.mul(&second.t, &first.s)) }
}

/// The equivalent datum (F', D', α', β', γ') and the map φ: T₋₁ → A relating the two crossed products.
pub fn datum_transform(dt: &CleftDatum, tau: &DatumTransform) -> Result<Transformed> {
    let a = &dt.base;
    let n = a.dim();
    if tau.s.len() != n || tau.t.len() != n {
        return Err(Error::ShapeMismatch(format!("transform vectors must have length {n}")));
    }
    let s = &tau.s;
    let t = &tau.t;
    let s_inv = inverse_element(a, s).ok_or_else(|| Error::NotUnit("s is not invertible".into()))?;
    let fs = dt.apply_f(s);
    let ft = dt.apply_f(t);
    let mut f_cols = Vec::with_capacity(n);
    let mut d_cols = Vec::with_capacity(n);
    for j in 0..n {
        let e = a.basis_vector(j);
        let fe = dt.apply_f(&e);
        f_cols.push(a.mul(&a.mul(s, &fe), &s_inv));
        let inner = sub_vectors(&add_vectors(&a.mul(t, &fe), &dt.apply_d(&e)), &a.mul(&e, t));
        d_cols.push(a.mul(&inner, &s_inv));
    }
    let f = Mat::from_columns(a.field(), n, &f_cols)?;
    let d = Mat::from_columns(a.field(), n, &d_cols)?;
    let alpha = a.mul(&a.mul(s, &fs), &dt.alpha);
    let tft_dt = add_vectors(&a.mul(t, &ft), &dt.apply_d(t));
    let beta = add_vectors(&add_vectors(&dt.beta, &a.mul(t, &dt.gamma)), &a.mul(&tft_dt, &dt.alpha));
    let inner = add_vectors(&add_vectors(&a.mul(t, &fs), &dt.apply_d(s)), &a.mul(s, &ft));
    let gamma = add_vectors(&a.mul(s, &dt.gamma), &a.mul(&inner, &dt.alpha));
    let datum = CleftDatum { base: a.clone(), counit: dt.counit.clone(), f, d, alpha, beta, gamma };
    if let Some(v) = datum_validate(&datum).violations.first() {
        return Err(Error::InvalidDatum(format!("transformed datum fails {} at {:?}", v.axiom, v.witness)));
    }
    let phi = [a.unit().clone(), s.clone(), t.clone(), a.mul(&a.mul(s, &ft), &dt.alpha)];
    let flags = tau.flags(dt);
    Ok(Transformed { datum, phi, flags })
}

/// Linear map C_𝔇' → C_𝔇, a#b ↦ aφ(b₁)#b₂, on the basis a·4 + b.
pub fn crossed_product_map(a: &StructAlgebra, phi: &[Vector; 4]) -> Result<Mat> {
    let t = taft();
    let n = a.dim();
    let mut m = Mat::zeros(a.field(), 4 * n, 4 * n);
    for i in 0..n {
        let e = a.basis_vector(i);
        for b in [ONE, G, X, GX] {
            for (b1, b2, c) in t.comult_row(b) {
                let v = a.mul(&e, &phi[*b1]);
                for (k, y) in v.iter().enumerate() {
                    if !y.is_zero() {
                        m.add_at(k * 4 + b2, i * 4 + b, &(c * y));
                    }
                }
            }
        }
    }
    Ok(m)
}

/// Random (s, t) over T₋₁ with ε(s) = 1 and ε(t) = 0, all coordinates of height at most 2.
/// Over a datum with ε∘F = ε this also gives ε(F(t)) = 0.
pub fn random_flagged_transform(rng: &mut impl Rng) -> DatumTransform {
    loop {
        let a: i64 = rng.gen_range(-2..=2);
        // s = a + bg + h is a unit when a ≠ b
        let b = 1 - a;
        if a == b {
            continue;
        }
        let c: i64 = rng.gen_range(-2..=2);
        let s = taft_element(a, b, rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        let t = taft_element(c, -c, rng.gen_range(-2..=2), rng.gen_range(-2..=2));
        return DatumTransform { s, t };
    }
}
