use serde::Serialize;

use super::datum::{datum_validate, CleftDatum};
use super::taft::{group_sqrt, radical_basis, taft, G, GX, ONE, X};
use super::transform::{datum_transform, DatumTransform, EpsilonFlags};
use super::inverse_element;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, scale_vector, sub_vectors, Vector};

/// The two data every exact extension of T₋₁ by T₋₁ reduces to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Canonical {
    /// (id, 0, 1, 0, 0)
    Trivial,
    /// (F, 0, 1, 0, 0) with F(g) = g, F(x) = gx
    Twisted,
}

impl Canonical {
    pub fn datum(self) -> CleftDatum {
        match self {
            Canonical::Trivial => CleftDatum::trivial(),
            Canonical::Twisted => CleftDatum::twisted(),
        }
    }

    pub fn recognize(dt: &CleftDatum) -> Option<Canonical> {
        [Canonical::Trivial, Canonical::Twisted].into_iter().find(|c| c.datum() == *dt)
    }
}

#[derive(Clone, Debug)]
pub struct NormalStep {
    pub name: &'static str,
    pub transform: DatumTransform,
    pub flags: EpsilonFlags,
    pub after: CleftDatum,
}

#[derive(Clone, Debug)]
pub struct Normalization {
    pub canonical: Canonical,
    pub transcript: Vec<NormalStep>,
}

impl Normalization {
    pub fn transforms(&self) -> Vec<DatumTransform> {
        self.transcript.iter().map(|s| s.transform.clone()).collect()
    }
}

fn ensure_taft_base(dt: &CleftDatum) -> Result<()> {
    let t = taft();
    if dt.base != *t.alg() || dt.counit.as_ref() != Some(t.counit()) {
        return Err(Error::InvalidInput("normalization expects a datum over the Sweedler algebra".into()));
    }
    Ok(())
}

/// Constraints forced on a datum when its crossed product sits in a Hopf exact sequence
/// T₋₁ → C → T₋₁: ε∘F = ε, ε∘D = 0, ε(α) = 1, ε(β) = ε(γ) = 0.
pub fn check_exactness(dt: &CleftDatum) -> Result<()> {
    let eps = dt.counit.as_ref().ok_or_else(|| Error::ExactnessPrecondition("base has no counit".into()))?;
    let field = dt.base.field();
    let one = CycScalar::one(field);
    let n = dt.dim();
    for j in 0..n {
        let e = dt.base.basis_vector(j);
        let ee = crate::hopf::dot(eps, &e);
        if crate::hopf::dot(eps, &dt.apply_f(&e)) != ee {
            return Err(Error::ExactnessPrecondition(format!("ε(F(e{j})) ≠ ε(e{j})")));
        }
        if !crate::hopf::dot(eps, &dt.apply_d(&e)).is_zero() {
            return Err(Error::ExactnessPrecondition(format!("ε(D(e{j})) ≠ 0")));
        }
    }
    if crate::hopf::dot(eps, &dt.alpha) != one {
        return Err(Error::ExactnessPrecondition("ε(α) ≠ 1".into()));
    }
    if !crate::hopf::dot(eps, &dt.beta).is_zero() {
        return Err(Error::ExactnessPrecondition("ε(β) ≠ 0".into()));
    }
    if !crate::hopf::dot(eps, &dt.gamma).is_zero() {
        return Err(Error::ExactnessPrecondition("ε(γ) ≠ 0".into()));
    }
    Ok(())
}

fn in_group_part(v: &[CycScalar]) -> bool {
    v[X].is_zero() && v[GX].is_zero()
}

fn stuck(what: &str) -> Error {
    Error::Internal(format!("normalization step did not reach {what}"))
}

/// Reduces a datum over T₋₁ satisfying the exactness constraints to one of the two canonical data
/// by five changes of datum, each keeping ε(s) = 1, ε(t) = 0, ε(F(t)) = 0.
pub fn normalize_taft_datum(dt: &CleftDatum) -> Result<Normalization> {
    ensure_taft_base(dt)?;
    if let Some(v) = datum_validate(dt).violations.first() {
        return Err(Error::InvalidDatum(format!("{} fails at {:?}", v.axiom, v.witness)));
    }
    check_exactness(dt)?;
    let t = taft();
    let a = t.alg();
    let field = t.field();
    let half = CycScalar::from_ratio(field, 1, 2);
    let g = t.basis_vector(G);
    let rad = radical_basis()?;
    let mut cur = dt.clone();
    let mut transcript = Vec::new();
    let mut step = |cur: &mut CleftDatum, name: &'static str, tau: DatumTransform| -> Result<()> {
        let out = datum_transform(cur, &tau)?;
        let flags = out.flags.ok_or_else(|| Error::Internal("counit lost".into()))?;
        if !flags.all() {
            return Err(Error::Internal(format!("step {name} breaks exactness")));
        }
        *cur = out.datum;
        transcript.push(NormalStep { name, transform: tau, flags, after: cur.clone() });
        Ok(())
    };

    // F(g) = g + h with h in the radical; s = g + h/2 makes F(g) = g.
    let h = sub_vectors(&cur.apply_f(&g), &g);
    if !rad.contains(&h) {
        return Err(Error::ExactnessPrecondition("F(g) is not g modulo the radical".into()));
    }
    let s = crate::exactla::add_vectors(&g, &scale_vector(&half, &h));
    step(&mut cur, "fix F(g)", DatumTransform { s, t: zero(field) })?;
    if cur.apply_f(&g) != g {
        return Err(stuck("F(g) = g"));
    }

    // α ∈ k[G]; s² = α⁻¹ with ε(s) = 1 makes α = 1.
    if !in_group_part(&cur.alpha) {
        return Err(stuck("α in k[G]"));
    }
    let alpha_inv = inverse_element(a, &cur.alpha).ok_or_else(|| stuck("invertible α"))?;
    let mut s = group_sqrt(&alpha_inv)?;
    if t.counit_of(&s) != CycScalar::one(field) {
        s = s.iter().map(|c| -c).collect();
    }
    step(&mut cur, "fix alpha", DatumTransform { s, t: zero(field) })?;
    if cur.alpha != *a.unit() {
        return Err(stuck("α = 1"));
    }

    // D(g) lies in the radical; t = (g/2)D(g) kills it.
    let tt = scale_vector(&half, &a.mul(&g, &cur.apply_d(&g)));
    step(&mut cur, "fix D(g)", DatumTransform { s: a.unit().clone(), t: tt })?;
    if !is_zero_vector(&cur.apply_d(&g)) {
        return Err(stuck("D(g) = 0"));
    }

    // γ ∈ k[G] with ε(γ) = 0; t = −γ/2 kills it.
    let tt = scale_vector(&-&half, &cur.gamma);
    step(&mut cur, "fix gamma", DatumTransform { s: a.unit().clone(), t: tt })?;
    if !is_zero_vector(&cur.gamma) {
        return Err(stuck("γ = 0"));
    }

    // F on the radical is ±id or ±(x ↦ gx); conjugating by g removes the sign.
    let fx = cur.apply_f(&t.basis_vector(X));
    let negative = !fx[X].is_zero() && fx[X] != CycScalar::one(field) || !fx[GX].is_zero() && fx[GX] != CycScalar::one(field);
    let s = if negative { g.clone() } else { a.unit().clone() };
    step(&mut cur, "split F", DatumTransform { s, t: zero(field) })?;

    if !cur.d.is_zero() || !is_zero_vector(&cur.beta) {
        return Err(stuck("D = 0 and β = 0"));
    }
    let canonical = Canonical::recognize(&cur).ok_or_else(|| stuck("a canonical datum"))?;
    debug_assert_eq!(cur.alpha[ONE], CycScalar::one(field));
    Ok(Normalization { canonical, transcript })
}

fn zero(field: crate::cyclo::FieldSpec) -> Vector {
    crate::exactla::zero_vector(field, 4)
}
