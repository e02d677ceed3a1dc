use serde::Serialize;

use super::datum::{cocycle_table, crossed_product, CleftDatum, ORIENTATION};
use super::normalize::Canonical;
use super::taft::{taft, GX, X};
use crate::algebra::{radical, StructAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, Mat, Subspace, Vector};

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceCheck {
    pub name: String,
    pub dim: usize,
    pub two_sided_ideal: bool,
    /// Least k with I^k = 0, if any.
    pub nilpotency_index: Option<usize>,
    pub in_radical: bool,
}

impl SubspaceCheck {
    pub fn holds(&self) -> bool {
        self.two_sided_ideal && self.nilpotency_index.is_some() && self.in_radical
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalBoundReport {
    pub canonical: Canonical,
    pub dim: usize,
    pub radical_dim: usize,
    pub quotient_dim: usize,
    pub subspaces: Vec<SubspaceCheck>,
    /// For the trivial datum: the identity on A ⊗ T₋₁ is multiplicative onto T₋₁ ⊗ T₋₁.
    pub tensor_iso: Option<bool>,
    /// For the twisted datum: x and gx act by zero and σ(h, h') = ε(h)ε(h').
    pub trivial_action_cocycle: Option<bool>,
}

impl RadicalBoundReport {
    pub fn holds(&self) -> bool {
        self.quotient_dim <= 4
            && self.subspaces.iter().all(|s| s.holds())
            && self.tensor_iso != Some(false)
            && self.trivial_action_cocycle != Some(false)
    }
}

fn products_span(c: &StructAlgebra, left: &[Vector], right: &[Vector]) -> Subspace {
    let mut out = Vec::new();
    for u in left {
        for v in right {
            let p = c.mul(u, v);
            if !is_zero_vector(&p) {
                out.push(p);
            }
        }
    }
    Subspace::from_vectors(c.field(), c.dim(), out)
}

fn check_subspace(c: &StructAlgebra, rad: &Subspace, name: &str, sub: Subspace) -> SubspaceCheck {
    let all: Vec<Vector> = (0..c.dim()).map(|i| c.basis_vector(i)).collect();
    let two_sided_ideal =
        sub.contains_subspace(&products_span(c, &all, sub.basis())) && sub.contains_subspace(&products_span(c, sub.basis(), &all));
    // power holds I^k
    let mut power = sub.clone();
    let mut nilpotency_index = None;
    for k in 1..=c.dim() + 1 {
        if power.is_zero() {
            nilpotency_index = Some(k);
            break;
        }
        power = products_span(c, power.basis(), sub.basis());
    }
    SubspaceCheck {
        name: name.into(),
        dim: sub.dim(),
        two_sided_ideal,
        nilpotency_index,
        in_radical: rad.contains_subspace(&sub),
    }
}

/// Checks Rad T ⊗ T + T ⊗ Rad T ⊆ Rad C_𝔇 for a canonical datum and bounds the semisimple quotient.
pub fn radical_bound_check(dt: &CleftDatum) -> Result<RadicalBoundReport> {
    let canonical = Canonical::recognize(dt)
        .ok_or_else(|| Error::NonCanonical("datum is neither (id,0,1,0,0) nor (F,0,1,0,0) with F(x) = gx".into()))?;
    let t = taft();
    let c = crossed_product(dt)?;
    let rad = radical(&c)?;
    let field = c.field();
    let idx = |a: usize, b: usize| a * 4 + b;
    let unit = |i: usize| crate::exactla::unit_vector(field, 16, i);
    let left: Vec<Vector> = [X, GX].iter().flat_map(|&a| (0..4).map(move |b| idx(a, b))).map(unit).collect();
    let right: Vec<Vector> = (0..4).flat_map(|a| [X, GX].into_iter().map(move |b| idx(a, b))).map(unit).collect();
    let left = Subspace::from_vectors(field, 16, left);
    let right = Subspace::from_vectors(field, 16, right);
    let sum = left.sum(&right)?;
    let subspaces = vec![
        check_subspace(&c, &rad, "Rad T ⊗ T", left),
        check_subspace(&c, &rad, "T ⊗ Rad T", right),
        check_subspace(&c, &rad, "sum", sum),
    ];
    let (tensor_iso, trivial_action_cocycle) = match canonical {
        Canonical::Trivial => {
            let target = t.alg().tensor(t.alg());
            let id = Mat::identity(field, 16);
            (Some(is_algebra_map(&c, &target, &id)), None)
        }
        Canonical::Twisted => {
            let zero_action = (0..4).all(|i| {
                let e = dt.base.basis_vector(i);
                let d = dt.apply_d(&e);
                is_zero_vector(&d) && is_zero_vector(&dt.base.mul(&dt.apply_f(&d), &dt.alpha))
            });
            let sigma = cocycle_table(dt, ORIENTATION);
            let eps = t.counit();
            let cocycle = (0..4).all(|b| {
                (0..4).all(|bp| {
                    let expected: Vector =
                        dt.base.unit().iter().map(|u| &(u * &eps[b]) * &eps[bp]).collect();
                    sigma[b][bp] == expected
                })
            });
            (None, Some(zero_action && cocycle))
        }
    };
    Ok(RadicalBoundReport {
        canonical,
        dim: c.dim(),
        radical_dim: rad.dim(),
        quotient_dim: c.dim() - rad.dim(),
        subspaces,
        tensor_iso,
        trivial_action_cocycle,
    })
}

/// m is unital and multiplicative on all basis pairs.
pub fn is_algebra_map(src: &StructAlgebra, tgt: &StructAlgebra, m: &Mat) -> bool {
    if m.rows() != tgt.dim() || m.cols() != src.dim() {
        return false;
    }
    if m.mul_vec(src.unit()) != *tgt.unit() {
        return false;
    }
    let images: Vec<Vector> = (0..src.dim()).map(|i| m.column(i)).collect();
    (0..src.dim()).all(|i| {
        (0..src.dim()).all(|j| m.mul_vec(&src.basis_product(i, j)) == tgt.mul(&images[i], &images[j]))
    })
}
