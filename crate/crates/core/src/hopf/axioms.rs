use std::collections::BTreeMap;

use super::{accumulate, HopfAlgebra};
use crate::algebra::Violation;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{solve_sparse, Mat, SparseRow};
use crate::par;

type Tensor2 = BTreeMap<(usize, usize), CycScalar>;
type Tensor3 = BTreeMap<(usize, usize, usize), CycScalar>;

/// Δ(eᵢ)Δ(eⱼ) in H⊗H.
fn comult_product(h: &HopfAlgebra, i: usize, j: usize) -> Tensor2 {
    let a = h.alg();
    let mut out = Tensor2::new();
    for (p, q, c1) in h.comult_row(i) {
        for (r, s, c2) in h.comult_row(j) {
            let left = a.product(*p, *r);
            let right = a.product(*q, *s);
            if left.is_empty() || right.is_empty() {
                continue;
            }
            let c = c1 * c2;
            for (u, x) in left {
                let cx = &c * x;
                for (v, y) in right {
                    accumulate(&mut out, (*u, *v), &(&cx * y));
                }
            }
        }
    }
    out
}

fn comult_of_product(h: &HopfAlgebra, i: usize, j: usize) -> Tensor2 {
    let mut out = Tensor2::new();
    for (k, c) in h.alg().product(i, j) {
        for (p, q, d) in h.comult_row(*k) {
            accumulate(&mut out, (*p, *q), &(c * d));
        }
    }
    out
}

fn coassoc_sides(h: &HopfAlgebra, k: usize) -> (Tensor3, Tensor3) {
    let mut left = Tensor3::new();
    let mut right = Tensor3::new();
    for (i, j, c) in h.comult_row(k) {
        for (a, b, d) in h.comult_row(*i) {
            accumulate(&mut left, (*a, *b, *j), &(c * d));
        }
        for (a, b, d) in h.comult_row(*j) {
            accumulate(&mut right, (*i, *a, *b), &(c * d));
        }
    }
    (left, right)
}

/// Every failed bialgebra axiom (coassociativity, counit laws, Δ and ε multiplicative and unital).
pub fn bialgebra_violations(h: &HopfAlgebra) -> Vec<Violation> {
    let d = h.dim();
    let mut out = Vec::new();
    let v = |axiom: &str, witness: Vec<usize>| Violation { axiom: axiom.into(), witness };
    for k in 0..d {
        let (l, r) = coassoc_sides(h, k);
        if l != r {
            out.push(v("coassociativity", vec![k]));
        }
        let e = h.basis_vector(k);
        let m = h.comult_matrix(&e);
        // (ε⊗id)Δ = id = (id⊗ε)Δ
        let left: Vec<CycScalar> = (0..d).map(|j| super::dot(&m.column(j), h.counit())).collect();
        let right: Vec<CycScalar> = (0..d).map(|i| super::dot(m.row(i), h.counit())).collect();
        if left != e {
            out.push(v("left counit", vec![k]));
        }
        if right != e {
            out.push(v("right counit", vec![k]));
        }
    }
    let mult: Vec<Violation> = par::flat_map_range(d, |i| {
        let mut out = Vec::new();
        for j in 0..d {
            if comult_product(h, i, j) != comult_of_product(h, i, j) {
                out.push(Violation { axiom: "comultiplication multiplicative".into(), witness: vec![i, j] });
            }
            let eij = h.counit_of(&h.alg().basis_product(i, j));
            if eij != &h.counit()[i] * &h.counit()[j] {
                out.push(Violation { axiom: "counit multiplicative".into(), witness: vec![i, j] });
            }
        }
        out
    });
    out.extend(mult);
    let u = h.unit();
    let du = h.comult_matrix(u);
    let uu = Mat::from_rows(h.field(), d, (0..d).map(|i| u.iter().map(|x| &u[i] * x).collect()).collect())
        .expect("square");
    if du != uu {
        out.push(v("comultiplication unital", vec![]));
    }
    if !h.counit_of(u).is_one() {
        out.push(v("counit unital", vec![]));
    }
    out
}

/// m(S⊗id)Δ = uε when `left`, else m(id⊗S)Δ = uε, on every basis element.
pub(crate) fn antipode_identity(h: &HopfAlgebra, s: &Mat, left: bool) -> bool {
    let d = h.dim();
    let images: Vec<_> = (0..d).map(|i| s.column(i)).collect();
    (0..d).all(|k| {
        let mut acc = crate::exactla::zero_vector(h.field(), d);
        for (i, j, c) in h.comult_row(k) {
            let p = if left {
                h.mul(&images[*i], &h.basis_vector(*j))
            } else {
                h.mul(&h.basis_vector(*i), &images[*j])
            };
            crate::exactla::add_scaled(&mut acc, c, &p);
        }
        let expected = crate::exactla::scale_vector(&h.counit()[k], h.unit());
        acc == expected
    })
}

/// Solves m(S⊗id)Δ = uε for the antipode matrix (column a is S(e_a)).
pub fn solve_antipode(h: &HopfAlgebra) -> Result<Mat> {
    let d = h.dim();
    let a = h.alg();
    // unknown s_{j,a} at index j·d + a; equation (k, l)
    let blocks: Vec<(Vec<SparseRow>, Vec<CycScalar>)> = par::map_range(d, |k| {
        let mut rows: Vec<BTreeMap<usize, CycScalar>> = vec![BTreeMap::new(); d];
        for (ai, b, c) in h.comult_row(k) {
            for j in 0..d {
                for (l, m) in a.product(j, *b) {
                    accumulate(&mut rows[*l], j * d + ai, &(c * m));
                }
            }
        }
        let rhs = (0..d).map(|l| &h.counit()[k] * &h.unit()[l]).collect();
        (rows.into_iter().map(|r| r.into_iter().collect()).collect(), rhs)
    });
    let mut rows = Vec::with_capacity(d * d);
    let mut rhs = Vec::with_capacity(d * d);
    for (r, b) in blocks {
        rows.extend(r);
        rhs.extend(b);
    }
    let x = solve_sparse(h.field(), d * d, &rows, &rhs)
        .ok_or_else(|| Error::NoAntipode("m(S⊗id)Δ = uε has no solution".into()))?;
    let mut s = Mat::zeros(h.field(), d, d);
    for j in 0..d {
        for ai in 0..d {
            s.set(j, ai, x[j * d + ai].clone());
        }
    }
    Ok(s)
}
