use serde::Serialize;

use super::taft::{taft, G, GX, ONE, X};
use crate::algebra::{algebra_verify, StructAlgebra, Violation};
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vector, sub_vectors, Mat, Vector};

/// A Sweedler-cleft datum (F, D, α, β, γ) over an algebra A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleftDatum {
    pub base: StructAlgebra,
    /// Counit of A when A carries a Hopf structure.
    pub counit: Option<Vector>,
    /// Column j is F(e_j).
    pub f: Mat,
    pub d: Mat,
    pub alpha: Vector,
    pub beta: Vector,
    pub gamma: Vector,
}

impl CleftDatum {
    /// (id, 0, 1, 0, 0) over the Sweedler algebra.
    pub fn trivial() -> CleftDatum {
        let t = taft();
        let field = t.field();
        CleftDatum {
            base: t.alg().clone(),
            counit: Some(t.counit().clone()),
            f: Mat::identity(field, 4),
            d: Mat::zeros(field, 4, 4),
            alpha: t.unit().clone(),
            beta: crate::exactla::zero_vector(field, 4),
            gamma: crate::exactla::zero_vector(field, 4),
        }
    }

    /// (F, 0, 1, 0, 0) with F(g) = g, F(x) = gx.
    pub fn twisted() -> CleftDatum {
        let mut d = CleftDatum::trivial();
        let field = d.base.field();
        let mut f = Mat::zeros(field, 4, 4);
        f.set(ONE, ONE, CycScalar::one(field));
        f.set(G, G, CycScalar::one(field));
        // F(x) = gx, F(gx) = g·gx = x
        f.set(GX, X, CycScalar::one(field));
        f.set(X, GX, CycScalar::one(field));
        d.f = f;
        d
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn apply_f(&self, a: &[CycScalar]) -> Vector {
        self.f.mul_vec(a)
    }

    pub fn apply_d(&self, a: &[CycScalar]) -> Vector {
        self.d.mul_vec(a)
    }

    pub fn mul(&self, a: &[CycScalar], b: &[CycScalar]) -> Vector {
        self.base.mul(a, b)
    }

    pub fn counit_of(&self, a: &[CycScalar]) -> Option<CycScalar> {
        self.counit.as_ref().map(|e| crate::hopf::dot(e, a))
    }
}

/// Violations of the nine datum axioms, with basis witnesses.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DatumReport {
    pub violations: Vec<Violation>,
}

impl DatumReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn datum_validate(dt: &CleftDatum) -> DatumReport {
    let a = &dt.base;
    let n = a.dim();
    let mut v = Vec::new();
    let mut push = |axiom: &str, witness: Vec<usize>| v.push(Violation { axiom: axiom.into(), witness });
    let shapes_ok = dt.f.rows() == n
        && dt.f.cols() == n
        && dt.d.rows() == n
        && dt.d.cols() == n
        && dt.alpha.len() == n
        && dt.beta.len() == n
        && dt.gamma.len() == n;
    if !shapes_ok {
        push("shape", vec![]);
        return DatumReport { violations: v };
    }
    if dt.f.inverse().is_none() {
        push("F invertible", vec![]);
    }
    if super::inverse_element(a, &dt.alpha).is_none() {
        push("alpha unit", vec![]);
    }
    let e: Vec<Vector> = (0..n).map(|i| a.basis_vector(i)).collect();
    let fe: Vec<Vector> = e.iter().map(|x| dt.apply_f(x)).collect();
    let de: Vec<Vector> = e.iter().map(|x| dt.apply_d(x)).collect();
    let al = &dt.alpha;
    // D1
    if dt.apply_f(a.unit()) != *a.unit() {
        push("D1", vec![]);
    }
    for i in 0..n {
        for j in 0..n {
            let p = a.basis_product(i, j);
            if dt.apply_f(&p) != a.mul(&fe[i], &fe[j]) {
                push("D1", vec![i, j]);
            }
            // D2: D(aa') = aD(a') + D(a)F(a')
            let rhs = crate::exactla::add_vectors(&a.mul(&e[i], &de[j]), &a.mul(&de[i], &fe[j]));
            if dt.apply_d(&p) != rhs {
                push("D2", vec![i, j]);
            }
        }
    }
    for i in 0..n {
        // D3: F²(a)α = αa
        if a.mul(&dt.apply_f(&fe[i]), al) != a.mul(al, &e[i]) {
            push("D3", vec![i]);
        }
        // D4: (FD(a) + DF(a))α = γa − F(a)γ
        let lhs = a.mul(&crate::exactla::add_vectors(&dt.apply_f(&de[i]), &dt.apply_d(&fe[i])), al);
        let rhs = sub_vectors(&a.mul(&dt.gamma, &e[i]), &a.mul(&fe[i], &dt.gamma));
        if lhs != rhs {
            push("D4", vec![i]);
        }
        // D5: D(a)γ + D²(a)α = βa − aβ
        let lhs = crate::exactla::add_vectors(&a.mul(&de[i], &dt.gamma), &a.mul(&dt.apply_d(&de[i]), al));
        let rhs = sub_vectors(&a.mul(&dt.beta, &e[i]), &a.mul(&e[i], &dt.beta));
        if lhs != rhs {
            push("D5", vec![i]);
        }
    }
    if dt.apply_f(al) != *al {
        push("D6", vec![]);
    }
    if !is_zero_vector(&dt.apply_d(&dt.beta)) {
        push("D7", vec![]);
    }
    if dt.apply_d(al) != sub_vectors(&dt.gamma, &dt.apply_f(&dt.gamma)) {
        push("D8", vec![]);
    }
    if dt.apply_d(&dt.gamma) != sub_vectors(&dt.beta, &dt.apply_f(&dt.beta)) {
        push("D9", vec![]);
    }
    DatumReport { violations: v }
}

/// How the cocycle table is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Row b, column b' is σ(b, b'); σ(x, g) = γ, σ(g, x) = 0.
    Printed,
    /// As printed except that γ sits at σ(g, x).
    SwapXG,
    /// Row b, column b' is σ(b', b).
    Transposed,
}

/// Weak action b ⇀ a as matrices on A, for b in 1, g, x, gx.
fn action_matrices(dt: &CleftDatum) -> Result<[Mat; 4]> {
    let a = &dt.base;
    let fd = dt.f.mul(&dt.d)?;
    let right_alpha = a.right_mult(&dt.alpha);
    Ok([Mat::identity(a.field(), a.dim()), dt.f.clone(), dt.d.clone(), right_alpha.mul(&fd)?])
}

/// σ(b, b') for basis elements of the Sweedler algebra.
pub fn cocycle_table(dt: &CleftDatum, orientation: Orientation) -> Vec<Vec<Vector>> {
    let a = &dt.base;
    let zero = crate::exactla::zero_vector(a.field(), a.dim());
    let one = a.unit().clone();
    let zero_row = zero.clone();
    let neg = |v: &Vector| -> Vector { v.iter().map(|c| -c).collect() };
    let fb = dt.apply_f(&dt.beta);
    let fg = dt.apply_f(&dt.gamma);
    let ab = a.mul(&dt.alpha, &dt.beta);
    let mut s = vec![vec![zero_row; 4]; 4];
    s[ONE][ONE] = one.clone();
    s[ONE][G] = one.clone();
    s[G][ONE] = one;
    s[G][G] = dt.alpha.clone();
    s[X][G] = dt.gamma.clone();
    s[X][X] = dt.beta.clone();
    s[X][GX] = neg(&fb);
    s[GX][G] = fg;
    s[GX][X] = fb;
    s[GX][GX] = neg(&ab);
    match orientation {
        Orientation::Printed => {}
        Orientation::SwapXG => s[G][X] = std::mem::replace(&mut s[X][G], zero),
        Orientation::Transposed => {
            for i in 0..4 {
                for j in 0..i {
                    let (lo, hi) = s.split_at_mut(i);
                    std::mem::swap(&mut lo[j][i], &mut hi[0][j]);
                }
            }
        }
    }
    s
}

/// A ⊗ T with (a#b)(a'#b') = a(b₁⇀a')σ(b₂,b'₁) # b₃b'₂, basis a#b at 4a + b, without checks.
pub fn crossed_product_unchecked(dt: &CleftDatum, orientation: Orientation) -> Result<StructAlgebra> {
    let t = taft();
    let a = &dt.base;
    let n = a.dim();
    let act = action_matrices(dt)?;
    let sigma = cocycle_table(dt, orientation);
    // Δ²(b) = Σ c b₁⊗b₂⊗b₃
    let delta2: Vec<Vec<(usize, usize, usize, CycScalar)>> = (0..4)
        .map(|b| {
            let mut out = Vec::new();
            for (i, j, c) in t.comult_row(b) {
                for (p, q, d) in t.comult_row(*i) {
                    out.push((*p, *q, *j, c * d));
                }
            }
            out
        })
        .collect();
    let field = a.field();
    let mut entries = Vec::new();
    for ai in 0..n {
        for b in 0..4 {
            for aj in 0..n {
                let ea = a.basis_vector(ai);
                let eap = a.basis_vector(aj);
                for bp in 0..4 {
                    let mut acc = std::collections::BTreeMap::new();
                    for (b1, b2, b3, c) in &delta2[b] {
                        let acted = act[*b1].mul_vec(&eap);
                        if is_zero_vector(&acted) {
                            continue;
                        }
                        let left = a.mul(&ea, &acted);
                        for (bp1, bp2, d) in t.comult_row(bp) {
                            let s = &sigma[*b2][*bp1];
                            if is_zero_vector(s) {
                                continue;
                            }
                            let coef = c * d;
                            let av = a.mul(&left, s);
                            for (k, y) in t.alg().product(*b3, *bp2) {
                                let cy = &coef * y;
                                for (m, z) in av.iter().enumerate() {
                                    if !z.is_zero() {
                                        crate::hopf::accumulate(&mut acc, m * 4 + k, &(&cy * z));
                                    }
                                }
                            }
                        }
                    }
                    for (k, c) in acc {
                        entries.push((ai * 4 + b, aj * 4 + bp, k, c));
                    }
                }
            }
        }
    }
    let mut unit = crate::exactla::zero_vector(field, 4 * n);
    for (m, c) in a.unit().iter().enumerate() {
        unit[m * 4 + ONE] = c.clone();
    }
    StructAlgebra::new(field, 4 * n, entries, unit)
}

/// The orientation used for crossed products. Only this reading gives associative
/// products once γ ≠ 0 (see the orientation test).
pub const ORIENTATION: Orientation = Orientation::Printed;

pub fn crossed_product(dt: &CleftDatum) -> Result<StructAlgebra> {
    let report = datum_validate(dt);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidDatum(format!("{} fails at {:?}", v.axiom, v.witness)));
    }
    let c = crossed_product_unchecked(dt, ORIENTATION)?;
    if let Some(v) = algebra_verify(&c).violations.first() {
        return Err(Error::CrossedProductAssociativity(format!("{} fails at {:?}", v.axiom, v.witness)));
    }
    Ok(c)
}
