//! Hopf algebras given by structure tensors, and the invariants built on them.

mod actions;
mod axioms;
mod coradical;
mod fingerprint;
mod grouplike;
mod iso;
mod morphism;

pub use actions::{is_coalgebra_automorphism_on, eigen_comatrix_basis, translation_action, ActionKind, ComatrixBasis, StabilityEntry, TranslationAction};
pub use axioms::{bialgebra_violations, solve_antipode};
pub use coradical::{coradical_filtration, generated_subalgebra, is_subcoalgebra, CoradicalData, GeneratedSubalgebra};
pub use fingerprint::{antipode_order, fingerprint, BdBoundReport, Fingerprint, GroupSummary};
pub use grouplike::{grouplikes, is_grouplike, skew_primitives, GroupLikes, SkewPrimitives};
pub use iso::{iso_search, IsoBudget, IsoOutcome, IsoStatus};
pub use morphism::{check_exact_sequence, coinvariants, ExactSequenceReport, HopfMorphism, MorphismDocument, MorphismReport};

use std::collections::BTreeMap;

use crate::algebra::{algebra_verify, tensor_vectors, StructAlgebra};
use crate::cyclo::{CycScalar, FieldSpec};
use crate::error::{Error, Result};
use crate::exactla::{zero_vector, Mat, Subspace, Vector};

/// Sparse Δ(e_k): the nonzero (i, j, c) with Δ(e_k) = Σ c eᵢ⊗eⱼ.
pub type CoRow = Vec<(usize, usize, CycScalar)>;

/// Finite-dimensional Hopf algebra on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    alg: StructAlgebra,
    comult: Vec<CoRow>,
    counit: Vector,
    antipode: Mat,
    labels: Vec<String>,
}

fn normalize_corow(row: Vec<(usize, usize, CycScalar)>) -> CoRow {
    let mut acc: BTreeMap<(usize, usize), CycScalar> = BTreeMap::new();
    for (i, j, c) in row {
        accumulate(&mut acc, (i, j), &c);
    }
    acc.into_iter().map(|((i, j), c)| (i, j, c)).collect()
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycScalar>, key: K, c: &CycScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub fn default_labels(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

impl HopfAlgebra {
    fn assemble(alg: StructAlgebra, comult: Vec<CoRow>, counit: Vector, antipode: Mat) -> Result<HopfAlgebra> {
        let d = alg.dim();
        if comult.len() != d || counit.len() != d {
            return Err(Error::ShapeMismatch(format!(
                "algebra of dim {d} with {} comultiplication rows and counit of length {}",
                comult.len(),
                counit.len()
            )));
        }
        if comult.iter().flatten().any(|(i, j, _)| *i >= d || *j >= d) {
            return Err(Error::ShapeMismatch("comultiplication index out of range".into()));
        }
        let field = comult
            .iter()
            .flatten()
            .map(|(_, _, c)| c.field())
            .chain(counit.iter().map(CycScalar::field))
            .fold(alg.field(), FieldSpec::join);
        let alg = alg.lift(field);
        let comult = comult
            .into_iter()
            .map(|r| normalize_corow(r.into_iter().map(|(i, j, c)| (i, j, c.lift(field))).collect()))
            .collect();
        let counit = counit.into_iter().map(|c| c.lift(field)).collect();
        Ok(HopfAlgebra { alg, comult, counit, antipode, labels: default_labels(d) })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<HopfAlgebra> {
        if labels.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!("{} labels for dimension {}", labels.len(), self.dim())));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn alg(&self) -> &StructAlgebra {
        &self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comult_row(&self, k: usize) -> &[(usize, usize, CycScalar)] {
        &self.comult[k]
    }

    pub fn counit(&self) -> &Vector {
        &self.counit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn unit(&self) -> &Vector {
        self.alg.unit()
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.alg.basis_vector(i)
    }

    pub fn mul(&self, a: &[CycScalar], b: &[CycScalar]) -> Vector {
        self.alg.mul(a, b)
    }

    pub fn counit_of(&self, v: &[CycScalar]) -> CycScalar {
        dot(v, &self.counit)
    }

    pub fn apply_antipode(&self, v: &[CycScalar]) -> Vector {
        self.antipode.mul_vec(v)
    }

    /// Δ(v) as a d×d matrix M with Δ(v) = Σ M[i][j] eᵢ⊗eⱼ.
    pub fn comult_matrix(&self, v: &[CycScalar]) -> Mat {
        let d = self.dim();
        let mut m = Mat::zeros(self.field(), d, d);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, j, c) in &self.comult[k] {
                m.add_at(*i, *j, &(x * c));
            }
        }
        m
    }

    /// Δ(v) flattened with index i·d + j.
    pub fn comult_vector(&self, v: &[CycScalar]) -> Vector {
        let d = self.dim();
        let mut out = zero_vector(self.field(), d * d);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, j, c) in &self.comult[k] {
                out[i * d + j] += &(x * c);
            }
        }
        out
    }

    /// All nonzero comultiplication entries (k, i, j, c).
    pub fn comult_entries(&self) -> impl Iterator<Item = (usize, usize, usize, &CycScalar)> + '_ {
        self.comult
            .iter()
            .enumerate()
            .flat_map(|(k, row)| row.iter().map(move |(i, j, c)| (k, *i, *j, c)))
    }

    /// Same Hopf algebra over a larger field.
    pub fn lift(&self, field: FieldSpec) -> HopfAlgebra {
        let field = self.field().join(field);
        if field == self.field() {
            return self.clone();
        }
        let mut h = self.clone();
        h.alg = self.alg.lift(field);
        for row in &mut h.comult {
            for (_, _, c) in row.iter_mut() {
                *c = c.lift(field);
            }
        }
        h.counit = h.counit.iter().map(|c| c.lift(field)).collect();
        h
    }

    /// Tensors agree (labels ignored).
    pub fn same_tensors(&self, other: &HopfAlgebra) -> bool {
        self.alg == other.alg
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Hopf subalgebra carried by `sub` on its RREF basis, with the inclusion matrix.
    pub fn restrict(&self, sub: &Subspace) -> Result<(HopfAlgebra, Mat)> {
        let alg = self.alg.restrict(sub)?;
        let basis = sub.basis();
        let n = basis.len();
        let mut comult = Vec::with_capacity(n);
        for b in basis {
            let m = self.comult_matrix(b);
            let coords = tensor_coordinates(&m, sub)
                .ok_or_else(|| Error::InvalidMorphism("subspace is not a subcoalgebra".into()))?;
            let mut row = CoRow::new();
            for p in 0..n {
                for q in 0..n {
                    let c = coords.get(p, q);
                    if !c.is_zero() {
                        row.push((p, q, c.clone()));
                    }
                }
            }
            comult.push(row);
        }
        let counit = basis.iter().map(|b| self.counit_of(b)).collect();
        let mut sant_cols = Vec::with_capacity(n);
        for b in basis {
            let s = self.apply_antipode(b);
            sant_cols.push(
                sub.coordinates(&s)
                    .ok_or_else(|| Error::InvalidMorphism("subspace is not stable under the antipode".into()))?,
            );
        }
        let antipode = Mat::from_columns(self.field(), n, &sant_cols)?;
        let h = from_parts(alg, comult, counit, Some(antipode))?;
        let inclusion = Mat::from_columns(self.field(), self.dim(), basis)?;
        Ok((h, inclusion))
    }
}

/// Coordinates N with M = Σ N[p][q] b_p ⊗ b_q for the basis b of `sub`, if M ∈ sub⊗sub.
pub(crate) fn tensor_coordinates(m: &Mat, sub: &Subspace) -> Option<Mat> {
    let n = sub.dim();
    // rows of M lie in sub: row_i = Σ_q R[i][q] b_q
    let mut r = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        r.push(sub.coordinates(m.row(i))?);
    }
    let r = Mat::from_rows(m.field(), n, r).ok()?;
    // columns of R lie in sub: R[:, q] = Σ_p N[p][q] b_p
    let mut cols = Vec::with_capacity(n);
    for q in 0..n {
        cols.push(sub.coordinates(&r.column(q))?);
    }
    Mat::from_columns(m.field(), n, &cols).ok()
}

pub(crate) fn dot(a: &[CycScalar], b: &[CycScalar]) -> CycScalar {
    let field = a.first().or(b.first()).map(|c| c.field()).unwrap_or_default();
    let mut t = CycScalar::zero(field);
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            t += &(x * y);
        }
    }
    t
}

/// Verifies algebra, bialgebra and antipode axioms for explicitly given data.
pub fn from_parts(alg: StructAlgebra, comult: Vec<CoRow>, counit: Vector, antipode: Option<Mat>) -> Result<HopfAlgebra> {
    let report = algebra_verify(&alg);
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidAlgebra(format!("{} fails at basis {:?}", v.axiom, v.witness)));
    }
    let d = alg.dim();
    let placeholder = Mat::zeros(alg.field(), d, d);
    let mut h = HopfAlgebra::assemble(alg, comult, counit, placeholder)?;
    if let Some(v) = bialgebra_violations(&h).first() {
        return Err(Error::BialgebraAxiom(format!("{} fails at basis {:?}", v.axiom, v.witness)));
    }
    h.antipode = match antipode {
        Some(s) => {
            if s.rows() != d || s.cols() != d {
                return Err(Error::ShapeMismatch("antipode must be square of the algebra dimension".into()));
            }
            if !axioms::antipode_identity(&h, &s, true) {
                return Err(Error::NoAntipode("supplied matrix fails m(S⊗id)Δ = uε".into()));
            }
            s
        }
        None => solve_antipode(&h)?,
    };
    if !axioms::antipode_identity(&h, &h.antipode, false) {
        return Err(Error::NoAntipode("solution of m(S⊗id)Δ = uε fails m(id⊗S)Δ = uε".into()));
    }
    Ok(h)
}

/// Builds a Hopf algebra from algebra, comultiplication and counit, solving for the antipode.
pub fn make_hopf(alg: StructAlgebra, comult: Vec<CoRow>, counit: Vector) -> Result<HopfAlgebra> {
    from_parts(alg, comult, counit, None)
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

/// The dual Hopf algebra on the dual basis: multiplication and comultiplication swap,
/// unit and counit swap, the antipode is transposed.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let d = h.dim();
    let mult_entries: Vec<_> = h.comult_entries().map(|(k, i, j, c)| (i, j, k, c.clone())).collect();
    let alg = StructAlgebra::new(h.field(), d, mult_entries, h.counit.clone()).expect("dual shape");
    let mut comult = vec![CoRow::new(); d];
    for (i, j, k, c) in h.alg.entries() {
        comult[k].push((i, j, c.clone()));
    }
    let labels = h.labels.iter().map(|l| dual_label(l)).collect();
    let mut out = HopfAlgebra::assemble(alg, comult, h.alg.unit().clone(), h.antipode.transpose()).expect("dual shape");
    out.labels = labels;
    out
}

/// Dual with the full verification pass.
pub fn dual_verified(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let d = dual(h);
    let checked = from_parts(d.alg.clone(), d.comult.clone(), d.counit.clone(), Some(d.antipode.clone()))?;
    checked.with_labels(d.labels)
}

/// H⊗K on the basis eᵢ⊗fⱼ ↦ i·dim K + j.
pub fn tensor_product(h: &HopfAlgebra, k: &HopfAlgebra) -> Result<HopfAlgebra> {
    let dk = k.dim();
    let alg = h.alg.tensor(&k.alg);
    let mut comult = Vec::with_capacity(h.dim() * dk);
    for i in 0..h.dim() {
        for j in 0..dk {
            let mut row = CoRow::new();
            for (a, b, c1) in &h.comult[i] {
                for (p, q, c2) in &k.comult[j] {
                    row.push((a * dk + p, b * dk + q, c1 * c2));
                }
            }
            comult.push(row);
        }
    }
    let counit = tensor_vectors(&h.counit, &k.counit);
    let antipode = h.antipode.kron(&k.antipode);
    let labels = h
        .labels
        .iter()
        .flat_map(|a| k.labels.iter().map(move |b| format!("{a}⊗{b}")))
        .collect();
    from_parts(alg, comult, counit, Some(antipode))?.with_labels(labels)
}

/// The one-dimensional Hopf algebra k.
pub fn ground(field: FieldSpec) -> HopfAlgebra {
    let one = CycScalar::one(field);
    let alg = StructAlgebra::new(field, 1, vec![(0, 0, 0, one.clone())], vec![one.clone()]).expect("shape");
    from_parts(alg, vec![vec![(0, 0, one.clone())]], vec![one.clone()], Some(Mat::identity(field, 1)))
        .expect("k is a Hopf algebra")
        .with_labels(vec!["1".into()])
        .expect("one label")
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::algebra::fixtures::{a4pp_algebra, cyclic, s, sweedler};

    /// Sweedler Hopf algebra: g group-like, Δ(x) = x⊗g + 1⊗x. Basis 1, g, x, gx.
    pub fn sweedler_hopf() -> HopfAlgebra {
        let comult = vec![
            vec![(0, 0, s(1))],
            vec![(1, 1, s(1))],
            vec![(2, 1, s(1)), (0, 2, s(1))],
            // Δ(gx) = gx⊗1 + g⊗gx
            vec![(3, 0, s(1)), (1, 3, s(1))],
        ];
        make_hopf(sweedler(), comult, vec![s(1), s(1), s(0), s(0)])
            .unwrap()
            .with_labels(vec!["1".into(), "g".into(), "x".into(), "gx".into()])
            .unwrap()
    }

    pub fn group_hopf(n: usize) -> HopfAlgebra {
        let comult = (0..n).map(|k| vec![(k, k, s(1))]).collect();
        make_hopf(cyclic(n), comult, vec![s(1); n]).unwrap()
    }

    /// k⟨g, x | g⁴ = 1, x² = g² − 1, gx = −xg⟩, Δ(x) = x⊗g + 1⊗x; basis gⁿxᵐ at n + 4m.
    pub fn a4pp_hopf() -> HopfAlgebra {
        let mut comult = Vec::new();
        for n in 0..4 {
            comult.push(vec![(n, n, s(1))]);
        }
        for n in 0..4 {
            // Δ(gⁿx) = gⁿx⊗g^{n+1} + gⁿ⊗gⁿx
            comult.push(vec![(n + 4, (n + 1) % 4, s(1)), (n, n + 4, s(1))]);
        }
        let counit = (0..8).map(|i| if i < 4 { s(1) } else { s(0) }).collect();
        make_hopf(a4pp_algebra(), comult, counit).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::algebra::fixtures::{f8, s};

    #[test]
    fn sweedler_antipode() {
        let t = sweedler_hopf();
        // S(x) = −xg = gx
        assert_eq!(t.apply_antipode(&t.basis_vector(2)), t.basis_vector(3));
        assert_eq!(t.apply_antipode(&t.basis_vector(1)), t.basis_vector(1));
    }

    #[test]
    fn c2_antipode_is_identity_on_g() {
        let k = group_hopf(2);
        assert_eq!(k.apply_antipode(&k.basis_vector(1)), k.basis_vector(1));
    }

    #[test]
    fn idempotent_grouplike_has_no_antipode() {
        // k[t]/(t² − t), Δ(t) = t⊗t, ε(t) = 1
        let alg = StructAlgebra::new(
            f8(),
            2,
            vec![(0, 0, 0, s(1)), (0, 1, 1, s(1)), (1, 0, 1, s(1)), (1, 1, 1, s(1))],
            vec![s(1), s(0)],
        )
        .unwrap();
        let err = make_hopf(alg, vec![vec![(0, 0, s(1))], vec![(1, 1, s(1))]], vec![s(1), s(1)]).unwrap_err();
        assert!(matches!(err, Error::NoAntipode(_)));
    }

    #[test]
    fn broken_comultiplication_is_reported() {
        let t = sweedler_hopf();
        let mut comult: Vec<CoRow> = (0..4).map(|k| t.comult_row(k).to_vec()).collect();
        comult[2] = vec![(2, 0, s(1)), (0, 2, s(1))];
        let err = make_hopf(t.alg().clone(), comult, t.counit().clone()).unwrap_err();
        assert!(matches!(err, Error::BialgebraAxiom(_)));
    }

    #[test]
    fn dual_is_an_involution() {
        for h in [sweedler_hopf(), group_hopf(4), a4pp_hopf()] {
            let dd = dual(&dual(&h));
            assert!(dd.same_tensors(&h));
            assert_eq!(dd.labels(), h.labels());
            assert!(dual_verified(&h).is_ok());
        }
    }

    #[test]
    fn tensor_with_ground_field() {
        let t = sweedler_hopf();
        let tk = tensor_product(&t, &ground(f8())).unwrap();
        assert!(tk.same_tensors(&t));
        let tt = tensor_product(&t, &t).unwrap();
        assert_eq!(tt.dim(), 16);
    }
}
