use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::HopfAlgebra;
use crate::algebra::ideal_closure;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace, Vector};

/// Linear map between Hopf algebras, as a (dim target × dim source) matrix.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub source: Arc<HopfAlgebra>,
    pub target: Arc<HopfAlgebra>,
    pub matrix: Mat,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MorphismReport {
    pub multiplicative: bool,
    pub unital: bool,
    pub comultiplicative: bool,
    pub counital: bool,
    pub violations: Vec<String>,
}

impl MorphismReport {
    pub fn is_valid(&self) -> bool {
        self.multiplicative && self.unital && self.comultiplicative && self.counital
    }
}

impl HopfMorphism {
    /// Checks the shape only; see `check` and `verified`.
    pub fn new(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Mat) -> Result<HopfMorphism> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(HopfMorphism { source, target, matrix })
    }

    pub fn verified(source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>, matrix: Mat) -> Result<HopfMorphism> {
        let f = HopfMorphism::new(source, target, matrix)?;
        let report = f.check();
        if let Some(v) = report.violations.first() {
            return Err(Error::InvalidMorphism(v.clone()));
        }
        Ok(f)
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vector {
        self.matrix.mul_vec(v)
    }

    pub fn check(&self) -> MorphismReport {
        let (h, k, f) = (&self.source, &self.target, &self.matrix);
        let mut r = MorphismReport { multiplicative: true, unital: true, comultiplicative: true, counital: true, violations: Vec::new() };
        let images: Vec<Vector> = (0..h.dim()).map(|i| f.column(i)).collect();
        'mul: for i in 0..h.dim() {
            for j in 0..h.dim() {
                if self.apply(&h.alg().basis_product(i, j)) != k.mul(&images[i], &images[j]) {
                    r.multiplicative = false;
                    r.violations.push(format!("f(e{i}e{j}) ≠ f(e{i})f(e{j})"));
                    break 'mul;
                }
            }
        }
        if &self.apply(h.unit()) != k.unit() {
            r.unital = false;
            r.violations.push("f(1) ≠ 1".into());
        }
        let ft = f.transpose();
        for (i, img) in images.iter().enumerate() {
            let lhs = k.comult_matrix(img);
            let rhs = f.mul(&h.comult_matrix(&h.basis_vector(i))).and_then(|m| m.mul(&ft));
            if rhs.map(|m| m != lhs).unwrap_or(true) {
                r.comultiplicative = false;
                r.violations.push(format!("Δ(f(e{i})) ≠ (f⊗f)Δ(e{i})"));
                break;
            }
        }
        for (i, img) in images.iter().enumerate() {
            if k.counit_of(img) != h.counit()[i] {
                r.counital = false;
                r.violations.push(format!("ε(f(e{i})) ≠ ε(e{i})"));
                break;
            }
        }
        r
    }

    pub fn is_bijective(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix.rank() == self.matrix.rows()
    }
}

/// On-disk morphism: source and target references and the matrix, row-major, scalars in text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDocument {
    pub source: String,
    pub target: String,
    pub matrix: Vec<Vec<Vec<String>>>,
}

impl MorphismDocument {
    pub fn new(source: &str, target: &str, m: &Mat) -> MorphismDocument {
        let matrix = m.row_vectors().iter().map(|r| r.iter().map(|c| c.to_text()).collect()).collect();
        MorphismDocument { source: source.into(), target: target.into(), matrix }
    }

    pub fn parse(text: &str) -> Result<MorphismDocument> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("morphism document serializes");
        serde_json::to_string_pretty(&v).expect("json prints")
    }

    /// The matrix over the join of `field` and the fields of its entries.
    pub fn matrix(&self, field: crate::cyclo::FieldSpec) -> Result<Mat> {
        let cols = self.matrix.first().map(Vec::len).unwrap_or(0);
        let mut rows = Vec::with_capacity(self.matrix.len());
        let mut f = field;
        for r in &self.matrix {
            if r.len() != cols {
                return Err(Error::Document("ragged morphism matrix".into()));
            }
            let row: Vector = r.iter().map(|t| CycScalar::from_text(t, None)).collect::<Result<_>>()?;
            for c in &row {
                f = f.join(c.field());
            }
            rows.push(row);
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|c| c.lift(f)).collect()).collect();
        Mat::from_rows(f, cols, rows)
    }

    /// Parses the matrix and runs all four morphism checks.
    pub fn load(&self, source: Arc<HopfAlgebra>, target: Arc<HopfAlgebra>) -> Result<HopfMorphism> {
        let m = self.matrix(source.field().join(target.field()))?;
        HopfMorphism::verified(source, target, m)
    }
}

/// H^{co π} = {x : (id⊗π)Δ(x) = x⊗1}.
pub fn coinvariants(h: &HopfAlgebra, pi: &HopfMorphism) -> Result<Subspace> {
    if !pi.source.same_tensors(h) {
        return Err(Error::InvalidMorphism("projection does not start at this Hopf algebra".into()));
    }
    let report = pi.check();
    if let Some(v) = report.violations.first() {
        return Err(Error::InvalidMorphism(v.clone()));
    }
    let d = h.dim();
    let b = pi.target.dim();
    let one = pi.target.unit();
    let field = h.field().join(pi.target.field());
    // row (i, s): Σ_k x_k Σ_{(i,j,c) ∈ Δ(e_k)} c π[s][j] − x_i 1[s]
    let mut rows = vec![vec![CycScalar::zero(field); d]; d * b];
    for k in 0..d {
        for (i, j, c) in h.comult_row(k) {
            for s in 0..b {
                let p = pi.matrix.get(s, *j);
                if !p.is_zero() {
                    rows[i * b + s][k] += &(c * p);
                }
            }
        }
    }
    for i in 0..d {
        for s in 0..b {
            rows[i * b + s][i] -= &one[s];
        }
    }
    Ok(Mat::from_rows(field, d, rows)?.kernel())
}

/// Conditions of an exact sequence A →ι C →π B, each reported separately.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ExactSequenceReport {
    pub injective: bool,
    pub surjective: bool,
    pub composite_trivial: bool,
    pub kernel_is_augmentation_ideal: bool,
    pub coinvariants_match: bool,
    pub dimension_identity: bool,
    pub witnesses: Vec<String>,
}

impl ExactSequenceReport {
    pub fn all_pass(&self) -> bool {
        self.injective
            && self.surjective
            && self.composite_trivial
            && self.kernel_is_augmentation_ideal
            && self.coinvariants_match
            && self.dimension_identity
    }
}

pub fn check_exact_sequence(iota: &HopfMorphism, pi: &HopfMorphism) -> ExactSequenceReport {
    let mut r = ExactSequenceReport::default();
    if !iota.target.same_tensors(&pi.source) {
        r.witnesses.push("ι and π are not composable".into());
        return r;
    }
    for (name, f) in [("ι", iota), ("π", pi)] {
        if let Some(v) = f.check().violations.first() {
            r.witnesses.push(format!("{name} is not a Hopf morphism: {v}"));
        }
    }
    let (a, c, b) = (&iota.source, &iota.target, &pi.target);
    r.injective = iota.matrix.rank() == a.dim();
    if !r.injective {
        r.witnesses.push(format!("(i) rank ι = {} < dim A = {}", iota.matrix.rank(), a.dim()));
    }
    r.surjective = pi.matrix.rank() == b.dim();
    if !r.surjective {
        r.witnesses.push(format!("(ii) rank π = {} < dim B = {}", pi.matrix.rank(), b.dim()));
    }
    // πι = u_B ε_A
    r.composite_trivial = match pi.matrix.mul(&iota.matrix) {
        Ok(m) => (0..a.dim()).all(|j| {
            (0..b.dim()).all(|s| m.get(s, j) == &(&b.unit()[s] * &a.counit()[j]))
        }),
        Err(_) => false,
    };
    if !r.composite_trivial {
        r.witnesses.push("(iii) πι ≠ uε".into());
    }
    // ker π = ι(A⁺)C
    let aug = Mat::from_rows(a.field(), a.dim(), vec![a.counit().clone()]).expect("shape").kernel();
    let gens: Vec<Vector> = aug.basis().iter().map(|v| iota.apply(v)).collect();
    let ideal = ideal_closure(c.alg(), &gens).space;
    let kernel = pi.matrix.kernel();
    r.kernel_is_augmentation_ideal = ideal == kernel;
    if !r.kernel_is_augmentation_ideal {
        r.witnesses.push(format!("(iv) dim ker π = {}, dim ι(A⁺)C = {}", kernel.dim(), ideal.dim()));
    }
    let image = iota.matrix.image();
    match coinvariants(c, pi) {
        Ok(co) => {
            r.coinvariants_match = co == image;
            if !r.coinvariants_match {
                r.witnesses.push(format!("(v) dim C^co π = {}, dim ι(A) = {}", co.dim(), image.dim()));
            }
            r.dimension_identity = c.dim() == co.dim() * b.dim();
            if !r.dimension_identity {
                r.witnesses.push(format!("dim C = {} ≠ {}·{}", c.dim(), co.dim(), b.dim()));
            }
        }
        Err(e) => r.witnesses.push(format!("(v) {e}")),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{ground, tensor_product};
    use super::*;
    use crate::algebra::fixtures::{f8, s};

    fn counit_map(h: &Arc<HopfAlgebra>) -> HopfMorphism {
        let m = Mat::from_rows(h.field(), h.dim(), vec![h.counit().clone()]).unwrap();
        HopfMorphism::verified(h.clone(), Arc::new(ground(f8())), m).unwrap()
    }

    #[test]
    fn counit_coinvariants_are_everything() {
        let t = Arc::new(sweedler_hopf());
        assert!(coinvariants(&t, &counit_map(&t)).unwrap().is_full());
    }

    fn tt_sequence() -> (HopfMorphism, HopfMorphism) {
        let t = Arc::new(sweedler_hopf());
        let tt = Arc::new(tensor_product(&t, &t).unwrap());
        // ι(a) = a⊗1 lands on index 4a; π(a⊗b) = ε(a)b
        let mut iota = Mat::zeros(f8(), 16, 4);
        let mut pi = Mat::zeros(f8(), 4, 16);
        for a in 0..4 {
            iota.set(4 * a, a, s(1));
            for b in 0..4 {
                pi.set(b, 4 * a + b, t.counit()[a].clone());
            }
        }
        (
            HopfMorphism::verified(t.clone(), tt.clone(), iota).unwrap(),
            HopfMorphism::verified(tt, t, pi).unwrap(),
        )
    }

    #[test]
    fn tensor_square_sequence_is_exact() {
        let (iota, pi) = tt_sequence();
        let co = coinvariants(&pi.source, &pi).unwrap();
        assert_eq!(co.dim(), 4);
        let r = check_exact_sequence(&iota, &pi);
        assert!(r.all_pass(), "{:?}", r.witnesses);
    }

    #[test]
    fn non_surjective_projection_is_reported() {
        let (iota, pi) = tt_sequence();
        let t = Arc::new(sweedler_hopf());
        // through the counit: a Hopf map TT → T that is not onto
        let mut m = Mat::zeros(f8(), 4, 16);
        for k in 0..16 {
            let e = pi.source.counit()[k].clone();
            m.set(0, k, e);
        }
        let bad = HopfMorphism::verified(pi.source.clone(), t, m).unwrap();
        let r = check_exact_sequence(&iota, &bad);
        assert!(!r.surjective);
        assert!(!r.all_pass());
    }

    #[test]
    fn non_multiplicative_map_fails() {
        let t = Arc::new(sweedler_hopf());
        let mut m = Mat::identity(f8(), 4);
        m.set(2, 2, s(2));
        let err = HopfMorphism::verified(t.clone(), t, m).unwrap_err();
        assert!(matches!(err, Error::InvalidMorphism(_)));
    }
}
