use crate::cyclo::{CycScalar, FieldSpec};
use crate::error::{Error, Result};

use super::mat::{rref_rows, unit_vector, zero_vector, Mat, Vector};

/// A linear subspace of k^n held by its reduced row-echelon basis, so two
/// subspaces are equal exactly when their bases are.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.pivots == other.pivots && self.rows == other.rows
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn from_vectors(field: FieldSpec, ambient: usize, vectors: Vec<Vector>) -> Self {
        let mut rows: Vec<Vector> = vectors.into_iter().filter(|v| !v.iter().all(CycScalar::is_zero)).collect();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector length does not match ambient dimension");
        }
        let pivots = rref_rows(&mut rows, ambient);
        Subspace { ambient, field, rows, pivots }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, field, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            field,
            rows: (0..ambient).map(|i| unit_vector(field, ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as a (dim × ambient) RREF matrix.
    pub fn basis_matrix(&self) -> Mat {
        Mat::from_rows(self.field, self.ambient, self.rows.clone()).expect("rows have ambient length")
    }

    /// Standard basis indices not hit by a pivot: a canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Canonical representative of v modulo this subspace (pivot coordinates cleared).
    pub fn reduce(&self, v: &[CycScalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &(&c * x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        self.reduce(v).iter().all(CycScalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    /// Coordinates of v in the RREF basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[CycScalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Ok(Subspace::from_vectors(self.field.join(other.field), self.ambient, v))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        // U ∩ V = (U^⊥ + V^⊥)^⊥ under the standard pairing
        let a = self.standard_annihilator();
        let b = other.standard_annihilator();
        Ok(a.sum(&b)?.standard_annihilator())
    }

    /// {M u : u ∈ U}
    pub fn image_under(&self, m: &Mat) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::AmbientMismatch(m.cols(), self.ambient));
        }
        Ok(Subspace::from_vectors(m.field(), m.rows(), self.rows.iter().map(|v| m.mul_vec(v)).collect()))
    }

    /// {x : M x ∈ U}
    pub fn preimage_under(&self, m: &Mat) -> Result<Subspace> {
        if m.rows() != self.ambient {
            return Err(Error::AmbientMismatch(m.rows(), self.ambient));
        }
        let ann = self.standard_annihilator();
        if ann.dim() == 0 {
            return Ok(Subspace::full(m.field(), m.cols()));
        }
        let q = ann.basis_matrix();
        Ok(q.mul(m)?.kernel())
    }

    /// {w : uᵀ P w = 0 for all u ∈ U}. With P nondegenerate, applying this with P
    /// and then with Pᵀ returns U.
    pub fn annihilator(&self, pairing: &Mat) -> Result<Subspace> {
        if pairing.rows() != self.ambient {
            return Err(Error::AmbientMismatch(pairing.rows(), self.ambient));
        }
        if pairing.rows() != pairing.cols() || pairing.rank() != pairing.rows() {
            return Err(Error::DegeneratePairing);
        }
        if self.rows.is_empty() {
            return Ok(Subspace::full(self.field, pairing.cols()));
        }
        Ok(self.basis_matrix().mul(pairing)?.kernel())
    }

    /// Annihilator under the standard dot product.
    pub fn standard_annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis_matrix().kernel()
    }

    /// The zero vector of the ambient space.
    pub fn zero_vector(&self) -> Vector {
        zero_vector(self.field, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::linear_solve;

    fn f() -> FieldSpec {
        FieldSpec::new(8).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| CycScalar::from_int(f(), x)).collect()
    }

    #[test]
    fn solve_identity() {
        let a = Mat::identity(f(), 2);
        let b = Mat::from_ints(f(), &[&[1], &[0]]);
        let s = linear_solve(&a, &b).unwrap();
        assert_eq!(s.particular.unwrap(), b);
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn solve_rank_one_homogeneous() {
        let a = Mat::from_ints(f(), &[&[1, 1], &[1, 1]]);
        let b = Mat::from_ints(f(), &[&[0], &[0]]);
        let s = linear_solve(&a, &b).unwrap();
        assert_eq!(s.kernel, Subspace::from_vectors(f(), 2, vec![v(&[1, -1])]));
    }

    #[test]
    fn solve_inconsistent() {
        let a = Mat::from_ints(f(), &[&[1, 1], &[1, 1]]);
        let b = Mat::from_ints(f(), &[&[1], &[0]]);
        assert!(linear_solve(&a, &b).unwrap().particular.is_none());
        let bad = Mat::from_ints(f(), &[&[1]]);
        assert!(matches!(linear_solve(&a, &bad), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn sum_of_axes() {
        let u = Subspace::from_vectors(f(), 3, vec![v(&[1, 0, 0])]);
        let w = Subspace::from_vectors(f(), 3, vec![v(&[0, 1, 0])]);
        assert_eq!(u.sum(&w).unwrap().dim(), 2);
        assert_eq!(u.intersect(&w).unwrap().dim(), 0);
        let other = Subspace::zero(f(), 2);
        assert!(matches!(u.sum(&other), Err(Error::AmbientMismatch(3, 2))));
    }

    #[test]
    fn annihilator_standard() {
        let u = Subspace::from_vectors(f(), 2, vec![v(&[1, 0])]);
        let ann = u.annihilator(&Mat::identity(f(), 2)).unwrap();
        assert_eq!(ann, Subspace::from_vectors(f(), 2, vec![v(&[0, 1])]));
        assert!(matches!(u.annihilator(&Mat::zeros(f(), 2, 2)), Err(Error::DegeneratePairing)));
    }

    #[test]
    fn preimage_of_zero() {
        let m = Mat::from_ints(f(), &[&[1, 1], &[0, 0]]);
        let pre = Subspace::zero(f(), 2).preimage_under(&m).unwrap();
        assert_eq!(pre, Subspace::from_vectors(f(), 2, vec![v(&[1, -1])]));
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::from_vectors(f(), 3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::from_vectors(f(), 3, vec![v(&[1, 3, 4]), v(&[2, 5, 7])]);
        assert_eq!(a, b);
    }

    #[test]
    fn inverse_and_image() {
        let m = Mat::from_ints(f(), &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).unwrap().is_identity());
        assert!(Mat::from_ints(f(), &[&[1, 1], &[1, 1]]).inverse().is_none());
        assert_eq!(m.image().dim(), 2);
    }
}
