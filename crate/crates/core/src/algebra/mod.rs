//! Finite-dimensional associative algebras given by structure constants.

mod ideal;
mod modules;
mod verify;
mod wedderburn;

pub use ideal::{ideal_closure, radical, IdealInfo, Quotient};
pub use modules::{simple_modules, simple_modules_from, Representation};
pub use verify::{algebra_verify, AlgebraReport, Violation};
pub use wedderburn::{
    block_type, center, characters, is_character, minimal_polynomial, wedderburn, wedderburn_seeded, Characters,
    WedderburnData, DEFAULT_SEED,
};

use crate::cyclo::{CycScalar, FieldSpec};
use crate::error::{Error, Result};
use crate::exactla::{add_scaled, zero_vector, Mat, Subspace, Vector};

/// Sparse row of structure constants: the nonzero (k, c) with eᵢeⱼ = Σ c e_k.
pub type Row = Vec<(usize, CycScalar)>;

/// Algebra on basis e₀..e_{d−1} with eᵢ·eⱼ = Σ_k m[i][j][k] e_k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructAlgebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<Row>,
    unit: Vector,
}

fn push_entry(row: &mut Row, k: usize, c: CycScalar) {
    match row.binary_search_by_key(&k, |(i, _)| *i) {
        Ok(pos) => {
            row[pos].1 += &c;
            if row[pos].1.is_zero() {
                row.remove(pos);
            }
        }
        Err(pos) if !c.is_zero() => row.insert(pos, (k, c)),
        Err(_) => {}
    }
}

impl StructAlgebra {
    /// Builds from (i, j, k, c) entries; repeated positions are summed.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, CycScalar)>,
        unit: Vector,
    ) -> Result<Self> {
        if unit.len() != dim {
            return Err(Error::ShapeMismatch(format!("unit has length {}, expected {dim}", unit.len())));
        }
        let mut field = field;
        let mut table = vec![Row::new(); dim * dim];
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::ShapeMismatch(format!("index ({i},{j},{k}) out of range for dim {dim}")));
            }
            field = field.join(c.field());
            push_entry(&mut table[i * dim + j], k, c);
        }
        for u in &unit {
            field = field.join(u.field());
        }
        let mut alg = StructAlgebra { field, dim, table, unit };
        alg.relift();
        Ok(alg)
    }

    /// Builds from a function giving the product eᵢeⱼ as a dense vector.
    pub fn from_products(field: FieldSpec, dim: usize, unit: Vector, product: impl Fn(usize, usize) -> Vector) -> Self {
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in product(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        Self::new(field, dim, entries, unit).expect("products have the algebra dimension")
    }

    fn relift(&mut self) {
        let f = self.field;
        for row in &mut self.table {
            for (_, c) in row.iter_mut() {
                if c.field() != f {
                    *c = c.lift(f);
                }
            }
        }
        for u in &mut self.unit {
            if u.field() != f {
                *u = u.lift(f);
            }
        }
    }

    /// Same algebra with scalars lifted to a larger field.
    pub fn lift(&self, field: FieldSpec) -> StructAlgebra {
        let mut a = self.clone();
        a.field = self.field.join(field);
        a.relift();
        a
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, CycScalar)] {
        &self.table[i * self.dim + j]
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> CycScalar {
        self.product(i, j)
            .iter()
            .find(|(l, _)| *l == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| CycScalar::zero(self.field))
    }

    /// All nonzero entries (i, j, k, c) in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &CycScalar)> + '_ {
        let d = self.dim;
        self.table
            .iter()
            .enumerate()
            .flat_map(move |(ij, row)| row.iter().map(move |(k, c)| (ij / d, ij % d, *k, c)))
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::exactla::unit_vector(self.field, self.dim, i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (k, c) in self.product(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    pub fn mul(&self, a: &[CycScalar], b: &[CycScalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let row = self.product(i, j);
                if row.is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in row {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[CycScalar], n: u32) -> Vector {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of x ↦ a·x (column j is a·eⱼ).
    pub fn left_mult(&self, a: &[CycScalar]) -> Mat {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Mat::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Matrix of x ↦ x·a.
    pub fn right_mult(&self, a: &[CycScalar]) -> Mat {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        Mat::from_columns(self.field, self.dim, &cols).expect("square")
    }

    /// Trace of left multiplication by eᵢ.
    pub fn left_trace(&self, i: usize) -> CycScalar {
        let mut t = CycScalar::zero(self.field);
        for l in 0..self.dim {
            for (k, c) in self.product(i, l) {
                if *k == l {
                    t += c;
                }
            }
        }
        t
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_unit(&self, v: &[CycScalar]) -> bool {
        v == self.unit.as_slice()
    }

    pub fn opposite(&self) -> StructAlgebra {
        let entries = self.entries().map(|(i, j, k, c)| (j, i, k, c.clone())).collect::<Vec<_>>();
        StructAlgebra::new(self.field, self.dim, entries, self.unit.clone()).expect("same shape")
    }

    /// Tensor product on the basis eᵢ⊗fⱼ ↦ index i·d_other + j.
    pub fn tensor(&self, other: &StructAlgebra) -> StructAlgebra {
        let d2 = other.dim;
        let field = self.field.join(other.field);
        let mut entries = Vec::new();
        for (i1, j1, k1, c1) in self.entries() {
            for (i2, j2, k2, c2) in other.entries() {
                entries.push((i1 * d2 + i2, j1 * d2 + j2, k1 * d2 + k2, c1 * c2));
            }
        }
        let unit = tensor_vectors(&self.unit, &other.unit);
        StructAlgebra::new(field, self.dim * d2, entries, unit).expect("tensor shape")
    }

    /// Subalgebra carried by `sub`, on the RREF basis of `sub`. Fails unless
    /// `sub` contains the unit and is closed under multiplication.
    pub fn restrict(&self, sub: &Subspace) -> Result<StructAlgebra> {
        let basis = sub.basis();
        let unit = sub
            .coordinates(&self.unit)
            .ok_or_else(|| Error::InvalidAlgebra("subspace does not contain the unit".into()))?;
        let n = basis.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = self.mul(&basis[i], &basis[j]);
                let coords = sub
                    .coordinates(&p)
                    .ok_or_else(|| Error::InvalidAlgebra("subspace is not closed under multiplication".into()))?;
                for (k, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, c));
                    }
                }
            }
        }
        StructAlgebra::new(self.field, n, entries, unit)
    }

    /// Smallest subalgebra containing the unit and `gens`.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let mut vectors = vec![self.unit.clone()];
        vectors.extend(gens.iter().cloned());
        let mut span = Subspace::from_vectors(self.field, self.dim, vectors);
        let gen_basis: Vec<Vector> = Subspace::from_vectors(self.field, self.dim, gens.to_vec()).basis().to_vec();
        loop {
            let mut next: Vec<Vector> = span.basis().to_vec();
            for v in span.basis() {
                for g in &gen_basis {
                    next.push(self.mul(v, g));
                }
            }
            let grown = Subspace::from_vectors(self.field, self.dim, next);
            if grown.dim() == span.dim() {
                return span;
            }
            span = grown;
        }
    }

    /// Σ cᵢvᵢ.
    pub fn combine(&self, terms: &[(CycScalar, Vector)]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (c, v) in terms {
            add_scaled(&mut out, c, v);
        }
        out
    }
}

/// Kronecker product of coordinate vectors (index i·|b| + j).
pub fn tensor_vectors(a: &[CycScalar], b: &[CycScalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn f8() -> FieldSpec {
        FieldSpec::new(8).unwrap()
    }

    pub fn s(n: i64) -> CycScalar {
        CycScalar::from_int(f8(), n)
    }

    /// Sweedler algebra on basis {1, g, x, gx}.
    pub fn sweedler() -> StructAlgebra {
        // index = 2·(x power) + (g power); words gⁿxᵐ with xg = −gx
        let f = f8();
        StructAlgebra::from_products(f, 4, crate::exactla::unit_vector(f, 4, 0), |i, j| {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            let mut v = zero_vector(f, 4);
            if b + d > 1 {
                return v;
            }
            // g^a x^b g^c x^d = (−1)^{bc} g^{a+c} x^{b+d}
            let sign = if b * c == 1 { -1 } else { 1 };
            v[(a + c) % 2 + 2 * (b + d)] = s(sign);
            v
        })
    }

    /// Group algebra of the cyclic group of order n, basis gᵏ.
    pub fn cyclic(n: usize) -> StructAlgebra {
        let f = f8();
        StructAlgebra::from_products(f, n, crate::exactla::unit_vector(f, n, 0), |i, j| {
            crate::exactla::unit_vector(f, n, (i + j) % n)
        })
    }

    /// k⟨g, x | g⁴ = 1, x² = g² − 1, gx = −xg⟩ on basis gⁿxᵐ (index n + 4m).
    pub fn a4pp_algebra() -> StructAlgebra {
        let f = f8();
        StructAlgebra::from_products(f, 8, crate::exactla::unit_vector(f, 8, 0), |i, j| {
            let (a, b) = (i % 4, i / 4);
            let (c, d) = (j % 4, j / 4);
            let mut v = zero_vector(f, 8);
            // x^b g^c = (−1)^{bc} g^c x^b
            let sign = if b == 1 && c % 2 == 1 { -1 } else { 1 };
            let gp = (a + c) % 4;
            if b + d < 2 {
                v[gp + 4 * (b + d)] = s(sign);
            } else {
                // x² = g² − 1
                v[(gp + 2) % 4] = s(sign);
                v[gp] = s(-sign);
            }
            v
        })
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn sweedler_relations() {
        let t = sweedler();
        let g = t.basis_vector(1);
        let x = t.basis_vector(2);
        assert!(t.is_unit(&t.mul(&g, &g)));
        assert!(crate::exactla::is_zero_vector(&t.mul(&x, &x)));
        let xg = t.mul(&x, &g);
        let gx = t.mul(&g, &x);
        assert_eq!(xg, crate::exactla::scale_vector(&s(-1), &gx));
    }

    #[test]
    fn restrict_to_group_part() {
        let t = sweedler();
        let sub = Subspace::from_vectors(f8(), 4, vec![t.basis_vector(0), t.basis_vector(1)]);
        let kg = t.restrict(&sub).unwrap();
        assert_eq!(kg, cyclic(2));
        let bad = Subspace::from_vectors(f8(), 4, vec![t.basis_vector(2)]);
        assert!(t.restrict(&bad).is_err());
    }

    #[test]
    fn generated_by_x_is_two_dimensional() {
        let t = sweedler();
        assert_eq!(t.generated_subalgebra(&[t.basis_vector(2)]).dim(), 2);
        assert_eq!(t.generated_subalgebra(&[t.basis_vector(1), t.basis_vector(2)]).dim(), 4);
    }

    #[test]
    fn tensor_dimension_and_unit() {
        let tt = sweedler().tensor(&sweedler());
        assert_eq!(tt.dim(), 16);
        assert!(algebra_verify(&tt).is_valid());
        assert!(tt.is_unit(&tt.basis_vector(0)));
    }
}
