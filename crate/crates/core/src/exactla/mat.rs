use std::fmt;

use crate::cyclo::{CycScalar, FieldSpec};
use crate::error::{Error, Result};

use super::Subspace;

/// Dense coordinate vector.
pub type Vector = Vec<CycScalar>;

pub fn zero_vector(field: FieldSpec, n: usize) -> Vector {
    vec![CycScalar::zero(field); n]
}

pub fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(field, n);
    v[i] = CycScalar::one(field);
    v
}

pub fn is_zero_vector(v: &[CycScalar]) -> bool {
    v.iter().all(CycScalar::is_zero)
}

pub fn add_scaled(acc: &mut [CycScalar], c: &CycScalar, v: &[CycScalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn scale_vector(c: &CycScalar, v: &[CycScalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vectors(a: &[CycScalar], b: &[CycScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vectors(a: &[CycScalar], b: &[CycScalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Row-major dense matrix over ℚ(ζ_N).
#[derive(Clone)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<CycScalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, field, data: vec![CycScalar::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, CycScalar::one(field));
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row of length {} in a {}-column matrix", r.len(), cols)));
            }
            data.extend(r);
        }
        Ok(Mat { rows: n, cols, field, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::ShapeMismatch(format!("column of length {} in a {}-row matrix", c.len(), rows)));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| CycScalar::from_int(field, x)).collect()).collect();
        Self::from_rows(field, cols, rows).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &CycScalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.field.join(other.field), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycScalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut out = zero_vector(self.field, self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch("matrix sum".into()));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            field: self.field.join(other.field),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &CycScalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, field: self.field, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut acc = Mat::identity(self.field, self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    pub fn trace(&self) -> CycScalar {
        let mut t = CycScalar::zero(self.field);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Reduced row-echelon form (pivot = first nonzero column, scaled to 1) and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut rows: Vec<Vector> = self.row_vectors();
        let pivots = rref_rows(&mut rows, self.cols);
        let field = self.field;
        (Mat::from_rows(field, self.cols, rows).expect("same shape"), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space {v : A v = 0}.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = unit_vector(self.field, self.cols, f);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.field, self.cols, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, self.columns())
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let id = Mat::identity(self.field, n);
        let sol = linear_solve(self, &id).ok()?;
        if sol.kernel.dim() != 0 {
            return None;
        }
        sol.particular
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch("hstack".into()));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut r = self.row(i).to_vec();
            r.extend_from_slice(other.row(i));
            rows.push(r);
        }
        Mat::from_rows(self.field.join(other.field), self.cols + other.cols, rows)
    }

    /// Kronecker product, row/column index i·other + j.
    pub fn kron(&self, other: &Mat) -> Mat {
        let field = self.field.join(other.field);
        let mut out = Mat::zeros(field, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = other.get(p, q);
                        if !b.is_zero() {
                            out.set(i * other.rows + p, j * other.cols + q, a * b);
                        }
                    }
                }
            }
        }
        out
    }
}

/// In-place RREF on a list of rows; returns pivot columns. Empty rows are dropped
/// from the tail (rows beyond the rank become zero and are removed).
pub(crate) fn rref_rows(rows: &mut Vec<Vector>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                let t = &factor * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Solution set of A X = B.
#[derive(Clone, Debug)]
pub struct Solution {
    /// One solution (free variables set to zero), or None when inconsistent.
    pub particular: Option<Mat>,
    pub kernel: Subspace,
}

pub fn linear_solve(a: &Mat, b: &Mat) -> Result<Solution> {
    if a.rows() != b.rows() {
        return Err(Error::ShapeMismatch(format!("A has {} rows, b has {}", a.rows(), b.rows())));
    }
    let n = a.cols();
    let k = b.cols();
    let aug = a.hstack(b)?;
    let (r, pivots) = aug.rref();
    let kernel = {
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let apiv: Vec<usize> = pivots.iter().copied().filter(|&p| p < n).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = unit_vector(a.field(), n, f);
            for (row, &p) in apiv.iter().enumerate() {
                v[p] = -r.get(row, f);
            }
            basis.push(v);
        }
        Subspace::from_vectors(a.field(), n, basis)
    };
    let particular = if pivots.iter().any(|&p| p >= n) {
        None
    } else {
        let mut x = Mat::zeros(aug.field(), n, k);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                x.set(p, j, r.get(row, n + j).clone());
            }
        }
        Some(x)
    };
    Ok(Solution { particular, kernel })
}

impl PartialEq for Mat {
    fn eq(&self, other: &Mat) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Mat {}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        write!(f, "]")
    }
}
