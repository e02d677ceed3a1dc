use super::StructAlgebra;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace, Vector};

/// Two-sided ideal with its nilpotency data.
#[derive(Clone, Debug)]
pub struct IdealInfo {
    pub space: Subspace,
    pub nilpotent: bool,
    /// Least n with Iⁿ = 0.
    pub nilpotency_index: Option<usize>,
    /// I² = I (for instance, generated by an idempotent).
    pub idempotent: bool,
}

fn two_sided_closure(a: &StructAlgebra, start: Subspace) -> Subspace {
    let mut span = start;
    loop {
        let mut next = span.basis().to_vec();
        for v in span.basis() {
            for i in 0..a.dim() {
                let e = a.basis_vector(i);
                next.push(a.mul(&e, v));
                next.push(a.mul(v, &e));
            }
        }
        let grown = Subspace::from_vectors(a.field(), a.dim(), next);
        if grown.dim() == span.dim() {
            return span;
        }
        span = grown;
    }
}

fn product_space(a: &StructAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for x in u.basis() {
        for y in v.basis() {
            vecs.push(a.mul(x, y));
        }
    }
    Subspace::from_vectors(a.field(), a.dim(), vecs)
}

/// Powers I, I², … until zero or stationary.
fn nilpotency(a: &StructAlgebra, ideal: &Subspace) -> (Option<usize>, bool) {
    if ideal.is_zero() {
        return (Some(1), false);
    }
    let mut power = ideal.clone();
    let mut n = 1;
    loop {
        let next = product_space(a, &power, ideal);
        n += 1;
        if next.is_zero() {
            return (Some(n), false);
        }
        if next.dim() == power.dim() {
            let idempotent = n == 2;
            return (None, idempotent);
        }
        power = next;
    }
}

/// Smallest two-sided ideal containing `gens`.
pub fn ideal_closure(a: &StructAlgebra, gens: &[Vector]) -> IdealInfo {
    let space = two_sided_closure(a, Subspace::from_vectors(a.field(), a.dim(), gens.to_vec()));
    let (index, idempotent) = nilpotency(a, &space);
    IdealInfo { nilpotent: index.is_some(), nilpotency_index: index, idempotent, space }
}

/// Jacobson radical via the trace form: Rad A = {x : Tr(L_{xy}) = 0 for all y}.
/// The result is checked to be a nilpotent two-sided ideal before it is returned.
pub fn radical(a: &StructAlgebra) -> Result<Subspace> {
    let d = a.dim();
    let traces: Vec<CycScalar> = (0..d).map(|k| a.left_trace(k)).collect();
    let rows: Vec<Vector> = crate::par::map_range(d, |i| {
        (0..d)
            .map(|j| {
                let mut t = CycScalar::zero(a.field());
                for (k, c) in a.product(i, j) {
                    t += &(c * &traces[*k]);
                }
                t
            })
            .collect()
    });
    let form = Mat::from_rows(a.field(), d, rows)?;
    let rad = form.kernel();
    let closed = two_sided_closure(a, rad.clone());
    if closed != rad {
        return Err(Error::Internal("trace-form kernel is not an ideal".into()));
    }
    if nilpotency(a, &rad).0.is_none() {
        return Err(Error::Internal("trace-form kernel is not nilpotent".into()));
    }
    Ok(rad)
}

/// A / I on the basis of standard vectors outside the pivots of I.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: StructAlgebra,
    pub ideal: Subspace,
    /// Indices of the original basis that survive as the quotient basis.
    pub keep: Vec<usize>,
}

impl Quotient {
    pub fn new(a: &StructAlgebra, ideal: &Subspace) -> Quotient {
        let keep = ideal.complement_indices();
        let project = |v: &[CycScalar]| -> Vector {
            let r = ideal.reduce(v);
            keep.iter().map(|&k| r[k].clone()).collect()
        };
        let n = keep.len();
        let unit = project(a.unit());
        let mut entries = Vec::new();
        for (qi, &i) in keep.iter().enumerate() {
            for (qj, &j) in keep.iter().enumerate() {
                for (qk, c) in project(&a.basis_product(i, j)).into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((qi, qj, qk, c));
                    }
                }
            }
        }
        let algebra = StructAlgebra::new(a.field(), n, entries, unit).expect("quotient shape");
        Quotient { algebra, ideal: ideal.clone(), keep }
    }

    pub fn project(&self, v: &[CycScalar]) -> Vector {
        let r = self.ideal.reduce(v);
        self.keep.iter().map(|&k| r[k].clone()).collect()
    }

    /// Section of the projection: quotient coordinates placed on the kept indices.
    pub fn lift(&self, q: &[CycScalar]) -> Vector {
        let mut v = crate::exactla::zero_vector(self.ideal.field(), self.ideal.ambient());
        for (c, &k) in q.iter().zip(&self.keep) {
            v[k] = c.clone();
        }
        v
    }

    /// Preimage in A of a subspace of the quotient.
    pub fn preimage(&self, sub: &Subspace) -> Subspace {
        let mut vecs: Vec<Vector> = self.ideal.basis().to_vec();
        vecs.extend(sub.basis().iter().map(|q| self.lift(q)));
        Subspace::from_vectors(self.ideal.field(), self.ideal.ambient(), vecs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn radical_of_sweedler() {
        let t = sweedler();
        let rad = radical(&t).unwrap();
        let expected = Subspace::from_vectors(f8(), 4, vec![t.basis_vector(2), t.basis_vector(3)]);
        assert_eq!(rad, expected);
    }

    #[test]
    fn group_algebra_is_semisimple() {
        assert!(radical(&cyclic(4)).unwrap().is_zero());
    }

    #[test]
    fn radical_of_a4pp_has_dim_two() {
        // oracle: trace form computed directly from the dense tensor
        let a = a4pp_algebra();
        let d = a.dim();
        let tr: Vec<CycScalar> = (0..d)
            .map(|k| (0..d).fold(s(0), |acc, l| &acc + &a.coeff(k, l, l)))
            .collect();
        let mut rows = Vec::new();
        for i in 0..d {
            let mut row = Vec::new();
            for j in 0..d {
                let mut t = s(0);
                for k in 0..d {
                    t += &(&a.coeff(i, j, k) * &tr[k]);
                }
                row.push(t);
            }
            rows.push(row);
        }
        let oracle = Mat::from_rows(f8(), d, rows).unwrap().kernel();
        assert_eq!(oracle.dim(), 2);
        assert_eq!(radical(&a).unwrap(), oracle);
    }

    #[test]
    fn ideal_of_x_in_sweedler() {
        let t = sweedler();
        let info = ideal_closure(&t, &[t.basis_vector(2)]);
        assert_eq!(info.space.dim(), 2);
        assert_eq!(info.nilpotency_index, Some(2));
        let whole = ideal_closure(&t, &[t.unit().clone()]);
        assert!(whole.space.is_full());
    }

    #[test]
    fn augmentation_ideal_of_c2() {
        let k = cyclic(2);
        let v = vec![s(-1), s(1)];
        let info = ideal_closure(&k, &[v]);
        assert_eq!(info.space.dim(), 1);
        assert!(!info.nilpotent);
        assert!(info.idempotent);
    }

    #[test]
    fn quotient_of_sweedler_by_radical() {
        let t = sweedler();
        let q = Quotient::new(&t, &radical(&t).unwrap());
        assert_eq!(q.algebra, cyclic(2));
    }
}
