use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{minimal_polynomial, wedderburn, StructAlgebra, WedderburnData, DEFAULT_SEED};
use crate::cyclo::{verified_roots, CycScalar, DEFAULT_DENOM_BOUND};
use crate::error::{Error, Result};
use crate::exactla::{add_scaled, zero_vector, Mat, Subspace, Vector};

/// Matrix representation ρ: A → M_n(k), one matrix per basis element of A.
#[derive(Clone, Debug)]
pub struct Representation {
    pub dim: usize,
    pub matrices: Vec<Mat>,
}

impl Representation {
    /// ρ(v) = Σ vᵢ ρ(eᵢ).
    pub fn act(&self, v: &[CycScalar]) -> Mat {
        let field = self.matrices.first().map(|m| m.field()).unwrap_or_default();
        let mut out = Mat::zeros(field, self.dim, self.dim);
        for (c, m) in v.iter().zip(&self.matrices) {
            if !c.is_zero() {
                out = out.add(&m.scale(c)).expect("square");
            }
        }
        out
    }

    /// ρ(1) = I and ρ(eᵢ)ρ(eⱼ) = ρ(eᵢeⱼ) on all basis pairs.
    pub fn is_homomorphism(&self, a: &StructAlgebra) -> bool {
        if !self.act(a.unit()).is_identity() {
            return false;
        }
        (0..a.dim()).all(|i| {
            (0..a.dim()).all(|j| {
                self.matrices[i].mul(&self.matrices[j]).expect("square") == self.act(&a.basis_product(i, j))
            })
        })
    }

    /// Burnside criterion: the image spans all n×n matrices.
    pub fn is_irreducible(&self) -> bool {
        let n = self.dim;
        let field = self.matrices.first().map(|m| m.field()).unwrap_or_default();
        let flat: Vec<Vector> = self
            .matrices
            .iter()
            .map(|m| (0..n).flat_map(|i| m.row(i).to_vec()).collect())
            .collect();
        Subspace::from_vectors(field, n * n, flat).dim() == n * n
    }
}

/// Left ideal B·v inside B.
fn cyclic_module(b: &StructAlgebra, v: &[CycScalar]) -> Subspace {
    Subspace::from_vectors(b.field(), b.dim(), (0..b.dim()).map(|j| b.mul(&b.basis_vector(j), v)).collect())
}

/// A minimal left ideal inside the block eB (of dimension n² over k).
fn minimal_left_ideal(b: &StructAlgebra, e: &[CycScalar], block: &Subspace, n: usize, seed: u64) -> Option<Subspace> {
    if n == 1 {
        return Some(block.clone());
    }
    for v in block.basis() {
        let m = cyclic_module(b, v);
        if m.dim() == n {
            return Some(m);
        }
    }
    // a simple eigenvalue λ of a ∈ M_n gives a λ-eigenspace of L_a on M_n of dimension n,
    // and every nonzero vector there has rank one
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = block.basis();
    for attempt in 0..(basis.len() + 64) {
        let a = if attempt < basis.len() {
            basis[attempt].clone()
        } else {
            let mut z = zero_vector(b.field(), b.dim());
            for v in basis {
                add_scaled(&mut z, &CycScalar::from_int(b.field(), rng.gen_range(-4..=4)), v);
            }
            z
        };
        let p = minimal_polynomial(b, &a, e);
        let roots = verified_roots(&p, DEFAULT_DENOM_BOUND);
        // L_a restricted to eB, in the coordinates of block.basis()
        let cols: Vec<Vector> = basis
            .iter()
            .map(|v| block.coordinates(&b.mul(&a, v)).expect("block is an ideal"))
            .collect();
        let la = Mat::from_columns(b.field(), basis.len(), &cols).expect("shape");
        for r in roots.distinct() {
            let shifted = la.add(&Mat::identity(b.field(), basis.len()).scale(&-&r)).expect("square");
            let eig = shifted.kernel();
            if eig.dim() != n {
                continue;
            }
            let mut v = zero_vector(b.field(), b.dim());
            for (c, bv) in eig.basis()[0].iter().zip(basis) {
                add_scaled(&mut v, c, bv);
            }
            let m = cyclic_module(b, &v);
            if m.dim() == n {
                return Some(m);
            }
        }
    }
    None
}

/// One simple module per Wedderburn block, realized on a minimal left ideal.
pub fn simple_modules(a: &StructAlgebra) -> Result<Vec<Representation>> {
    let w = wedderburn(a)?;
    simple_modules_from(a, &w)
}

pub fn simple_modules_from(a: &StructAlgebra, w: &WedderburnData) -> Result<Vec<Representation>> {
    if !w.split {
        return Err(Error::NotSplit {
            conductor: a.field().conductor(),
            reason: w.diagnostic.clone().unwrap_or_default(),
            hint: w.hint,
        });
    }
    let b = &w.quotient.algebra;
    let images: Vec<Vector> = (0..a.dim()).map(|i| w.quotient.project(&a.basis_vector(i))).collect();
    let mut out = Vec::new();
    for (idx, (e, &n)) in w.central_idempotents.iter().zip(&w.block_sizes).enumerate() {
        let block = w.block_space(idx);
        let module = minimal_left_ideal(b, e, &block, n, DEFAULT_SEED).ok_or_else(|| Error::NotSplit {
            conductor: a.field().conductor(),
            reason: format!("no minimal left ideal found in a block of size {n}"),
            hint: None,
        })?;
        let matrices = images
            .iter()
            .map(|img| {
                let cols: Vec<Vector> = module
                    .basis()
                    .iter()
                    .map(|m| module.coordinates(&b.mul(img, m)).expect("left ideal"))
                    .collect();
                Mat::from_columns(a.field(), n, &cols).expect("shape")
            })
            .collect();
        let rep = Representation { dim: n, matrices };
        if !rep.is_homomorphism(a) || !rep.is_irreducible() {
            return Err(Error::Internal(format!("block {idx} did not yield a simple module")));
        }
        out.push(rep);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn c2_has_two_one_dimensional_modules() {
        let reps = simple_modules(&cyclic(2)).unwrap();
        assert_eq!(reps.iter().map(|r| r.dim).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn a4pp_two_dimensional_simple() {
        let a = a4pp_algebra();
        let reps = simple_modules(&a).unwrap();
        let two: Vec<_> = reps.iter().filter(|r| r.dim == 2).collect();
        assert_eq!(two.len(), 1);
        let rho = two[0];
        let g = &rho.matrices[1];
        let g2 = &rho.matrices[2];
        let x = &rho.matrices[4];
        // the model ρ(g) = diag(i, −i), ρ(x) = [[0,2],[−1,0]] has these invariants
        assert!(g.trace().is_zero());
        assert_eq!(g2.trace(), s(-2));
        let rhs = g2.add(&Mat::identity(f8(), 2).scale(&s(-1))).unwrap();
        assert_eq!(x.mul(x).unwrap(), rhs);
        assert!(rho.is_irreducible());
    }
}
