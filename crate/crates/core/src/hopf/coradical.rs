use super::{dual, tensor_coordinates, HopfAlgebra};
use crate::algebra::{block_type, wedderburn};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Subspace, Vector};

/// Coradical filtration H₀ ⊂ H₁ ⊂ … ⊂ H, with the simple subcoalgebras of H₀.
#[derive(Clone, Debug)]
pub struct CoradicalData {
    pub filtration: Vec<Subspace>,
    /// Sizes n of the matrix coalgebras M(n)* making up H₀, ascending.
    pub block_sizes: Vec<usize>,
    /// Aligned with `block_sizes`.
    pub simple_subcoalgebras: Vec<Subspace>,
}

impl CoradicalData {
    pub fn coradical(&self) -> &Subspace {
        &self.filtration[0]
    }

    /// Counts per block size: entry k−1 is the number of k×k matrix coalgebras.
    pub fn type_vector(&self) -> Vec<usize> {
        block_type(&self.block_sizes)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.filtration.iter().map(Subspace::dim).collect()
    }
}

/// {x : (f⊗q)Δ(x) = 0 for all f ∈ P, q ∈ Q}, P and Q given in dual coordinates.
fn wedge_kernel(h: &HopfAlgebra, p: &[Vector], q: &[Vector]) -> Subspace {
    let d = h.dim();
    if p.is_empty() || q.is_empty() {
        return Subspace::full(h.field(), d);
    }
    let mut rows = Vec::with_capacity(p.len() * q.len());
    for f in p {
        for g in q {
            let row: Vector = (0..d)
                .map(|k| {
                    let mut t = crate::cyclo::CycScalar::zero(h.field());
                    for (i, j, c) in h.comult_row(k) {
                        if !f[*i].is_zero() && !g[*j].is_zero() {
                            t += &(&(c * &f[*i]) * &g[*j]);
                        }
                    }
                    t
                })
                .collect();
            rows.push(row);
        }
    }
    Mat::from_rows(h.field(), d, rows).expect("shape").kernel()
}

pub fn coradical_filtration(h: &HopfAlgebra) -> Result<CoradicalData> {
    let hd = dual(h);
    let w = wedderburn(hd.alg())?;
    if !w.split {
        return Err(Error::NotSplit {
            conductor: h.field().conductor(),
            reason: w.diagnostic.clone().unwrap_or_else(|| "dual algebra is not split".into()),
            hint: w.hint,
        });
    }
    let rad_basis = w.radical.basis().to_vec();
    let h0 = w.radical.standard_annihilator();
    let mut filtration = vec![h0];
    while !filtration.last().expect("nonempty").is_full() {
        let prev = filtration.last().expect("nonempty");
        let q: Vec<Vector> = prev.standard_annihilator().basis().to_vec();
        let next = wedge_kernel(h, &rad_basis, &q);
        if next.dim() <= prev.dim() {
            return Err(Error::Internal("coradical filtration stopped growing".into()));
        }
        filtration.push(next);
    }
    let blocks: Vec<Subspace> = (0..w.block_sizes.len()).map(|j| w.block_space(j)).collect();
    let mut simple = Vec::with_capacity(blocks.len());
    for i in 0..blocks.len() {
        let spanning: Vec<Vector> =
            blocks.iter().enumerate().filter(|&(j, _)| j != i).flat_map(|(_, b)| b.basis().iter().cloned()).collect();
        let others = Subspace::from_vectors(w.quotient.algebra.field(), w.quotient.algebra.dim(), spanning);
        simple.push(w.quotient.preimage(&others).standard_annihilator());
    }
    Ok(CoradicalData { filtration, block_sizes: w.block_sizes.clone(), simple_subcoalgebras: simple })
}

/// Multiplicative closure of a subspace with Hopf-closure flags.
#[derive(Clone, Debug)]
pub struct GeneratedSubalgebra {
    pub space: Subspace,
    pub is_subbialgebra: bool,
    pub is_hopf_subalgebra: bool,
}

pub fn is_subcoalgebra(h: &HopfAlgebra, sub: &Subspace) -> bool {
    sub.basis().iter().all(|b| tensor_coordinates(&h.comult_matrix(b), sub).is_some())
}

pub fn generated_subalgebra(h: &HopfAlgebra, gens: &Subspace) -> GeneratedSubalgebra {
    let space = h.alg().generated_subalgebra(gens.basis());
    let is_subbialgebra = is_subcoalgebra(h, &space);
    let stable = space.basis().iter().all(|b| space.contains(&h.apply_antipode(b)));
    GeneratedSubalgebra { is_hopf_subalgebra: is_subbialgebra && stable, is_subbialgebra, space }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn sweedler_filtration() {
        let t = sweedler_hopf();
        let c = coradical_filtration(&t).unwrap();
        assert_eq!(c.dims(), vec![2, 4]);
        assert_eq!(c.block_sizes, vec![1, 1]);
        let span = Subspace::from_vectors(t.field(), 4, vec![t.basis_vector(0), t.basis_vector(1)]);
        assert_eq!(c.coradical(), &span);
    }

    #[test]
    fn group_algebra_is_cosemisimple() {
        let c = coradical_filtration(&group_hopf(4)).unwrap();
        assert_eq!(c.dims(), vec![4]);
        assert_eq!(c.simple_subcoalgebras.len(), 4);
    }

    #[test]
    fn dual_a4pp_coradical() {
        let a = dual(&a4pp_hopf());
        let c = coradical_filtration(&a).unwrap();
        assert_eq!(c.coradical().dim(), 6);
        assert_eq!(c.type_vector(), vec![2, 1]);
        assert_eq!(c.simple_subcoalgebras.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1, 1, 4]);
        for s in &c.simple_subcoalgebras {
            assert!(is_subcoalgebra(&a, s));
        }
    }

    #[test]
    fn generated_subalgebras_of_sweedler() {
        let t = sweedler_hopf();
        let by_g = generated_subalgebra(&t, &Subspace::from_vectors(t.field(), 4, vec![t.basis_vector(1)]));
        assert_eq!(by_g.space.dim(), 2);
        assert!(by_g.is_hopf_subalgebra);
        let by_x = generated_subalgebra(&t, &Subspace::from_vectors(t.field(), 4, vec![t.basis_vector(2)]));
        assert_eq!(by_x.space.dim(), 2);
        assert!(!by_x.is_subbialgebra);
    }
}
