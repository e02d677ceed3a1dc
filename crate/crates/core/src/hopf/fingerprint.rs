use serde::Serialize;

use super::{coradical_filtration, generated_subalgebra, grouplikes, skew_primitives, HopfAlgebra};
use crate::algebra::radical;
use crate::error::{Error, Result};

/// Least n ≥ 1 with Sⁿ = id, searched up to 2·dim.
pub fn antipode_order(h: &HopfAlgebra) -> Result<usize> {
    let bound = 2 * h.dim();
    let s = h.antipode();
    let mut p = s.clone();
    for n in 1..=bound {
        if p.is_identity() {
            return Ok(n);
        }
        p = p.mul(s)?;
    }
    Err(Error::AntipodeOrderUnbounded(bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub abelian: bool,
    /// Sorted element orders.
    pub order_profile: Vec<usize>,
    pub table: Vec<Vec<usize>>,
}

/// The inequality dim H > dim H₁ ≥ (1 + 2n₁)|G| + Σ nᵢ² for non-cosemisimple H
/// without nontrivial skew-primitives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BdBoundReport {
    pub dim: usize,
    pub dim_h1: usize,
    pub group_order: usize,
    pub matrix_blocks: Vec<usize>,
    pub lower_bound: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    /// Counts of simple subcoalgebras by size: entry k−1 counts the k×k comatrix coalgebras.
    pub coradical_type: Vec<usize>,
    pub filtration_dims: Vec<usize>,
    pub grouplike_order: usize,
    pub group: GroupSummary,
    pub antipode_order: usize,
    /// Nontrivial dimensions of P_{g,h}, indexed by the group-like order of `grouplikes`.
    pub skew_primitive_dims: Vec<Vec<usize>>,
    pub semisimple: bool,
    pub cosemisimple: bool,
    pub pointed: bool,
    pub chevalley: bool,
    /// Group-likes and coradical certified complete.
    pub complete: bool,
    pub bd_bound_report: Option<BdBoundReport>,
}

impl Fingerprint {
    /// Name of the first invariant on which the two differ.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        let mut skew_a: Vec<usize> = self.skew_primitive_dims.iter().flatten().copied().collect();
        let mut skew_b: Vec<usize> = other.skew_primitive_dims.iter().flatten().copied().collect();
        skew_a.sort_unstable();
        skew_b.sort_unstable();
        let checks: [(&'static str, bool); 11] = [
            ("dim", self.dim == other.dim),
            ("semisimple", self.semisimple == other.semisimple),
            ("cosemisimple", self.cosemisimple == other.cosemisimple),
            ("pointed", self.pointed == other.pointed),
            ("coradical_type", self.coradical_type == other.coradical_type),
            ("filtration_dims", self.filtration_dims == other.filtration_dims),
            ("grouplike_order", self.grouplike_order == other.grouplike_order),
            ("group", self.group.order_profile == other.group.order_profile && self.group.abelian == other.group.abelian),
            ("antipode_order", self.antipode_order == other.antipode_order),
            ("chevalley", self.chevalley == other.chevalley),
            ("skew_primitive_dims", skew_a == skew_b),
        ];
        checks.iter().find(|(_, same)| !same).map(|(name, _)| *name)
    }
}

pub fn fingerprint(h: &HopfAlgebra) -> Result<Fingerprint> {
    let d = h.dim();
    let cor = coradical_filtration(h)?;
    let g = grouplikes(h)?;
    let n = g.order();
    let cosemisimple = cor.filtration.len() == 1;
    let mut skew = vec![vec![0; n]; n];
    // P_{g,h} ⊆ H₁, and H₁ = H₀ leaves only the trivial k(g − h)
    let pairs: Vec<(usize, usize)> =
        if cosemisimple { Vec::new() } else { (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect() };
    let dims = crate::par::map_slice(&pairs, |&(i, j)| {
        skew_primitives(h, &g.elements[i], &g.elements[j]).map(|p| p.nontrivial_dim)
    });
    for (&(i, j), r) in pairs.iter().zip(dims) {
        skew[i][j] = r?;
    }
    let h0 = cor.coradical().clone();
    let chevalley = generated_subalgebra(h, &h0).space == h0;
    let semisimple = radical(h.alg())?.is_zero();
    let pointed = cor.block_sizes.iter().all(|&s| s == 1);
    let no_skew = skew.iter().flatten().all(|&x| x == 0);
    let matrix_blocks: Vec<usize> = cor.block_sizes.iter().copied().filter(|&s| s >= 2).collect();
    let bd_bound_report = if !cosemisimple && no_skew && !matrix_blocks.is_empty() {
        let dim_h1 = cor.filtration[1].dim();
        let lower_bound = (1 + 2 * matrix_blocks[0]) * n + matrix_blocks.iter().map(|m| m * m).sum::<usize>();
        Some(BdBoundReport {
            dim: d,
            dim_h1,
            group_order: n,
            holds: d > dim_h1 && dim_h1 >= lower_bound,
            matrix_blocks,
            lower_bound,
        })
    } else {
        None
    };
    Ok(Fingerprint {
        dim: d,
        coradical_type: cor.type_vector(),
        filtration_dims: cor.dims(),
        grouplike_order: n,
        group: GroupSummary {
            order: n,
            abelian: g.is_abelian(),
            order_profile: g.order_profile(),
            table: g.table.clone(),
        },
        antipode_order: antipode_order(h)?,
        skew_primitive_dims: skew,
        semisimple,
        cosemisimple,
        pointed,
        chevalley,
        complete: g.complete,
        bd_bound_report,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{dual, tensor_product};
    use super::*;

    #[test]
    fn sweedler_fingerprint() {
        let f = fingerprint(&sweedler_hopf()).unwrap();
        assert_eq!(f.antipode_order, 4);
        assert_eq!(f.grouplike_order, 2);
        assert!(f.pointed && f.chevalley && !f.semisimple && !f.cosemisimple);
        assert_eq!(f.skew_primitive_dims, vec![vec![0, 1], vec![1, 0]]);
        assert!(f.bd_bound_report.is_none());
    }

    #[test]
    fn group_algebra_fingerprint() {
        let f = fingerprint(&group_hopf(4)).unwrap();
        assert!(f.semisimple && f.cosemisimple && f.pointed && f.chevalley);
        assert_eq!(f.antipode_order, 2);
        assert_eq!(f.group.order_profile, vec![1, 2, 4, 4]);
    }

    #[test]
    fn dual_a4pp_is_not_chevalley() {
        let f = fingerprint(&dual(&a4pp_hopf())).unwrap();
        assert_eq!(f.dim, 8);
        assert_eq!(f.coradical_type, vec![2, 1]);
        assert_eq!(f.grouplike_order, 2);
        assert_eq!(f.antipode_order, 4);
        assert!(!f.semisimple && !f.pointed && !f.chevalley);
    }

    #[test]
    fn tensor_square_of_sweedler() {
        let t = sweedler_hopf();
        let f = fingerprint(&tensor_product(&t, &t).unwrap()).unwrap();
        assert_eq!(f.grouplike_order, 4);
        assert!(f.pointed);
        assert_eq!(f.first_difference(&fingerprint(&group_hopf(4)).unwrap()), Some("dim"));
    }
}
