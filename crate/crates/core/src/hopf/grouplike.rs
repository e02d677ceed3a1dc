use std::collections::BTreeMap;

use serde::Serialize;

use super::{accumulate, dual, HopfAlgebra};
use crate::algebra::characters;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{sub_vectors, Mat, Subspace, Vector};

/// The group G(H) with its multiplication table (index 0 is the unit).
#[derive(Clone, Debug)]
pub struct GroupLikes {
    pub elements: Vec<Vector>,
    /// table[i][j] = index of gᵢgⱼ.
    pub table: Vec<Vec<usize>>,
    /// False when the character search over H* could not certify it found everything.
    pub complete: bool,
    pub hint: Option<u32>,
}

impl GroupLikes {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = i;
        let mut n = 1;
        while k != 0 {
            k = self.table[k][i];
            n += 1;
        }
        n
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order()).find(|&j| self.table[i][j] == 0).expect("group")
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    pub fn index_of(&self, v: &[CycScalar]) -> Option<usize> {
        self.elements.iter().position(|g| g.as_slice() == v)
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|i| self.element_order(i)).collect();
        v.sort_unstable();
        v
    }
}

pub fn is_grouplike(h: &HopfAlgebra, v: &[CycScalar]) -> bool {
    if !h.counit_of(v).is_one() {
        return false;
    }
    let m = h.comult_matrix(v);
    let d = h.dim();
    (0..d).all(|i| (0..d).all(|j| m.get(i, j) == &(&v[i] * &v[j])))
}

/// Group-likes of H as the characters of H*.
pub fn grouplikes(h: &HopfAlgebra) -> Result<GroupLikes> {
    let hd = dual(h);
    let chars = characters(hd.alg())?;
    let mut elements: Vec<Vector> = chars.list;
    for g in &elements {
        if !is_grouplike(h, g) {
            return Err(Error::Internal("character of the dual is not group-like".into()));
        }
    }
    let unit = h.unit().clone();
    let pos = elements
        .iter()
        .position(|g| *g == unit)
        .ok_or_else(|| Error::Internal("unit missing from group-likes".into()))?;
    let one = elements.remove(pos);
    elements.insert(0, one);
    let n = elements.len();
    let mut table = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let p = h.mul(&elements[i], &elements[j]);
            table[i][j] = elements
                .iter()
                .position(|g| *g == p)
                .ok_or_else(|| Error::Internal("group-likes not closed under product".into()))?;
        }
    }
    let mut gl = GroupLikes { elements, table, complete: chars.complete, hint: chars.hint };
    // identity first, then by element order, then by coordinates
    let mut idx: Vec<usize> = (1..n).collect();
    idx.sort_by_key(|&i| (gl.element_order(i), gl.elements[i].iter().map(|c| c.to_text()).collect::<Vec<_>>()));
    idx.insert(0, 0);
    let mut inv = vec![0; n];
    for (new, &old) in idx.iter().enumerate() {
        inv[old] = new;
    }
    let elements = idx.iter().map(|&i| gl.elements[i].clone()).collect();
    let table = idx.iter().map(|&i| idx.iter().map(|&j| inv[gl.table[i][j]]).collect()).collect();
    gl.elements = elements;
    gl.table = table;
    Ok(gl)
}

/// P_{g,h}(H) and the dimension beyond the trivial part k(h − g).
#[derive(Clone, Debug, Serialize)]
pub struct SkewPrimitives {
    #[serde(skip)]
    pub space: Subspace,
    pub dim: usize,
    pub nontrivial_dim: usize,
}

/// {x : Δ(x) = x⊗h + g⊗x}.
pub fn skew_primitives(h: &HopfAlgebra, g: &[CycScalar], hh: &[CycScalar]) -> Result<SkewPrimitives> {
    if !is_grouplike(h, g) || !is_grouplike(h, hh) {
        return Err(Error::NotGrouplike);
    }
    let d = h.dim();
    let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, CycScalar>> = BTreeMap::new();
    for k in 0..d {
        for (i, j, c) in h.comult_row(k) {
            accumulate(rows.entry((*i, *j)).or_default(), k, c);
        }
        for (j, y) in hh.iter().enumerate() {
            if !y.is_zero() {
                accumulate(rows.entry((k, j)).or_default(), k, &-y);
            }
        }
        for (i, y) in g.iter().enumerate() {
            if !y.is_zero() {
                accumulate(rows.entry((i, k)).or_default(), k, &-y);
            }
        }
    }
    let dense: Vec<Vector> = rows
        .into_values()
        .filter(|r| !r.is_empty())
        .map(|r| {
            let mut v = crate::exactla::zero_vector(h.field(), d);
            for (k, c) in r {
                v[k] = c;
            }
            v
        })
        .collect();
    let space = if dense.is_empty() {
        Subspace::full(h.field(), d)
    } else {
        Mat::from_rows(h.field(), d, dense)?.kernel()
    };
    let trivial = usize::from(!crate::exactla::is_zero_vector(&sub_vectors(hh, g)));
    let dim = space.dim();
    Ok(SkewPrimitives { space, dim, nontrivial_dim: dim - trivial })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::algebra::fixtures::s;

    #[test]
    fn sweedler_grouplikes() {
        let t = sweedler_hopf();
        let g = grouplikes(&t).unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.complete);
        assert_eq!(g.elements[1], t.basis_vector(1));
    }

    #[test]
    fn dual_c4_has_cyclic_group() {
        let g = grouplikes(&dual(&group_hopf(4))).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.order_profile(), vec![1, 2, 4, 4]);
    }

    #[test]
    fn sweedler_skew_primitives() {
        let t = sweedler_hopf();
        let p = skew_primitives(&t, &t.basis_vector(0), &t.basis_vector(1)).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.nontrivial_dim, 1);
        assert!(p.space.contains(&t.basis_vector(2)));
        assert!(p.space.contains(&[s(1), s(-1), s(0), s(0)]));
        assert!(matches!(
            skew_primitives(&t, &t.basis_vector(2), &t.basis_vector(1)),
            Err(Error::NotGrouplike)
        ));
    }

    #[test]
    fn group_algebra_has_no_primitives() {
        let k = group_hopf(4);
        let p = skew_primitives(&k, &k.basis_vector(0), &k.basis_vector(0)).unwrap();
        assert_eq!(p.dim, 0);
    }
}
