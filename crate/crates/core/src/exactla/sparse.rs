use std::collections::BTreeMap;

use crate::cyclo::{CycScalar, FieldSpec};

use super::mat::{linear_solve, zero_vector, Mat, Vector};

/// One equation Σ cᵢxᵢ = rhs with the nonzero coefficients listed.
pub type SparseRow = Vec<(usize, CycScalar)>;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Solves a sparse system by splitting it into connected blocks of unknowns and
/// solving each block densely. Returns one solution (free unknowns set to zero),
/// or None when inconsistent.
pub fn solve_sparse(field: FieldSpec, unknowns: usize, rows: &[SparseRow], rhs: &[CycScalar]) -> Option<Vector> {
    let mut parent: Vec<usize> = (0..unknowns).collect();
    for row in rows {
        if let Some((first, _)) = row.first() {
            let r0 = find(&mut parent, *first);
            for (j, _) in &row[1..] {
                let rj = find(&mut parent, *j);
                if rj != r0 {
                    parent[rj] = r0;
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, row) in rows.iter().enumerate() {
        match row.first() {
            Some((first, _)) => {
                let r = find(&mut parent, *first);
                blocks.entry(r).or_default().push(i);
            }
            None if !rhs[i].is_zero() => return None,
            None => {}
        }
    }
    let mut x = zero_vector(field, unknowns);
    for eqs in blocks.values() {
        let mut vars: Vec<usize> = eqs.iter().flat_map(|&i| rows[i].iter().map(|(j, _)| *j)).collect();
        vars.sort_unstable();
        vars.dedup();
        let local: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(l, &g)| (g, l)).collect();
        let mut a = Mat::zeros(field, eqs.len(), vars.len());
        let mut b = Mat::zeros(field, eqs.len(), 1);
        for (r, &i) in eqs.iter().enumerate() {
            for (j, c) in &rows[i] {
                a.add_at(r, local[j], c);
            }
            b.set(r, 0, rhs[i].clone());
        }
        let sol = linear_solve(&a, &b).expect("shapes agree").particular?;
        for (l, &g) in vars.iter().enumerate() {
            x[g] = sol.get(l, 0).clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_independent_blocks() {
        let f = FieldSpec::new(8).unwrap();
        let s = |n| CycScalar::from_int(f, n);
        // x0 + x1 = 3, x0 − x1 = 1, 2·x2 = 4
        let rows = vec![vec![(0, s(1)), (1, s(1))], vec![(0, s(1)), (1, s(-1))], vec![(2, s(2))]];
        let x = solve_sparse(f, 3, &rows, &[s(3), s(1), s(4)]).unwrap();
        assert_eq!(x, vec![s(2), s(1), s(2)]);
        assert!(solve_sparse(f, 3, &rows, &[s(3), s(1), s(4)]).is_some());
        let bad = vec![vec![(0, s(1))], vec![(0, s(1))], vec![]];
        assert!(solve_sparse(f, 1, &bad, &[s(1), s(2), s(0)]).is_none());
        assert!(solve_sparse(f, 1, &[vec![]], &[s(1)]).is_none());
    }
}
