use serde::Serialize;

use super::StructAlgebra;
use crate::exactla::{sub_vectors, Vector};
use crate::par;

/// One failed axiom instance, with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AlgebraReport {
    pub violations: Vec<Violation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks associativity on all basis triples and the two unit laws on all basis elements.
pub fn algebra_verify(a: &StructAlgebra) -> AlgebraReport {
    let d = a.dim();
    let products: Vec<Vec<Vector>> = (0..d).map(|i| (0..d).map(|j| a.basis_product(i, j)).collect()).collect();
    let mut violations: Vec<Violation> = par::flat_map_range(d, |i| {
        let mut out = Vec::new();
        for j in 0..d {
            for l in 0..d {
                let left = a.mul(&products[i][j], &a.basis_vector(l));
                let right = a.mul(&a.basis_vector(i), &products[j][l]);
                if !crate::exactla::is_zero_vector(&sub_vectors(&left, &right)) {
                    out.push(Violation { axiom: "associativity".into(), witness: vec![i, j, l] });
                }
            }
        }
        out
    });
    for i in 0..d {
        let e = a.basis_vector(i);
        if a.mul(a.unit(), &e) != e {
            violations.push(Violation { axiom: "left unit".into(), witness: vec![i] });
        }
        if a.mul(&e, a.unit()) != e {
            violations.push(Violation { axiom: "right unit".into(), witness: vec![i] });
        }
    }
    AlgebraReport { violations }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::cyclo::CycScalar;

    #[test]
    fn sweedler_and_group_algebras_are_valid() {
        assert!(algebra_verify(&sweedler()).is_valid());
        assert!(algebra_verify(&cyclic(2)).is_valid());
        assert!(algebra_verify(&a4pp_algebra()).is_valid());
    }

    #[test]
    fn perturbed_entry_is_caught() {
        let t = sweedler();
        let mut entries: Vec<_> = t.entries().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
        // g·x = gx gets +1 on gx
        entries.push((1, 2, 3, CycScalar::one(f8())));
        let bad = StructAlgebra::new(f8(), 4, entries, t.unit().clone()).unwrap();
        let report = algebra_verify(&bad);
        assert!(report.violations.iter().any(|v| v.axiom == "associativity"));
    }
}
