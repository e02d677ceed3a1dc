//! T₋₁-cleft data over an algebra A, their crossed products A # T₋₁ and the
//! normalization of data over T₋₁ itself.

mod bound;
mod datum;
mod io;
mod normalize;
mod taft;
mod transform;

pub use bound::{is_algebra_map, radical_bound_check, RadicalBoundReport, SubspaceCheck};
pub use datum::{
    cocycle_table, crossed_product, crossed_product_unchecked, datum_validate, CleftDatum, DatumReport, Orientation,
    ORIENTATION,
};
pub use io::{datum_from_json, datum_to_json, DatumDocument};
pub use normalize::{check_exactness, Canonical, normalize_taft_datum, NormalStep, Normalization};
pub use taft::{group_sqrt, is_involution, is_unit, radical_basis, taft, taft_element, G, GX, ONE, TAFT_SOURCE, X};
pub use transform::{compose, crossed_product_map, datum_transform, random_flagged_transform, DatumTransform, EpsilonFlags, Transformed};

use crate::algebra::StructAlgebra;
use crate::cyclo::CycScalar;
use crate::exactla::{linear_solve, Mat, Vector};

/// Two-sided inverse of v in A, if v is a unit.
pub fn inverse_element(a: &StructAlgebra, v: &[CycScalar]) -> Option<Vector> {
    let l = a.left_mult(v);
    let rhs = Mat::from_columns(a.field(), a.dim(), &[a.unit().clone()]).ok()?;
    let sol = linear_solve(&l, &rhs).ok()?;
    let y = sol.particular?.column(0);
    (a.mul(&y, v) == *a.unit()).then_some(y)
}

#[cfg(test)]
mod tests;
