//! Exact linear algebra over ℚ(ζ_N).

mod mat;
mod sparse;
mod subspace;

pub use mat::{
    add_scaled, add_vectors, is_zero_vector, linear_solve, scale_vector, sub_vectors, unit_vector, zero_vector, Mat,
    Solution, Vector,
};
pub use sparse::{solve_sparse, SparseRow};
pub use subspace::Subspace;
