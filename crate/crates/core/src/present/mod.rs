//! `.hpf` presentations: generators, relations, Δ and ε on generators, completed
//! into structure constants by deglex overlap resolution.

mod lexer;
mod parser;
mod poly;
mod rewrite;

pub use parser::{parse_presentation, Presentation, TensorSum};
pub use poly::{NcPoly, Word};
pub use rewrite::{complete, complete_rewriting, Completion, Rewriter, Rule};

use crate::error::Result;
use crate::hopf::HopfAlgebra;

pub const DEFAULT_DEGREE_CAP: usize = 16;

/// Parse, complete and build the Hopf algebra in one step.
pub fn hopf_from_source(src: &str, cap: usize) -> Result<HopfAlgebra> {
    complete_rewriting(&parse_presentation(src)?, cap)?.to_hopf()
}
