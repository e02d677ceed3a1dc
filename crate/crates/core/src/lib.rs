pub mod cyclo;
pub mod error;
pub mod exactla;
pub mod algebra;
pub mod hopf;
pub mod present;
pub mod cleft;
pub mod catalog;
pub mod par;
pub mod cli;

pub use error::{Error, Result};
