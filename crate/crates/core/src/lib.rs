//! Dual-containing cyclic codes from sextic cyclotomic classes and the
//! quantum synchronizable codes built from them.

pub mod arith;
pub mod cli;
pub mod codes;
pub mod cyclotomy;
pub mod error;
pub mod field;
pub mod poly;
pub mod qsc;
pub mod report;

pub use error::{Error, Result};
