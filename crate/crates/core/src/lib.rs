//! Commutative algebra over prime fields: Gröbner bases, graded modules and
//! free resolutions, Rees algebras, reductions and cores of modules.

pub mod error;
pub mod field;
pub mod groebner;
pub mod modalg;
pub mod poly;
pub mod checks;
pub mod cli;
pub mod rees;

pub use error::{Error, Result};
