//! Exact arithmetic, determinants, closed forms and path counting for the
//! shifted binomial determinants `det(δ_ij + binom(μ+i+j-2, j))`.

pub mod arith;
pub mod error;
pub mod matrix;
pub mod closed_forms;
pub mod combinatorics;
pub mod condensation;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/determinants.md")]
    mod determinants {}
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/tilings.md")]
    mod tilings {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
