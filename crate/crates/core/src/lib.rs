//! Exact annihilating polynomials for residues, composed sums and diagonals
//! of bivariate rational functions, plus one-dimensional lattice walk series.
//!
//! The guide in `book/` walks through each module; its snippets run as
//! doc-tests of this crate.

pub mod composed_sum;
pub mod diagonal;
pub mod error;
pub mod poly;
pub mod residues;
pub mod ring;
pub mod series;
pub mod walks;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/residues.md")]
    mod residues {}
    #[doc = include_str!("../../../book/src/composed-sums.md")]
    mod composed_sums {}
    #[doc = include_str!("../../../book/src/diagonals.md")]
    mod diagonals {}
    #[doc = include_str!("../../../book/src/walks.md")]
    mod walks {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
