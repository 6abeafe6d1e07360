//! Dense polynomials over the rationals.
//!
//! Multivariate polynomials are recursive: a [`BiPoly`] is a univariate
//! polynomial in its *main* (outer) variable whose coefficients are
//! univariate polynomials in the *inner* variable. Throughout the crate the
//! inner variable is `x` (or `t`) and the main variable is `y`, `z` or `Δ`
//! depending on the routine; a [`TriPoly`] adds one more outer variable.

mod bi;
mod interp;
mod ratfun;
mod resultant;
mod sqfree;
mod uni;

pub use interp::{interpolate, interpolate_many};
pub use ratfun::RatFun;
pub use resultant::{resultant_param, resultant_y, subresultant};
pub use sqfree::{squarefree_decomposition, squarefree_part_uni, SquareFreeDecomposition};
pub use uni::{Degree, UniPoly};

use crate::error::{Error, Result};
use crate::ring::Rational;

/// Univariate polynomial over the rationals.
pub type Poly = UniPoly<Rational>;

/// Bivariate polynomial: main variable outside, inner variable in the coefficients.
pub type BiPoly = UniPoly<Poly>;

/// Trivariate polynomial: one more variable outside a [`BiPoly`].
pub type TriPoly = UniPoly<BiPoly>;

/// `rec(P) = v^deg(P) * P(1/v)`: the trimmed coefficient list, reversed.
pub fn reciprocal(p: &Poly) -> Result<Poly> {
    match p.degree().finite() {
        None => Err(Error::ZeroReciprocal),
        Some(d) => Ok(p.reverse_at(d + 1)),
    }
}
