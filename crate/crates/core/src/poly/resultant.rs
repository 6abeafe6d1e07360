//! Resultants by evaluation and interpolation.
//!
//! Both operands are sampled at the integers `0, 1, 2, ...` of the inner
//! variable, skipping any point where the degree in the eliminated variable
//! drops. At each point the univariate resultant is taken with the
//! subresultant pseudo-remainder sequence, and the samples are interpolated
//! back. The number of points comes from the classical bound
//! `deg Res <= dx(P) dy(Q) + dx(Q) dy(P)`.

use rayon::prelude::*;

use super::{interpolate_many, BiPoly, Poly, TriPoly, UniPoly};
use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

/// Resultant of `a` and `b` over an integral domain, by the subresultant
/// algorithm. Every division performed is exact.
pub fn subresultant<R: Ring>(a: &UniPoly<R>, b: &UniPoly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return R::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut negate = false;
    if a.deg0() < b.deg0() {
        if a.deg0() % 2 == 1 && b.deg0() % 2 == 1 {
            negate = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg0() == 0 {
        let r = b.leading().unwrap().powu(a.deg0() as u64);
        return if negate { r.neg() } else { r };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let (da, db) = (a.deg0(), b.deg0());
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let divisor = g.mul(&h.powu(delta as u64));
        b = UniPoly::from_coeffs(
            r.coeffs()
                .iter()
                .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
                .collect(),
        );
        g = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .powu(delta as u64)
                .div_exact(&h.powu(delta as u64 - 1))
                .expect("subresultant division is exact"),
        };
        if b.is_zero() {
            return R::zero();
        }
        if b.deg0() == 0 {
            break;
        }
    }
    let da = a.deg0() as u64;
    let res = b
        .leading()
        .unwrap()
        .powu(da)
        .div_exact(&h.powu(da - 1))
        .expect("subresultant division is exact");
    if negate {
        res.neg()
    } else {
        res
    }
}

fn inner_degree(p: &TriPoly) -> usize {
    p.coeffs()
        .iter()
        .map(|c| c.deg_inner().finite().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

fn specialize(p: &TriPoly, at: &Rational) -> UniPoly<Poly> {
    UniPoly::from_coeffs(p.coeffs().iter().map(|c| c.eval_inner(at)).collect())
}

/// Resultant wrt the outer variable of two polynomials whose coefficients
/// lie in `Q[x, z]` (stored as [`BiPoly`] with inner `x` and outer `z`).
///
/// Returns a [`BiPoly`] in `(x, z)` with the same variable roles. The
/// parameter `z` is carried symbolically: each sample is a resultant over
/// `Q[z]`.
pub fn resultant_param(p: &TriPoly, q: &TriPoly) -> Result<BiPoly> {
    if p.is_zero() || q.is_zero() {
        return Ok(BiPoly::zero());
    }
    if p.is_constant() && q.is_constant() {
        return Err(Error::ConstantResultant);
    }
    let bound = inner_degree(p) * q.deg0() + inner_degree(q) * p.deg0();
    let (lp, lq) = (p.leading().unwrap(), q.leading().unwrap());
    let mut xs = Vec::with_capacity(bound + 1);
    let mut x0: i64 = 0;
    while xs.len() < bound + 1 {
        let at = Rational::from_integer(x0.into());
        if !lp.eval_inner(&at).is_zero() && !lq.eval_inner(&at).is_zero() {
            xs.push(at);
        }
        x0 += 1;
    }
    let values: Vec<Poly> = xs
        .par_iter()
        .map(|at| subresultant(&specialize(p, at), &specialize(q, at)))
        .collect();
    Ok(interpolate_many(&xs, &values))
}

/// `Res_y(P, Q)` for bivariate `P`, `Q` (inner `x`, main `y`): a polynomial in `x`.
pub fn resultant_y(p: &BiPoly, q: &BiPoly) -> Result<Poly> {
    let lift = |b: &BiPoly| -> TriPoly {
        TriPoly::from_coeffs(b.coeffs().iter().cloned().map(BiPoly::constant).collect())
    };
    let r = resultant_param(&lift(p), &lift(q))?;
    Ok(r.coeff(0))
}
