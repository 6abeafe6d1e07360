use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{BiPoly, Poly};
use crate::ring::{denominator_lcm, Rational, Ring};

/// Newton interpolation through `(xs[k], ys[k])`; the abscissas must be distinct.
///
/// Consecutive integer abscissas take an integer-only path: forward
/// differences of the values with their denominators cleared, then a Horner
/// scheme in the falling-factorial basis scaled by `(n-1)!`.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Poly {
    assert_eq!(xs.len(), ys.len(), "interpolation needs one value per node");
    let n = xs.len();
    if n > 0 && consecutive_integers(xs) {
        return interpolate_consecutive(xs[0].numer(), ys);
    }
    // divided differences in place
    let mut dd: Vec<Rational> = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    // Horner on the Newton basis
    let mut acc = Poly::zero();
    for k in (0..n).rev() {
        let lin = Poly::from_coeffs(vec![-xs[k].clone(), <Rational as Ring>::one()]);
        acc = Ring::add(&Ring::mul(&acc, &lin), &Poly::constant(dd[k].clone()));
    }
    acc
}

fn consecutive_integers(xs: &[Rational]) -> bool {
    xs.iter().all(|x| x.is_integer())
        && xs
            .windows(2)
            .all(|w| w[1].numer() - w[0].numer() == BigInt::one())
}

fn interpolate_consecutive(x0: &BigInt, ys: &[Rational]) -> Poly {
    let n = ys.len();
    let lcm = denominator_lcm(ys.iter());
    let mut diff: Vec<BigInt> = ys
        .iter()
        .map(|y| y.numer() * (&lcm / y.denom()))
        .collect();
    for level in 1..n {
        for k in (level..n).rev() {
            diff[k] = &diff[k] - &diff[k - 1];
        }
    }
    // sum_k diff[k] C(x - x0, k) times (n-1)!, evaluated by Horner
    let top = n - 1;
    let mut ratio = vec![BigInt::one(); n];
    for k in (0..top).rev() {
        ratio[k] = &ratio[k + 1] * BigInt::from(k + 1);
    }
    let mut acc: Vec<BigInt> = vec![&diff[top] * &ratio[top]];
    for k in (0..top).rev() {
        let shift: BigInt = x0 + BigInt::from(k);
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * &shift;
        }
        next[0] += &diff[k] * &ratio[k];
        acc = next;
    }
    let scale = &ratio[0] * &lcm;
    Poly::from_coeffs(
        acc.into_iter()
            .map(|c| Rational::new(c, scale.clone()))
            .collect(),
    )
}

/// Interpolate polynomial-valued samples coefficient by coefficient.
///
/// Each sample `values[k]` is a polynomial in the main variable; the result
/// is a [`BiPoly`] whose inner variable is the interpolation variable.
pub fn interpolate_many(xs: &[Rational], values: &[Poly]) -> BiPoly {
    let width = values.iter().map(|v| v.coeffs().len()).max().unwrap_or(0);
    let rows: Vec<Poly> = (0..width)
        .into_par_iter()
        .map(|j| {
            let ys: Vec<Rational> = values.iter().map(|v| v.coeff(j)).collect();
            interpolate(xs, &ys)
        })
        .collect();
    BiPoly::from_coeffs(rows)
}
