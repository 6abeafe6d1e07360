//! Polynomials whose roots are the sums of `c` roots of a given polynomial.
//!
//! For `P` of degree `d` with roots `a_1..a_d`, the composed sum `Σ_c P` is
//! the monic polynomial `prod_{i_1 < ... < i_c} (y - a_{i_1} - ... - a_{i_c})`
//! of degree `C(d, c)`. It is computed entirely through Newton sums: with
//! `S = N(P) ⊙ exp(y)`,
//!
//! ```text
//! N(Σ_c P) = ([z^c] exp(sum_{n=1..c} (-1)^(n-1) S(n y) z^n / n)) ⊙ sum n! y^n
//! ```
//!
//! and the polynomial is recovered from its Newton sums. Over `Q[x]` the
//! computation runs at integer sample points of `x` and is interpolated back
//! after clearing denominators with `a(x)^D_x`, `a` the leading coefficient.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{interpolate_many, BiPoly, Poly};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::{binomial, denominator_lcm, Rational, Ring};
use crate::series::{
    exp_series, factorial_series, newton_series, poly_from_newton, NewtonSeries, TruncatedSeries,
};

#[derive(Clone, Debug, PartialEq)]
pub struct ComposedSumResult {
    /// `a^D_x * Σ_c P` in canonical form; inner `x`, main variable `y`.
    pub poly: BiPoly,
    pub c: usize,
    /// `C(d_y - 1, c - 1)`.
    pub d_x: u64,
    /// `C(d_y, c)`.
    pub d_y: u64,
    /// Exponent of the leading coefficient used to clear denominators.
    pub lead_power_used: u64,
    /// Integer sample points skipped because the leading coefficient vanished.
    pub skipped_points: Vec<i64>,
}

type ZSeries = Vec<TruncatedSeries<Rational>>;

/// Product of two polynomials in `z` with series coefficients, cut at `z^(c+1)`.
fn zmul(a: &ZSeries, b: &ZSeries, c: usize, order: usize) -> ZSeries {
    let mut out = vec![TruncatedSeries::zero(order); c + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.coeffs().iter().all(Ring::is_zero) {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(c + 1 - i) {
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

fn check_range(p: &Poly, c: usize) -> Result<usize> {
    let d = p.degree().finite().ok_or(Error::ZeroReciprocal)?;
    if c == 0 || c > d {
        return Err(Error::SubsetSizeOutOfRange { c, degree: d });
    }
    Ok(d)
}

/// Monic polynomial whose roots are all sums of `c` distinct-index roots of `p`.
///
/// Same pipeline as [`composed_sum_by_series`], carried out over the
/// integers: the roots are first scaled by the leading coefficient `a` of
/// the integer-cleared `p`, which makes every Newton sum an integer. A series
/// `sum s_k y^k / k!` is stored by its numerators `s_k`, so the Hadamard
/// product with `exp(y)` is free, products become binomial convolutions, and
/// the truncated exponential in `z` follows `m F_m = sum_k k G_k F_(m-k)`.
pub fn pure_composed_sum(p: &Poly, c: usize) -> Result<Poly> {
    let d = check_range(p, c)?;
    let big_d = binomial(d as u64, c as u64) as usize;
    let lcm = denominator_lcm(p.coeffs());
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|q| q.numer() * (&lcm / q.denom()))
        .collect();
    let a = ints[d].clone();
    // monic y^d + sum_i m_i y^i with roots a * alpha
    let mut monic: Vec<BigInt> = Vec::with_capacity(d);
    let mut a_pow = BigInt::one();
    for i in (0..d).rev() {
        monic.push(&ints[i] * &a_pow);
        a_pow *= &a;
    }
    monic.reverse();
    let sums = integer_power_sums(&monic, big_d + 1);
    let binom = pascal(big_d);

    // h[m] holds m! [z^m] F as exponential numerators
    let mut h: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); big_d + 1]; c + 1];
    h[0][0] = BigInt::one();
    let dilated: Vec<Vec<BigInt>> = (0..=c)
        .map(|k| {
            let sign = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            let base = BigInt::from(k);
            let mut pow = sign;
            sums.iter()
                .map(|s| {
                    let v = s * &pow;
                    pow *= &base;
                    v
                })
                .collect()
        })
        .collect();
    for m in 1..=c {
        let mut acc = vec![BigInt::zero(); big_d + 1];
        // (m-1)!/(m-k)! for k = 1..m
        let mut falling = BigInt::one();
        for k in 1..=m {
            if k > 1 {
                falling *= BigInt::from(m + 1 - k);
            }
            let conv = egf_mul(&dilated[k], &h[m - k], &binom);
            for (slot, v) in acc.iter_mut().zip(conv) {
                *slot += v * &falling;
            }
        }
        h[m] = acc;
    }
    let c_fact: BigInt = (1..=c).map(BigInt::from).product();
    let new_sums: Vec<BigInt> = h[c]
        .iter()
        .map(|v| {
            debug_assert!((v % &c_fact).is_zero());
            v / &c_fact
        })
        .collect();
    let scaled = integer_poly_from_power_sums(&new_sums, big_d);
    // undo the scaling: coefficient j of the result is scaled[j] / a^(D - j)
    let mut out = vec![<Rational as Ring>::zero(); big_d + 1];
    let mut a_pow = BigInt::one();
    for j in (0..=big_d).rev() {
        out[j] = Rational::new(scaled[j].clone(), a_pow.clone());
        a_pow *= &a;
    }
    Ok(Poly::from_coeffs(out))
}

/// `C(m, i)` for `0 <= i <= m <= n`.
fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![BigInt::one(); m + 1];
        for i in 1..m {
            row[i] = &prev[i - 1] + &prev[i];
        }
        rows.push(row);
    }
    rows
}

/// Product of exponential series given by numerators: `sum_i C(m, i) a_i b_(m-i)`.
fn egf_mul(a: &[BigInt], b: &[BigInt], binom: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|m| {
            let mut acc = BigInt::zero();
            for i in 0..=m {
                if a[i].is_zero() || b[m - i].is_zero() {
                    continue;
                }
                acc += &binom[m][i] * &a[i] * &b[m - i];
            }
            acc
        })
        .collect()
}

/// Power sums `p_0..p_(n-1)` of the roots of the monic `y^d + sum m_i y^i`.
fn integer_power_sums(monic: &[BigInt], n: usize) -> Vec<BigInt> {
    let d = monic.len();
    let mut p: Vec<BigInt> = Vec::with_capacity(n);
    for k in 0..n {
        if k == 0 {
            p.push(BigInt::from(d));
            continue;
        }
        let mut acc = if k <= d {
            &monic[d - k] * BigInt::from(k)
        } else {
            BigInt::zero()
        };
        for i in 1..k.min(d + 1) {
            acc += &monic[d - i] * &p[k - i];
        }
        p.push(-acc);
    }
    p
}

/// Monic integer polynomial of degree `d` from its power sums (Newton identities).
fn integer_poly_from_power_sums(p: &[BigInt], d: usize) -> Vec<BigInt> {
    // k e_k = sum_{i=1..k} (-1)^(i-1) e_(k-i) p_i
    let mut e: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=d {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        debug_assert!((&acc % BigInt::from(k)).is_zero());
        e.push(acc / BigInt::from(k));
    }
    // coefficient of y^(d-k) is (-1)^k e_k
    let mut out = vec![BigInt::zero(); d + 1];
    for (k, ek) in e.into_iter().enumerate() {
        out[d - k] = if k % 2 == 0 { ek } else { -ek };
    }
    out
}

/// [`pure_composed_sum`] computed literally with truncated rational series.
///
/// Kept as an independent reference for the integer path.
pub fn composed_sum_by_series(p: &Poly, c: usize) -> Result<Poly> {
    let d = check_range(p, c)?;
    let big_d = binomial(d as u64, c as u64) as usize;
    let order = big_d + 1;
    let s = newton_series(p, order)?.inner.hadamard(&exp_series(order));

    // argument sum_{n=1..c} (-1)^(n-1) S(n y) z^n / n, valuation 1 in z
    let mut arg: ZSeries = vec![TruncatedSeries::zero(order); c + 1];
    for (n, slot) in arg.iter_mut().enumerate().skip(1) {
        let sign = if n % 2 == 1 { 1 } else { -1 };
        let weight = Rational::new(sign.into(), (n as i64).into());
        *slot = s.dilate(&Rational::from_integer((n as i64).into())).scale(&weight);
    }

    // exp(arg) = sum_{k=0..c} arg^k / k!, only its z^c coefficient is needed
    let mut power: ZSeries = vec![TruncatedSeries::zero(order); c + 1];
    power[0] = TruncatedSeries::one(order);
    let mut top = TruncatedSeries::zero(order);
    let mut fact = Rational::from_integer(1.into());
    for k in 1..=c {
        power = zmul(&power, &arg, c, order);
        fact *= Rational::from_integer((k as i64).into());
        top = top.add(&power[c].scale(&fact.recip()));
    }

    let sums = NewtonSeries {
        inner: top.hadamard(&factorial_series(order)),
    };
    poly_from_newton(&sums, big_d)
}

/// `a(x)^D_x * Σ_c P` for `P` in `Q[x][y]`, by evaluation and interpolation.
///
/// Uses `1 + d_x D_x` integer points `x = 0, 1, 2, ...` where the leading
/// coefficient `a(x)` does not vanish.
pub fn composed_sum_xy(p: &BiPoly, c: usize) -> Result<ComposedSumResult> {
    let dy = p.deg_outer().finite().ok_or(Error::ZeroReciprocal)?;
    if c == 0 || c > dy {
        return Err(Error::SubsetSizeOutOfRange { c, degree: dy });
    }
    let dx = p.deg_inner().finite().unwrap_or(0);
    let d_x = binomial(dy as u64 - 1, c as u64 - 1);
    let d_y = binomial(dy as u64, c as u64);
    let lead = p.leading().unwrap().clone();

    let needed = dx * d_x as usize + 1;
    let mut xs = Vec::with_capacity(needed);
    let mut skipped = Vec::new();
    let mut x0: i64 = 0;
    while xs.len() < needed {
        let at = Rational::from_integer(x0.into());
        if Ring::is_zero(&lead.eval(&at)) {
            skipped.push(x0);
        } else {
            xs.push(at);
        }
        x0 += 1;
    }

    let values: Vec<Poly> = xs
        .par_iter()
        .map(|at| {
            let scale = lead.eval(at).powu(d_x);
            pure_composed_sum(&p.eval_inner(at), c).map(|s| s.scale(&scale))
        })
        .collect::<Result<_>>()?;
    // interpolate_many puts the sample variable inner and y outer
    let poly = interpolate_many(&xs, &values).canonical();

    assert_eq!(poly.deg0() as u64, d_y, "composed sum has degree C(d_y, c)");
    assert!(
        poly.deg_inner().finite().unwrap_or(0) <= dx * d_x as usize,
        "composed sum exceeds the x-degree bound"
    );
    Ok(ComposedSumResult {
        poly,
        c,
        d_x,
        d_y,
        lead_power_used: d_x,
        skipped_points: skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&v| rat(v)).collect())
    }

    fn bp(t: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn pure_examples() {
        assert_eq!(pure_composed_sum(&p(&[6, -5, 1]), 2).unwrap(), p(&[-5, 1]));
        assert_eq!(
            pure_composed_sum(&p(&[-6, 11, -6, 1]), 2).unwrap(),
            p(&[-60, 47, -12, 1])
        );
        let q = p(&[3, 1, 4, 2]);
        assert_eq!(
            pure_composed_sum(&q, 3).unwrap(),
            Poly::from_coeffs(vec![rat(2), rat(1)])
        );
        assert_eq!(pure_composed_sum(&q, 1).unwrap(), q.monic());
        assert!(matches!(
            pure_composed_sum(&q, 4),
            Err(Error::SubsetSizeOutOfRange { c: 4, degree: 3 })
        ));
    }

    #[test]
    fn integer_path_matches_series_path() {
        let q = Poly::from_coeffs(vec![crate::ring::ratio(3, 2), rat(-1), rat(0), crate::ring::ratio(-7, 3), rat(5)]);
        for c in 1..=4 {
            assert_eq!(pure_composed_sum(&q, c).unwrap(), composed_sum_by_series(&q, c).unwrap());
        }
    }

    #[test]
    fn pure_with_repeated_roots() {
        // roots {1, 1, 2}: pair sums {2, 3, 3}
        let q = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-2, 1]));
        let expected = p(&[-2, 1]).mul(&p(&[-3, 1])).mul(&p(&[-3, 1]));
        assert_eq!(pure_composed_sum(&q, 2).unwrap(), expected);
    }

    #[test]
    fn bivariate_examples() {
        let r = composed_sum_xy(&bp(&[(0, 2, 1), (1, 0, -1)]), 2).unwrap();
        assert_eq!(r.poly, bp(&[(0, 1, 1)]));
        let r = composed_sum_xy(&bp(&[(0, 2, 1), (1, 1, 1), (0, 0, 1)]), 2).unwrap();
        assert_eq!(r.poly, bp(&[(0, 1, 1), (1, 0, 1)]));
        // (1 - 4x) z^2 - 1 with c = 1 is returned as itself
        let f = bp(&[(0, 2, 1), (1, 2, -4), (0, 0, -1)]);
        let r = composed_sum_xy(&f, 1).unwrap();
        assert_eq!(r.poly, f.canonical());
        assert_eq!((r.d_x, r.d_y, r.lead_power_used), (1, 2, 1));
    }

    #[test]
    fn skips_bad_points() {
        // leading coefficient x vanishes at 0
        let f = bp(&[(1, 2, 1), (0, 0, -1)]);
        let r = composed_sum_xy(&f, 2).unwrap();
        assert_eq!(r.skipped_points, vec![0]);
        // a^D_x * y with a = x; the content in x is kept
        assert_eq!(r.poly, bp(&[(1, 1, 1)]));
    }
}
