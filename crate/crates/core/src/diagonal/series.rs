use crate::error::{Error, Result};
use crate::poly::BiPoly;
use crate::ring::{Field, Rational, Ring};
use crate::series::TruncatedSeries;

/// First `n` coefficients of `Diag(A/B)` by expanding `A/B` modulo `(x^n, y^n)`.
pub fn diagonal_series(a: &BiPoly, b: &BiPoly, n: usize) -> Result<TruncatedSeries<Rational>> {
    let b00 = b.coeff_at(0, 0);
    if b00.is_zero() {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let b00_inv = b00.inv().expect("nonzero rational");
    let support: Vec<(usize, usize, Rational)> = b
        .terms()
        .filter(|&(i, j, _)| (i, j) != (0, 0) && i < n && j < n)
        .map(|(i, j, c)| (i, j, c.clone()))
        .collect();
    // f[i][j] with f * B = A
    let mut f = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = a.coeff_at(i, j);
            for (k, l, c) in &support {
                if *k <= i && *l <= j {
                    acc = acc.sub(&c.mul(&f[i - k][j - l]));
                }
            }
            f[i][j] = acc.mul(&b00_inv);
        }
    }
    Ok(TruncatedSeries::from_fn(n, |k| f[k][k].clone()))
}

/// Whether `phi(t, series) ≡ 0 mod t^n`.
///
/// Returns false when the series is known to fewer than `n` terms.
pub fn annihilation_check(phi: &BiPoly, series: &TruncatedSeries<Rational>, n: usize) -> bool {
    if series.order() < n {
        return false;
    }
    let s = series.truncate(n);
    let mut acc = TruncatedSeries::zero(n);
    for row in phi.coeffs().iter().rev() {
        acc = acc.mul(&s).add(&TruncatedSeries::from_poly(row, n));
    }
    acc.coeffs().iter().all(|c| c.is_zero())
}
