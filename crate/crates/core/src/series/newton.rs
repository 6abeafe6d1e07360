use super::{int, TruncatedSeries};
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::Field;

/// Generating series of the power sums of the roots of a polynomial.
///
/// Coefficient `k` is `sum_i alpha_i^k`; in particular coefficient 0 is the
/// degree of the polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonSeries<F: Field> {
    pub inner: TruncatedSeries<F>,
}

/// Power sums of the roots of `p` modulo `v^order`, as `rec(p') / rec(p)`.
pub fn newton_series<F: Field>(p: &UniPoly<F>, order: usize) -> Result<NewtonSeries<F>> {
    let d = p.degree().finite().ok_or(Error::ZeroReciprocal)?;
    let rec_p = TruncatedSeries::from_poly(&p.reverse_at(d + 1), order);
    let rec_dp = TruncatedSeries::from_poly(&p.derivative().reverse_at(d), order);
    Ok(NewtonSeries {
        inner: rec_dp.div(&rec_p)?,
    })
}

/// The monic polynomial of degree `d` whose first `d + 1` power sums are `n`.
///
/// Uses `rec(P) = exp(integral((d - N(P)) / v))`.
pub fn poly_from_newton<F: Field>(n: &NewtonSeries<F>, d: usize) -> Result<UniPoly<F>> {
    let have = n.inner.order();
    if have < d + 1 {
        return Err(Error::InsufficientNewtonSums {
            needed: d + 1,
            have,
        });
    }
    let c0 = n.inner.coeff(0);
    if c0 != int::<F>(d) {
        return Err(Error::NewtonDegreeMismatch {
            degree: d,
            found: c0.to_string(),
        });
    }
    let quotient = TruncatedSeries::from_fn(d, |k| n.inner.coeff(k + 1).neg());
    let rec = quotient.integrate().exp()?;
    Ok(rec.to_poly().reverse_at(d + 1))
}
