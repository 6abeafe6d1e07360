//! Unidimensional lattice walks with steps `(1, u)`.
//!
//! Counts come from the step-by-step recurrence
//! `w_{n,k} = sum_{u in S} w_{n-1,k-u}`, optionally confined to nonnegative
//! altitudes. Series for bridges, excursions and meanders are derived from
//! the characteristic Laurent polynomial `Γ(y) = sum_{u in S} y^u`:
//!
//! ```text
//! B(x) = sum_n [y^0] Γ(y)^n x^n
//! E(x) = exp(∫ (B(x) - 1) / x)
//! A(x) = sum_n (sum_{k<0} [y^k] Γ(y)^n) x^n
//! M(x) = exp(-∫ A(x) / x) / (1 - x Γ(1))
//! ```

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ring::Rational;
use crate::series::TruncatedSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    steps: Vec<i64>,
}

impl StepSet {
    /// Sorted, deduplicated set of vertical displacements; must be nonempty.
    pub fn new(steps: impl IntoIterator<Item = i64>) -> Result<Self> {
        let mut steps: Vec<i64> = steps.into_iter().collect();
        steps.sort_unstable();
        steps.dedup();
        if steps.is_empty() {
            return Err(Error::InvalidStepSet("step set is empty".into()));
        }
        Ok(StepSet { steps })
    }

    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    /// Largest `u` with `(1, -u)` a step, or 0.
    pub fn u_minus(&self) -> i64 {
        (-self.steps[0]).max(0)
    }

    /// Largest `u` with `(1, u)` a step, or 0.
    pub fn u_plus(&self) -> i64 {
        self.steps[self.steps.len() - 1].max(0)
    }

    pub fn d(&self) -> i64 {
        self.u_minus() + self.u_plus()
    }

    fn require_down(&self) -> Result<()> {
        if self.u_minus() < 1 {
            return Err(Error::InvalidStepSet("no step goes down".into()));
        }
        Ok(())
    }

    fn require_both(&self) -> Result<()> {
        self.require_down()?;
        if self.u_plus() < 1 {
            return Err(Error::InvalidStepSet("no step goes up".into()));
        }
        Ok(())
    }
}

/// Dense Laurent polynomial: `coeffs[i]` is the coefficient of `y^(offset + i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    pub offset: i64,
    pub coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn one() -> Self {
        Laurent {
            offset: 0,
            coeffs: vec![BigInt::from(1)],
        }
    }

    pub fn characteristic(s: &StepSet) -> Self {
        let lo = s.steps[0];
        let mut coeffs = vec![BigInt::zero(); (s.steps[s.steps.len() - 1] - lo + 1) as usize];
        for &u in &s.steps {
            coeffs[(u - lo) as usize] = BigInt::from(1);
        }
        Laurent { offset: lo, coeffs }
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.offset;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Laurent {
            offset: self.offset + other.offset,
            coeffs,
        }
    }

    /// Sum of the coefficients of negative exponents.
    pub fn negative_part_sum(&self) -> BigInt {
        (self.offset..0).map(|k| self.coeff(k)).sum()
    }
}

/// Walk counts `w_{n,k}` (or the confined `w̃_{n,k}`) for `n = 0..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkTable {
    pub confined: bool,
    rows: Vec<Laurent>,
}

impl WalkTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, n: usize) -> &Laurent {
        &self.rows[n]
    }

    pub fn count(&self, n: usize, k: i64) -> BigInt {
        self.rows[n].coeff(k)
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].coeffs.iter().sum()
    }

    pub fn negative_sum(&self, n: usize) -> BigInt {
        self.rows[n].negative_part_sum()
    }
}

/// Rows `0..=n` of the walk recurrence; confined walks never go below 0.
pub fn walk_counts(s: &StepSet, n: usize, confined: bool) -> WalkTable {
    let mut rows = vec![Laurent::one()];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let lo = prev.offset + s.steps[0];
        let hi = prev.offset + prev.coeffs.len() as i64 - 1 + s.steps[s.steps.len() - 1];
        let lo = if confined { lo.max(0) } else { lo };
        let coeffs: Vec<BigInt> = (lo..=hi)
            .map(|k| s.steps.iter().map(|&u| prev.coeff(k - u)).sum())
            .collect();
        rows.push(Laurent { offset: lo, coeffs });
    }
    WalkTable { confined, rows }
}

fn from_integers(values: Vec<BigInt>) -> TruncatedSeries<Rational> {
    let n = values.len();
    TruncatedSeries::new(values.into_iter().map(Rational::from_integer).collect(), n)
}

fn assert_integral(s: &TruncatedSeries<Rational>, what: &str) {
    for (k, c) in s.coeffs().iter().enumerate() {
        assert!(c.is_integer(), "{what} coefficient {k} is not an integer: {c}");
    }
}

/// Powers `Γ^0 .. Γ^(n-1)` summarized by a map on each Laurent power.
fn over_powers(s: &StepSet, n: usize, f: impl Fn(&Laurent) -> BigInt) -> Vec<BigInt> {
    let gamma = Laurent::characteristic(s);
    let mut pow = Laurent::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        if k > 0 {
            pow = pow.mul(&gamma);
        }
        out.push(f(&pow));
    }
    out
}

/// `B(x) = [y^0] 1/(1 - x Γ(y))` modulo `x^n`.
pub fn bridges_series(s: &StepSet, n: usize) -> Result<TruncatedSeries<Rational>> {
    s.require_both()?;
    Ok(from_integers(over_powers(s, n, |p| p.coeff(0))))
}

/// `E(x) = exp(∫ (B(x) - 1)/x)` modulo `x^n`.
pub fn excursions_series(s: &StepSet, n: usize) -> Result<TruncatedSeries<Rational>> {
    let b = bridges_series(s, n)?;
    if n == 0 {
        return Ok(b);
    }
    let quotient = TruncatedSeries::from_fn(n - 1, |k| b.coeff(k + 1));
    let e = quotient.integrate().exp()?;
    assert_integral(&e, "excursion");
    Ok(e)
}

/// `A(x)`: walks of length `n` ending at a negative altitude, modulo `x^n`.
pub fn negative_altitude_series(s: &StepSet, n: usize) -> Result<TruncatedSeries<Rational>> {
    s.require_down()?;
    Ok(from_integers(over_powers(s, n, Laurent::negative_part_sum)))
}

/// `M(x) = exp(-∫ A(x)/x) / (1 - x Γ(1))` modulo `x^n`.
pub fn meanders_series(s: &StepSet, n: usize) -> Result<TruncatedSeries<Rational>> {
    s.require_both()?;
    let a = negative_altitude_series(s, n)?;
    if n == 0 {
        return Ok(a);
    }
    let quotient = TruncatedSeries::from_fn(n - 1, |k| -a.coeff(k + 1));
    let size = Rational::from_integer(BigInt::from(s.steps.len()));
    let free = TruncatedSeries::new(vec![Rational::from_integer(1.into()), -size], n);
    let m = quotient.integrate().exp()?.div(&free)?;
    assert_integral(&m, "meander");
    Ok(m)
}
