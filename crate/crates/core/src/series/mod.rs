//! Truncated power series over an exact coefficient field.
//!
//! A [`TruncatedSeries`] is known modulo `v^order` and stores exactly
//! `order` coefficients. Binary operations keep the smaller of the two
//! orders, so precision is tracked by the data and never assumed.
//!
//! The quadratic recurrences used for `inverse`, `exp` and `log` are exact
//! in characteristic zero; no attempt is made to control denominator growth.

mod newton;

pub use newton::{newton_series, poly_from_newton, NewtonSeries};

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::ring::{Field, Rational};

#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<F> {
    coeffs: Vec<F>,
}

fn int<F: Field>(k: usize) -> F {
    F::from_rational(&Rational::from_integer(k.into()))
}

impl<F: Field> TruncatedSeries<F> {
    /// Series known modulo `v^order`; `coeffs` is padded with zeros or cut.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order, F::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![F::one()], order)
    }

    pub fn from_poly(p: &UniPoly<F>, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order).cloned().collect(), order)
    }

    /// Builds the series from a coefficient generator `k -> f_k`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> F) -> Self {
        TruncatedSeries {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    /// Drop precision down to `order` (never raises it).
    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    pub fn to_poly(&self) -> UniPoly<F> {
        UniPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].add(&other.coeffs[k]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].sub(&other.coeffs[k]))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |k| self.coeffs[k].neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_fn(self.order(), |k| self.coeffs[k].mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0_inv = self.coeffs[0]
            .inv()
            .ok_or_else(|| Error::NotInvertible(self.coeffs[0].to_string()))?;
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = F::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out.push(acc.neg().mul(&c0_inv));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self / other` as series; `other` must have an invertible constant term.
    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn derivative(&self) -> Self {
        Self::from_fn(self.order().saturating_sub(1), |k| {
            self.coeffs[k + 1].mul(&int(k + 1))
        })
    }

    /// `sum a_k v^(k+1) / (k+1)`; the order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order() + 1);
        coeffs.push(F::zero());
        for (k, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.div(&int(k + 1)));
        }
        TruncatedSeries { coeffs }
    }

    /// `exp(self)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantTerm(self.coeffs[0].to_string()));
        }
        // n g_n = sum_{k=1}^{n} k f_k g_{n-k}
        let weighted: Vec<F> = (0..n).map(|k| self.coeffs[k].mul(&int(k))).collect();
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(F::one());
        for m in 1..n {
            let mut acc = F::zero();
            for k in 1..=m {
                if !weighted[k].is_zero() {
                    acc = acc.add(&weighted[k].mul(&out[m - k]));
                }
            }
            out.push(acc.div(&int(m)));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `log(self)`; the constant term must be one.
    pub fn log(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantTerm(self.coeffs[0].to_string()));
        }
        // n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
        let mut out: Vec<F> = vec![F::zero(); n];
        for m in 1..n {
            let mut acc = self.coeffs[m].mul(&int(m));
            for (k, g) in out.iter().enumerate().take(m).skip(1) {
                acc = acc.sub(&g.mul(&int(k)).mul(&self.coeffs[m - k]));
            }
            out[m] = acc.div(&int(m));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Coefficient-wise product; the order is the smaller of the two.
    pub fn hadamard(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k].mul(&other.coeffs[k]))
    }

    /// `f(c v)`: coefficient `k` multiplied by `c^k`.
    pub fn dilate(&self, c: &F) -> Self {
        let mut pow = F::one();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            out.push(a.mul(&pow));
            pow = pow.mul(c);
        }
        TruncatedSeries { coeffs: out }
    }
}

impl<F: Field> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*v^{k}")?;
        }
        write!(f, " + O(v^{})", self.order())
    }
}

/// `sum_{n < order} n! v^n`.
pub fn factorial_series(order: usize) -> TruncatedSeries<Rational> {
    let mut f = Rational::from_integer(1.into());
    TruncatedSeries::from_fn(order, |k| {
        if k > 0 {
            f *= Rational::from_integer(k.into());
        }
        f.clone()
    })
}

/// `exp(v) = sum v^n / n!` truncated at `order`.
pub fn exp_series(order: usize) -> TruncatedSeries<Rational> {
    let fact = factorial_series(order);
    TruncatedSeries::from_fn(order, |k| fact.coeffs[k].recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn s(c: &[Rational], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::new(c.to_vec(), order)
    }

    #[test]
    fn inverse_examples() {
        let f = s(&[rat(1), rat(-1)], 4);
        assert_eq!(f.inverse().unwrap(), s(&[rat(1), rat(1), rat(1), rat(1)], 4));
        assert_eq!(s(&[rat(2)], 3).inverse().unwrap(), s(&[ratio(1, 2)], 3));
        let g = s(&[rat(1), rat(-3), rat(2)], 3);
        let inv = g.inverse().unwrap();
        assert_eq!(inv, s(&[rat(1), rat(3), rat(7)], 3));
        assert_eq!(g.mul(&inv), TruncatedSeries::one(3));
        assert!(matches!(
            s(&[rat(0), rat(1)], 3).inverse(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn exp_log_examples() {
        let x = s(&[rat(0), rat(1)], 4);
        assert_eq!(
            x.exp().unwrap(),
            s(&[rat(1), rat(1), ratio(1, 2), ratio(1, 6)], 4)
        );
        let one_minus_x = s(&[rat(1), rat(-1)], 4);
        assert_eq!(
            one_minus_x.log().unwrap(),
            s(&[rat(0), rat(-1), ratio(-1, 2), ratio(-1, 3)], 4)
        );
        let f = s(&[rat(1), rat(1), rat(5)], 3);
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
        assert!(matches!(f.exp(), Err(Error::ExpConstantTerm(_))));
        assert!(matches!(x.log(), Err(Error::LogConstantTerm(_))));
    }

    #[test]
    fn integrate_raises_order() {
        let f = s(&[rat(1), rat(2), rat(3)], 3);
        let i = f.integrate();
        assert_eq!(i.order(), 4);
        assert_eq!(i, s(&[rat(0), rat(1), rat(1), rat(1)], 4));
        assert_eq!(i.derivative(), f);
    }

    #[test]
    fn hadamard_examples() {
        let ones = s(&vec![rat(1); 4], 4);
        assert_eq!(
            ones.hadamard(&factorial_series(4)),
            s(&[rat(1), rat(1), rat(2), rat(6)], 4)
        );
        let f = s(&[rat(3), ratio(1, 2), rat(-7), rat(0)], 4);
        assert_eq!(f.hadamard(&ones), f);
        assert_eq!(
            s(&[rat(2), rat(3)], 2).hadamard(&s(&[rat(5), rat(7)], 2)),
            s(&[rat(10), rat(21)], 2)
        );
    }

    #[test]
    fn orders_track_minimum() {
        let a = s(&[rat(1)], 5);
        let b = s(&[rat(1)], 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).coeff(0), rat(2));
    }
}
