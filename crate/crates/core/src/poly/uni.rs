use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{Field, Rational, Ring};

/// Degree of a polynomial, with a dedicated value for the zero polynomial.
///
/// `NegInf` compares below every finite degree, so `max`/`min` over degrees
/// behave the way the usual `deg 0 = -inf` convention expects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Degree of a product.
    pub fn plus(self, other: Degree) -> Degree {
        match (self, other) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * v^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree with the zero polynomial mapped to 0; for bounds arithmetic.
    pub fn deg0(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(at).add(c))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer(k.into())))
                .collect(),
        )
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(q)).collect())
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `v^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Keep terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Coefficient list reversed at the given length: `v^(len-1) * P(1/v)`.
    ///
    /// Unlike [`UniPoly::reciprocal`] this keeps a formal length, which
    /// matters when the constant term of `self` is zero.
    pub fn reverse_at(&self, len: usize) -> Self {
        let mut coeffs: Vec<R> = (0..len).map(|k| self.coeff(k)).collect();
        coeffs.reverse();
        Self::from_coeffs(coeffs)
    }

    /// Substitute `v -> v^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); self.deg0() * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// `self(other)` by Horner's rule.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * other) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, e: u64) -> Self {
        Ring::powu(self, e)
    }

    /// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a` by `b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.deg0();
        let lb = b.leading().expect("pseudo-remainder by zero").clone();
        let Some(da) = self.degree().finite() else {
            return Self::zero();
        };
        if da < db {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        let mut e = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let lr = r[top].clone();
            let shift = top - db;
            for c in r.iter_mut() {
                *c = c.mul(&lb);
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[shift + j] = r[shift + j].sub(&lr.mul(bj));
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            e -= 1;
        }
        let rem = Self::from_coeffs(r);
        if e > 0 {
            rem.mul_coeff(&lb.powu(e as u64))
        } else {
            rem
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = R::zero();
        Self::from_coeffs(
            (0..n)
                .map(|k| {
                    f(
                        self.coeffs.get(k).unwrap_or(&zero),
                        other.coeffs.get(k).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl<F: Field> UniPoly<F> {
    /// Euclidean division; panics if `b` is zero.
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let lb_inv = b.leading().expect("division by zero polynomial").inv().unwrap();
        let db = b.deg0();
        let Some(da) = self.degree().finite() else {
            return (Self::zero(), Self::zero());
        };
        if da < db {
            return (Self::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = r[k + db].mul(&lb_inv);
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(bj));
            }
            q[k] = c;
        }
        r.truncate(db);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.mul_coeff(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn one() -> Self {
        UniPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.add(b))
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.sub(b))
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        UniPoly::from_coeffs(out)
    }
    fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        UniPoly::scale(self, q)
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree().finite()?;
        let Some(da) = self.degree().finite() else {
            return Some(UniPoly::zero());
        };
        if da < db {
            return None;
        }
        let lb = rhs.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![R::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            if r[k + db].is_zero() {
                continue;
            }
            let c = r[k + db].div_exact(lb)?;
            for (j, bj) in rhs.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(bj));
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UniPoly::from_coeffs(q))
    }
}

impl<'a, R: Ring> Add<&'a UniPoly<R>> for &'a UniPoly<R> {
    type Output = UniPoly<R>;
    fn add(self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
        Ring::add(self, rhs)
    }
}

impl<'a, R: Ring> Sub<&'a UniPoly<R>> for &'a UniPoly<R> {
    type Output = UniPoly<R>;
    fn sub(self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
        Ring::sub(self, rhs)
    }
}

impl<'a, R: Ring> Mul<&'a UniPoly<R>> for &'a UniPoly<R> {
    type Output = UniPoly<R>;
    fn mul(self, rhs: &'a UniPoly<R>) -> UniPoly<R> {
        Ring::mul(self, rhs)
    }
}

impl<R: Ring> Neg for &UniPoly<R> {
    type Output = UniPoly<R>;
    fn neg(self) -> UniPoly<R> {
        Ring::neg(self)
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
