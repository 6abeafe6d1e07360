//! Coefficient domains.
//!
//! Every domain used here is a commutative algebra over the rationals, so
//! besides the ring operations each one can absorb a rational scalar. The
//! [`Ring`] trait only asks for exact division (returning `None` when the
//! quotient does not exist), which is all the subresultant and long-division
//! routines need; [`Field`] adds inversion for the series engine.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn from_rational(q: &Rational) -> Self {
        Self::one().scale(q)
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn powu(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

pub trait Field: Ring + Display {
    fn inv(&self) -> Option<Self>;

    /// Panics on division by zero; callers check invertibility first.
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv().expect("division by zero in field"))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Decimal `num/den` form used by the JSON writers (denominator always shown).
pub fn rational_to_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Least common multiple of the denominators of `coeffs` (1 for an empty slice).
pub fn denominator_lcm<'a>(coeffs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    coeffs
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Greatest common divisor of the numerators of `coeffs` (0 for an empty slice).
pub(crate) fn numerator_gcd<'a>(coeffs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    coeffs
        .into_iter()
        .fold(BigInt::zero(), |acc, q| acc.gcd(q.numer()))
        .abs()
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
