use std::fmt;


use super::Poly;
use crate::error::{Error, Result};
use crate::ring::{Field, Rational, Ring};

/// Reduced quotient of two univariate polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = d.leading().unwrap().clone();
        if lc != Rational::one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        Ok(RatFun { num: n, den: d })
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        RatFun::from_poly(Poly::zero())
    }
    fn one() -> Self {
        RatFun::from_poly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return RatFun::new(self.num.add(&rhs.num), self.den.clone()).unwrap();
        }
        RatFun::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .unwrap()
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFun::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).unwrap()
    }
    fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        if num_traits::Zero::is_zero(q) {
            return Self::zero();
        }
        RatFun {
            num: self.num.scale(q),
            den: self.den.clone(),
        }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFun::new(self.den.clone(), self.num.clone()).unwrap())
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Poly| -> String {
            let terms: Vec<String> = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !Ring::is_zero(*c))
                .map(|(k, c)| match k {
                    0 => format!("{c}"),
                    1 => format!("({c})*t"),
                    _ => format!("({c})*t^{k}"),
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join(" + ")
            }
        };
        if self.den.is_one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "({}) / ({})", show(&self.num), show(&self.den))
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} / {:?}", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_coeffs(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn reduces_and_inverts() {
        let f = RatFun::new(p(&[-1, 0, 1]), p(&[2, 2])).unwrap();
        assert_eq!(f.numer(), &p(&[-1, 1]).scale(&crate::ring::ratio(1, 2)));
        assert_eq!(f.denom(), &p(&[1]));
        let g = RatFun::new(p(&[1]), p(&[0, 1])).unwrap();
        assert!(g.mul(&g.inv().unwrap()).is_one());
        assert!(RatFun::new(p(&[1]), p(&[])).is_err());
    }
}
