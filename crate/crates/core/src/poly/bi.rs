use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::uni::Degree;
use super::{BiPoly, Poly, TriPoly, UniPoly};
use crate::ring::{denominator_lcm, numerator_gcd, Rational, Ring};

impl UniPoly<Poly> {
    /// Build from `(inner exponent, outer exponent, coefficient)` triples;
    /// repeated monomials are summed.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, Rational)>) -> BiPoly {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (i, j, c) in terms {
            if rows.len() <= j {
                rows.resize(j + 1, Vec::new());
            }
            let row = &mut rows[j];
            if row.len() <= i {
                row.resize(i + 1, Rational::zero());
            }
            row[i] += c;
        }
        BiPoly::from_coeffs(rows.into_iter().map(Poly::from_coeffs).collect())
    }

    /// Integer-coefficient convenience form of [`BiPoly::from_terms`].
    pub fn from_int_terms(terms: &[(usize, usize, i64)]) -> BiPoly {
        Self::from_terms(
            terms
                .iter()
                .map(|&(i, j, c)| (i, j, Rational::from_integer(c.into()))),
        )
    }

    /// The inner variable as a bivariate polynomial.
    pub fn inner_var() -> BiPoly {
        BiPoly::constant(Poly::var())
    }

    /// Coefficient of `inner^i * outer^j`.
    pub fn coeff_at(&self, i: usize, j: usize) -> Rational {
        self.coeffs()
            .get(j)
            .map(|c| c.coeff(i))
            .unwrap_or_else(Rational::zero)
    }

    /// Degree in the inner variable.
    pub fn deg_inner(&self) -> Degree {
        self.coeffs()
            .iter()
            .map(|c| c.degree())
            .max()
            .unwrap_or(Degree::NegInf)
    }

    /// Degree in the outer (main) variable.
    pub fn deg_outer(&self) -> Degree {
        self.degree()
    }

    /// `(deg_inner, deg_outer)` with the zero polynomial mapped to `(0, 0)`.
    pub fn bidegree(&self) -> (usize, usize) {
        (
            self.deg_inner().finite().unwrap_or(0),
            self.deg_outer().finite().unwrap_or(0),
        )
    }

    /// Nonzero terms as `(inner exponent, outer exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.coeffs().iter().enumerate().flat_map(|(j, row)| {
            row.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i, j, c))
        })
    }

    /// Specialize the inner variable; the result is a polynomial in the outer one.
    pub fn eval_inner(&self, at: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs().iter().map(|c| c.eval(at)).collect())
    }

    /// Specialize the outer variable; the result is a polynomial in the inner one.
    pub fn eval_outer(&self, at: &Rational) -> Poly {
        self.eval(&Poly::constant(at.clone()))
    }

    pub fn derivative_inner(&self) -> BiPoly {
        BiPoly::from_coeffs(self.coeffs().iter().map(|c| c.derivative()).collect())
    }

    /// Exchange the roles of the two variables.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|(i, j, c)| (j, i, c.clone())))
    }

    /// Substitute `inner -> inner^a`, `outer -> outer^b`.
    pub fn inflate_both(&self, a: usize, b: usize) -> BiPoly {
        BiPoly::from_terms(self.terms().map(|(i, j, c)| (i * a, j * b, c.clone())))
    }

    /// Monic gcd of the coefficients wrt the main variable (zero for zero).
    pub fn content_inner(&self) -> Poly {
        let mut rows: Vec<&Poly> = self.coeffs().iter().filter(|c| !c.is_zero()).collect();
        rows.sort_by_key(|c| c.deg0());
        let mut g = Poly::zero();
        for row in rows {
            g = g.gcd(row);
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Divide out [`BiPoly::content_inner`].
    pub fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let c = self.content_inner();
        if c.is_constant() {
            return self.clone();
        }
        BiPoly::from_coeffs(
            self.coeffs()
                .iter()
                .map(|row| row.div_rem(&c).0)
                .collect(),
        )
    }

    /// Greatest common divisor in `Q[inner, outer]`, canonically normalized.
    ///
    /// Contents are handled with univariate gcds and the primitive parts with
    /// a primitive pseudo-remainder sequence in the main variable.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.canonical();
        }
        if other.is_zero() {
            return self.canonical();
        }
        let content = self.content_inner().gcd(&other.content_inner());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                a = BiPoly::one();
                break;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        Ring::mul(&BiPoly::constant(content), &a.primitive_part()).canonical()
    }

    /// Integer-primitive form with a positive leading coefficient.
    ///
    /// Multiplies by the lcm of all coefficient denominators, divides by the
    /// gcd of the resulting integers, and fixes the sign so that the leading
    /// coefficient wrt the main variable, itself a polynomial in the inner
    /// variable, has a positive lowest-degree coefficient. This keeps
    /// annihilators such as `(1 - 4t)Δ^2 - 1` in their familiar form.
    pub fn canonical(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let all: Vec<&Rational> = self.coeffs().iter().flat_map(|c| c.coeffs()).collect();
        let lcm = denominator_lcm(all.iter().copied());
        let scaled: Vec<Rational> = all
            .iter()
            .map(|q| *q * Rational::from_integer(lcm.clone()))
            .collect();
        let g = numerator_gcd(scaled.iter());
        let lc = self.leading().unwrap();
        let lead = lc.coeff(lc.valuation().unwrap());
        let sign = if lead.is_negative() { -BigInt::one() } else { BigInt::one() };
        let factor = Rational::new(lcm * sign, g);
        self.scale(&factor)
    }

    /// `P(x, y + t)` as a polynomial in `t` with coefficients in `Q[x, y]`.
    ///
    /// The `k`-th coefficient is `(1/k!) d^k P / dy^k`.
    pub fn shift_outer(&self) -> TriPoly {
        let mut out = Vec::new();
        let mut deriv = self.clone();
        let mut k: i64 = 0;
        let mut fact = BigInt::one();
        while !deriv.is_zero() {
            out.push(deriv.scale(&Rational::new(BigInt::one(), fact.clone())));
            deriv = deriv.derivative();
            k += 1;
            fact *= k;
        }
        TriPoly::from_coeffs(out)
    }
}
