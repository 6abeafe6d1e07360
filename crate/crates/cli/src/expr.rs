//! Rational-function expressions in `x` and `y`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     := product (('+' | '-') product)*
//! product := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer | 'x' | 'y' | '(' sum ')'
//! ```
//!
//! Implicit multiplication is not accepted. Error offsets are 1-based byte
//! positions; the end of input is reported as `len + 1`.

use algdiag::poly::{BiPoly, Poly};
use algdiag::ring::{denominator_lcm, Rational, Ring};
use algdiag::{Error, Result};
use num_bigint::BigInt;
use num_traits::Signed;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(v) => format!("'{v}'"),
        Tok::X => "'x'".into(),
        Tok::Y => "'y'".into(),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::Open => "'('".into(),
        Tok::Close => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

/// Tokens with their 1-based offsets.
fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let at = i + 1;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = text[start..i].parse().expect("ascii digits");
            out.push((Tok::Int(v), at));
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let tok = match &text[start..i] {
                "x" => Tok::X,
                "y" => Tok::Y,
                other => return Err(syntax(at, format!("unknown variable '{other}'"))),
            };
            out.push((tok, at));
            continue;
        }
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::Open,
            b')' => Tok::Close,
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(syntax(at, format!("unexpected character '{ch}'")));
            }
        };
        out.push((tok, at));
        i += 1;
    }
    out.push((Tok::End, text.len() + 1));
    Ok(out)
}

fn is_scalar(p: &BiPoly) -> bool {
    p.is_constant() && p.coeff(0).is_constant()
}

/// Exact quotient of two polynomials; the denominator is never zero.
#[derive(Clone, Debug)]
struct Frac {
    num: BiPoly,
    den: BiPoly,
}

impl Frac {
    fn poly(p: BiPoly) -> Frac {
        Frac {
            num: p,
            den: BiPoly::one(),
        }
    }

    fn reduced(num: BiPoly, den: BiPoly) -> Frac {
        let (num, den) = if is_scalar(&den) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        if is_scalar(&den) {
            let c = den.coeff(0).coeff(0);
            return Frac::poly(num.scale(&c.recip()));
        }
        Frac { num, den }
    }

    fn add(&self, o: &Frac) -> Frac {
        Frac::reduced(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    fn sub(&self, o: &Frac) -> Frac {
        self.add(&o.neg())
    }

    fn neg(&self) -> Frac {
        Frac {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Frac) -> Frac {
        Frac::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn div(&self, o: &Frac) -> Result<Frac> {
        if o.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Frac::reduced(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    fn pow(&self, e: u64) -> Frac {
        Frac {
            num: self.num.powu(e),
            den: self.den.powu(e),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn sum(&mut self) -> Result<Frac> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.product()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Frac> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    acc = acc.div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Frac> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Frac> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Tok::Int(e) => {
                let e = u64::try_from(&e).map_err(|_| syntax(at, "exponent too large"))?;
                Ok(base.pow(e))
            }
            Tok::Minus => Err(syntax(at, "negative exponents are not supported")),
            t => Err(syntax(at, format!("expected an integer exponent, found {}", describe(&t)))),
        }
    }

    fn atom(&mut self) -> Result<Frac> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(v) => Ok(Frac::poly(BiPoly::constant(Poly::constant(
                Rational::from_integer(v),
            )))),
            Tok::X => Ok(Frac::poly(BiPoly::inner_var())),
            Tok::Y => Ok(Frac::poly(BiPoly::var())),
            Tok::Open => {
                let inner = self.sum()?;
                let close = self.offset();
                match self.bump() {
                    Tok::Close => Ok(inner),
                    t => Err(syntax(close, format!("expected ')', found {}", describe(&t)))),
                }
            }
            t => Err(syntax(at, format!("unexpected {}", describe(&t)))),
        }
    }
}

fn evaluate(text: &str) -> Result<Frac> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let value = p.sum()?;
    if *p.peek() != Tok::End {
        let at = p.offset();
        return Err(syntax(at, format!("unexpected {}", describe(p.peek()))));
    }
    Ok(value)
}

/// Parse a rational function of `x` (inner) and `y` (main) into `(A, B)`.
///
/// The pair is reduced, has integer coefficients with no common integer
/// factor, and the lowest monomial of `B` (ordered by `(deg_x, deg_y)`) is
/// positive.
pub fn parse_ratfun(text: &str) -> Result<(BiPoly, BiPoly)> {
    let f = evaluate(text)?;
    Ok(normalize(&f.num, &f.den))
}

/// Parse an expression that must evaluate to a polynomial; exact, no rescaling.
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let f = evaluate(text)?;
    if !is_scalar(&f.den) {
        return Err(syntax(1, "expected a polynomial, found a fraction"));
    }
    let c = f.den.coeff(0).coeff(0);
    Ok(f.num.scale(&c.recip()))
}

fn normalize(a: &BiPoly, b: &BiPoly) -> (BiPoly, BiPoly) {
    let all: Vec<&Rational> = a
        .coeffs()
        .iter()
        .chain(b.coeffs())
        .flat_map(|row| row.coeffs())
        .collect();
    let lcm = denominator_lcm(all.iter().copied());
    let mut g = BigInt::from(0);
    for q in &all {
        let v = q.numer() * (&lcm / q.denom());
        g = num_integer::Integer::gcd(&g, &v);
    }
    let mut lowest = b.terms().map(|(i, j, c)| (i, j, c.clone())).collect::<Vec<_>>();
    lowest.sort_by_key(|&(i, j, _)| (i, j));
    let sign = if lowest[0].2.is_negative() { -1 } else { 1 };
    let factor = Rational::new(lcm * sign, g);
    (a.scale(&factor), b.scale(&factor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn examples() {
        let (a, b) = parse_ratfun("1/(1-x-y)").unwrap();
        assert_eq!(a, BiPoly::one());
        assert_eq!(b, bp(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)]));
        let (a, b) = parse_ratfun("(x^2*y + 3)/(1 - 2*x*y^3)").unwrap();
        assert_eq!(a, bp(&[(2, 1, 1), (0, 0, 3)]));
        assert_eq!(b, bp(&[(0, 0, 1), (1, 3, -2)]));
        assert_eq!(
            parse_ratfun("1/(1-x-y").unwrap_err(),
            Error::Syntax { offset: 9, message: "expected ')', found end of input".into() }
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_poly("-x^2").unwrap(), bp(&[(2, 0, -1)]));
        assert_eq!(parse_poly("2-3-4").unwrap(), bp(&[(0, 0, -5)]));
        assert_eq!(parse_poly("12/3/2").unwrap(), bp(&[(0, 0, 2)]));
        assert_eq!(parse_poly("2*-x + y*y").unwrap(), bp(&[(1, 0, -2), (0, 2, 1)]));
        assert_eq!(parse_poly("(x+y)^2").unwrap(), bp(&[(2, 0, 1), (1, 1, 2), (0, 2, 1)]));
        assert_eq!(parse_poly("1/2*x").unwrap(), BiPoly::from_terms([(1, 0, Rational::new(1.into(), 2.into()))]));
    }

    #[test]
    fn normalization() {
        let (a, b) = parse_ratfun("(2*x - 2*x*y)/(4 - 4*y)").unwrap();
        assert_eq!((a, b), (bp(&[(1, 0, 1)]), bp(&[(0, 0, 2)])));
        let (a, b) = parse_ratfun("1/(x/2 - 1/3)").unwrap();
        assert_eq!(a, bp(&[(0, 0, -6)]));
        assert_eq!(b, bp(&[(0, 0, 2), (1, 0, -3)]));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_ratfun("1/0").unwrap_err(), Error::ZeroDenominator);
        assert!(matches!(parse_ratfun("2x"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_ratfun("x^-1"), Err(Error::Syntax { offset: 3, .. })));
        assert!(matches!(parse_ratfun("z + 1"), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_ratfun("x + $"), Err(Error::Syntax { offset: 5, .. })));
        assert!(matches!(parse_ratfun(""), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_poly("1/x"), Err(Error::Syntax { .. })));
    }
}
