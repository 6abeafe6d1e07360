//! Text and JSON renderings of polynomials and series.
//!
//! Text output uses explicit `*` and `^` and parses back with
//! [`crate::expr::parse_poly`] when the variables are `x` and `y`.

use algdiag::poly::{BiPoly, Poly};
use algdiag::ring::{rational_to_string, Rational};
use algdiag::series::TruncatedSeries;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

fn power(var: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{k}")),
    }
}

fn magnitude(c: &Rational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// `|c| * vars` without sign; unit coefficients are dropped unless alone.
fn unsigned_monomial(c: &Rational, vars: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !c.abs().is_one() || vars.is_empty() {
        parts.push(magnitude(c));
    }
    parts.extend(vars.iter().cloned());
    parts.join("*")
}

/// Ascending terms of a univariate polynomial, without spaces: `1-4*t+t^2`.
pub fn poly_text(p: &Poly, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let vars: Vec<String> = power(var, k).into_iter().collect();
        out.push_str(&unsigned_monomial(c, &vars));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Descending in the main variable; multi-term coefficients are parenthesized,
/// e.g. `(1-4*t)*D^2 - 1`.
pub fn bipoly_text(p: &BiPoly, inner: &str, outer: &str) -> String {
    let mut out = String::new();
    for j in (0..p.coeffs().len()).rev() {
        let row = &p.coeffs()[j];
        if row.is_zero() {
            continue;
        }
        let outer_pow = power(outer, j);
        let nonzero: Vec<(usize, &Rational)> = row
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let (negative, body) = if nonzero.len() == 1 {
            let (i, c) = nonzero[0];
            let vars: Vec<String> = power(inner, i).into_iter().chain(outer_pow).collect();
            (c.is_negative(), unsigned_monomial(c, &vars))
        } else {
            let mut body = format!("({})", poly_text(row, inner));
            if let Some(v) = outer_pow {
                body = format!("{body}*{v}");
            }
            (false, body)
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `{"vars": [inner, outer], "terms": [[i, j, "num/den"], ...]}` sorted by `(i, j)`.
pub fn bipoly_json(p: &BiPoly, inner: &str, outer: &str) -> Value {
    let mut terms: Vec<(usize, usize, String)> = p
        .terms()
        .map(|(i, j, c)| (i, j, rational_to_string(c)))
        .collect();
    terms.sort();
    json!({
        "vars": [inner, outer],
        "terms": terms.into_iter().map(|(i, j, c)| json!([i, j, c])).collect::<Vec<_>>(),
    })
}

/// `c_0 + c_1*t + ... + O(t^N)`.
pub fn series_text(s: &TruncatedSeries<Rational>, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let vars: Vec<String> = power(var, k).into_iter().collect();
        match (out.is_empty(), c.is_negative()) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&unsigned_monomial(c, &vars));
    }
    let tail = format!("O({var}^{})", s.order());
    if out.is_empty() {
        tail
    } else {
        format!("{out} + {tail}")
    }
}

/// `{"var": var, "order": N, "coeffs": ["num/den", ...]}`.
pub fn series_json(s: &TruncatedSeries<Rational>, var: &str) -> Value {
    json!({
        "var": var,
        "order": s.order(),
        "coeffs": s.coeffs().iter().map(rational_to_string).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use algdiag::ring::rat;

    fn bp(t: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn text_forms() {
        let phi = bp(&[(0, 2, 1), (1, 2, -4), (0, 0, -1)]);
        assert_eq!(bipoly_text(&phi, "t", "D"), "(1-4*t)*D^2 - 1");
        let r = bp(&[(1, 2, 4), (0, 0, -1)]);
        assert_eq!(bipoly_text(&r, "x", "z"), "4*x*z^2 - 1");
        assert_eq!(bipoly_text(&bp(&[(0, 1, -1), (2, 0, 1), (0, 0, 3)]), "x", "y"), "-y + (3+x^2)");
        assert_eq!(bipoly_text(&BiPoly::zero(), "x", "y"), "0");
        let half = BiPoly::from_terms([(1, 0, Rational::new((-1).into(), 2.into()))]);
        assert_eq!(bipoly_text(&half, "x", "y"), "-1/2*x");
    }

    #[test]
    fn json_forms() {
        let phi = bp(&[(0, 2, 1), (1, 2, -4), (0, 0, -1)]);
        assert_eq!(
            bipoly_json(&phi, "t", "D").to_string(),
            r#"{"terms":[[0,0,"-1/1"],[0,2,"1/1"],[1,2,"-4/1"]],"vars":["t","D"]}"#
        );
        let s = TruncatedSeries::new(vec![rat(1), rat(2)], 3);
        assert_eq!(
            series_json(&s, "t").to_string(),
            r#"{"coeffs":["1/1","2/1","0/1"],"order":3,"var":"t"}"#
        );
        assert_eq!(series_text(&s, "t"), "1 + 2*t + O(t^3)");
    }
}
