//! Polynomials annihilating the residues of a bivariate rational function.
//!
//! For `P/Q` viewed as a rational function of `y` over `Q(x)` and a divisor
//! `Q̂` of `Q` coprime to `Q/Q̂`, [`algebraic_residues`] returns `R(x, z)`
//! vanishing at the residue of `P/Q` at every root of `Q̂`. Poles of any
//! multiplicity are handled without the exponential cost of symbolic
//! higher-order formulas: for each square-free factor `Q_i` of multiplicity
//! `i`, the residue at a root `a` of `Q_i` is the coefficient of `t^(i-1)` in
//!
//! ```text
//! P(y + t) / (U_i(y + t) * V_i(y, t)^i),   U_i = Q / Q_i^i,
//!                                          V_i = (Q_i(y + t) - Q_i(y)) / t,
//! ```
//!
//! evaluated at `y = a`. Writing that coefficient as `A_i / B_i`, the factor
//! `R_i = Res_y(A_i - z B_i, Q_i)` cancels all those residues.

use crate::error::{Error, Result};
use crate::poly::{resultant_param, squarefree_decomposition, BiPoly, Poly, TriPoly};
use crate::ring::{rat, Ring};

/// Per-factor diagnostics: `(multiplicity, deg_y Q_i, deg_x R_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorReport {
    pub multiplicity: usize,
    pub deg_y: usize,
    pub deg_x: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueAnnihilator {
    /// `R(x, z)`: inner variable `x`, main variable `z`, canonical form.
    pub poly: BiPoly,
    pub z_degree: usize,
    pub factor_reports: Vec<FactorReport>,
}

/// Coefficient of `t^(i-1)` in `pshift / dshift` as a reduced pair `(A, B)`.
///
/// Both arguments are polynomials in `t` with coefficients in `Q[x, y]`.
/// The `k`-th quotient coefficient is kept as `n_k / d_0^(k+1)` with a
/// polynomial numerator, where `d_0 = dshift(t = 0)`:
///
/// ```text
/// n_k = p_k d_0^k - sum_{j=1..k} d_j n_{k-j} d_0^(j-1)
/// ```
///
/// and a single bivariate gcd reduces `n_{i-1} / d_0^i` at the end. The
/// denominator is returned in canonical form.
pub fn residue_series_quotient(
    pshift: &TriPoly,
    dshift: &TriPoly,
    i: usize,
) -> Result<(BiPoly, BiPoly)> {
    assert!(i >= 1, "multiplicity starts at 1");
    let d0 = dshift.coeff(0);
    if d0.is_zero() {
        return Err(Error::ZeroSeriesDenominator);
    }
    let mut d0_pow = vec![BiPoly::one()];
    for k in 1..=i {
        let next = d0_pow[k - 1].mul(&d0);
        d0_pow.push(next);
    }
    let mut numerators: Vec<BiPoly> = Vec::with_capacity(i);
    for k in 0..i {
        let mut n_k = pshift.coeff(k).mul(&d0_pow[k]);
        for j in 1..=k {
            let dj = dshift.coeff(j);
            if dj.is_zero() || numerators[k - j].is_zero() {
                continue;
            }
            n_k = n_k.sub(&dj.mul(&numerators[k - j]).mul(&d0_pow[j - 1]));
        }
        numerators.push(n_k);
    }
    let num = numerators.pop().unwrap();
    if num.is_zero() {
        return Ok((BiPoly::zero(), BiPoly::one()));
    }
    let den = &d0_pow[i];
    let g = num.gcd(den);
    let a = num.div_exact(&g).expect("gcd divides numerator");
    let b = den.div_exact(&g).expect("gcd divides denominator");
    let b_canon = b.canonical();
    // b_canon = b * u for a rational unit u; apply the same unit to a
    let unit = b_canon.leading().unwrap().leading().unwrap() / b.leading().unwrap().leading().unwrap();
    Ok((a.scale(&unit), b_canon))
}

/// `A - z B` as a polynomial in `y` whose coefficients lie in `Q[x, z]`.
fn linear_in_z(a: &BiPoly, b: &BiPoly) -> TriPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    TriPoly::from_coeffs(
        (0..n)
            .map(|j| BiPoly::from_coeffs(vec![a.coeff(j), b.coeff(j).neg()]))
            .collect(),
    )
}

/// A polynomial in `(x, y)` seen as a polynomial in `y` over `Q[x, z]`.
fn constant_in_z(q: &BiPoly) -> TriPoly {
    TriPoly::from_coeffs(q.coeffs().iter().cloned().map(BiPoly::constant).collect())
}

fn coprime_in_y(a: &BiPoly, b: &BiPoly) -> bool {
    a.gcd(b).is_constant()
}

/// A polynomial `R(x, z)` whose roots in `z` include the residue of `P/Q`
/// at every root of `qhat`.
///
/// Preconditions: `P` and `Q` coprime wrt `y`, `deg_y Q >= 1`, and `qhat`
/// an exact divisor of `Q` coprime to `Q / qhat`.
pub fn algebraic_residues(p: &BiPoly, q: &BiPoly, qhat: &BiPoly) -> Result<ResidueAnnihilator> {
    if q.is_constant() {
        return Err(Error::ConstantDenominator);
    }
    if p.is_zero() {
        // every residue is zero
        return Ok(ResidueAnnihilator {
            poly: BiPoly::var(),
            z_degree: 1,
            factor_reports: Vec::new(),
        });
    }
    if !coprime_in_y(p, q) {
        return Err(Error::NotCoprime);
    }
    let cofactor = q.div_exact(qhat).ok_or(Error::InvalidDivisor)?;
    if !coprime_in_y(qhat, &cofactor) {
        return Err(Error::InvalidDivisor);
    }

    let sf = squarefree_decomposition(qhat)?;
    let pshift_full = p.shift_outer();
    let mut product = BiPoly::one();
    let mut reports = Vec::new();
    for (qi, i) in &sf.factors {
        let i = *i;
        let ui = q
            .div_exact(&qi.powu(i as u64))
            .expect("square-free factor power divides the denominator");
        let qshift = qi.shift_outer();
        let vi = TriPoly::from_coeffs(qshift.coeffs()[1..].to_vec());
        let dshift = truncate_t(&ui.shift_outer(), i).mul(&truncate_t(&vi, i).powu(i as u64));
        let (a, b) = residue_series_quotient(
            &truncate_t(&pshift_full, i),
            &truncate_t(&dshift, i),
            i,
        )?;
        let ri = resultant_param(&linear_in_z(&a, &b), &constant_in_z(qi))?;
        reports.push(FactorReport {
            multiplicity: i,
            deg_y: qi.deg0(),
            deg_x: ri.deg_inner().finite().unwrap_or(0),
        });
        product = product.mul(&ri);
    }
    let poly = product.canonical();
    Ok(ResidueAnnihilator {
        z_degree: poly.deg0(),
        poly,
        factor_reports: reports,
    })
}

fn truncate_t(p: &TriPoly, order: usize) -> TriPoly {
    p.truncate(order)
}

/// Directly coded Rothstein–Trager resultant `Res_y(P - z Q', Q)`, canonical.
///
/// Only meaningful for square-free `Q`; kept as an independent cross-check
/// of the multiplicity-one case.
pub fn rothstein_trager(p: &BiPoly, q: &BiPoly) -> Result<BiPoly> {
    let r = resultant_param(&linear_in_z(p, &q.derivative()), &constant_in_z(q))?;
    Ok(r.canonical())
}

/// Residue of `P/Q` at a simple or multiple rational pole `y = a`, with
/// `x` already specialized. Used by tests and documentation as a direct oracle.
pub fn residue_at_rational_pole(p: &Poly, q: &Poly, pole: &crate::ring::Rational) -> Option<crate::ring::Rational> {
    use crate::series::TruncatedSeries;
    let lin = Poly::from_coeffs(vec![-pole.clone(), rat(1)]);
    let mut rest = q.clone();
    let mut m = 0;
    loop {
        let (quo, rem) = rest.div_rem(&lin);
        if !rem.is_zero() {
            break;
        }
        rest = quo;
        m += 1;
    }
    if m == 0 {
        return None;
    }
    // Taylor expansion at the pole of P / rest, coefficient of t^(m-1)
    let shift = Poly::from_coeffs(vec![pole.clone(), rat(1)]);
    let ps = TruncatedSeries::from_poly(&p.compose(&shift), m);
    let qs = TruncatedSeries::from_poly(&rest.compose(&shift), m);
    Some(ps.div(&qs).ok()?.coeff(m - 1))
}
