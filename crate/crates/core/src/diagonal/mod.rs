//! Annihilating polynomials for diagonals of bivariate rational functions.
//!
//! For `F = A/B` with `B(0,0) != 0`, the diagonal `sum f_{n,n} t^n` is the
//! sum of the residues of `y^α P/Q` at the small branches of `Q`, where
//! `(1/y) F(t/y, y) = y^α P/Q`. A polynomial `R(t, z)` annihilating those
//! residues is computed first; the composed sum `Σ_c R`, `c` the number of
//! small branches, then cancels their sum. When `α < 0` the rational residue
//! at `y = 0` is added by a shift of `Δ`.

mod series;

pub use series::{annihilation_check, diagonal_series};

use num_integer::Integer;

use crate::composed_sum::composed_sum_xy;
use crate::error::{Error, Result};
use crate::poly::{squarefree_decomposition, squarefree_part_uni, BiPoly, Poly, RatFun, TriPoly};
use crate::residues::algebraic_residues;
use crate::ring::{binomial, Ring};
use crate::series::TruncatedSeries;

/// Lower and upper diagonal degrees; `None` stands for `-∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagDegrees {
    pub ddeg_minus: Option<i64>,
    pub ddeg_plus: Option<i64>,
}

/// `sup (i - j)` and `sup (j - i)` over the support `x^i y^j` of `p`.
pub fn diag_degrees(p: &BiPoly) -> DiagDegrees {
    let mut minus = None;
    let mut plus = None;
    for (i, j, _) in p.terms() {
        let d = i as i64 - j as i64;
        minus = Some(minus.map_or(d, |m: i64| m.max(d)));
        plus = Some(plus.map_or(-d, |m: i64| m.max(-d)));
    }
    DiagDegrees {
        ddeg_minus: minus,
        ddeg_plus: plus,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResidueForm {
    /// Inner variable `t`, main variable `y`.
    pub p: BiPoly,
    pub q: BiPoly,
    pub alpha: i64,
}

fn vanishes_at_origin(b: &BiPoly) -> bool {
    b.coeff_at(0, 0).is_zero()
}

fn substitute(p: &BiPoly, shift: i64) -> BiPoly {
    BiPoly::from_terms(
        p.terms()
            .map(|(i, j, c)| (i, (j as i64 - i as i64 + shift) as usize, c.clone())),
    )
}

/// `P = y^ddeg⁻(A) A(t/y, y)`, `Q = y^ddeg⁻(B) B(t/y, y)` and
/// `α = ddeg⁻(B) - ddeg⁻(A) - 1`, so that `(1/y) F(t/y, y) = y^α P/Q`.
///
/// For `A = 0` the result has `P = 0` and `α = 0`.
pub fn to_residue_form(a: &BiPoly, b: &BiPoly) -> Result<ResidueForm> {
    if vanishes_at_origin(b) {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let mb = diag_degrees(b).ddeg_minus.unwrap();
    let q = substitute(b, mb);
    let Some(ma) = diag_degrees(a).ddeg_minus else {
        return Ok(ResidueForm {
            p: BiPoly::zero(),
            q,
            alpha: 0,
        });
    };
    Ok(ResidueForm {
        p: substitute(a, ma),
        q,
        alpha: mb - ma - 1,
    })
}

fn squarefree_full(b: &BiPoly) -> Result<BiPoly> {
    if b.is_constant() {
        return Ok(BiPoly::constant(squarefree_part_uni(&b.coeff(0))));
    }
    Ok(squarefree_decomposition(b)?.full_squarefree_part())
}

/// Number of small branches of the residue-form denominator of `1/B`:
/// `Nsmall(B*) + ddeg⁻(B*)` with `B*` the square-free part of `B`.
pub fn small_branch_count(b: &BiPoly) -> Result<usize> {
    if b.is_zero() || vanishes_at_origin(b) {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let star = squarefree_full(b)?;
    Ok(nsmall(&star) + diag_degrees(&star).ddeg_minus.unwrap().max(0) as usize)
}

/// `val_y([x^v] P)` with `v = val_x P`.
fn nsmall(p: &BiPoly) -> usize {
    let vx = p
        .coeffs()
        .iter()
        .filter_map(|row| row.valuation())
        .min()
        .unwrap_or(0);
    (0..p.coeffs().len())
        .find(|&j| !p.coeff_at(vx, j).is_zero())
        .unwrap_or(0)
}

/// Residue at `y = 0` of `y^α P/Q` for `α < 0`, a rational function of `t`.
pub fn residue_at_origin(p: &BiPoly, q: &BiPoly, alpha: i64) -> Result<RatFun> {
    if alpha >= 0 {
        return Err(Error::NonNegativeShift(alpha));
    }
    if q.coeff(0).is_zero() {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let order = (-alpha) as usize;
    let lift = |b: &BiPoly| {
        TruncatedSeries::new(
            b.coeffs().iter().take(order).cloned().map(RatFun::from_poly).collect(),
            order,
        )
    };
    let quotient = lift(p).div(&lift(q))?;
    Ok(quotient.coeff(order - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub deg_t: usize,
    pub deg_delta: usize,
    /// `C(D_y, c)`, the bound on `deg_Δ`.
    pub bound_delta: u64,
    /// `D_x C(D_y, c)`, the bound on `deg_t`.
    pub bound_t: u64,
    pub d_x_bound: u64,
    pub d_y_bound: u64,
}

impl DegreeReport {
    pub fn within_bounds(&self) -> bool {
        self.deg_delta as u64 <= self.bound_delta && self.deg_t as u64 <= self.bound_t
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalAnnihilator {
    /// `Φ(t, Δ)`: inner variable `t`, main variable `Δ`, canonical form.
    pub phi: BiPoly,
    pub c_small: usize,
    pub alpha: i64,
    pub origin_residue: Option<RatFun>,
    pub degree_report: DegreeReport,
}

fn degree_report(phi: &BiPoly, a: &BiPoly, b: &BiPoly, star: &BiPoly, c: usize) -> DegreeReport {
    let (ax, ay) = a.bidegree();
    let (bx, by) = b.bidegree();
    let (dx, dy) = (ax.max(bx) as i64, ay.max(by) as i64);
    let (sx, sy) = star.bidegree();
    let (sx, sy) = (sx as i64, sy as i64);
    let big_dx = 2 * dx * (dx + dy + 1) + dx - 2 * (dx - sx) * (dx - sx + dy - sy + 1);
    let dd = diag_degrees(star);
    let big_dy = dd.ddeg_minus.unwrap_or(0) + dd.ddeg_plus.unwrap_or(0);
    let bound_delta = binomial(big_dy.max(0) as u64, c as u64);
    let (deg_t, deg_delta) = phi.bidegree();
    DegreeReport {
        deg_t,
        deg_delta,
        bound_delta,
        bound_t: big_dx.max(0) as u64 * bound_delta,
        d_x_bound: big_dx.max(0) as u64,
        d_y_bound: big_dy.max(0) as u64,
    }
}

/// Divide out every common factor of the `Δ`-coefficients that divides `h`.
fn remove_content_dividing(phi: &BiPoly, h: &Poly) -> BiPoly {
    let mut phi = phi.clone();
    let mut h = squarefree_part_uni(h);
    loop {
        if h.is_constant() {
            return phi;
        }
        let mut g = h.clone();
        for row in phi.coeffs() {
            if row.is_zero() {
                continue;
            }
            g = g.gcd(row);
            if g.is_constant() {
                break;
            }
        }
        if g.is_constant() {
            return phi;
        }
        phi = BiPoly::from_coeffs(phi.coeffs().iter().map(|row| row.div_rem(&g).0).collect());
        h = g;
    }
}

/// `q^n Φ(t, Δ - p/q)` for `n = deg_Δ Φ`.
fn shift_delta(phi: &BiPoly, r: &RatFun) -> BiPoly {
    let (p, q) = (r.numer().clone(), r.denom().clone());
    let lin = BiPoly::from_coeffs(vec![p.neg(), q.clone()]);
    let n = phi.deg0();
    let mut q_pow = vec![Poly::one()];
    for k in 1..=n {
        let next = q_pow[k - 1].mul(&q);
        q_pow.push(next);
    }
    let mut acc = BiPoly::constant(phi.coeff(n));
    for k in (0..n).rev() {
        acc = acc
            .mul(&lin)
            .add(&BiPoly::constant(phi.coeff(k).mul(&q_pow[n - k])));
    }
    acc
}

fn y_power(k: usize) -> BiPoly {
    BiPoly::monomial(Poly::one(), k)
}

/// A polynomial `Φ(t, Δ)` with `Φ(t, Diag(A/B)(t)) = 0`.
pub fn algebraic_diagonal(a: &BiPoly, b: &BiPoly) -> Result<DiagonalAnnihilator> {
    if b.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if vanishes_at_origin(b) {
        return Err(Error::DenominatorVanishesAtOrigin);
    }
    let delta = BiPoly::var();
    if a.is_zero() {
        let star = squarefree_full(b)?;
        return Ok(DiagonalAnnihilator {
            degree_report: degree_report(&delta, a, b, &star, 0),
            phi: delta,
            c_small: 0,
            alpha: 0,
            origin_residue: None,
        });
    }
    let g = a.gcd(b);
    let a = a.div_exact(&g).expect("gcd divides numerator");
    let b = b.div_exact(&g).expect("gcd divides denominator");
    let star = squarefree_full(&b)?;

    let form = to_residue_form(&a, &b)?;
    let c = small_branch_count(&b)?;
    let origin_residue = if form.alpha < 0 {
        Some(residue_at_origin(&form.p, &form.q, form.alpha)?)
    } else {
        None
    };

    let (phi_tilde, lead) = if c == 0 {
        (delta, Poly::one())
    } else {
        let r = if form.alpha >= 0 {
            let p = form.p.mul(&y_power(form.alpha as usize));
            algebraic_residues(&p, &form.q, &form.q)?
        } else {
            let q = form.q.mul(&y_power((-form.alpha) as usize));
            algebraic_residues(&form.p, &q, &form.q)?
        };
        let r = r.poly.primitive_part();
        let sum = composed_sum_xy(&r, c)?;
        (sum.poly, r.leading().unwrap().clone())
    };

    let (phi, candidates) = match &origin_residue {
        Some(res) => (shift_delta(&phi_tilde, res), lead.mul(res.denom())),
        None => (phi_tilde, lead),
    };
    let phi = remove_content_dividing(&phi, &candidates).canonical();
    let degree_report = degree_report(&phi, &a, &b, &star, c);
    debug_assert!(degree_report.within_bounds(), "{degree_report:?}");
    Ok(DiagonalAnnihilator {
        phi,
        c_small: c,
        alpha: form.alpha,
        origin_residue,
        degree_report,
    })
}

/// Annihilating polynomial of `Diag_{p,q} F(s) = sum f_{pn, qn} s^n`.
///
/// Runs [`algebraic_diagonal`] on `F(x^q, y^p)` to get `Ψ(u, Δ)`, which
/// annihilates the sloped diagonal at `s = u^(pq)`, then eliminates `u`
/// with `Res_u(Ψ(u, Δ), u^(pq) - s)`.
pub fn sloped_diagonal(a: &BiPoly, b: &BiPoly, p: u32, q: u32) -> Result<DiagonalAnnihilator> {
    if p == 0 || q == 0 || p.gcd(&q) != 1 {
        return Err(Error::InvalidSlope { p, q });
    }
    let inner = algebraic_diagonal(
        &a.inflate_both(q as usize, p as usize),
        &b.inflate_both(q as usize, p as usize),
    )?;
    let k = (p * q) as usize;
    if k == 1 {
        return Ok(inner);
    }
    // Ψ as a polynomial in u over Q[s, Δ]; it does not involve s
    let swapped = inner.phi.swap_vars();
    let psi = TriPoly::from_coeffs(
        swapped
            .coeffs()
            .iter()
            .map(|in_delta| {
                BiPoly::from_coeffs(
                    in_delta
                        .coeffs()
                        .iter()
                        .cloned()
                        .map(Poly::constant)
                        .collect(),
                )
            })
            .collect(),
    );
    let mut elim = vec![BiPoly::zero(); k + 1];
    elim[0] = BiPoly::constant(Poly::var().neg());
    elim[k] = BiPoly::one();
    let phi = crate::poly::resultant_param(&psi, &TriPoly::from_coeffs(elim))?
        .primitive_part()
        .canonical();
    let degree_report = DegreeReport {
        deg_t: phi.bidegree().0,
        deg_delta: phi.bidegree().1,
        ..inner.degree_report
    };
    Ok(DiagonalAnnihilator {
        phi,
        degree_report,
        ..inner
    })
}
