#![allow(dead_code)]

use algdiag::poly::{BiPoly, Poly};
use algdiag::ring::{ratio, Rational, Ring};
use num_bigint::BigInt;
use rand::Rng as _;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Dense random polynomial with bidegree at most `(dx, dy)` and integer
/// coefficients in `[-bound, bound]`.
pub fn random_bipoly(rng: &mut ChaCha8Rng, dx: usize, dy: usize, bound: i64) -> BiPoly {
    let mut terms = Vec::new();
    for i in 0..=dx {
        for j in 0..=dy {
            terms.push((i, j, rng.gen_range(-bound..=bound)));
        }
    }
    BiPoly::from_int_terms(&terms)
}

/// Random univariate polynomial in `x` of degree at most `d`.
pub fn random_poly(rng: &mut ChaCha8Rng, d: usize, num: i64, den: i64) -> Poly {
    Poly::from_coeffs((0..=d).map(|_| small_rational(rng, num, den)).collect())
}

pub fn binomial_big(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `y - r(x)` with inner `x` and main `y`.
pub fn linear_branch(r: &Poly) -> BiPoly {
    BiPoly::from_coeffs(vec![Ring::neg(r), Poly::one()])
}

/// All `c`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, c: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, c: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, c, &mut Vec::new(), &mut out);
    out
}
