use super::{BiPoly, Poly};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// `Q = content * Q_1^1 * Q_2^2 * ... * Q_m^m` wrt the main variable.
///
/// Only factors of positive degree in the main variable are listed, in
/// increasing multiplicity, each in canonical form. The content absorbs
/// everything constant in the main variable (including a rational unit) so
/// the product reconstructs the input exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareFreeDecomposition {
    pub factors: Vec<(BiPoly, usize)>,
    pub content: Poly,
}

impl SquareFreeDecomposition {
    /// Largest multiplicity present (0 if there is no factor).
    pub fn max_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }

    /// Factor of multiplicity `i`, or 1 when there is none.
    pub fn factor(&self, i: usize) -> BiPoly {
        self.factors
            .iter()
            .find(|(_, m)| *m == i)
            .map(|(f, _)| f.clone())
            .unwrap_or_else(BiPoly::one)
    }

    /// `prod Q_i`, the square-free part wrt the main variable (content excluded).
    pub fn squarefree_part(&self) -> BiPoly {
        self.factors
            .iter()
            .fold(BiPoly::one(), |acc, (f, _)| acc.mul(f))
    }

    /// Square-free part in both variables: includes the square-free part of the content.
    pub fn full_squarefree_part(&self) -> BiPoly {
        BiPoly::constant(squarefree_part_uni(&self.content)).mul(&self.squarefree_part())
    }

    pub fn reconstruct(&self) -> BiPoly {
        self.factors.iter().fold(BiPoly::constant(self.content.clone()), |acc, (f, m)| {
            acc.mul(&f.powu(*m as u64))
        })
    }
}

/// Yun's algorithm over `Q[x][y]`, with primitive gcds in the main variable.
pub fn squarefree_decomposition(q: &BiPoly) -> Result<SquareFreeDecomposition> {
    if q.is_zero() {
        return Err(Error::ZeroSquareFree);
    }
    let mut factors = Vec::new();
    let a = q.primitive_part();
    if !a.is_constant() {
        let da = a.derivative();
        let b = a.gcd(&da);
        let mut c = a.div_exact(&b).expect("gcd divides");
        let mut d = da.div_exact(&b).expect("gcd divides").sub(&c.derivative());
        let mut i = 1;
        while !c.is_constant() {
            let f = c.gcd(&d);
            c = c.div_exact(&f).expect("gcd divides");
            d = d.div_exact(&f).expect("gcd divides").sub(&c.derivative());
            if !f.is_constant() {
                factors.push((f, i));
            }
            i += 1;
        }
    }
    let product = factors
        .iter()
        .fold(BiPoly::one(), |acc, (f, m): &(BiPoly, usize)| acc.mul(&f.powu(*m as u64)));
    let content = q
        .div_exact(&product)
        .expect("factors divide the input")
        .coeff(0);
    Ok(SquareFreeDecomposition { factors, content })
}

/// Square-free part of a univariate polynomial, monic (zero maps to zero).
pub fn squarefree_part_uni(p: &Poly) -> Poly {
    if p.is_constant() {
        return p.monic();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(t: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_int_terms(t)
    }

    #[test]
    fn examples() {
        // (y-1)^2 (y+2)
        let ym1 = bp(&[(0, 1, 1), (0, 0, -1)]);
        let yp2 = bp(&[(0, 1, 1), (0, 0, 2)]);
        let q = ym1.powu(2).mul(&yp2);
        let sf = squarefree_decomposition(&q).unwrap();
        assert_eq!(sf.factors, vec![(yp2, 1), (ym1, 2)]);
        assert_eq!(sf.reconstruct(), q);

        // y^2
        let sf = squarefree_decomposition(&bp(&[(0, 2, 1)])).unwrap();
        assert_eq!(sf.factors, vec![(bp(&[(0, 1, 1)]), 2)]);

        // (y - y^2 - x)^(d+1)
        let base = bp(&[(0, 1, 1), (0, 2, -1), (1, 0, -1)]);
        for d in 0..4u64 {
            let q = base.powu(d + 1);
            let sf = squarefree_decomposition(&q).unwrap();
            assert_eq!(sf.factors, vec![(base.canonical(), d as usize + 1)]);
            assert_eq!(sf.reconstruct(), q);
        }
        assert_eq!(
            squarefree_decomposition(&BiPoly::zero()),
            Err(Error::ZeroSquareFree)
        );
    }

    #[test]
    fn content_is_kept() {
        let x2 = bp(&[(2, 0, 3)]);
        let q = x2.mul(&bp(&[(0, 1, 1), (1, 0, 1)]));
        let sf = squarefree_decomposition(&q).unwrap();
        assert_eq!(sf.reconstruct(), q);
        assert_eq!(sf.factors.len(), 1);
        assert_eq!(sf.full_squarefree_part(), bp(&[(1, 1, 1), (2, 0, 1)]));
    }
}
