//! Polynomials in one variable `q` with arbitrary-precision integer
//! coefficients and nonnegative exponents.
//!
//! The variable tracks a cohomological grading: `q^k` stands for degree
//! `2k` against the fixed normalization in which the stable fiber at the
//! zero weight is `1`. Zero coefficients are never stored, so structural
//! equality is equality of polynomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::monomial(0, BigInt::one())
    }

    /// `c * q^k`; a zero coefficient yields the zero polynomial.
    pub fn monomial(exponent: usize, coefficient: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coefficient.is_zero() {
            coeffs.insert(exponent, coefficient);
        }
        QPolynomial { coeffs }
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (usize, BigInt)>) -> Self {
        let mut p = QPolynomial::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: usize) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_default()
    }

    /// Sparse view of the nonzero coefficients, in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, exponent: usize, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_default();
        *entry += coefficient;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        // Exponents are sparse; evaluate term by term with exact powers.
        let mut total = BigInt::zero();
        for (e, c) in self.terms() {
            total += c * q.pow(e as u32);
        }
        total
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for QPolynomial {
    /// Lowest exponent first: `1 + 2 q + q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let magnitude = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coefficient_is_one = magnitude.is_one();
            match (e, coefficient_is_one) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{magnitude} q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{magnitude} q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pairs: &[(usize, i64)]) -> QPolynomial {
        QPolynomial::from_coeffs(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let p = poly(&[(0, 1), (1, -1)]).add(&poly(&[(1, 1)]));
        assert_eq!(p, QPolynomial::one());
        assert_eq!(p.terms().count(), 1);
        assert!(poly(&[(3, 1)]).sub(&poly(&[(3, 1)])).is_zero());
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let p = poly(&[(0, 1), (1, 2)]);
        let r = poly(&[(1, 1), (3, -4)]);
        let two = BigInt::from(2);
        assert_eq!(p.add(&r).eval(&two), p.eval(&two) + r.eval(&two));
        assert_eq!(p.sub(&r).eval(&two), p.eval(&two) - r.eval(&two));
        assert_eq!(p.mul(&r).eval(&two), p.eval(&two) * r.eval(&two));
        assert_eq!(p.shift(2).eval(&two), p.eval(&two) * 4);
    }

    #[test]
    fn display_lists_lowest_exponent_first() {
        assert_eq!(poly(&[(0, 1), (1, 2), (2, 1)]).to_string(), "1 + 2 q + q^2");
        assert_eq!(poly(&[(1, 1)]).to_string(), "q");
        assert_eq!(poly(&[(2, -3), (0, 1)]).to_string(), "1 - 3 q^2");
        assert_eq!(poly(&[(1, -1)]).to_string(), "-q");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn extremes_and_positivity() {
        let p = poly(&[(1, 2), (4, 1)]);
        assert_eq!(p.min_exponent(), Some(1));
        assert_eq!(p.max_exponent(), Some(4));
        assert!(p.is_nonnegative());
        assert!(!poly(&[(0, -1)]).is_nonnegative());
        assert_eq!(p.eval_at_one(), BigInt::from(3));
    }
}
