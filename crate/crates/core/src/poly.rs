//! Dense univariate integer polynomials in `q`.
//!
//! Coefficients are `i64` with checked arithmetic; the operator impls panic
//! on overflow instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `coeffs[k]` is the coefficient of `q^k`. Trailing zeros are trimmed, so the
/// zero polynomial has no coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

impl fmt::Display for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("integer overflow in polynomial arithmetic")
    }
}

impl std::error::Error for Overflow {}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// `q`
    pub fn q() -> Self {
        Self::new(vec![0, 1])
    }

    /// `q - 1`
    pub fn q_minus_one() -> Self {
        Self::new(vec![-1, 1])
    }

    /// `q^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Overflow> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coefficient(k).checked_add(other.coefficient(k)).ok_or(Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Overflow> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Overflow)?;
                coeffs[i + j] = coeffs[i + j].checked_add(term).ok_or(Overflow)?;
            }
        }
        Ok(Self::new(coeffs))
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self, Overflow> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Overflow))
            .collect::<Result<_, _>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn scale(&self, c: i64) -> Self {
        self.checked_scale(c).expect("polynomial coefficient overflow")
    }

    /// Horner evaluation at an integer point.
    pub fn checked_evaluate(&self, q: i64) -> Result<i64, Overflow> {
        self.coeffs.iter().rev().try_fold(0i64, |acc, &c| {
            acc.checked_mul(q).and_then(|x| x.checked_add(c)).ok_or(Overflow)
        })
    }

    pub fn evaluate(&self, q: i64) -> i64 {
        self.checked_evaluate(q)
            .expect("polynomial evaluation overflow")
    }

    /// `q^d p(1/q)` for `d >= degree`: the coefficient list of length `d + 1`
    /// reversed.
    pub fn reversed(&self, d: usize) -> Self {
        assert!(self.coeffs.len() <= d + 1, "reversal degree below polynomial degree");
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(d + 1, 0);
        coeffs.reverse();
        Self::new(coeffs)
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

impl From<IntPolynomial> for Vec<i64> {
    fn from(p: IntPolynomial) -> Self {
        p.coeffs
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: Self) -> IntPolynomial {
        self.checked_add(rhs).expect("polynomial coefficient overflow")
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: Self) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: Self) -> IntPolynomial {
        self.checked_mul(rhs).expect("polynomial coefficient overflow")
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        self.scale(-1)
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable form such as `q^3 - 2q^2 + 2q - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (_, 1) => {}
                _ => write!(f, "{a}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}
