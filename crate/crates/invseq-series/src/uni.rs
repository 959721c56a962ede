use num::{BigInt, BigRational, One, Zero};

use crate::{rat, SeriesError};

/// Univariate power series truncated after `x^order`, with exact rational
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries1 {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries1 {
    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series holds at least its constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The polynomial with the given integer coefficients, lowest degree
    /// first, viewed as a series of the given order.
    pub fn from_int_poly(poly: &[i64], order: usize) -> Self {
        assert!(poly.len() <= order + 1, "polynomial exceeds the truncation order");
        let mut s = Self::zero(order);
        for (i, &c) in poly.iter().enumerate() {
            s.coeffs[i] = rat(c);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncation cannot extend a series");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    fn pad_to(&self, order: usize) -> Self {
        assert!(order >= self.order());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Self { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        let n = self.order();
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        assert_eq!(self.order(), rhs.order(), "series orders must match");
        if rhs.coeffs[0].is_zero() {
            return Err(SeriesError::NonUnitDivisor);
        }
        let n = self.order();
        let mut q = vec![BigRational::zero(); n + 1];
        for i in 0..=n {
            let mut acc = self.coeffs[i].clone();
            for (j, qj) in q.iter().enumerate().take(i) {
                if !qj.is_zero() && !rhs.coeffs[i - j].is_zero() {
                    acc -= qj * &rhs.coeffs[i - j];
                }
            }
            q[i] = &acc / &rhs.coeffs[0];
        }
        Ok(Self { coeffs: q })
    }

    /// Square root with constant term 1, by Newton iteration with doubling
    /// precision.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::SqrtConstantNotOne { found: self.coeffs[0].to_string() });
        }
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut root = Self::one(0);
        let mut exact = 0;
        // One step lifts a root exact to x^k to one exact to x^(2k+1).
        while exact < n {
            let target = (2 * exact + 1).min(n);
            let lifted = root.pad_to(target);
            let quotient = self
                .truncate(target)
                .div(&lifted)
                .expect("the iterate keeps constant term 1");
            root = lifted.add(&quotient).scale(&half);
            exact = target;
        }
        Ok(root)
    }

    /// Exact division by `x^k`; the result loses `k` orders.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.order(), "quotient would retain no coefficients");
        if self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible { factor: format!("x^{k}") });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplication by `x^k` without truncation; the order grows by `k`.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// All coefficients as integers, or None if any is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}
