//! Power series with nonnegative big-integer coefficients, truncated at a
//! fixed degree.

use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIntSeries {
    coeffs: Vec<BigUint>,
}

impl TruncatedIntSeries {
    pub fn zero(degree_cap: usize) -> Self {
        TruncatedIntSeries {
            coeffs: vec![BigUint::zero(); degree_cap + 1],
        }
    }

    pub fn one(degree_cap: usize) -> Self {
        let mut s = Self::zero(degree_cap);
        s.coeffs[0] = BigUint::one();
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>, degree_cap: usize) -> Self {
        coeffs.resize(degree_cap + 1, BigUint::zero());
        TruncatedIntSeries { coeffs }
    }

    pub fn degree_cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `t^m`, zero beyond the cap.
    pub fn coeff(&self, m: usize) -> BigUint {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    /// Value at `t = 1` (sum of retained coefficients).
    pub fn sum(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Multiplies in place by the sparse factor `Σ c_e t^e`, dropping terms
    /// past the cap. Schoolbook convolution.
    pub fn mul_sparse(&mut self, factor: &[(usize, BigUint)]) {
        let cap = self.degree_cap();
        let mut out = vec![BigUint::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (e, c) in factor {
                let d = i + e;
                if d > cap {
                    break;
                }
                out[d] += a * c;
            }
        }
        self.coeffs = out;
    }

    /// Multiplies by `(1 + t^k)^j`.
    pub fn mul_one_plus_power(&mut self, k: usize, j: usize) {
        let qmax = j.min(self.degree_cap() / k);
        // binomial row C(j, q), q = 0..=qmax
        let mut factor = Vec::with_capacity(qmax + 1);
        let mut c = BigUint::one();
        for q in 0..=qmax {
            factor.push((k * q, c.clone()));
            c = c * BigUint::from(j - q) / BigUint::from(q + 1);
        }
        self.mul_sparse(&factor);
    }

    /// Multiplies by `(1 − t^k)^{−j}`.
    pub fn mul_inverse_one_minus_power(&mut self, k: usize, j: usize) {
        if j == 0 {
            return;
        }
        let qmax = self.degree_cap() / k;
        // negative binomial C(j − 1 + q, q)
        let mut factor = Vec::with_capacity(qmax + 1);
        let mut c = BigUint::one();
        for q in 0..=qmax {
            factor.push((k * q, c.clone()));
            c = c * BigUint::from(j + q) / BigUint::from(q + 1);
        }
        self.mul_sparse(&factor);
    }

    /// `self += scale · other`, coefficientwise on the common range.
    pub fn add_scaled(&mut self, other: &TruncatedIntSeries, scale: &BigUint) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b * scale;
            }
        }
    }
}

impl AddAssign<&TruncatedIntSeries> for TruncatedIntSeries {
    fn add_assign(&mut self, other: &TruncatedIntSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }
}
