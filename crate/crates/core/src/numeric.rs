//! Logarithms of exact quantities and log-domain summation.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Natural log of a big integer; `-inf` for zero. Uses the top 64 bits and
/// the bit length, so the relative error is near `f64` rounding.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a nonnegative rational; `-inf` for zero.
pub fn ln_rational(x: &BigRational) -> f64 {
    assert!(x.numer().sign() != Sign::Minus, "ln of a negative rational");
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    ln_biguint(num) - ln_biguint(den)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 0..k {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    c
}

/// `binomial` for small arguments, saturating at `u64::MAX`.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * (n - i) as u128 / (i + 1) as u128;
        if c > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    c as u64
}

/// `ln Σ exp(x_i)`, stable for large magnitudes; `-inf` for an empty sum.
pub fn log_sum_exp<I: IntoIterator<Item = f64>>(xs: I) -> f64 {
    let xs: Vec<f64> = xs.into_iter().collect();
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    if max == f64::INFINITY {
        return max;
    }
    max + xs.iter().map(|&x| (x - max).exp()).sum::<f64>().ln()
}

pub fn to_rational(x: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, x.clone()))
}

pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(
        BigInt::from_biguint(Sign::Plus, num.clone()),
        BigInt::from_biguint(Sign::Plus, den.clone()),
    )
}

/// Float value of a rational, through logs when the parts overflow `f64`.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    match (x.numer().to_f64(), x.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            let sign = if x.numer().sign() == Sign::Minus { -1.0 } else { 1.0 };
            sign * (ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude())).exp()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_of_big_integers() {
        assert_eq!(ln_biguint(&BigUint::zero()), f64::NEG_INFINITY);
        assert_eq!(ln_biguint(&BigUint::one()), 0.0);
        let x = BigUint::from(10u32).pow(100);
        let exact = 100.0 * 10f64.ln();
        assert!(((ln_biguint(&x) - exact) / exact).abs() < 1e-13);
        let y = (BigUint::one() << 300u32) * BigUint::from(3u32);
        let exact = 300.0 * std::f64::consts::LN_2 + 3f64.ln();
        assert!(((ln_biguint(&y) - exact) / exact).abs() < 1e-13);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 5), BigUint::from(252u32));
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(binomial_u64(52, 5), 2_598_960);
        assert_eq!(binomial_u64(200, 100), u64::MAX);
    }

    #[test]
    fn lse() {
        let v = log_sum_exp([1000.0, 1000.0]);
        assert!((v - (1000.0 + 2f64.ln())).abs() < 1e-12);
        assert_eq!(log_sum_exp([]), f64::NEG_INFINITY);
        assert_eq!(log_sum_exp([f64::NEG_INFINITY, 0.0]), 0.0);
    }

    #[test]
    fn rationals() {
        let r = ratio(&BigUint::from(1u32), &BigUint::from(3u32));
        assert!((rational_to_f64(&r) - 1.0 / 3.0).abs() < 1e-15);
        assert!((ln_rational(&r) + 3f64.ln()).abs() < 1e-15);
        let big = ratio(&(BigUint::one() << 2000u32), &(BigUint::one() << 1999u32));
        assert!((rational_to_f64(&big) - 2.0).abs() < 1e-12);
    }
}
