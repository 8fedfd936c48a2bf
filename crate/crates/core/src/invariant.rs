//! Counts of subsets and multisets left invariant by a single permutation,
//! read off from its cycle type.
//!
//! A `σ`-invariant subset is a union of cycles of `σ`, so
//! `A_σ(t) = ∏_k (1 + t^k)^{j_k}` counts them by size. Invariant multisets
//! are constant on cycles, giving `A_(σ)(t) = ∏_k (1 − t^k)^{−j_k}`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::CycleType;
use crate::series::TruncatedIntSeries;

/// `A_σ(t)` truncated at `cap` (`cap ≤ n`).
pub fn subset_gf(ct: &CycleType, cap: usize) -> TruncatedIntSeries {
    let mut s = TruncatedIntSeries::one(cap);
    for (k, j) in ct.iter() {
        s.mul_one_plus_power(k, j);
    }
    s
}

/// `A_(σ)(t)` truncated at `cap`; any `cap` is allowed.
pub fn multiset_gf(ct: &CycleType, cap: usize) -> TruncatedIntSeries {
    let mut s = TruncatedIntSeries::one(cap);
    for (k, j) in ct.iter() {
        s.mul_inverse_one_minus_power(k, j);
    }
    s
}

/// Number of `σ`-invariant `m`-subsets, `0 ≤ m ≤ n`.
pub fn alpha_m(ct: &CycleType, m: usize) -> Result<BigUint> {
    if m > ct.degree() {
        return Err(Error::SizeOutOfRange { m, what: "subsets" });
    }
    Ok(subset_gf(ct, m).coeff(m))
}

/// Number of `σ`-invariant multisets of weight `m`.
pub fn alpha_multiset(ct: &CycleType, m: usize) -> BigUint {
    multiset_gf(ct, m).coeff(m)
}

/// All invariant subsets of any size: `2^{number of cycles}`.
pub fn total_invariant_subsets(ct: &CycleType) -> BigUint {
    BigUint::one() << ct.cycle_count()
}

/// Base-2 logarithm of the bound `2^{n − β/2}` on the number of invariant
/// subsets.
pub fn laborde_bound(ct: &CycleType) -> f64 {
    ct.degree() as f64 - ct.support_size() as f64 / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::partitions;
    use crate::perm::Permutation;

    fn ct(pairs: &[(usize, usize)]) -> CycleType {
        CycleType::from_counts(pairs.iter().copied()).unwrap()
    }

    fn u(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn all_types(n: usize) -> Vec<CycleType> {
        partitions(n)
            .into_iter()
            .map(|p| CycleType::from_counts(p).unwrap())
            .collect()
    }

    /// Counts invariant subsets of each size by testing all `2^n` masks.
    fn brute_subsets(p: &Permutation) -> Vec<u64> {
        let n = p.degree();
        let mut out = vec![0u64; n + 1];
        for mask in 0u32..(1 << n) {
            let image = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0u32, |acc, i| acc | 1 << p.apply(i));
            if image == mask {
                out[mask.count_ones() as usize] += 1;
            }
        }
        out
    }

    /// Counts invariant multiplicity functions of total weight `≤ cap`.
    fn brute_multisets(p: &Permutation, cap: usize) -> Vec<u64> {
        let n = p.degree();
        let mut out = vec![0u64; cap + 1];
        let mut kappa = vec![0usize; n];
        loop {
            let weight: usize = kappa.iter().sum();
            if weight <= cap && (0..n).all(|i| kappa[p.apply(i)] == kappa[i]) {
                out[weight] += 1;
            }
            // odometer over 0..=cap per coordinate
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                kappa[i] += 1;
                if kappa[i] <= cap {
                    break;
                }
                kappa[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn subset_gf_examples() {
        assert_eq!(subset_gf(&CycleType::identity(4), 4).coeffs(), u(&[1, 4, 6, 4, 1]).as_slice());
        assert_eq!(subset_gf(&ct(&[(1, 1), (2, 1)]), 3).coeffs(), u(&[1, 1, 1, 1]).as_slice());
        assert_eq!(subset_gf(&ct(&[(3, 1)]), 3).coeffs(), u(&[1, 0, 0, 1]).as_slice());
        let p = Permutation::parse_cycles("(0 1)", 3).unwrap();
        assert_eq!(brute_subsets(&p), vec![1, 1, 1, 1]);
    }

    #[test]
    fn multiset_gf_examples() {
        assert_eq!(multiset_gf(&CycleType::identity(2), 3).coeffs(), u(&[1, 2, 3, 4]).as_slice());
        assert_eq!(multiset_gf(&ct(&[(1, 1), (2, 1)]), 2).coeffs(), u(&[1, 1, 2]).as_slice());
        // brute force for the 3-cycle: only constant functions are invariant,
        // so weights 0 and 3 each have exactly one.
        let p = Permutation::parse_cycles("(0 1 2)", 3).unwrap();
        assert_eq!(brute_multisets(&p, 3), vec![1, 0, 0, 1]);
        assert_eq!(multiset_gf(&ct(&[(3, 1)]), 3).coeffs(), u(&[1, 0, 0, 1]).as_slice());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_m(&CycleType::identity(5), 2).unwrap(), BigUint::from(10u32));
        assert_eq!(alpha_m(&ct(&[(1, 1), (2, 1)]), 2).unwrap(), BigUint::one());
        assert!(alpha_m(&ct(&[(1, 1), (2, 1)]), 4).is_err());
    }

    #[test]
    fn alpha_two_is_pairs_of_fixed_points_plus_two_cycles() {
        for n in 2..=10 {
            for t in all_types(n) {
                let j1 = t.count(1);
                let expect = j1 * j1.saturating_sub(1) / 2 + t.count(2);
                assert_eq!(alpha_m(&t, 2).unwrap(), BigUint::from(expect), "{t}");
            }
        }
    }

    #[test]
    fn total_invariant_examples() {
        assert_eq!(total_invariant_subsets(&CycleType::identity(4)), BigUint::from(16u32));
        assert_eq!(total_invariant_subsets(&ct(&[(1, 1), (2, 1)])), BigUint::from(4u32));
        assert_eq!(total_invariant_subsets(&ct(&[(6, 1)])), BigUint::from(2u32));
    }

    #[test]
    fn laborde_examples() {
        assert_eq!(laborde_bound(&CycleType::identity(4)), 4.0);
        assert_eq!(laborde_bound(&ct(&[(1, 1), (2, 1)])), 2.0);
        assert_eq!(laborde_bound(&ct(&[(6, 1)])), 3.0);
    }

    #[test]
    fn subsets_match_enumeration_up_to_ten() {
        for n in 1..=10 {
            for t in all_types(n) {
                let brute = brute_subsets(&t.representative());
                let gf = subset_gf(&t, n);
                assert_eq!(gf.coeffs(), u(&brute).as_slice(), "{t}");
            }
        }
    }

    #[test]
    fn multisets_match_enumeration_up_to_six() {
        for n in 1..=6 {
            for t in all_types(n) {
                let brute = brute_multisets(&t.representative(), 8);
                assert_eq!(multiset_gf(&t, 8).coeffs(), u(&brute).as_slice(), "{t}");
            }
        }
    }

    #[test]
    fn totals_palindrome_and_laborde() {
        for n in 1..=12 {
            for t in all_types(n) {
                let gf = subset_gf(&t, n);
                assert_eq!(gf.sum(), total_invariant_subsets(&t));
                for m in 0..=n {
                    assert_eq!(gf.coeff(m), gf.coeff(n - m));
                }
                assert!((t.cycle_count() as f64) <= laborde_bound(&t));
            }
        }
    }
}
