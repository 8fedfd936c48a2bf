//! Conjugacy classes of the symmetric group, indexed by integer partitions.

use num_bigint::BigUint;
use num_traits::One;

use crate::group::{factorial, CycleIndex};
use crate::perm::CycleType;

/// All partitions of `n` as `(part, multiplicity)` lists, parts descending.
/// Partitions are produced in reverse lexicographic order, starting at `[n]`.
pub fn partitions(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(rest: usize, max_part: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        for mult in (1..=rest / part).rev() {
            cur.push((part, mult));
            fill(rest - part * mult, part - 1, cur, out);
            cur.pop();
        }
    }
}

/// Size of the `S_n` conjugacy class with the given cycle type,
/// `n! / ∏_k (k^{j_k} · j_k!)`.
pub fn class_size(ct: &CycleType) -> BigUint {
    let mut denom = BigUint::one();
    for (k, j) in ct.iter() {
        denom *= BigUint::from(k).pow(j as u32) * factorial(j);
    }
    factorial(ct.degree()) / denom
}

/// One `(cycle type, class size)` entry per partition of `n`.
pub fn symmetric_class_reps(n: usize) -> Vec<(CycleType, BigUint)> {
    partitions(n)
        .into_iter()
        .map(|parts| {
            let ct = CycleType::from_counts(parts).expect("partition parts are positive");
            let size = class_size(&ct);
            (ct, size)
        })
        .collect()
}

/// Cycle index of `S_n` in its natural action.
pub fn symmetric_cycle_index(n: usize) -> CycleIndex {
    CycleIndex::from_terms(n, symmetric_class_reps(n)).expect("degrees agree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;
    use std::collections::BTreeMap;

    /// Buckets all permutations of `n` points by cycle type.
    fn brute_classes(n: usize) -> BTreeMap<CycleType, u64> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut out = BTreeMap::new();
        loop {
            let p = Permutation::from_images(img.clone()).unwrap();
            *out.entry(p.cycle_type()).or_insert(0) += 1;
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| img[i - 1] < img[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| img[j] > img[i - 1]).unwrap();
            img.swap(i - 1, j);
            img[i..].reverse();
        }
        out
    }

    #[test]
    fn s3_classes() {
        let reps = symmetric_class_reps(3);
        let expect = brute_classes(3);
        assert_eq!(reps.len(), 3);
        for (ct, size) in &reps {
            assert_eq!(*size, BigUint::from(expect[ct]));
        }
        let id = CycleType::identity(3);
        let tr = CycleType::from_counts([(1, 1), (2, 1)]).unwrap();
        let c3 = CycleType::from_counts([(3, 1)]).unwrap();
        assert_eq!(class_size(&id), BigUint::from(1u32));
        assert_eq!(class_size(&tr), BigUint::from(3u32));
        assert_eq!(class_size(&c3), BigUint::from(2u32));
    }

    #[test]
    fn s1_single_class() {
        let reps = symmetric_class_reps(1);
        assert_eq!(reps, vec![(CycleType::identity(1), BigUint::one())]);
    }

    #[test]
    fn double_transpositions_of_s4() {
        let ct = CycleType::from_counts([(2, 2)]).unwrap();
        assert_eq!(class_size(&ct), BigUint::from(3u32));
        assert_eq!(brute_classes(4)[&ct], 3);
    }

    #[test]
    fn class_sizes_sum_to_factorial() {
        for n in 1..=10 {
            let total: BigUint = symmetric_class_reps(n).into_iter().map(|(_, s)| s).sum();
            assert_eq!(total, factorial(n), "n = {n}");
        }
    }

    #[test]
    fn matches_enumeration_up_to_seven() {
        for n in 1..=7 {
            let brute = brute_classes(n);
            let reps = symmetric_class_reps(n);
            assert_eq!(reps.len(), brute.len());
            for (ct, size) in reps {
                assert_eq!(size, BigUint::from(brute[&ct]));
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }
}
