use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::LabeledDomain;
use crate::classes::symmetric_class_reps;
use crate::error::{Error, Result};
use crate::group::{generate_group, CycleIndex, FiniteGroup, DEFAULT_ELEMENT_CAP};
use crate::numeric::binomial;
use crate::perm::Permutation;

fn cycle_on(n: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let cycle: Vec<u32> = points.into_iter().map(|p| p as u32).collect();
    Permutation::from_cycles(n, &[cycle]).expect("points are distinct and below n")
}

pub fn symmetric_generators(n: usize) -> Vec<Permutation> {
    match n {
        0 | 1 => Vec::new(),
        2 => vec![cycle_on(2, [0, 1])],
        _ => vec![cycle_on(n, [0, 1]), cycle_on(n, 0..n)],
    }
}

/// 3-cycles `(0 1 i)`, `2 ≤ i < n`.
pub fn alternating_generators(n: usize) -> Vec<Permutation> {
    (2..n).map(|i| cycle_on(n, [0, 1, i])).collect()
}

pub fn cyclic_generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        Vec::new()
    } else {
        vec![cycle_on(n, 0..n)]
    }
}

/// The rotation and the reflection `i ↦ −i mod n`.
pub fn dihedral_generators(n: usize) -> Vec<Permutation> {
    let reflection = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())
        .expect("negation is a bijection");
    vec![cycle_on(n, 0..n), reflection]
}

fn require_degree(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!("{what} needs degree at least {min}, got {n}")));
    }
    Ok(())
}

pub fn make_symmetric(n: usize) -> Result<FiniteGroup> {
    require_degree(n, 1, "symmetric group")?;
    generate_group(n, symmetric_generators(n), DEFAULT_ELEMENT_CAP)
}

pub fn make_alternating(n: usize) -> Result<FiniteGroup> {
    require_degree(n, 1, "alternating group")?;
    generate_group(n, alternating_generators(n), DEFAULT_ELEMENT_CAP)
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    require_degree(n, 1, "cyclic group")?;
    generate_group(n, cyclic_generators(n), DEFAULT_ELEMENT_CAP)
}

pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    require_degree(n, 3, "dihedral group")?;
    generate_group(n, dihedral_generators(n), DEFAULT_ELEMENT_CAP)
}

/// Cycle index of `A_n` from the even classes of `S_n`.
pub fn alternating_cycle_index(n: usize) -> CycleIndex {
    let even = symmetric_class_reps(n)
        .into_iter()
        .filter(|(ct, _)| (n - ct.cycle_count()).is_multiple_of(2));
    CycleIndex::from_terms(n, even).expect("degrees agree")
}

/// The `ℓ`-subsets of `0..n` in lexicographic order, with a reverse index.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    ell: usize,
    subsets: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl KSubsets {
    /// Fails when `C(n, ℓ)` exceeds `cap`.
    pub fn new(n: usize, ell: usize, cap: u64) -> Result<Self> {
        if ell > n {
            return Err(Error::SizeOutOfRange { m: ell, what: "subsets of the base set" });
        }
        let count = binomial(n, ell);
        match count.to_u64() {
            Some(c) if c <= cap && c <= u64::from(u32::MAX) => {}
            _ => {
                return Err(Error::CarrierTooLarge {
                    size: count.to_string(),
                    cap,
                })
            }
        }
        let mut subsets = Vec::new();
        let mut cur: Vec<u32> = (0..ell as u32).collect();
        loop {
            subsets.push(cur.clone());
            // advance to the next combination in lexicographic order
            let Some(i) = (0..ell).rev().find(|&i| (cur[i] as usize) < n - ell + i) else { break };
            cur[i] += 1;
            for j in i + 1..ell {
                cur[j] = cur[j - 1] + 1;
            }
        }
        let index = subsets.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect();
        Ok(KSubsets { n, ell, subsets, index })
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<u32>] {
        &self.subsets
    }

    pub fn index_of(&self, subset: &[u32]) -> Option<usize> {
        self.index.get(subset).map(|&i| i as usize)
    }

    /// The permutation `S ↦ σ(S)` of the `ℓ`-subsets.
    pub fn induced(&self, sigma: &Permutation) -> Result<Permutation> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch { left: self.n, right: sigma.degree() });
        }
        let mut buf = Vec::with_capacity(self.ell);
        let image = self
            .subsets
            .iter()
            .map(|s| {
                buf.clear();
                buf.extend(s.iter().map(|&x| sigma.apply(x as usize) as u32));
                buf.sort_unstable();
                self.index[&buf]
            })
            .collect();
        Ok(Permutation::from_images_unchecked(image))
    }

    /// Labels such as `{0,2}`.
    pub fn domain(&self) -> LabeledDomain {
        let labels = self
            .subsets
            .iter()
            .map(|s| {
                let inner: Vec<String> = s.iter().map(u32::to_string).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        LabeledDomain::new(labels).expect("subsets are distinct")
    }
}

fn check_ell(n: usize, ell: usize) -> Result<()> {
    if ell < 2 || ell + 1 > n {
        return Err(Error::SizeOutOfRange { m: ell, what: "induced action (need 2 ≤ ℓ ≤ n − 1)" });
    }
    Ok(())
}

/// Image of `base` acting on its `ℓ`-subsets, with every base element
/// mapped. The action is faithful for `2 ≤ ℓ ≤ n − 1`, which is checked.
pub fn induced_on_ksubsets(base: &FiniteGroup, ell: usize, carrier_cap: u64) -> Result<FiniteGroup> {
    let n = base.degree();
    check_ell(n, ell)?;
    let ks = KSubsets::new(n, ell, carrier_cap)?;
    let gens = base
        .generators()
        .iter()
        .map(|g| ks.induced(g))
        .collect::<Result<Vec<_>>>()?;
    let elements = base
        .elements()
        .iter()
        .map(|g| ks.induced(g))
        .collect::<Result<Vec<_>>>()?;
    let group = FiniteGroup::from_closed_set(ks.len(), gens, elements);
    assert_eq!(group.len(), base.len(), "induced action on {ell}-subsets is not faithful");
    Ok(group)
}

/// Cycle index of `S_n` acting on `ℓ`-subsets, one induced permutation per
/// class of `S_n`. Only `C(n, ℓ)` is capped.
pub fn induced_symmetric_cycle_index(n: usize, ell: usize, carrier_cap: u64) -> Result<CycleIndex> {
    check_ell(n, ell)?;
    let ks = KSubsets::new(n, ell, carrier_cap)?;
    let terms = symmetric_class_reps(n)
        .into_iter()
        .map(|(ct, size)| Ok((ks.induced(&ct.representative())?.cycle_type(), size)))
        .collect::<Result<Vec<_>>>()?;
    CycleIndex::from_terms(ks.len(), terms)
}

/// `n!/2` for `n ≥ 2`, `1` otherwise.
pub fn alternating_order(n: usize) -> BigUint {
    let f = crate::group::factorial(n);
    if n >= 2 {
        f / 2u32
    } else {
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::symmetric_cycle_index;
    use crate::group::factorial;
    use crate::invariant::alpha_m;
    use crate::orbit::minimal_degree_group;

    #[test]
    fn orders() {
        assert_eq!(make_symmetric(4).unwrap().len(), 24);
        assert_eq!(make_alternating(4).unwrap().len(), 12);
        assert_eq!(make_dihedral(5).unwrap().len(), 10);
        assert_eq!(make_cyclic(7).unwrap().len(), 7);
        for n in 1..=7 {
            assert_eq!(make_symmetric(n).unwrap().order(), factorial(n));
            assert_eq!(make_alternating(n).unwrap().order(), alternating_order(n));
            assert_eq!(make_cyclic(n).unwrap().len(), n);
        }
        for n in 3..=10 {
            assert_eq!(make_dihedral(n).unwrap().len(), 2 * n);
        }
        assert!(make_dihedral(2).is_err());
        assert!(make_symmetric(0).is_err());
    }

    #[test]
    fn class_rep_indices_match_materialized_groups() {
        for n in 1..=7 {
            assert_eq!(symmetric_cycle_index(n), make_symmetric(n).unwrap().cycle_index());
            assert_eq!(alternating_cycle_index(n), make_alternating(n).unwrap().cycle_index());
        }
    }

    #[test]
    fn ksubset_listing() {
        let ks = KSubsets::new(4, 2, 100).unwrap();
        assert_eq!(ks.len(), 6);
        assert_eq!(ks.subsets()[0], vec![0, 1]);
        assert_eq!(ks.subsets()[5], vec![2, 3]);
        assert_eq!(ks.index_of(&[1, 3]), Some(4));
        assert_eq!(ks.domain().label(4), Some("{1,3}"));
        assert!(KSubsets::new(20, 10, 1000).is_err());
        assert_eq!(KSubsets::new(3, 0, 10).unwrap().len(), 1);
    }

    #[test]
    fn induced_pairs_of_s4() {
        let s4 = make_symmetric(4).unwrap();
        let g = induced_on_ksubsets(&s4, 2, 1000).unwrap();
        assert_eq!(g.degree(), 6);
        assert_eq!(g.len(), 24);
        let ks = KSubsets::new(4, 2, 100).unwrap();
        assert!(ks.induced(&Permutation::identity(4)).unwrap().is_identity());
        assert_eq!(g.cycle_index(), induced_symmetric_cycle_index(4, 2, 1000).unwrap());
        assert!(induced_on_ksubsets(&s4, 1, 1000).is_err());
        assert!(induced_on_ksubsets(&s4, 4, 1000).is_err());
    }

    #[test]
    fn induced_is_a_homomorphism() {
        let ks = KSubsets::new(6, 3, 100).unwrap();
        let a = Permutation::parse_cycles("(0 1 2)(3 5)", 6).unwrap();
        let b = Permutation::parse_cycles("(1 4)(2 5 3)", 6).unwrap();
        let lhs = ks.induced(&a.compose(&b).unwrap()).unwrap();
        let rhs = ks.induced(&a).unwrap().compose(&ks.induced(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pair_fixed_points_follow_cycle_type() {
        for n in 2..=8 {
            let ks = KSubsets::new(n, 2, 1000).unwrap();
            for (ct, _) in symmetric_class_reps(n) {
                let fixed = ks.induced(&ct.representative()).unwrap().cycle_type().fixed_points();
                let j1 = ct.count(1);
                assert_eq!(fixed, j1 * j1.saturating_sub(1) / 2 + ct.count(2), "{ct}");
            }
        }
    }

    #[test]
    fn ksubset_fixed_points_match_invariant_counts() {
        for n in 3..=7 {
            for ell in 2..n {
                let ks = KSubsets::new(n, ell, 1000).unwrap();
                for (ct, _) in symmetric_class_reps(n) {
                    let fixed = ks.induced(&ct.representative()).unwrap().cycle_type().fixed_points();
                    assert_eq!(BigUint::from(fixed), alpha_m(&ct, ell).unwrap());
                }
            }
        }
    }

    #[test]
    fn pair_action_minimal_degree() {
        for n in 4..=7 {
            let idx = induced_symmetric_cycle_index(n, 2, 1000).unwrap();
            assert_eq!(minimal_degree_group(&idx).unwrap(), 2 * n - 4);
        }
        for n in 2..=7 {
            assert_eq!(minimal_degree_group(&symmetric_cycle_index(n)).unwrap(), 2);
        }
    }
}
