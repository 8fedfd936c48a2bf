//! Finite permutation groups materialized by closure, and cycle indices
//! (cycle-type censuses with multiplicities) of arbitrary sets of
//! permutations.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};

/// Default cap on the number of elements produced by a closure.
pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;

/// A permutation group together with the generators it was built from and
/// its full element list, sorted by image table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    n: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl FiniteGroup {
    pub fn generate(n: usize, generators: Vec<Permutation>) -> Result<Self> {
        generate_group(n, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn trivial(n: usize) -> Self {
        FiniteGroup {
            n,
            generators: Vec::new(),
            elements: vec![Permutation::identity(n)],
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.elements.len())
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Non-identity elements.
    pub fn nontrivial_elements(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|g| !g.is_identity())
    }

    pub fn cycle_index(&self) -> CycleIndex {
        CycleIndex::from_permutations(self.n, &self.elements)
    }

    /// Wraps an element list already known to be closed under composition.
    pub(crate) fn from_closed_set(n: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        FiniteGroup { n, generators, elements }
    }
}

/// Breadth-first closure of `generators` acting on `0..n`.
pub fn generate_group(n: usize, generators: Vec<Permutation>, cap: usize) -> Result<FiniteGroup> {
    for g in &generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    let identity = Permutation::identity(n);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(x) = queue.pop_front() {
        for g in &generators {
            let y = x.compose(g)?;
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    Ok(FiniteGroup {
        n,
        generators,
        elements,
    })
}

/// Cycle index of a set `K` of permutations of equal degree: for each cycle
/// type, the number of elements of `K` having it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleIndex {
    degree: usize,
    terms: BTreeMap<CycleType, BigUint>,
}

impl CycleIndex {
    pub fn from_permutations(degree: usize, perms: &[Permutation]) -> Self {
        let terms = perms
            .par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<CycleType, u64>, p| {
                *acc.entry(p.cycle_type()).or_default() += 1;
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_default() += v;
                }
                a
            })
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect();
        CycleIndex { degree, terms }
    }

    /// Builds a cycle index from `(type, multiplicity)` pairs; equal types
    /// are merged.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CycleType, BigUint)>,
    {
        let mut map: BTreeMap<CycleType, BigUint> = BTreeMap::new();
        for (ct, c) in terms {
            if ct.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: ct.degree(),
                });
            }
            if !c.is_zero() {
                *map.entry(ct).or_default() += c;
            }
        }
        Ok(CycleIndex { degree, terms: map })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CycleType, &BigUint)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `|K|`.
    pub fn size(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn identity_count(&self) -> BigUint {
        self.terms
            .get(&CycleType::identity(self.degree))
            .cloned()
            .unwrap_or_default()
    }

    /// The same census with the identity removed (`K \ {e}`).
    pub fn without_identity(&self) -> CycleIndex {
        let mut terms = self.terms.clone();
        terms.remove(&CycleType::identity(self.degree));
        CycleIndex {
            degree: self.degree,
            terms,
        }
    }

    /// Elements whose support size satisfies `keep`.
    pub fn filter_support<F: Fn(usize) -> bool>(&self, keep: F) -> CycleIndex {
        CycleIndex {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(ct, _)| keep(ct.support_size()))
                .map(|(ct, c)| (ct.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `true` when `order` divides `n!`; only meaningful for modest `n`.
pub fn satisfies_lagrange(n: usize, order: &BigUint) -> bool {
    (factorial(n) % order).is_zero()
}

/// Converts a big integer to `u64` when it fits.
pub fn to_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn empty_generating_set() {
        let g = FiniteGroup::generate(4, vec![]).unwrap();
        assert_eq!(g.len(), 1);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn transposition_and_cycle_give_s4() {
        let g = FiniteGroup::generate(4, vec![p("(0 1)", 4), p("(0 1 2 3)", 4)]).unwrap();
        assert_eq!(g.len(), 24);
        assert!(satisfies_lagrange(4, &g.order()));
    }

    #[test]
    fn three_cycle_closure() {
        let g = FiniteGroup::generate(3, vec![p("(0 1 2)", 3)]).unwrap();
        assert_eq!(g.len(), 3);
        assert!(g.contains(&p("(0 2 1)", 3)));
    }

    #[test]
    fn cap_is_reported() {
        let err = generate_group(5, vec![p("(0 1)", 5), p("(0 1 2 3 4)", 5)], 50).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 50 });
        assert!(err.to_string().contains("50"));
    }

    #[test]
    fn elements_are_sorted_and_closed() {
        let g = FiniteGroup::generate(5, vec![p("(0 1 2 3 4)", 5), p("(1 4)(2 3)", 5)]).unwrap();
        assert_eq!(g.len(), 10);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&a.compose(b).unwrap()));
            }
        }
    }

    #[test]
    fn mismatched_generators() {
        assert!(FiniteGroup::generate(4, vec![p("(0 1)", 3)]).is_err());
    }

    #[test]
    fn cycle_index_of_s3() {
        let g = FiniteGroup::generate(3, vec![p("(0 1)", 3), p("(0 1 2)", 3)]).unwrap();
        let z = g.cycle_index();
        assert_eq!(z.size(), BigUint::from(6u32));
        assert_eq!(z.term_count(), 3);
        assert_eq!(z.identity_count(), BigUint::one());
        assert_eq!(z.without_identity().size(), BigUint::from(5u32));
    }
}
