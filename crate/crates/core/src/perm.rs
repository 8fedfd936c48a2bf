//! Permutations of `0..n` stored as image tables, their cycle types and the
//! Hamming metric.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`; `image[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from its image table, checking bijectivity.
    pub fn from_images(image: Vec<u32>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotABijection { n });
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_images_unchecked(image: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(image.clone()).is_ok());
        Permutation { image }
    }

    /// Builds a permutation of degree `n` from a list of disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut image: Vec<u32> = (0..n as u32).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &a) in cycle.iter().enumerate() {
                let b = cycle[(idx + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(Error::CycleNotation {
                        input: format!("{cycles:?}"),
                        reason: format!("point out of range for degree {n}"),
                    });
                }
                if touched[a as usize] {
                    return Err(Error::CycleNotation {
                        input: format!("{cycles:?}"),
                        reason: format!("point {a} appears twice"),
                    });
                }
                touched[a as usize] = true;
                image[a as usize] = b;
            }
        }
        Ok(Permutation { image })
    }

    /// Parses cycle notation such as `"(0 1)(2 3 4)"` at a given degree.
    pub fn parse_cycles(input: &str, n: usize) -> Result<Self> {
        let cycles = parse_cycle_list(input)?;
        Permutation::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.image[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_degree(self, other)?;
        Ok(Permutation {
            image: other.image.iter().map(|&i| self.image[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0u32; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x as usize] = i as u32;
        }
        Permutation { image }
    }

    /// Disjoint cycles of length at least two, each starting at its least
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.image[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut counts = BTreeMap::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image[x] as usize;
            }
            *counts.entry(len).or_insert(0) += 1;
        }
        CycleType { n, counts }
    }

    pub fn support_size(&self) -> usize {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 != x)
            .count()
    }
}

fn check_degree(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(())
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    p.cycle_type()
}

/// Number of points on which `p` and `q` disagree.
pub fn hamming_distance(p: &Permutation, q: &Permutation) -> Result<usize> {
    check_degree(p, q)?;
    Ok(p.image
        .iter()
        .zip(&q.image)
        .filter(|(a, b)| a != b)
        .count())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Parses with the degree inferred as one past the largest point mentioned.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        let n = cycles
            .iter()
            .flatten()
            .map(|&x| x as usize + 1)
            .max()
            .unwrap_or(0);
        Permutation::from_cycles(n, &cycles)
    }
}

/// Splits `"(0 1)(2 3 4)"` into cycles. Whitespace is ignored except as a
/// separator between points; commas are accepted as separators too.
pub(crate) fn parse_cycle_list(input: &str) -> Result<Vec<Vec<u32>>> {
    let err = |reason: &str| Error::CycleNotation {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    let mut cycles = Vec::new();
    let mut rest = input.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(err("expected '('"));
        };
        let close = body.find(')').ok_or_else(|| err("unclosed '('"))?;
        let inner = &body[..close];
        let mut cycle = Vec::new();
        for tok in inner.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let x: u32 = tok.parse().map_err(|_| err("points must be integers"))?;
            cycle.push(x);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Multiset `{k ↦ j_k}` of cycle lengths. Only lengths with `j_k > 0` are
/// stored; `Σ k·j_k = n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    n: usize,
    counts: BTreeMap<usize, usize>,
}

impl CycleType {
    pub fn identity(n: usize) -> Self {
        let mut counts = BTreeMap::new();
        if n > 0 {
            counts.insert(1, n);
        }
        CycleType { n, counts }
    }

    /// Builds a cycle type from `(length, multiplicity)` pairs; zero
    /// multiplicities are dropped.
    pub fn from_counts<I>(counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut map = BTreeMap::new();
        let mut n = 0;
        for (k, j) in counts {
            if k == 0 {
                return Err(Error::InvalidArgument("cycle length 0".into()));
            }
            if j > 0 {
                *map.entry(k).or_insert(0) += j;
                n += k * j;
            }
        }
        Ok(CycleType { n, counts: map })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `j_k`, zero when absent.
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &j)| (k, j))
    }

    /// `α = j_1`.
    pub fn fixed_points(&self) -> usize {
        self.count(1)
    }

    /// `β = n − j_1`.
    pub fn support_size(&self) -> usize {
        self.n - self.fixed_points()
    }

    pub fn cycle_count(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_identity(&self) -> bool {
        self.support_size() == 0
    }

    /// A permutation of this type whose cycles are runs of consecutive
    /// points, longest cycles first.
    pub fn representative(&self) -> Permutation {
        let mut image = Vec::with_capacity(self.n);
        let mut start = 0u32;
        for (&k, &j) in self.counts.iter().rev() {
            for _ in 0..j {
                for off in 0..k as u32 {
                    image.push(start + (off + 1) % k as u32);
                }
                start += k as u32;
            }
        }
        Permutation::from_images_unchecked(image)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, j)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{j}")?;
        }
        f.write_str("}")
    }
}

/// `β` of a cycle type.
pub fn support_size(ct: &CycleType) -> usize {
    ct.support_size()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn compose_examples() {
        let id = Permutation::identity(3);
        assert_eq!(compose(&id, &id).unwrap(), id);
        let t = p("(0 1 2)", 3);
        assert!(compose(&t, &t.inverse()).unwrap().is_identity());
        // (0 1)∘(1 2): 0→0→1, 1→2→2, 2→1→0
        let c = compose(&p("(0 1)", 3), &p("(1 2)", 3)).unwrap();
        assert_eq!(c.images(), &[1, 2, 0]);
        assert_eq!(c.to_string(), "(0 1 2)");
    }

    #[test]
    fn compose_degree_mismatch() {
        let e = compose(&Permutation::identity(3), &Permutation::identity(4));
        assert_eq!(e, Err(Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn cycle_type_examples() {
        let ct = Permutation::identity(5).cycle_type();
        assert_eq!(ct, CycleType::from_counts([(1, 5)]).unwrap());
        let ct = p("(0 1)", 5).cycle_type();
        assert_eq!(ct, CycleType::from_counts([(1, 3), (2, 1)]).unwrap());
        let ct = p("(0 1 2 3 4 5)", 6).cycle_type();
        assert_eq!(ct, CycleType::from_counts([(6, 1)]).unwrap());
    }

    #[test]
    fn support_size_examples() {
        assert_eq!(support_size(&CycleType::identity(5)), 0);
        assert_eq!(
            support_size(&CycleType::from_counts([(1, 3), (2, 1)]).unwrap()),
            2
        );
        assert_eq!(
            support_size(&CycleType::from_counts([(2, 1), (3, 1)]).unwrap()),
            5
        );
    }

    #[test]
    fn hamming_examples() {
        let x = p("(0 2 1)", 4);
        assert_eq!(hamming_distance(&x, &x).unwrap(), 0);
        assert_eq!(
            hamming_distance(&p("(0 1)", 4), &Permutation::identity(4)).unwrap(),
            2
        );
        // (0 1) = [1,0,2], (0 1 2) = [1,2,0]: differ at 1 and 2
        assert_eq!(
            hamming_distance(&p("(0 1)", 3), &p("(0 1 2)", 3)).unwrap(),
            2
        );
    }

    #[test]
    fn notation_round_trip() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        let x = p("  ( 2 4 3 )(0  1) ", 6);
        assert_eq!(x.to_string(), "(0 1)(2 4 3)");
        assert_eq!(p(&x.to_string(), 6), x);
        let inferred: Permutation = "(0 1)(2 3 4)".parse().unwrap();
        assert_eq!(inferred.degree(), 5);
    }

    #[test]
    fn notation_errors() {
        assert!(Permutation::parse_cycles("(0 1", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 5)", 3).is_err());
        assert!(Permutation::parse_cycles("0 1", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn representative_has_its_type() {
        let ct = CycleType::from_counts([(1, 2), (2, 2), (3, 1)]).unwrap();
        assert_eq!(ct.representative().cycle_type(), ct);
        assert_eq!(ct.degree(), 9);
    }
}
