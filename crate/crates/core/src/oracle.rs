//! Brute-force orbit enumeration: every `m`-(multi)set is materialized,
//! generators are applied and orbits are merged with union-find.
//!
//! Multisets are stored as sorted tuples `a_0 ≤ … ≤ a_{m−1}` and carried to
//! the `m`-subset `{a_i + i}` of `0..n+m−1`, so both carriers share a single
//! colex ranking.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numeric::binomial_u64;
use crate::orbit::{carrier_size, ActionKind, OrbitSummary};
use crate::perm::Permutation;

/// Default cap on the number of carrier points the oracle will enumerate.
pub const DEFAULT_CARRIER_CAP: u64 = 2_000_000;

/// Disjoint-set forest over `0..len` with union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }

    /// Sizes of all classes, one entry per root.
    pub fn class_sizes(&mut self) -> Vec<u32> {
        let roots: Vec<u32> = (0..self.parent.len() as u32)
            .filter(|&x| self.find(x) == x)
            .collect();
        roots.into_iter().map(|x| self.size[x as usize]).collect()
    }
}

/// Colex ranking of `k`-subsets of `0..universe`.
struct Colex {
    k: usize,
    /// `binom[c][i] = C(c, i)` for `c ≤ universe`, `i ≤ k`.
    binom: Vec<Vec<u64>>,
}

impl Colex {
    fn new(universe: usize, k: usize) -> Self {
        let binom = (0..=universe)
            .map(|c| (0..=k).map(|i| binomial_u64(c as u64, i as u64)).collect())
            .collect();
        Colex { k, binom }
    }

    fn rank(&self, comb: &[u32]) -> u64 {
        comb.iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c as usize][i + 1])
            .sum()
    }

    fn unrank(&self, mut r: u64, out: &mut [u32]) {
        let mut hi = self.binom.len() - 1;
        for i in (0..self.k).rev() {
            // largest c with C(c, i + 1) ≤ r
            let mut c = hi;
            while self.binom[c][i + 1] > r {
                c -= 1;
            }
            out[i] = c as u32;
            r -= self.binom[c][i + 1];
            hi = c.saturating_sub(1);
        }
    }
}

fn image_rank(colex: &Colex, g: &Permutation, comb: &[u32], kind: ActionKind, buf: &mut Vec<u32>) -> u64 {
    buf.clear();
    match kind {
        ActionKind::Subsets => buf.extend(comb.iter().map(|&c| g.apply(c as usize) as u32)),
        ActionKind::Multisets => buf.extend(
            comb.iter()
                .enumerate()
                .map(|(i, &c)| g.apply(c as usize - i) as u32),
        ),
    }
    buf.sort_unstable();
    if kind == ActionKind::Multisets {
        for (i, x) in buf.iter_mut().enumerate() {
            *x += i as u32;
        }
    }
    colex.rank(buf)
}

/// Orbits of `group` on `m`-subsets or `m`-multisets by exhaustive
/// enumeration. Fills in the regular-orbit and rigid-point counts.
pub fn brute_force_orbits(
    group: &FiniteGroup,
    m: usize,
    kind: ActionKind,
    carrier_cap: u64,
) -> Result<OrbitSummary> {
    let n = group.degree();
    let size_big = carrier_size(n, m, kind)?;
    let size = match u64::try_from(&size_big) {
        Ok(s) if s <= carrier_cap => s,
        _ => {
            return Err(Error::CarrierTooLarge {
                size: size_big.to_string(),
                cap: carrier_cap,
            })
        }
    };
    let universe = match kind {
        ActionKind::Subsets => n,
        ActionKind::Multisets => (n + m).saturating_sub(1),
    };
    let colex = Colex::new(universe, m);
    let mut uf = UnionFind::new(size as usize);
    for g in group.generators() {
        let images: Vec<u32> = (0..size)
            .into_par_iter()
            .map_init(
                || (vec![0u32; m], Vec::with_capacity(m)),
                |(comb, buf), r| {
                    colex.unrank(r, comb);
                    image_rank(&colex, g, comb, kind, buf) as u32
                },
            )
            .collect();
        for (r, &img) in images.iter().enumerate() {
            uf.union(r as u32, img);
        }
    }
    let sizes = uf.class_sizes();
    let order = group.len() as u64;
    let regular: Vec<u64> = sizes
        .iter()
        .map(|&s| s as u64)
        .filter(|&s| s == order)
        .collect();
    let mut summary = OrbitSummary::new(
        n,
        m,
        kind,
        group.order(),
        BigUint::from(sizes.len()),
        size_big,
    );
    summary.regular_orbit_count = Some(BigUint::from(regular.len()));
    summary.rigid_point_count = Some(BigUint::from(regular.iter().sum::<u64>()));
    Ok(summary)
}
