//! Burnside orbit counting for the induced actions on `m`-subsets and
//! `m`-multisets, together with the support-size statistics that the
//! stabilizer bounds consume.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::CycleIndex;
use crate::invariant::{multiset_gf, subset_gf};
use crate::numeric::{binomial, ratio};
use crate::perm::Permutation;
use crate::series::TruncatedIntSeries;

/// Which induced action: on `m`-subsets or on `m`-multisets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ActionKind {
    Subsets,
    Multisets,
}

impl ActionKind {
    pub fn name(self) -> &'static str {
        match self {
            ActionKind::Subsets => "subsets",
            ActionKind::Multisets => "multisets",
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ActionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "subsets" => Ok(ActionKind::Subsets),
            "multisets" => Ok(ActionKind::Multisets),
            _ => Err(Error::InvalidArgument(format!(
                "unknown action kind {s:?} (expected subsets or multisets)"
            ))),
        }
    }
}

/// `n_m = C(n, m)` or `n_(m) = C(n + m − 1, m)`.
pub fn carrier_size(n: usize, m: usize, kind: ActionKind) -> Result<BigUint> {
    match kind {
        ActionKind::Subsets if m > n => Err(Error::SizeOutOfRange { m, what: "subsets" }),
        ActionKind::Subsets => Ok(binomial(n, m)),
        ActionKind::Multisets if n == 0 => Ok(if m == 0 { BigUint::one() } else { BigUint::zero() }),
        ActionKind::Multisets => Ok(binomial(n + m - 1, m)),
    }
}

fn check_size(n: usize, m: usize, kind: ActionKind) -> Result<()> {
    if kind == ActionKind::Subsets && m > n {
        return Err(Error::SizeOutOfRange { m, what: "subsets" });
    }
    Ok(())
}

/// Histogram of support sizes: `f[k]` elements move exactly `k` points.
/// For a whole group this is the Hamming sphere profile `|∂B(k)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDegreePolynomial {
    n: usize,
    f: Vec<BigUint>,
}

impl FixedDegreePolynomial {
    pub fn from_counts(n: usize, f: Vec<BigUint>) -> Result<Self> {
        if f.len() != n + 1 {
            return Err(Error::InvalidArgument(format!(
                "support histogram needs {} entries, got {}",
                n + 1,
                f.len()
            )));
        }
        if n >= 1 && !f[1].is_zero() {
            return Err(Error::InvalidArgument(
                "no permutation moves exactly one point".into(),
            ));
        }
        Ok(FixedDegreePolynomial { n, f })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.f
    }

    pub fn coeff(&self, k: usize) -> BigUint {
        self.f.get(k).cloned().unwrap_or_default()
    }

    /// `F(1) = |K|`.
    pub fn total(&self) -> BigUint {
        self.f.iter().sum()
    }

    /// `|B(r)|`: elements with support at most `r`.
    pub fn ball_size(&self, r: usize) -> BigUint {
        self.f.iter().take(r + 1).sum()
    }

    /// Smallest support size among elements with support `> r`, if any.
    pub fn min_support_above(&self, r: usize) -> Option<usize> {
        (r + 1..=self.n).find(|&k| !self.f[k].is_zero())
    }

    /// Smallest nonzero support size.
    pub fn minimal_degree(&self) -> Option<usize> {
        self.min_support_above(0)
    }

    /// Evaluates `F(x)` in floating point.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.f.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::INFINITY);
        }
        acc
    }
}

/// `F^K` for an explicit list of permutations.
pub fn fixed_degree_poly(perms: &[Permutation]) -> Result<FixedDegreePolynomial> {
    let first = perms.first().ok_or(Error::EmptySet)?;
    let n = first.degree();
    let mut f = vec![0u64; n + 1];
    for p in perms {
        if p.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: p.degree(),
            });
        }
        f[p.support_size()] += 1;
    }
    FixedDegreePolynomial::from_counts(n, f.into_iter().map(BigUint::from).collect())
}

/// `F^K` read from a cycle index.
pub fn fixed_degree_poly_of_index(index: &CycleIndex) -> FixedDegreePolynomial {
    let n = index.degree();
    let mut f = vec![BigUint::zero(); n + 1];
    for (ct, c) in index.terms() {
        f[ct.support_size()] += c;
    }
    FixedDegreePolynomial { n, f }
}

/// Hamming sphere profile of a group given by its cycle index.
pub fn sphere_profile(group: &CycleIndex) -> FixedDegreePolynomial {
    fixed_degree_poly_of_index(group)
}

/// `μ^K`: the smallest support size over `K`; zero when `e ∈ K`.
pub fn minimal_degree_subset(perms: &[Permutation]) -> Result<usize> {
    perms
        .iter()
        .map(Permutation::support_size)
        .min()
        .ok_or(Error::EmptySet)
}

/// `μ^K` for a set given by its cycle index.
pub fn minimal_degree_of_index(index: &CycleIndex) -> Result<usize> {
    index
        .terms()
        .map(|(ct, _)| ct.support_size())
        .min()
        .ok_or(Error::EmptySet)
}

/// Minimal degree of a group: smallest support over non-identity elements.
pub fn minimal_degree_group(group: &CycleIndex) -> Result<usize> {
    let rest = group.without_identity();
    if rest.is_empty() {
        return Err(Error::TrivialGroup);
    }
    minimal_degree_of_index(&rest)
}

/// `u_m^K`: number of pairs `(σ, x)` with `σ ∈ K`, `x` an `m`-(multi)set and
/// `σ(x) = x`.
pub fn passive_pair_count(perms: &[Permutation], m: usize, kind: ActionKind) -> Result<BigUint> {
    let first = perms.first().ok_or(Error::EmptySet)?;
    let index = CycleIndex::from_permutations(first.degree(), perms);
    for p in perms {
        if p.degree() != first.degree() {
            return Err(Error::DegreeMismatch {
                left: first.degree(),
                right: p.degree(),
            });
        }
    }
    passive_pairs_of_index(&index, m, kind)
}

pub fn passive_pairs_of_index(index: &CycleIndex, m: usize, kind: ActionKind) -> Result<BigUint> {
    check_size(index.degree(), m, kind)?;
    Ok(passive_pair_series(index, m, kind).coeff(m))
}

/// `Σ_{σ ∈ K} A_σ(t)` (or `A_(σ)`) truncated at `cap`; coefficient `m` is
/// `u_m^K`.
pub fn passive_pair_series(index: &CycleIndex, cap: usize, kind: ActionKind) -> TruncatedIntSeries {
    let cap = match kind {
        ActionKind::Subsets => cap.min(index.degree()),
        ActionKind::Multisets => cap,
    };
    let terms: Vec<_> = index.terms().collect();
    terms
        .par_iter()
        .map(|(ct, count)| {
            let mut s = match kind {
                ActionKind::Subsets => subset_gf(ct, cap),
                ActionKind::Multisets => multiset_gf(ct, cap),
            };
            if !count.is_one() {
                let mut scaled = TruncatedIntSeries::zero(cap);
                scaled.add_scaled(&s, count);
                s = scaled;
            }
            s
        })
        .reduce(
            || TruncatedIntSeries::zero(cap),
            |mut a, b| {
                a += &b;
                a
            },
        )
}

/// Exact orbit statistics of one induced action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSummary {
    pub n: usize,
    pub m: usize,
    pub kind: ActionKind,
    pub group_order: BigUint,
    pub orbit_count: BigUint,
    pub carrier_size: BigUint,
    /// `⟨Stab⟩ = orbit_count · |G| / carrier_size`.
    pub avg_stabilizer: BigRational,
    /// `δ = ⟨Stab⟩ − 1`.
    pub delta: BigRational,
    /// Orbits of size `|G|`; only known from the brute-force oracle.
    pub regular_orbit_count: Option<BigUint>,
    /// Points lying in regular orbits; only known from the oracle.
    pub rigid_point_count: Option<BigUint>,
}

impl OrbitSummary {
    pub(crate) fn new(
        n: usize,
        m: usize,
        kind: ActionKind,
        group_order: BigUint,
        orbit_count: BigUint,
        carrier_size: BigUint,
    ) -> Self {
        let avg_stabilizer = ratio(&(&orbit_count * &group_order), &carrier_size);
        let delta = &avg_stabilizer - BigRational::one();
        OrbitSummary {
            n,
            m,
            kind,
            group_order,
            orbit_count,
            carrier_size,
            avg_stabilizer,
            delta,
            regular_orbit_count: None,
            rigid_point_count: None,
        }
    }

    /// `|S|/|G| ≤ |S/G| ≤ |S|`.
    pub fn satisfies_trivial_bounds(&self) -> bool {
        &self.orbit_count * &self.group_order >= self.carrier_size
            && self.orbit_count <= self.carrier_size
    }

    /// Fraction of orbits that are regular, when known.
    pub fn regular_orbit_fraction(&self) -> Option<BigRational> {
        self.regular_orbit_count
            .as_ref()
            .map(|r| ratio(r, &self.orbit_count))
    }

    /// Fraction of points whose stabilizer is trivial, when known.
    pub fn rigid_point_fraction(&self) -> Option<BigRational> {
        self.rigid_point_count
            .as_ref()
            .map(|r| ratio(r, &self.carrier_size))
    }
}

fn summary_from_passive(
    n: usize,
    m: usize,
    kind: ActionKind,
    order: &BigUint,
    passive: &BigUint,
) -> Result<OrbitSummary> {
    let (orbits, rem) = passive.div_rem(order);
    assert!(
        rem.is_zero(),
        "Burnside sum {passive} not divisible by |G| = {order} (n={n}, m={m}, {kind})"
    );
    Ok(OrbitSummary::new(
        n,
        m,
        kind,
        order.clone(),
        orbits,
        carrier_size(n, m, kind)?,
    ))
}

/// Burnside count of orbits of a group (given by its cycle index) on
/// `m`-subsets or `m`-multisets.
pub fn orbit_count(group: &CycleIndex, m: usize, kind: ActionKind) -> Result<OrbitSummary> {
    let passive = passive_pairs_of_index(group, m, kind)?;
    summary_from_passive(group.degree(), m, kind, &group.size(), &passive)
}

/// Orbit summaries for every `m` in `ms`, sharing one generating-function
/// expansion.
pub fn orbit_counts(
    group: &CycleIndex,
    ms: impl IntoIterator<Item = usize>,
    kind: ActionKind,
) -> Result<Vec<OrbitSummary>> {
    let ms: Vec<usize> = ms.into_iter().collect();
    let n = group.degree();
    for &m in &ms {
        check_size(n, m, kind)?;
    }
    let cap = ms.iter().copied().max().unwrap_or(0);
    let series = passive_pair_series(group, cap, kind);
    let order = group.size();
    ms.into_iter()
        .map(|m| summary_from_passive(n, m, kind, &order, &series.coeff(m)))
        .collect()
}

/// Lower bounds on the regular-orbit fraction `(1−δ)/(1+δ)` and on the
/// rigid-point fraction `1−δ`, each clamped at zero.
pub fn regular_fraction_bounds(delta: &BigRational) -> Result<(BigRational, BigRational)> {
    if delta.is_negative() {
        return Err(Error::InvalidArgument(format!("negative delta {delta}")));
    }
    let one = BigRational::one();
    let zero = BigRational::zero();
    let orbit = ((&one - delta) / (&one + delta)).max(zero.clone());
    let point = (&one - delta).max(zero);
    Ok((orbit, point))
}
