use num_bigint::BigUint;

use super::BoundParams;
use crate::error::{Error, Result};
use crate::numeric::{ln_biguint, log_sum_exp};
use crate::orbit::{ActionKind, FixedDegreePolynomial};

/// Bound on `δ = ⟨Stab⟩ − 1` from the group order and minimal degree:
/// `3 √(m(n∓m)/n) · |G| · ξ^μ`.
pub fn stabilizer_excess_min_degree_bound(order: &BigUint, mu: usize, params: &BoundParams) -> f64 {
    params.ln_stabilizer_prefactor() + ln_biguint(order) + mu as f64 * params.ln_decay()
}

/// One proper member `B_i` of a nested chain `B_1 ⊂ … ⊂ B_p = G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLink {
    /// `|B_i|`, or any upper bound on it.
    pub size: BigUint,
    /// `μ^{G \ B_i}`, or any lower bound on it.
    pub mu_outside: usize,
}

/// Bound on `δ` from a chain `B_1 ⊂ … ⊂ B_{p−1} ⊂ G`:
/// `3 √(…) (Σ_i (|B_{i+1}| − |B_i|) ξ^{μ_i} + |B_1| ξ^μ)`.
///
/// `links` lists `B_1 … B_{p−1}`; `B_p = G` is implied. An empty list gives
/// the min-degree bound. Sizes must be nondecreasing and at most `|G|`;
/// the `mu_outside` values must be nondecreasing and at least `mu`.
pub fn stabilizer_excess_chain_bound(
    order: &BigUint,
    links: &[ChainLink],
    mu: usize,
    params: &BoundParams,
) -> Result<f64> {
    let mut prev_size = BigUint::default();
    let mut prev_mu = mu;
    for (i, link) in links.iter().enumerate() {
        if link.size < prev_size || &link.size > order {
            return Err(Error::MalformedChain(format!(
                "size of link {i} ({}) must lie between {prev_size} and |G| = {order}",
                link.size
            )));
        }
        if link.mu_outside < prev_mu {
            return Err(Error::MalformedChain(format!(
                "mu outside link {i} ({}) drops below {prev_mu}",
                link.mu_outside
            )));
        }
        prev_size = link.size.clone();
        prev_mu = link.mu_outside;
    }
    let ln_xi = params.ln_decay();
    let first = links.first().map_or_else(|| order.clone(), |l| l.size.clone());
    let mut terms = vec![ln_biguint(&first) + mu as f64 * ln_xi];
    for (i, link) in links.iter().enumerate() {
        let next = links.get(i + 1).map_or(order, |l| &l.size);
        terms.push(ln_biguint(&(next - &link.size)) + link.mu_outside as f64 * ln_xi);
    }
    Ok(params.ln_stabilizer_prefactor() + log_sum_exp(terms))
}

/// Bound on `δ` from the Hamming sphere profile of the group:
/// `3 √(…) Σ_{r ≥ 1} |∂B(r)| ξ^r`. `−∞` for the trivial group.
pub fn stabilizer_excess_sphere_bound(profile: &FixedDegreePolynomial, params: &BoundParams) -> Result<f64> {
    if profile.degree() as u64 != params.n() {
        return Err(Error::DegreeMismatch {
            left: profile.degree(),
            right: params.n() as usize,
        });
    }
    let ln_xi = params.ln_decay();
    let sum = log_sum_exp(
        profile
            .coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(r, c)| ln_biguint(c) + r as f64 * ln_xi),
    );
    Ok(params.ln_stabilizer_prefactor() + sum)
}

/// Outcome of the finite-`n` check of the sufficient smallness condition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FreenessCheck {
    /// `(m, n)` lies outside the region where the condition is claimed.
    NotInRegion,
    /// The left side is below `ε`; carries its natural log.
    Holds { lhs_ln: f64 },
    /// The left side is at least `ε`; carries its natural log.
    Fails { lhs_ln: f64 },
}

impl FreenessCheck {
    pub fn holds(&self) -> bool {
        matches!(self, FreenessCheck::Holds { .. })
    }
}

/// Evaluates `√(m(n∓m)/n) · ξ^{√n/2}` against `ε` for `(m, n)` in the region
/// `min(m, n − m) > c √n ln n` (subsets) or `m > c √n ln n`, `n > 16`
/// (multisets).
pub fn freeness_region_check(c: f64, n: u64, m: u64, eps: f64, kind: ActionKind) -> FreenessCheck {
    let nf = n as f64;
    let threshold = c * nf.sqrt() * nf.ln();
    let in_region = match kind {
        ActionKind::Subsets => m < n && (m.min(n - m) as f64) > threshold,
        ActionKind::Multisets => n > 16 && (m as f64) > threshold,
    };
    if !in_region {
        return FreenessCheck::NotInRegion;
    }
    let params = match BoundParams::new(n, m, kind) {
        Ok(p) => p,
        Err(_) => return FreenessCheck::NotInRegion,
    };
    let lhs_ln = params.ln_stabilizer_prefactor() - 3f64.ln() + 0.5 * nf.sqrt() * params.ln_decay();
    if lhs_ln < eps.ln() {
        FreenessCheck::Holds { lhs_ln }
    } else {
        FreenessCheck::Fails { lhs_ln }
    }
}
