use num_bigint::BigUint;

use super::BoundParams;
use crate::error::{Error, Result};
use crate::numeric::{ln_biguint, log_sum_exp};
use crate::orbit::FixedDegreePolynomial;

/// Bound on the number of invariant `m`-(multi)sets of one permutation
/// moving `support` points: `ξ^β · e^{n h(λ)}` (or `e^{(n+m) h(η)}`).
pub fn invariant_count_bound(support: usize, params: &BoundParams) -> Result<f64> {
    if support as u64 > params.n() {
        return Err(Error::InvalidArgument(format!(
            "support {support} exceeds degree {}",
            params.n()
        )));
    }
    Ok(support as f64 * params.ln_decay() + params.entropy_exponent())
}

/// Bound on `u_m^K` from the support histogram: `e^{n h(λ)} F^K(ξ)`.
pub fn passive_pairs_profile_bound(profile: &FixedDegreePolynomial, params: &BoundParams) -> Result<f64> {
    if profile.degree() as u64 != params.n() {
        return Err(Error::DegreeMismatch {
            left: profile.degree(),
            right: params.n() as usize,
        });
    }
    let ln_xi = params.ln_decay();
    let ln_f = log_sum_exp(
        profile
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| ln_biguint(c) + k as f64 * ln_xi),
    );
    Ok(ln_f + params.entropy_exponent())
}

/// Bound on `u_m^K` from `|K|` and the minimal degree `μ^K` alone:
/// `|K| e^{n h(λ)} ξ^μ`.
pub fn passive_pairs_min_degree_bound(size_k: &BigUint, mu: usize, params: &BoundParams) -> f64 {
    ln_biguint(size_k) + params.entropy_exponent() + mu as f64 * params.ln_decay()
}

/// Refinement isolating a subset `B ⊊ K`: elements outside `B` move at
/// least `mu_star` points,
/// `e^{n h(λ)} ((|K| − |B|) ξ^{μ*} + |B| ξ^μ)`.
pub fn passive_pairs_split_bound(
    size_k: &BigUint,
    size_b: &BigUint,
    mu: usize,
    mu_star: usize,
    params: &BoundParams,
) -> Result<f64> {
    if size_b >= size_k {
        return Err(Error::InvalidArgument(format!(
            "|B| = {size_b} must be smaller than |K| = {size_k}"
        )));
    }
    if mu_star < mu {
        return Err(Error::InvalidArgument(format!(
            "mu* = {mu_star} must be at least mu = {mu}"
        )));
    }
    let ln_xi = params.ln_decay();
    let rest = size_k - size_b;
    Ok(params.entropy_exponent()
        + log_sum_exp([
            ln_biguint(&rest) + mu_star as f64 * ln_xi,
            ln_biguint(size_b) + mu as f64 * ln_xi,
        ]))
}
