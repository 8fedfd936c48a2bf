//! Closed-form upper bounds on invariant counts, passive-pair counts and
//! the average stabilizer excess `δ = ⟨Stab⟩ − 1`, all evaluated as natural
//! logarithms in double precision.
//!
//! Exact quantities enter through [`crate::numeric::ln_biguint`]; a bound
//! "dominates" when `ln bound − ln exact ≥ −DOMINANCE_TOLERANCE`.

mod applications;
mod passive;
mod stabilizer;

pub use applications::{
    affine_group_order, affine_stabilizer_excess_bound, ball_size_bound, large_transitive_estimates,
    pair_action_support_lower_bound, radius_chain, transitive_class_estimates, in_size_window,
    LargeTransitiveEstimates, OrderEstimate, RadiusChain, TransitiveClass,
};
pub use passive::{
    invariant_count_bound, passive_pairs_min_degree_bound, passive_pairs_profile_bound,
    passive_pairs_split_bound,
};
pub use stabilizer::{
    freeness_region_check, stabilizer_excess_chain_bound, stabilizer_excess_min_degree_bound,
    stabilizer_excess_sphere_bound, ChainLink, FreenessCheck,
};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::orbit::ActionKind;

/// One-sided tolerance on the log scale for dominance assertions.
pub const DOMINANCE_TOLERANCE: f64 = 1e-9;

/// Binary entropy in nats, `h(p) = −p ln p − (1−p) ln(1−p)`, with
/// `h(0) = h(1) = 0`.
pub fn entropy(p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("entropy argument {p} outside [0, 1]")));
    }
    let term = |x: f64| if x == 0.0 { 0.0 } else { -x * x.ln() };
    Ok(term(p) + term(1.0 - p))
}

/// `(1 − 2λ(1 − λ))^{1/2}`, the per-moved-point decay for subsets.
pub fn decay_base_subsets(lambda: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::InvalidArgument(format!("lambda {lambda} outside [0, 1]")));
    }
    Ok((1.0 - 2.0 * lambda * (1.0 - lambda)).sqrt())
}

/// `((1 − η)/(1 + η))^{1/2}`, the per-moved-point decay for multisets.
pub fn decay_base_multisets(eta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&eta) {
        return Err(Error::InvalidArgument(format!("eta {eta} outside [0, 1]")));
    }
    Ok(((1.0 - eta) / (1.0 + eta)).sqrt())
}

/// Size parameters of one induced action, restricted to the range where the
/// bounds are stated: `0 < m < n` for subsets, `m > 0` for multisets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundParams {
    n: u64,
    m: u64,
    kind: ActionKind,
}

impl BoundParams {
    pub fn new(n: u64, m: u64, kind: ActionKind) -> Result<Self> {
        let ok = match kind {
            ActionKind::Subsets => 0 < m && m < n,
            ActionKind::Multisets => m > 0 && n > 0,
        };
        if !ok {
            return Err(Error::OutOfTheoremRange(format!(
                "n = {n}, m = {m} for {kind} (need {})",
                match kind {
                    ActionKind::Subsets => "0 < m < n",
                    ActionKind::Multisets => "m > 0",
                }
            )));
        }
        Ok(BoundParams { n, m, kind })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    /// `λ = m/n`.
    pub fn lambda(&self) -> BigRational {
        BigRational::new(self.m.into(), self.n.into())
    }

    /// `η = m/(n + m)`.
    pub fn eta(&self) -> BigRational {
        BigRational::new(self.m.into(), (self.n + self.m).into())
    }

    fn nf(&self) -> f64 {
        self.n as f64
    }

    fn mf(&self) -> f64 {
        self.m as f64
    }

    /// `ln ξ` for the action kind, computed from the integer forms
    /// `√(m² + (n−m)²)/n` and `√(n/(n + 2m))`.
    pub fn ln_decay(&self) -> f64 {
        let (n, m) = (self.nf(), self.mf());
        match self.kind {
            ActionKind::Subsets => 0.5 * ((m * m + (n - m) * (n - m)) / (n * n)).ln(),
            ActionKind::Multisets => 0.5 * (n / (n + 2.0 * m)).ln(),
        }
    }

    pub fn decay(&self) -> f64 {
        self.ln_decay().exp()
    }

    /// `n h(λ)` or `(n + m) h(η)`: log of the unconstrained saddle value.
    pub fn entropy_exponent(&self) -> f64 {
        let (n, m) = (self.nf(), self.mf());
        match self.kind {
            ActionKind::Subsets => n * entropy(m / n).expect("0 < λ < 1"),
            ActionKind::Multisets => (n + m) * entropy(m / (n + m)).expect("0 < η < 1"),
        }
    }

    /// `ln(3 √(m(n∓m)/n))`, the prefactor of the stabilizer bounds.
    pub fn ln_stabilizer_prefactor(&self) -> f64 {
        let (n, m) = (self.nf(), self.mf());
        let inner = match self.kind {
            ActionKind::Subsets => m * (n - m) / n,
            ActionKind::Multisets => m * (n + m) / n,
        };
        3f64.ln() + 0.5 * inner.ln()
    }
}

/// Log of a Stirling-type lower bound on the carrier size `C(n, m)` (or
/// `C(n + m − 1, m)` for multisets). Always strictly below the exact value.
pub fn carrier_lower_bound(params: &BoundParams) -> f64 {
    let (n, m) = (params.nf(), params.mf());
    let two_pi = 2.0 * std::f64::consts::PI;
    match params.kind {
        ActionKind::Subsets => {
            let lambda = m / n;
            params.entropy_exponent() - 1.0 / 6.0 - 0.5 * (two_pi * n * lambda * (1.0 - lambda)).ln()
        }
        ActionKind::Multisets => {
            let eta = m / (n + m);
            params.entropy_exponent() - 0.5 * (two_pi * (n + m)).ln()
                + 0.5 * ((1.0 - eta) / eta).ln()
                - 1.0 / 6.0
        }
    }
}

/// An exact quantity next to the bounds claimed for it, all as natural
/// logs.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    /// `ln` of the exact quantity; `None` when it is not available.
    pub exact_ln: Option<f64>,
    pub bounds: Vec<(String, f64)>,
    /// `ln bound − ln exact`, per bound, when the exact value is known.
    pub slack: Vec<(String, f64)>,
}

impl BoundReport {
    pub fn new(exact_ln: Option<f64>) -> Self {
        BoundReport {
            exact_ln,
            bounds: Vec::new(),
            slack: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, ln_value: f64) {
        let name = name.into();
        if let Some(e) = self.exact_ln {
            let s = if e == f64::NEG_INFINITY { f64::INFINITY } else { ln_value - e };
            self.slack.push((name.clone(), s));
        }
        self.bounds.push((name, ln_value));
    }

    pub fn bound(&self, name: &str) -> Option<f64> {
        self.bounds.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// Every slack is at least `−DOMINANCE_TOLERANCE`.
    pub fn dominated(&self) -> bool {
        self.slack.iter().all(|&(_, s)| s >= -DOMINANCE_TOLERANCE)
    }

    pub fn violations(&self) -> Vec<&str> {
        self.slack
            .iter()
            .filter(|&&(_, s)| s < -DOMINANCE_TOLERANCE)
            .map(|(n, _)| n.as_str())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{binomial, ln_biguint};
    use proptest::prelude::*;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn entropy_examples() {
        assert!((entropy(0.5).unwrap() - LN2).abs() < 1e-15);
        assert_eq!(entropy(0.0).unwrap(), 0.0);
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        assert!(entropy(1.5).is_err());
        assert!(entropy(-0.1).is_err());
    }

    #[test]
    fn decay_examples() {
        assert_eq!(decay_base_subsets(0.0).unwrap(), 1.0);
        assert!((decay_base_subsets(0.5).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(decay_base_multisets(0.0).unwrap(), 1.0);
        assert!(decay_base_subsets(1.1).is_err());
        assert!(decay_base_multisets(-0.5).is_err());
    }

    #[test]
    fn params_reject_degenerate_sizes() {
        assert!(BoundParams::new(5, 0, ActionKind::Subsets).is_err());
        assert!(BoundParams::new(5, 5, ActionKind::Subsets).is_err());
        assert!(BoundParams::new(5, 0, ActionKind::Multisets).is_err());
        assert!(BoundParams::new(5, 9, ActionKind::Multisets).is_ok());
        let p = BoundParams::new(6, 2, ActionKind::Multisets).unwrap();
        assert_eq!(p.lambda(), BigRational::new(1.into(), 3.into()));
        assert_eq!(p.eta(), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn decay_forms_agree() {
        for n in 2..40u64 {
            for m in 1..n {
                let p = BoundParams::new(n, m, ActionKind::Subsets).unwrap();
                let direct = decay_base_subsets(m as f64 / n as f64).unwrap();
                assert!((p.decay() - direct).abs() < 1e-14);
                let p = BoundParams::new(n, m, ActionKind::Multisets).unwrap();
                let eta = m as f64 / (n + m) as f64;
                assert!((p.decay() - decay_base_multisets(eta).unwrap()).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn carrier_lower_bound_examples() {
        let p = BoundParams::new(10, 5, ActionKind::Subsets).unwrap();
        assert!(carrier_lower_bound(&p) < 252f64.ln());
        let p = BoundParams::new(4, 2, ActionKind::Multisets).unwrap();
        assert!(carrier_lower_bound(&p) < 10f64.ln());
    }

    #[test]
    fn carrier_lower_bound_sweep() {
        for n in 2..=40usize {
            for m in 1..n {
                let p = BoundParams::new(n as u64, m as u64, ActionKind::Subsets).unwrap();
                assert!(carrier_lower_bound(&p) < ln_biguint(&binomial(n, m)), "n={n} m={m}");
            }
            for m in 1..=2 * n {
                let p = BoundParams::new(n as u64, m as u64, ActionKind::Multisets).unwrap();
                let exact = ln_biguint(&binomial(n + m - 1, m));
                assert!(carrier_lower_bound(&p) < exact, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn report_slack() {
        let mut r = BoundReport::new(Some(1.0));
        r.push("a", 2.0);
        r.push("b", 1.0 - 1e-12);
        assert!(r.dominated());
        r.push("c", 0.5);
        assert_eq!(r.violations(), vec!["c"]);
        assert_eq!(r.bound("a"), Some(2.0));
        let mut z = BoundReport::new(Some(f64::NEG_INFINITY));
        z.push("x", -5.0);
        assert!(z.dominated());
    }

    proptest! {
        #[test]
        fn entropy_is_symmetric(p in 0.0f64..=1.0) {
            let a = entropy(p).unwrap();
            let b = entropy(1.0 - p).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
            prop_assert!((0.0..=LN2 + 1e-15).contains(&a));
        }

        #[test]
        fn decay_identity(lambda in 0.0f64..=1.0, eta in 0.0f64..=1.0) {
            let x = decay_base_subsets(lambda).unwrap();
            prop_assert!((x * x + 2.0 * lambda * (1.0 - lambda) - 1.0).abs() < 1e-14);
            prop_assert!(x > 0.0 && x <= 1.0);
            let y = decay_base_multisets(eta).unwrap();
            prop_assert!((0.0..=1.0).contains(&y));
        }
    }
}
