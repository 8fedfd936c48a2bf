use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Pow};

use super::BoundParams;
use crate::error::{Error, Result};
use crate::numeric::ln_biguint;
use crate::orbit::ActionKind;

/// Which value of `ln |G|` to feed the affine-group bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderEstimate {
    /// `d² ln q`, the exponent as it is printed next to the affine bound.
    /// It is smaller than `ln |AGL(d, q)|` and is kept for comparison only.
    Printed,
    /// `(d² + d) ln q`, from `|AGL(d, q)| < q^{d² + d}`.
    Overestimate,
    /// `ln |AGL(d, q)|` computed exactly.
    Exact,
}

/// `Some(p)` when `q = p^k` for a prime `p` and `k ≥ 1`.
fn prime_power_base(q: u32) -> Option<u32> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|p| q.is_multiple_of(*p))?;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

/// `|AGL(d, q)| = q^d ∏_{j<d} (q^d − q^j)`.
pub fn affine_group_order(d: u32, q: u32) -> Result<BigUint> {
    if prime_power_base(q).is_none() {
        return Err(Error::UnsupportedField { q });
    }
    if d == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    let q = BigUint::from(q);
    let qd: BigUint = Pow::pow(&q, d);
    let mut order = qd.clone();
    for j in 0..d {
        order *= &qd - Pow::pow(&q, j);
    }
    Ok(order)
}

/// Bound on `ln δ` for `AGL(d, q)` acting on `m`-(multi)sets of
/// `F_q^d`, using `μ = q^d − q^{d−1}` and the chosen order estimate.
pub fn affine_stabilizer_excess_bound(
    d: u32,
    q: u32,
    m: u64,
    kind: ActionKind,
    order: &OrderEstimate,
) -> Result<f64> {
    let exact = affine_group_order(d, q)?;
    let n = u64::from(q)
        .checked_pow(d)
        .ok_or_else(|| Error::InvalidArgument(format!("{q}^{d} overflows")))?;
    let params = BoundParams::new(n, m, kind)?;
    let mu = (n - n / u64::from(q)) as f64;
    let ln_q = f64::from(q).ln();
    let d = f64::from(d);
    let ln_order = match order {
        OrderEstimate::Printed => d * d * ln_q,
        OrderEstimate::Overestimate => (d * d + d) * ln_q,
        OrderEstimate::Exact => ln_biguint(&exact),
    };
    Ok(params.ln_stabilizer_prefactor() + mu * params.ln_decay() + ln_order)
}

/// `ln min(C(n, r) r!, n^r)`, an upper bound on the number of
/// permutations of `n` points moving at most `r` of them.
pub fn ball_size_bound(n: u64, r: u64) -> Result<f64> {
    if r > n {
        return Err(Error::InvalidArgument(format!("radius {r} exceeds degree {n}")));
    }
    let falling: f64 = (0..r).map(|i| ((n - i) as f64).ln()).sum();
    Ok(falling.min(r as f64 * (n as f64).ln()))
}

/// `r(2n − r − 2)/2`: lower bound on the support, in the action on
/// 2-subsets, of a permutation moving more than `r` points.
pub fn pair_action_support_lower_bound(n: u64, r: u64) -> Result<BigRational> {
    if r == 0 || r >= n {
        return Err(Error::InvalidArgument(format!("need 1 ≤ r ≤ n − 1, got r = {r}, n = {n}")));
    }
    let value = BigRational::new((r * (2 * n - r - 2)).into(), 2u32.into());
    Ok(value)
}

/// Radii `r_1 = 2 < r_2 < …` with `r_i` the largest integer satisfying
/// `r_i + 1/2 < κ r_{i−1} (2 − r_{i−1}/n)`, stopped before reaching `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RadiusChain {
    Complete(Vec<u64>),
    /// The recursion failed to grow: `next ≤ radii.last()`.
    Stalled { radii: Vec<u64>, next: u64 },
}

impl RadiusChain {
    pub fn radii(&self) -> &[u64] {
        match self {
            RadiusChain::Complete(r) => r,
            RadiusChain::Stalled { radii, .. } => radii,
        }
    }

    pub fn is_stalled(&self) -> bool {
        matches!(self, RadiusChain::Stalled { .. })
    }

    /// Chain length divided by `ln n`.
    pub fn growth_constant(&self, n: u64) -> f64 {
        self.radii().len() as f64 / (n as f64).ln()
    }
}

/// Largest integer `r` with `r + 1/2 < κ prev (2 − prev/n)`, if any.
fn next_radius(a: u128, b: u128, n: u128, prev: u128) -> Option<u128> {
    // 2bn(r + 1/2) < 2a prev (2n − prev)
    let t = 2 * a * prev * (2 * n - prev);
    let bn = b * n;
    (t > bn).then(|| (t - bn - 1) / (2 * bn))
}

/// Builds the radius chain for `κ = kappa` on `n` points.
pub fn radius_chain(kappa: Ratio<u64>, n: u64) -> Result<RadiusChain> {
    if kappa <= Ratio::one() {
        return Err(Error::InvalidArgument(format!("kappa = {kappa} must exceed 1")));
    }
    if n < 3 {
        return Err(Error::InvalidArgument(format!("degree {n} too small for a radius chain")));
    }
    let (a, b, nn) = (u128::from(*kappa.numer()), u128::from(*kappa.denom()), u128::from(n));
    let mut radii = vec![2u64];
    loop {
        let prev = *radii.last().expect("nonempty");
        let next = next_radius(a, b, nn, u128::from(prev)).unwrap_or(0);
        if next >= nn {
            return Ok(RadiusChain::Complete(radii));
        }
        let next = next as u64;
        if next <= prev {
            return Ok(RadiusChain::Stalled { radii, next });
        }
        radii.push(next);
    }
}

/// Transitive groups other than `Sym` and `Alt`, as classified by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransitiveClass {
    Uniprimitive,
    TwoTransitive,
}

/// `(lower bound on μ, upper bound on ln |G|)` from the classical estimates
/// for the class: `(√n/2, 4√n (ln n)²)` or `(n/3 − (2/3)√n, 72 (ln n)³)`.
pub fn transitive_class_estimates(n: u64, class: TransitiveClass) -> Result<(f64, f64)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("degree {n} below 2")));
    }
    let nf = n as f64;
    let (root, ln_n) = (nf.sqrt(), nf.ln());
    Ok(match class {
        TransitiveClass::Uniprimitive => (root / 2.0, 4.0 * root * ln_n * ln_n),
        TransitiveClass::TwoTransitive => (nf / 3.0 - 2.0 / 3.0 * root, 72.0 * ln_n.powi(3)),
    })
}

/// Formula values for large transitive groups at one `(n, m)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LargeTransitiveEstimates {
    /// `A ln|G| / (ln ln|G|)²` with `A = (1/8 − δ)|ln ξ|` and `ln|G|` at the
    /// uniprimitive order bound.
    pub regular_orbit_size_lb_ln: f64,
    /// `(n/3 − (2/3 + δ)√n) ln ξ`.
    pub stab_excess_ub_ln: f64,
}

/// Evaluates both large-group formulas. No window check is made here, see
/// [`in_size_window`].
pub fn large_transitive_estimates(
    n: u64,
    m: u64,
    kind: ActionKind,
    delta: f64,
) -> Result<LargeTransitiveEstimates> {
    if !(delta > 0.0 && delta < 0.125) {
        return Err(Error::InvalidArgument(format!("delta = {delta} outside (0, 1/8)")));
    }
    let params = BoundParams::new(n, m, kind)?;
    let ln_xi = params.ln_decay();
    let (_, ln_order) = transitive_class_estimates(n, TransitiveClass::Uniprimitive)?;
    let a = (0.125 - delta) * ln_xi.abs();
    let ln_ln = ln_order.ln();
    let nf = n as f64;
    Ok(LargeTransitiveEstimates {
        regular_orbit_size_lb_ln: a * ln_order / (ln_ln * ln_ln),
        stab_excess_ub_ln: (nf / 3.0 - (2.0 / 3.0 + delta) * nf.sqrt()) * ln_xi,
    })
}

/// Whether `m` lies in the size window of the large-group statements:
/// `(nε, n(1−ε))` for subsets, `(nε/(1−ε), n(1−ε)/ε)` for multisets.
pub fn in_size_window(n: u64, m: u64, kind: ActionKind, eps: f64) -> Result<bool> {
    if !(eps > 0.0 && eps < 0.5) {
        return Err(Error::InvalidArgument(format!("epsilon = {eps} outside (0, 1/2)")));
    }
    let (nf, mf) = (n as f64, m as f64);
    let (lo, hi) = match kind {
        ActionKind::Subsets => (nf * eps, nf * (1.0 - eps)),
        ActionKind::Multisets => (nf * eps / (1.0 - eps), nf * (1.0 - eps) / eps),
    };
    Ok(lo < mf && mf < hi)
}
