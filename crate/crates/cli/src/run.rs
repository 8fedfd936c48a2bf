use std::time::Instant;

use num_bigint::BigUint;
use num_traits::One;

use orbitcount::bounds::{
    affine_stabilizer_excess_bound, invariant_count_bound, passive_pairs_min_degree_bound,
    passive_pairs_profile_bound, passive_pairs_split_bound, stabilizer_excess_chain_bound,
    stabilizer_excess_min_degree_bound, stabilizer_excess_sphere_bound, BoundParams, ChainLink, OrderEstimate,
    DOMINANCE_TOLERANCE,
};
use orbitcount::catalog::{BuildCaps, GroupSpec};
use orbitcount::invariant::{alpha_m, alpha_multiset};
use orbitcount::numeric::{ln_biguint, ln_rational, rational_to_f64};
use orbitcount::oracle::brute_force_orbits;
use orbitcount::orbit::{
    fixed_degree_poly_of_index, minimal_degree_group, orbit_counts, passive_pairs_of_index, regular_fraction_bounds,
    sphere_profile,
};
use orbitcount::{ActionKind, CycleIndex, Error, FiniteGroup, FixedDegreePolynomial, OrbitSummary};

use crate::args::{BoundSelection, Command, Common, Theorem};
use crate::report::{BoundRow, Certification, LnValue, OracleRow, Row, RunReport};

/// Failure classes, each with its own exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Cap(String),
    /// The run finished but an invariant failed; the report is still emitted.
    Violation(String, Box<RunReport>),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Cap(_) => 2,
            CliError::Violation(..) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::GroupTooLarge { .. } | Error::CarrierTooLarge { .. } => CliError::Cap(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// A group prepared for one run: its cycle index always, its elements only
/// when brute force needs them.
struct Prepared {
    spec: GroupSpec,
    caps: BuildCaps,
    index: CycleIndex,
    group: Option<FiniteGroup>,
}

impl Prepared {
    fn new(common: &Common) -> Result<Self, CliError> {
        let caps = BuildCaps {
            elements: common.element_cap,
            degree: common.carrier_cap,
        };
        let index = common.group.cycle_index(&caps)?;
        Ok(Prepared {
            spec: common.group.clone(),
            caps,
            index,
            group: None,
        })
    }

    fn degree(&self) -> usize {
        self.index.degree()
    }

    fn group(&mut self) -> Result<&FiniteGroup, CliError> {
        if self.group.is_none() {
            self.group = Some(self.spec.materialize(&self.caps)?);
        }
        Ok(self.group.as_ref().expect("just built"))
    }
}

fn check_sizes(common: &Common, n: usize) -> Result<(), CliError> {
    match common.kind {
        ActionKind::Subsets if common.m.to > n => Err(CliError::Usage(format!(
            "subset size {} exceeds the degree {n}",
            common.m.to
        ))),
        ActionKind::Multisets => {
            let cap = common.multiset_cap.unwrap_or(2 * n);
            if common.m.to > cap {
                Err(CliError::Cap(format!("multiset weight {} exceeds the multiset cap of {cap}", common.m.to)))
            } else {
                Ok(())
            }
        }
        ActionKind::Subsets => Ok(()),
    }
}

fn base_row(s: &OrbitSummary) -> Row {
    Row {
        m: s.m,
        carrier_size: s.carrier_size.to_string(),
        orbit_count: s.orbit_count.to_string(),
        delta: s.delta.to_string(),
        delta_float: rational_to_f64(&s.delta),
        bounds: Vec::new(),
        note: None,
        oracle: None,
    }
}

fn oracle_row(prepared: &mut Prepared, s: &OrbitSummary, carrier_cap: u64) -> Result<OracleRow, CliError> {
    let run = brute_force_orbits(prepared.group()?, s.m, s.kind, carrier_cap)?;
    let regular = run.regular_orbit_count.clone().unwrap_or_default();
    let rigid = run.rigid_point_count.clone().unwrap_or_default();
    let (orbit_ok, point_ok) = if s.delta < One::one() {
        let (orbit_lb, point_lb) = regular_fraction_bounds(&s.delta)?;
        let orbits = run.regular_orbit_fraction().expect("oracle fills regular counts");
        let points = run.rigid_point_fraction().expect("oracle fills rigid counts");
        (Some(orbits >= orbit_lb), Some(points >= point_lb))
    } else {
        (None, None)
    };
    Ok(OracleRow {
        agrees: run.orbit_count == s.orbit_count,
        orbit_count: run.orbit_count.to_string(),
        regular_orbits: regular.to_string(),
        rigid_points: rigid.to_string(),
        regular_orbit_bound_holds: orbit_ok,
        rigid_point_bound_holds: point_ok,
    })
}

fn header(command: &str, common: &Common, prepared: &Prepared) -> RunReport {
    RunReport {
        command: command.into(),
        group: common.group.to_string(),
        degree: prepared.degree().to_string(),
        group_order: prepared.index.size().to_string(),
        kind: common.kind.to_string(),
        m_from: common.m.from,
        m_to: common.m.to,
        rows: Vec::new(),
        certification: None,
        wall_time_ms: None,
    }
}

fn bound_row(name: &str, quantity: String, ln_bound: f64, ln_exact: f64) -> BoundRow {
    let slack = if ln_exact == f64::NEG_INFINITY { f64::INFINITY } else { ln_bound - ln_exact };
    BoundRow {
        name: name.into(),
        quantity,
        ln_bound: LnValue(ln_bound),
        ln_exact: LnValue(ln_exact),
        slack: LnValue(slack),
    }
}

/// Everything about the group that the bounds need, computed once.
struct GroupData {
    order: BigUint,
    nontrivial: CycleIndex,
    profile: FixedDegreePolynomial,
    profile_k: FixedDegreePolynomial,
    mu: Option<usize>,
}

impl GroupData {
    fn new(index: &CycleIndex) -> Self {
        let nontrivial = index.without_identity();
        GroupData {
            order: index.size(),
            profile: sphere_profile(index),
            profile_k: fixed_degree_poly_of_index(&nontrivial),
            mu: minimal_degree_group(index).ok(),
            nontrivial,
        }
    }
}

fn selected(selection: &BoundSelection, spec: &GroupSpec) -> Vec<Theorem> {
    if !selection.theorems.is_empty() {
        let mut t = selection.theorems.clone();
        if selection.spheres {
            t.push(Theorem::Spheres);
        }
        t.sort();
        t.dedup();
        return t;
    }
    let mut t = vec![Theorem::PerElement, Theorem::Profile, Theorem::MinDegree, Theorem::Split, Theorem::Stabilizer];
    if selection.chain.is_some() {
        t.push(Theorem::Chain);
    }
    if selection.spheres {
        t.push(Theorem::Spheres);
    }
    if matches!(spec, GroupSpec::Affine { .. } | GroupSpec::GeneralLinear { .. }) {
        t.push(Theorem::Affine);
    }
    t
}

/// Ball chain from radii; radii whose ball is the whole group are dropped.
fn ball_chain(profile: &FixedDegreePolynomial, radii: &[usize]) -> Result<Vec<ChainLink>, CliError> {
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage("chain radii must be strictly increasing".into()));
    }
    Ok(radii
        .iter()
        .filter(|&&r| r <= profile.degree())
        .filter_map(|&r| {
            profile.min_support_above(r).map(|next| ChainLink {
                size: profile.ball_size(r),
                mu_outside: next,
            })
        })
        .collect())
}

fn bounds_for_row(
    theorems: &[Theorem],
    selection: &BoundSelection,
    spec: &GroupSpec,
    index: &CycleIndex,
    data: &GroupData,
    summary: &OrbitSummary,
) -> Result<(Vec<BoundRow>, Option<String>), CliError> {
    let (n, m, kind) = (index.degree(), summary.m, summary.kind);
    let params = match BoundParams::new(n as u64, m as u64, kind) {
        Ok(p) => p,
        Err(e) => return Ok((Vec::new(), Some(e.to_string()))),
    };
    let ln_delta = ln_rational(&summary.delta);
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for &t in theorems {
        let id = t.id();
        let needs_mu = matches!(
            t,
            Theorem::MinDegree | Theorem::Split | Theorem::Stabilizer | Theorem::Chain
        );
        let mu = match (needs_mu, data.mu) {
            (true, None) => {
                skipped.push(id);
                continue;
            }
            (_, mu) => mu.unwrap_or(0),
        };
        match t {
            Theorem::PerElement => {
                let mut worst: Option<BoundRow> = None;
                for (ct, _) in index.terms() {
                    let alpha = match kind {
                        ActionKind::Subsets => alpha_m(ct, m)?,
                        ActionKind::Multisets => alpha_multiset(ct, m),
                    };
                    let bound = invariant_count_bound(ct.support_size(), &params)?;
                    let row = bound_row(id, format!("alpha for cycle type {ct}"), bound, ln_biguint(&alpha));
                    if worst.as_ref().is_none_or(|w| row.slack.0 < w.slack.0) {
                        worst = Some(row);
                    }
                }
                rows.extend(worst);
            }
            Theorem::Profile => {
                let u = ln_biguint(&passive_pairs_of_index(&data.nontrivial, m, kind)?);
                let b = passive_pairs_profile_bound(&data.profile_k, &params)?;
                rows.push(bound_row(id, "u(G minus identity)".into(), b, u));
            }
            Theorem::MinDegree => {
                let u = ln_biguint(&passive_pairs_of_index(&data.nontrivial, m, kind)?);
                let b = passive_pairs_min_degree_bound(&data.nontrivial.size(), mu, &params);
                rows.push(bound_row(id, "u(G minus identity)".into(), b, u));
            }
            Theorem::Split => {
                let Some(mu_star) = data.profile.min_support_above(mu) else {
                    skipped.push(id);
                    continue;
                };
                let u = ln_biguint(&passive_pairs_of_index(&data.nontrivial, m, kind)?);
                let b = passive_pairs_split_bound(&data.nontrivial.size(), &data.profile.coeff(mu), mu, mu_star, &params)?;
                rows.push(bound_row(id, "u(G minus identity)".into(), b, u));
            }
            Theorem::Stabilizer => {
                let b = stabilizer_excess_min_degree_bound(&data.order, mu, &params);
                rows.push(bound_row(id, "delta".into(), b, ln_delta));
            }
            Theorem::Chain => {
                let radii = selection.chain.clone().unwrap_or_else(|| vec![mu]);
                let links = ball_chain(&data.profile, &radii)?;
                let b = stabilizer_excess_chain_bound(&data.order, &links, mu, &params)?;
                rows.push(bound_row(id, "delta".into(), b, ln_delta));
            }
            Theorem::Spheres => {
                let b = stabilizer_excess_sphere_bound(&data.profile, &params)?;
                rows.push(bound_row(id, "delta".into(), b, ln_delta));
            }
            Theorem::Affine => {
                let (d, q) = match spec {
                    GroupSpec::Affine { d, q } | GroupSpec::GeneralLinear { d, q } => (*d, *q),
                    _ => {
                        return Err(CliError::Usage(format!(
                            "bound 5.1 applies only to AGL:d,q and GL:d,q, not {spec}"
                        )))
                    }
                };
                let over = affine_stabilizer_excess_bound(d, q, m as u64, kind, &OrderEstimate::Overestimate)?;
                let exact = affine_stabilizer_excess_bound(d, q, m as u64, kind, &OrderEstimate::Exact)?;
                rows.push(bound_row(id, "delta".into(), over, ln_delta));
                rows.push(bound_row("5.1-exact-order", "delta".into(), exact, ln_delta));
            }
        }
    }
    let note = (!skipped.is_empty()).then(|| format!("not applicable: {}", skipped.join(", ")));
    Ok((rows, note))
}

fn summaries(common: &Common, prepared: &Prepared) -> Result<Vec<OrbitSummary>, CliError> {
    check_sizes(common, prepared.degree())?;
    Ok(orbit_counts(&prepared.index, common.m.iter(), common.kind)?)
}

fn violation_in_rows(rows: &[Row]) -> Option<String> {
    for r in rows {
        for b in &r.bounds {
            if b.slack.0 < -DOMINANCE_TOLERANCE {
                return Some(format!("bound {} below exact value at m = {} (slack {})", b.name, r.m, b.slack));
            }
        }
        if let Some(o) = &r.oracle {
            if !o.agrees {
                return Some(format!("oracle count {} differs from {} at m = {}", o.orbit_count, r.orbit_count, r.m));
            }
            if o.regular_orbit_bound_holds == Some(false) || o.rigid_point_bound_holds == Some(false) {
                return Some(format!("regular-orbit lower bound fails at m = {}", r.m));
            }
        }
    }
    None
}

fn finish(mut report: RunReport, common: &Common, start: Instant) -> Result<RunReport, CliError> {
    if common.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    let failed_cert = report.certification.as_ref().is_some_and(|c| !c.passed());
    if let Some(msg) = violation_in_rows(&report.rows) {
        return Err(CliError::Violation(msg, Box::new(report)));
    }
    if failed_cert {
        return Err(CliError::Violation("certification failed".into(), Box::new(report)));
    }
    Ok(report)
}

fn cmd_count(common: &Common, oracle: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut prepared = Prepared::new(common)?;
    let mut report = header("count", common, &prepared);
    for s in summaries(common, &prepared)? {
        let mut row = base_row(&s);
        if oracle {
            row.oracle = Some(oracle_row(&mut prepared, &s, common.carrier_cap)?);
        }
        report.rows.push(row);
    }
    finish(report, common, start)
}

fn cmd_bounds(common: &Common, selection: &BoundSelection, oracle: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut prepared = Prepared::new(common)?;
    let theorems = selected(selection, &common.group);
    if theorems.contains(&Theorem::Affine)
        && !matches!(common.group, GroupSpec::Affine { .. } | GroupSpec::GeneralLinear { .. })
    {
        return Err(CliError::Usage(format!(
            "bound 5.1 applies only to AGL:d,q and GL:d,q, not {}",
            common.group
        )));
    }
    let data = GroupData::new(&prepared.index);
    let mut report = header("bounds", common, &prepared);
    for s in summaries(common, &prepared)? {
        let mut row = base_row(&s);
        let (bounds, note) = bounds_for_row(&theorems, selection, &common.group, &prepared.index, &data, &s)?;
        row.bounds = bounds;
        row.note = note;
        if oracle {
            row.oracle = Some(oracle_row(&mut prepared, &s, common.carrier_cap)?);
        }
        report.rows.push(row);
    }
    finish(report, common, start)
}

fn cmd_certify(common: &Common) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut prepared = Prepared::new(common)?;
    let n = prepared.degree();
    let mut report = header("certify", common, &prepared);
    let summaries = summaries(common, &prepared)?;
    for s in &summaries {
        let mut row = base_row(s);
        row.oracle = Some(oracle_row(&mut prepared, s, common.carrier_cap)?);
        report.rows.push(row);
    }
    let oracles: Vec<&OracleRow> = report.rows.iter().filter_map(|r| r.oracle.as_ref()).collect();
    let oracle_agrees = oracles.iter().all(|o| o.agrees);
    let bounds_hold = oracles
        .iter()
        .all(|o| o.regular_orbit_bound_holds != Some(false) && o.rigid_point_bound_holds != Some(false));
    let (symmetric, unimodal) = if common.kind == ActionKind::Subsets {
        let count = |m: usize| summaries.iter().find(|s| s.m == m).map(|s| s.orbit_count.clone());
        let symmetric = summaries
            .iter()
            .all(|s| count(n - s.m).is_none_or(|mirror| mirror == s.orbit_count));
        let rising: Vec<&BigUint> = summaries.iter().filter(|s| 2 * s.m <= n).map(|s| &s.orbit_count).collect();
        let unimodal = rising.windows(2).all(|w| w[0] <= w[1]);
        (Some(symmetric), Some(unimodal))
    } else {
        (None, None)
    };
    report.certification = Some(Certification {
        oracle_agrees,
        regular_fraction_bounds_hold: bounds_hold,
        symmetric,
        unimodal,
    });
    finish(report, common, start)
}

/// Runs one subcommand.
pub fn run(command: &Command) -> Result<RunReport, CliError> {
    let common = match command {
        Command::Count { common, .. } | Command::Bounds { common, .. } | Command::Certify { common } => common,
    };
    if let Some(threads) = common.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        // a second initialization (as in tests) keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match command {
        Command::Count { common, oracle } => cmd_count(common, *oracle),
        Command::Bounds { common, selection, oracle } => cmd_bounds(common, selection, *oracle),
        Command::Certify { common } => cmd_certify(common),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_with_slack(slack: f64) -> Row {
        Row {
            m: 2,
            carrier_size: "6".into(),
            orbit_count: "2".into(),
            delta: "1".into(),
            delta_float: 1.0,
            bounds: vec![bound_row("4.1", "delta".into(), 0.0, -slack)],
            note: None,
            oracle: None,
        }
    }

    #[test]
    fn violations_are_detected() {
        assert!(violation_in_rows(&[row_with_slack(0.5)]).is_none());
        assert!(violation_in_rows(&[row_with_slack(-1e-12)]).is_none());
        assert!(violation_in_rows(&[row_with_slack(-1e-3)]).is_some());
        let mut r = row_with_slack(1.0);
        r.oracle = Some(OracleRow {
            agrees: false,
            orbit_count: "3".into(),
            regular_orbits: "0".into(),
            rigid_points: "0".into(),
            regular_orbit_bound_holds: None,
            rigid_point_bound_holds: None,
        });
        assert!(violation_in_rows(&[r]).is_some());
    }

    #[test]
    fn error_classes_map_to_exit_codes() {
        assert_eq!(CliError::from(Error::GroupTooLarge { cap: 1 }).exit_code(), 2);
        assert_eq!(CliError::from(Error::EmptySet).exit_code(), 1);
        let report = RunReport {
            command: "count".into(),
            group: "C:1".into(),
            degree: "1".into(),
            group_order: "1".into(),
            kind: "subsets".into(),
            m_from: 0,
            m_to: 0,
            rows: vec![],
            certification: None,
            wall_time_ms: None,
        };
        assert_eq!(CliError::Violation("x".into(), Box::new(report)).exit_code(), 3);
    }

    #[test]
    fn zero_exact_value_gives_infinite_slack() {
        assert_eq!(bound_row("x", "delta".into(), 1.0, f64::NEG_INFINITY).slack.0, f64::INFINITY);
    }
}
