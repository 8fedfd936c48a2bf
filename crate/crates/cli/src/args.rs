use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use orbitcount::catalog::GroupSpec;
use orbitcount::group::DEFAULT_ELEMENT_CAP;
use orbitcount::oracle::DEFAULT_CARRIER_CAP;
use orbitcount::ActionKind;

#[derive(Parser, Debug)]
#[command(
    name = "orbitcount",
    version,
    about = "Exact orbit counts and stabilizer bounds for permutation groups acting on subsets and multisets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count orbits exactly for each size in the range.
    Count {
        #[command(flatten)]
        common: Common,
        /// Also enumerate orbits by brute force and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare exact counts with the closed-form upper bounds.
    Bounds {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        selection: BoundSelection,
        /// Also enumerate orbits by brute force and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Check the exact counts against brute-force enumeration, the
    /// regular-orbit lower bounds and, for subsets, symmetry and unimodality.
    Certify {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Group: S:n, A:n, C:n, D:n, S:n^l, GL:d,q, AGL:d,q or gens:[n:](..)(..);(..)
    pub group: GroupSpec,

    /// Sizes to sweep, `A..B` (inclusive) or a single `A`.
    #[arg(long = "m", value_name = "A..B")]
    pub m: SizeRange,

    #[arg(long, default_value = "subsets", value_parser = parse_kind)]
    pub kind: ActionKind,

    #[arg(long, value_enum, default_value_t = Format::Text, env = "ORBITCOUNT_FORMAT")]
    pub format: Format,

    /// Worker threads for the parallel parts.
    #[arg(long, env = "ORBITCOUNT_THREADS")]
    pub threads: Option<usize>,

    /// Maximum number of group elements to materialize.
    #[arg(long, default_value_t = DEFAULT_ELEMENT_CAP, env = "ORBITCOUNT_ELEMENT_CAP")]
    pub element_cap: usize,

    /// Maximum number of points in a domain or enumerated carrier.
    #[arg(long, default_value_t = DEFAULT_CARRIER_CAP, env = "ORBITCOUNT_CARRIER_CAP")]
    pub carrier_cap: u64,

    /// Largest multiset weight accepted; defaults to twice the degree.
    #[arg(long, env = "ORBITCOUNT_MULTISET_CAP")]
    pub multiset_cap: Option<usize>,

    /// Include wall time in the report (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct BoundSelection {
    /// Bounds to evaluate; all applicable ones when omitted.
    #[arg(long = "thm", value_enum, value_delimiter = ',')]
    pub theorems: Vec<Theorem>,

    /// Radii of the Hamming balls forming a nested chain, e.g. `2,4`.
    #[arg(long, value_delimiter = ',')]
    pub chain: Option<Vec<usize>>,

    /// Add the Hamming sphere bound.
    #[arg(long)]
    pub spheres: bool,
}

fn parse_kind(s: &str) -> Result<ActionKind, String> {
    s.parse().map_err(|e: orbitcount::Error| e.to_string())
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Bound identifiers accepted by `--thm`.
#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Theorem {
    /// Invariant (multi)sets of a single permutation.
    #[value(name = "2.1")]
    PerElement,
    /// Passive pairs from the support histogram.
    #[value(name = "3.1")]
    Profile,
    /// Passive pairs from the minimal degree.
    #[value(name = "3.2")]
    MinDegree,
    /// Passive pairs, split at the minimal-degree sphere.
    #[value(name = "3.3")]
    Split,
    /// Stabilizer excess from order and minimal degree.
    #[value(name = "4.1")]
    Stabilizer,
    /// Stabilizer excess from a chain of Hamming balls.
    #[value(name = "4.3")]
    Chain,
    /// Stabilizer excess from the Hamming sphere profile.
    #[value(name = "4.4")]
    Spheres,
    /// Stabilizer excess for affine and linear groups.
    #[value(name = "5.1")]
    Affine,
}

impl Theorem {
    pub fn id(self) -> &'static str {
        match self {
            Theorem::PerElement => "2.1",
            Theorem::Profile => "3.1",
            Theorem::MinDegree => "3.2",
            Theorem::Split => "3.3",
            Theorem::Stabilizer => "4.1",
            Theorem::Chain => "4.3",
            Theorem::Spheres => "4.4",
            Theorem::Affine => "5.1",
        }
    }
}

/// Inclusive range of sizes `from..=to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeRange {
    pub from: usize,
    pub to: usize,
}

impl SizeRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.from..=self.to
    }
}

impl fmt::Display for SizeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.from, self.to)
    }
}

impl FromStr for SizeRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid size {t:?} in range {s:?}"))
        };
        let (from, to) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let m = num(s)?;
                (m, m)
            }
        };
        if from > to {
            return Err(format!("empty range {s:?}"));
        }
        Ok(SizeRange { from, to })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("0..6".parse::<SizeRange>(), Ok(SizeRange { from: 0, to: 6 }));
        assert_eq!("3".parse::<SizeRange>(), Ok(SizeRange { from: 3, to: 3 }));
        assert_eq!("2..=4".parse::<SizeRange>(), Ok(SizeRange { from: 2, to: 4 }));
        assert!("5..2".parse::<SizeRange>().is_err());
        assert!("a..2".parse::<SizeRange>().is_err());
    }

    #[test]
    fn parses_bounds_flags() {
        let cli = Cli::try_parse_from([
            "orbitcount", "bounds", "S:5^2", "--m", "1..9", "--thm", "4.1,3.2", "--chain", "2,4", "--spheres",
        ])
        .unwrap();
        let Command::Bounds { common, selection, oracle } = cli.command else { panic!() };
        assert_eq!(common.m, SizeRange { from: 1, to: 9 });
        assert_eq!(selection.theorems, vec![Theorem::Stabilizer, Theorem::MinDegree]);
        assert_eq!(selection.chain, Some(vec![2, 4]));
        assert!(selection.spheres && !oracle);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Cli::try_parse_from(["orbitcount", "count", "Q:5", "--m", "1"]).is_err());
        assert!(Cli::try_parse_from(["orbitcount", "count", "S:5", "--m", "1", "--kind", "lists"]).is_err());
        assert!(Cli::try_parse_from(["orbitcount", "bounds", "S:5", "--m", "1", "--thm", "9.9"]).is_err());
    }
}
