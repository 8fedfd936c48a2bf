//! Constructors for concrete permutation groups: the classical families on
//! points, `S_n` on `ℓ`-subsets, and the linear and affine groups of
//! `F_q^d`. Also a small textual group specification used by the CLI.

mod classical;
mod domain;
mod field;
mod linear;

pub use classical::{
    alternating_cycle_index, alternating_generators, alternating_order, cyclic_generators, dihedral_generators,
    induced_on_ksubsets, induced_symmetric_cycle_index, make_alternating, make_cyclic, make_dihedral,
    make_symmetric, symmetric_generators, KSubsets,
};
pub use domain::LabeledDomain;
pub use field::{FiniteField, SUPPORTED_ORDERS};
pub use linear::{
    general_linear_order, make_agl, make_agl_with_cap, make_gl, make_gl_with_cap, Matrix, VectorSpace,
    MAX_SPACE_SIZE,
};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bounds::affine_group_order;
use crate::classes::symmetric_cycle_index;
use crate::error::{Error, Result};
use crate::group::{factorial, generate_group, CycleIndex, FiniteGroup};
use crate::numeric::binomial;
use crate::perm::{parse_cycle_list, Permutation};

/// A group named by family and parameters, or by explicit generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Symmetric(usize),
    Alternating(usize),
    Cyclic(usize),
    Dihedral(usize),
    /// `S_n` acting on `ℓ`-subsets of `0..n`.
    SymmetricOnSubsets { n: usize, ell: usize },
    GeneralLinear { d: u32, q: u32 },
    Affine { d: u32, q: u32 },
    Generators { n: usize, gens: Vec<Permutation> },
}

/// Limits applied while building a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildCaps {
    /// Maximum number of elements a closure may produce.
    pub elements: usize,
    /// Maximum degree of the permutation domain.
    pub degree: u64,
}

impl Default for BuildCaps {
    fn default() -> Self {
        BuildCaps {
            elements: crate::group::DEFAULT_ELEMENT_CAP,
            degree: MAX_SPACE_SIZE,
        }
    }
}

impl GroupSpec {
    /// Degree of the permutation domain.
    pub fn degree(&self) -> Result<BigUint> {
        Ok(match self {
            GroupSpec::Symmetric(n)
            | GroupSpec::Alternating(n)
            | GroupSpec::Cyclic(n)
            | GroupSpec::Dihedral(n)
            | GroupSpec::Generators { n, .. } => BigUint::from(*n),
            GroupSpec::SymmetricOnSubsets { n, ell } => binomial(*n, *ell),
            GroupSpec::GeneralLinear { d, q } | GroupSpec::Affine { d, q } => num_traits::Pow::pow(BigUint::from(*q), *d),
        })
    }

    /// Group order from a closed form, when one is known without
    /// materializing.
    pub fn closed_order(&self) -> Option<BigUint> {
        match self {
            GroupSpec::Symmetric(n) | GroupSpec::SymmetricOnSubsets { n, .. } => Some(factorial(*n)),
            GroupSpec::Alternating(n) => Some(alternating_order(*n)),
            GroupSpec::Cyclic(n) => Some(BigUint::from(*n)),
            GroupSpec::Dihedral(n) => Some(BigUint::from(2 * n)),
            GroupSpec::GeneralLinear { d, q } => general_linear_order(*d, *q).ok(),
            GroupSpec::Affine { d, q } => affine_group_order(*d, *q).ok(),
            GroupSpec::Generators { .. } => None,
        }
    }

    fn check_degree(&self, caps: &BuildCaps) -> Result<()> {
        let degree = self.degree()?;
        if degree > BigUint::from(caps.degree) {
            return Err(Error::CarrierTooLarge {
                size: degree.to_string(),
                cap: caps.degree,
            });
        }
        Ok(())
    }

    /// Builds the full element list.
    pub fn materialize(&self, caps: &BuildCaps) -> Result<FiniteGroup> {
        self.check_degree(caps)?;
        let cap = caps.elements;
        match self {
            GroupSpec::Symmetric(n) => generate_group(*n, symmetric_generators(*n), cap),
            GroupSpec::Alternating(n) => generate_group(*n, alternating_generators(*n), cap),
            GroupSpec::Cyclic(n) => generate_group(*n, cyclic_generators(*n), cap),
            GroupSpec::Dihedral(n) => {
                if *n < 3 {
                    return Err(Error::InvalidArgument(format!("dihedral group needs degree at least 3, got {n}")));
                }
                generate_group(*n, dihedral_generators(*n), cap)
            }
            GroupSpec::SymmetricOnSubsets { n, ell } => {
                let base = generate_group(*n, symmetric_generators(*n), cap)?;
                induced_on_ksubsets(&base, *ell, caps.degree)
            }
            GroupSpec::GeneralLinear { d, q } => make_gl_with_cap(*d, *q, cap),
            GroupSpec::Affine { d, q } => make_agl_with_cap(*d, *q, cap),
            GroupSpec::Generators { n, gens } => generate_group(*n, gens.clone(), cap),
        }
    }

    /// Cycle index, from conjugacy classes of `S_n` where the group is
    /// built from them, otherwise from the materialized group.
    pub fn cycle_index(&self, caps: &BuildCaps) -> Result<CycleIndex> {
        self.check_degree(caps)?;
        match self {
            GroupSpec::Symmetric(n) => Ok(symmetric_cycle_index(*n)),
            GroupSpec::Alternating(n) => Ok(alternating_cycle_index(*n)),
            GroupSpec::SymmetricOnSubsets { n, ell } => induced_symmetric_cycle_index(*n, *ell, caps.degree),
            _ => Ok(self.materialize(caps)?.cycle_index()),
        }
    }

    /// Point labels of the domain.
    pub fn domain(&self, caps: &BuildCaps) -> Result<LabeledDomain> {
        self.check_degree(caps)?;
        match self {
            GroupSpec::SymmetricOnSubsets { n, ell } => Ok(KSubsets::new(*n, *ell, caps.degree)?.domain()),
            GroupSpec::GeneralLinear { d, q } | GroupSpec::Affine { d, q } => Ok(VectorSpace::new(*d, *q)?.domain()),
            other => {
                let n = usize::try_from(&other.degree()?).expect("checked against the cap");
                Ok(LabeledDomain::natural(n))
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Alternating(n) => write!(f, "A:{n}"),
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::SymmetricOnSubsets { n, ell } => write!(f, "S:{n}^{ell}"),
            GroupSpec::GeneralLinear { d, q } => write!(f, "GL:{d},{q}"),
            GroupSpec::Affine { d, q } => write!(f, "AGL:{d},{q}"),
            GroupSpec::Generators { n, gens } => {
                write!(f, "gens:{n}:")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

fn spec_error(input: &str, reason: impl Into<String>) -> Error {
    Error::GroupSpec {
        input: input.to_string(),
        reason: reason.into(),
    }
}

fn parse_num<T: FromStr>(input: &str, field: &str, what: &str) -> Result<T> {
    field
        .trim()
        .parse()
        .map_err(|_| spec_error(input, format!("{what} must be a nonnegative integer, got {field:?}")))
}

fn parse_generators(input: &str, body: &str) -> Result<GroupSpec> {
    let (declared, list) = match body.split_once(':') {
        Some((n, rest)) if !n.trim().starts_with('(') => (Some(parse_num::<usize>(input, n, "degree")?), rest),
        _ => (None, body),
    };
    let cycle_lists = list
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(parse_cycle_list)
        .collect::<Result<Vec<_>>>()?;
    let inferred = cycle_lists
        .iter()
        .flatten()
        .flatten()
        .map(|&p| p as usize + 1)
        .max()
        .unwrap_or(0);
    let n = match declared {
        Some(n) if n < inferred => {
            return Err(spec_error(input, format!("point {} exceeds the declared degree {n}", inferred - 1)))
        }
        Some(n) => n,
        None if inferred == 0 => return Err(spec_error(input, "cannot infer the degree; use gens:<n>:...")),
        None => inferred,
    };
    let gens = cycle_lists
        .iter()
        .map(|cycles| Permutation::from_cycles(n, cycles))
        .collect::<Result<Vec<_>>>()?;
    Ok(GroupSpec::Generators { n, gens })
}

fn parse_linear(input: &str, body: &str) -> Result<(u32, u32)> {
    let (d, q) = body
        .split_once(',')
        .ok_or_else(|| spec_error(input, "expected <d>,<q>"))?;
    let d = parse_num(input, d, "dimension")?;
    let q = parse_num(input, q, "field order")?;
    if !SUPPORTED_ORDERS.contains(&q) {
        return Err(Error::UnsupportedField { q });
    }
    if d == 0 {
        return Err(spec_error(input, "dimension must be at least 1"));
    }
    Ok((d, q))
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `S:n`, `A:n`, `C:n`, `D:n`, `S:n^ℓ`, `GL:d,q`, `AGL:d,q` and
    /// `gens:[n:]<cycles>;<cycles>;…`.
    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let (family, body) = s
            .split_once(':')
            .ok_or_else(|| spec_error(input, "expected <family>:<parameters>"))?;
        let positive = |v: usize| {
            if v == 0 {
                Err(spec_error(input, "degree must be positive"))
            } else {
                Ok(v)
            }
        };
        match family.trim() {
            "S" => match body.split_once('^') {
                Some((n, ell)) => {
                    let n = positive(parse_num(input, n, "degree")?)?;
                    let ell = parse_num(input, ell, "subset size")?;
                    if ell < 2 || ell >= n {
                        return Err(spec_error(input, "need 2 ≤ ℓ ≤ n − 1"));
                    }
                    Ok(GroupSpec::SymmetricOnSubsets { n, ell })
                }
                None => Ok(GroupSpec::Symmetric(positive(parse_num(input, body, "degree")?)?)),
            },
            "A" => Ok(GroupSpec::Alternating(positive(parse_num(input, body, "degree")?)?)),
            "C" => Ok(GroupSpec::Cyclic(positive(parse_num(input, body, "degree")?)?)),
            "D" => {
                let n = parse_num(input, body, "degree")?;
                if n < 3 {
                    return Err(spec_error(input, "dihedral group needs degree at least 3"));
                }
                Ok(GroupSpec::Dihedral(n))
            }
            "GL" => parse_linear(input, body).map(|(d, q)| GroupSpec::GeneralLinear { d, q }),
            "AGL" => parse_linear(input, body).map(|(d, q)| GroupSpec::Affine { d, q }),
            "gens" => parse_generators(input, body),
            other => Err(spec_error(input, format!("unknown family {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parse_families() {
        assert_eq!(spec("S:5"), GroupSpec::Symmetric(5));
        assert_eq!(spec(" A:4 "), GroupSpec::Alternating(4));
        assert_eq!(spec("C:7"), GroupSpec::Cyclic(7));
        assert_eq!(spec("D:6"), GroupSpec::Dihedral(6));
        assert_eq!(spec("S:6^2"), GroupSpec::SymmetricOnSubsets { n: 6, ell: 2 });
        assert_eq!(spec("GL:2,3"), GroupSpec::GeneralLinear { d: 2, q: 3 });
        assert_eq!(spec("AGL:3,2"), GroupSpec::Affine { d: 3, q: 2 });
    }

    #[test]
    fn parse_generators() {
        let g = spec("gens:(0 1 2);(0 1)");
        let GroupSpec::Generators { n, gens } = &g else { panic!() };
        assert_eq!(*n, 3);
        assert_eq!(gens.len(), 2);
        assert_eq!(g.materialize(&BuildCaps::default()).unwrap().len(), 6);
        let g = spec("gens:6:(0 1)(2 3)");
        assert_eq!(g.degree().unwrap(), BigUint::from(6u32));
        let g = spec("gens:4:");
        assert_eq!(g.materialize(&BuildCaps::default()).unwrap().len(), 1);
        assert_eq!(spec(&g.to_string()), g);
        let g = spec("gens:(0 1 2 3);(1 3)");
        assert_eq!(spec(&g.to_string()), g);
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "S", "S:", "S:x", "S:0", "S:4^1", "S:4^4", "D:2", "GL:2", "GL:2,6", "AGL:0,2", "X:3", "gens:", "gens:2:(0 5)",
            "gens:(0 0)",
        ] {
            assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
        }
        assert!(matches!("GL:2,6".parse::<GroupSpec>(), Err(Error::UnsupportedField { q: 6 })));
    }

    #[test]
    fn display_round_trip() {
        for s in ["S:5", "A:4", "C:7", "D:6", "S:6^2", "GL:2,3", "AGL:3,2"] {
            assert_eq!(spec(s).to_string(), s);
        }
    }

    #[test]
    fn fast_and_materialized_indices_agree() {
        let caps = BuildCaps::default();
        for s in ["S:5", "A:5", "S:5^2", "S:6^3"] {
            let g = spec(s);
            let fast = g.cycle_index(&caps).unwrap();
            let slow = g.materialize(&caps).unwrap().cycle_index();
            assert_eq!(fast, slow, "{s}");
            assert_eq!(fast.size(), g.closed_order().unwrap());
        }
    }

    #[test]
    fn closed_orders_match() {
        let caps = BuildCaps::default();
        for s in ["C:9", "D:7", "GL:2,2", "AGL:2,3", "A:6"] {
            let g = spec(s);
            assert_eq!(g.materialize(&caps).unwrap().order(), g.closed_order().unwrap(), "{s}");
        }
    }

    #[test]
    fn caps_apply() {
        let caps = BuildCaps { elements: 100, degree: 10 };
        assert!(matches!(spec("S:6").materialize(&caps), Err(Error::GroupTooLarge { .. })));
        assert!(spec("S:6").cycle_index(&caps).is_ok());
        assert!(matches!(spec("S:6^2").cycle_index(&caps), Err(Error::CarrierTooLarge { .. })));
        assert!(matches!(spec("AGL:2,4").domain(&caps), Err(Error::CarrierTooLarge { .. })));
    }

    #[test]
    fn domains() {
        let caps = BuildCaps::default();
        assert_eq!(spec("S:4^2").domain(&caps).unwrap().label(0), Some("{0,1}"));
        assert_eq!(spec("AGL:2,2").domain(&caps).unwrap().label(1), Some("(1,0)"));
        assert_eq!(spec("C:3").domain(&caps).unwrap().size(), 3);
    }
}
