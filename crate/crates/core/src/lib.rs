//! Exact orbit counting for permutation groups acting on `m`-subsets and
//! `m`-multisets, with log-domain evaluation of upper bounds on the average
//! stabilizer size.

pub mod bounds;
pub mod catalog;
pub mod classes;
pub mod error;
pub mod group;
pub mod invariant;
pub mod numeric;
pub mod oracle;
pub mod orbit;
pub mod perm;
pub mod series;

pub use error::{Error, Result};
pub use group::{CycleIndex, FiniteGroup};
pub use orbit::{ActionKind, FixedDegreePolynomial, OrbitSummary};
pub use perm::{CycleType, Permutation};
pub use series::TruncatedIntSeries;
