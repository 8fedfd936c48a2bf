use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image table is not a bijection of 0..{n}")]
    NotABijection { n: usize },

    #[error("cannot parse cycle notation {input:?}: {reason}")]
    CycleNotation { input: String, reason: String },

    #[error("group too large: closure exceeded the element cap of {cap}")]
    GroupTooLarge { cap: usize },

    #[error("carrier too large: {size} points exceed the carrier cap of {cap}")]
    CarrierTooLarge { size: String, cap: u64 },

    #[error("size {m} out of range for {what}")]
    SizeOutOfRange { m: usize, what: &'static str },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("empty set of permutations")]
    EmptySet,

    #[error("trivial group has no minimal degree")]
    TrivialGroup,

    #[error("out of theorem range: {0}")]
    OutOfTheoremRange(String),

    #[error("malformed chain: {0}")]
    MalformedChain(String),

    #[error("unsupported field order {q}")]
    UnsupportedField { q: u32 },

    #[error("cannot parse group spec {input:?}: {reason}")]
    GroupSpec { input: String, reason: String },
}
