use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    ParseRational(String),
    #[error("chain {0:?} has a weight above -2")]
    ChainNotAdmissible(Vec<i64>),
    #[error("invalid box label {e}/{m}")]
    BadLabel { e: i64, m: i64 },
    #[error("blowdown of vertex {0} would create a cycle")]
    NonSncContraction(usize),
    #[error("graph is not a fiber: it does not contract to a single 0-vertex")]
    NotAFiber,
    #[error("zigzag {0:?} is not standard")]
    NotStandard(Vec<i64>),
    #[error("invalid graph: {0}")]
    BadGraph(String),
    #[error("duplicate point {0} in divisor")]
    DuplicatePoint(String),
    #[error("D+ + D- is positive at {0}")]
    PositiveSum(String),
    #[error("D+ + D- vanishes identically; the surface is not Gizatullin")]
    DegenerateSum,
    #[error("fractional parts are supported at more than one point each")]
    NotGizatullin,
    #[error("surface is toric; use the toric invariants instead")]
    ToricInput,
    #[error("invalid toric type ({d},{e})")]
    BadToricType { d: i64, e: i64 },
    #[error("invalid parameters: {0}")]
    BadParameters(String),
    #[error("polynomial has no roots")]
    EmptyPolynomial,
    #[error("integer overflow")]
    Overflow,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
