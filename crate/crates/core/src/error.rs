use crate::number::Rat;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("the denominator polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("degree constraint violated: need deg P >= 1 and deg Q < deg P (got deg P = {p}, deg Q = {q})")]
    DegreeConstraint { p: String, q: String },

    #[error("index {index} out of range (valid: {min}..={max})")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },

    #[error("endpoints must satisfy a < b (got a = {a}, b = {b})")]
    EmptyInterval { a: Box<Rat>, b: Box<Rat> },

    #[error("endpoint {0} is a common root of P and Q")]
    CommonRootEndpoint(Rat),

    #[error("endpoint {0} is a root of P")]
    EndpointIsRootOfP(Rat),

    #[error("{0} is not a root of P")]
    NotARoot(Rat),

    #[error("malformed sign sequence: {0}")]
    MalformedSignSequence(&'static str),

    #[error("chain relation {index} cannot be verified: {reason}")]
    ChainRelation { index: usize, reason: &'static str },

    #[error("syntax error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("zero denominator at offset {offset}")]
    ZeroDenominator { offset: usize },

    #[error("infeasible configuration: {0}")]
    Config(String),
}

impl Error {
    /// True for violated mathematical preconditions, as opposed to malformed input.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::Parse { .. } | Error::ZeroDenominator { .. } | Error::Config(_)
        )
    }

    pub(crate) fn degree(p: Option<usize>, q: Option<usize>) -> Self {
        let show = |d: Option<usize>| d.map_or_else(|| "-inf".to_string(), |d| d.to_string());
        Error::DegreeConstraint {
            p: show(p),
            q: show(q),
        }
    }
}
