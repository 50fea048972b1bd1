use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A formula with a removable 0/0 at the requested point.
    #[error("degenerate case: {0}")]
    DegenerateCase(String),
    /// `sign * sqrt(radicand)` is not a rational number.
    #[error("not a perfect square: sqrt({0})")]
    NotAPerfectSquare(String),
    /// A paired product inside a sum rule did not collapse to a rational.
    #[error("irrational term at 2j={two_j}, k={k}, 2m={two_m}, 2m'={two_m_prime}")]
    IrrationalTerm {
        two_j: i64,
        k: i64,
        two_m: i64,
        two_m_prime: i64,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
