use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("dense representation needs degree {required}, above the dense limit {limit}")]
    DenseLimitExceeded { required: BigUint, limit: usize },

    #[error("polynomial is not exactly divisible")]
    NotDivisible,

    #[error("reconstructed factor has degree {degree}, above the bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },

    #[error("invalid linear candidate: {0}")]
    InvalidCandidate(String),

    #[error("expected integer coefficients")]
    NonIntegerCoefficient,

    #[error("expected a univariate polynomial")]
    NotUnivariate,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

/// A check that could not be carried out because a dense form was too large.
/// Results that carry these are sound but possibly incomplete.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Untested {
    pub what: String,
    #[serde(serialize_with = "as_decimal")]
    pub required: BigUint,
    pub limit: usize,
}

fn as_decimal<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl Untested {
    /// Converts a dense-limit error into a record; other errors pass through.
    pub fn from_error(what: impl Into<String>, e: Error) -> Result<Self> {
        match e {
            Error::DenseLimitExceeded { required, limit } => Ok(Untested {
                what: what.into(),
                required,
                limit,
            }),
            other => Err(other),
        }
    }
}

impl std::fmt::Display for Untested {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}: needs degree {}, dense limit {}",
            self.what, self.required, self.limit
        )
    }
}
