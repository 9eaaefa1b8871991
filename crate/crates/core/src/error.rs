use thiserror::Error;

/// Errors raised by group construction and the algorithms built on it.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("image array is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: u128, cap: usize },
    #[error("element is not a member of the group")]
    NotMember,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("point set is not a union of orbits: {0}")]
    NotAnOrbit(String),
    #[error("group is not transitive")]
    Intransitive,
    #[error("partition is not a block system for the group: {0}")]
    NotBlockSystem(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("group order {order} exceeds the oracle cap {cap}")]
    OracleCap { order: String, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix error: {0}")]
    Matrix(String),
    #[error("complete reducibility not certified: {0}")]
    NotCompletelyReducible(String),
    #[error("undecided after {0} random algebra elements")]
    Undecided(usize),
    #[error("unsupported construction: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
