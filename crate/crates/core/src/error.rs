use alloc::string::String;

/// Errors raised while reading cycle notation or construction specs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed input at byte {position}: {message}")]
    Malformed { position: usize, message: String },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("point {point} exceeds degree {degree}")]
    PointExceedsDegree { point: usize, degree: usize },
    #[error("points are numbered from 1")]
    ZeroPoint,
    #[error("unknown construction `{0}`")]
    UnknownConstruction(String),
    #[error("invalid parameter for `{name}`: {message}")]
    BadParameter { name: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a group needs at least one generator")]
    EmptyGenerators,
    #[error("group of order {order} exceeds the enumeration cap of {cap} elements")]
    CapExceeded { order: u128, cap: usize },
    #[error("group order does not fit in 128 bits")]
    OrderOverflow,
    #[error("permutation moves point {point}, beyond the group degree {degree}")]
    DegreeMismatch { point: usize, degree: usize },
    #[error("element {0} is not in the group")]
    NotMember(String),
    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,
    #[error("group is not metabelian (derived length {0:?})")]
    NotMetabelian(Option<usize>),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("commutator weight must be positive")]
    ZeroWeight,
}
