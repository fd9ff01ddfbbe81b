use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty permutation")]
    Empty,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("value {0} appears more than once")]
    RepeatedValue(i64),
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: i64, n: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("transposition ({i} {j}) out of range for n = {n}")]
    TranspositionOutOfRange { i: usize, j: usize, n: usize },
    #[error("transposition needs two distinct positive positions, got ({0} {1})")]
    DegenerateTransposition(usize, usize),
    #[error("requires w({i}) < w({j}), got w({i}) = {wi}, w({j}) = {wj}")]
    NotAnAscent {
        i: usize,
        j: usize,
        wi: usize,
        wj: usize,
    },
    #[error("{what} = {value} exceeds the cap of {cap}")]
    OverCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("{what} = {value} is below the minimum of {min}")]
    UnderMin {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("element is not a reflection of the group")]
    NotAReflection,
    #[error("element does not belong to the group")]
    ForeignElement,
    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),
    #[error("operation not supported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
