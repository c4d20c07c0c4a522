use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Cartan matrix: {0}")]
    MalformedCartan(String),
    #[error("root closure exceeded {cap} roots; the Cartan matrix is not of finite type")]
    NonFiniteType { cap: usize },
    #[error("unknown type label `{0}`")]
    UnknownType(String),
    #[error("generator index {index} out of range 1..={rank}")]
    BadIndex { index: usize, rank: usize },
    #[error("cannot parse element `{0}`")]
    BadSyntax(String),
    #[error("operation requires type A, got {0}")]
    TypeUnsupported(String),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("flag enumeration over F_{p}^{n} needs {predicted} flags, budget is {budget}")]
    BudgetExceeded {
        n: usize,
        p: u32,
        predicted: u64,
        budget: u64,
    },
    #[error("flag dimension {0} outside the supported range 2..=4")]
    DimensionUnsupported(usize),
    #[error("interpolation of degree {degree} needs {needed} distinct points, got {got}")]
    InsufficientPoints {
        degree: usize,
        needed: usize,
        got: usize,
    },
    #[error("interpolated values are not an integer polynomial of degree <= {degree}")]
    NotIntegral { degree: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
