use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not a unit: constant term {0}")]
    NotAUnit(String),
    #[error("q-degree {degree} is beyond truncation order {order}")]
    OutOfRange { degree: u32, order: u32 },
    #[error("infinite product with constant-term argument {0}")]
    DivergentProduct(String),
    #[error("the infinity marker cannot be used as a Pochhammer argument here")]
    InfiniteArgument,
    #[error("integrality violated at n = {n}: {detail}")]
    IntegralityViolation { n: i64, detail: String },
    #[error("bad specialization: {0}")]
    BadSpecialization(String),
    #[error("bad relative parameter: {0}")]
    BadRelParam(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("{0} is not a formal identity")]
    NotFormal(String),
    #[error("denominator {factor} vanishes at the primitive {root}-th root of unity")]
    DenominatorVanishes { root: u32, factor: String },
    #[error("twisted function has nonzero mean at root order {root}")]
    SingularExpansion { root: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
