use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown prime `{0}`")]
    UnknownPrime(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("space has rank zero and no limit points")]
    RankZero,
    #[error("malformed descriptor: {0}")]
    MalformedDescriptor(String),
    #[error("functions live on different spaces")]
    BackendMismatch,
    #[error("radical is not finitely generated: {0}")]
    RadicalNotFinitelyGenerated(String),
    #[error("function is not continuous; no radical factorization exists")]
    NotContinuous,
    #[error("function takes negative values")]
    Negative,
    #[error("function is not lower semicontinuous")]
    NotLowerSemicontinuous,
    #[error("`{0}` is not a maximal prime")]
    NotMaximal(String),
    #[error("ideals belong to different spectra")]
    SpectrumMismatch,
    #[error("set is not a splitting set: {0}")]
    NotSplitting(String),
    #[error("`{0}` is a minimal prime of the ideal")]
    MIsMinimal(String),
    #[error("`{0}` is not in the support of the ideal")]
    NotInSupport(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no declared section lifts the restriction at layer {0}")]
    NoSection(usize),
    #[error("function is not a certified member of the group")]
    MembershipRequired,
    #[error("restriction to this closed set is not supported: {0}")]
    UnsupportedSubspace(String),
    #[error("search budget exhausted before a verdict was reached")]
    BudgetExhausted,
    #[error("term syntax: {0}")]
    TermSyntax(String),
    #[error("model file: {0}")]
    Model(String),
}

pub type Result<T> = std::result::Result<T, Error>;
