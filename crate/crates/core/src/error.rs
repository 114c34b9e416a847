use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be non-empty and square")]
    NonSquare,

    #[error("matrix is not Hermitian (asymmetry {asymmetry:e} exceeds allowance {allowed:e})")]
    NotHermitian { asymmetry: f64, allowed: f64 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("non-finite matrix entry")]
    NonFinite,

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// An exponential argument above the overflow threshold.
    #[error("exponential overflow: argument {argument} exceeds {threshold}")]
    Overflow { argument: f64, threshold: f64 },

    #[error("exponent p = {0} must satisfy p >= 1")]
    BadExponent(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("C_p closed form {closed} and quadrature {quadrature} disagree")]
    QuadratureMismatch { closed: f64, quadrature: f64 },

    #[error("quadrature failed to reach tolerance")]
    QuadratureDiverged,

    #[error("sigma must be positive and finite, got {0}")]
    BadSigma(f64),

    #[error("bound M must be positive and finite, got {0}")]
    BadBound(f64),

    #[error("constant C must be positive and finite, got {0}")]
    BadConstant(f64),

    #[error("threshold t must be non-negative and finite, got {0}")]
    BadThreshold(f64),

    #[error("invalid dimension {0}")]
    BadDimension(usize),

    #[error("invalid count {0}")]
    BadCount(u64),

    #[error("{n} terms exceed the enumeration cap of {cap}")]
    TooManyTerms { n: usize, cap: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("vector length {found} does not match {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("degenerate Gaussian draw repeated {0} times")]
    DegenerateDraw(usize),

    #[error("at least two trials are required, got {0}")]
    TooFewTrials(usize),
}
