use alloc::string::String;

/// Broad classes of failure, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed textual input.
    Parse,
    /// A precondition of the requested operation does not hold.
    Contract,
    /// A numerical procedure failed to reach its guarantee.
    Numeric,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("cannot mix exact and floating-point scalars")]
    MixedMode,
    #[error("operation requires exact scalars")]
    RequiresExact,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
    #[error("periods must be positive, got {0:?}")]
    InvalidPeriods(alloc::vec::Vec<usize>),
    #[error("expected {expected} potential values, found {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("unsupported dimension {0} (only 1 and 2 are supported)")]
    UnsupportedDimension(usize),
    #[error("period mismatch: {left:?} vs {right:?}")]
    PeriodMismatch {
        left: alloc::vec::Vec<usize>,
        right: alloc::vec::Vec<usize>,
    },
    #[error("periods {0} and {1} are not coprime")]
    NonCoprimePeriods(usize, usize),
    #[error("potential is not separable")]
    NonSeparable,
    #[error("interpolated polynomial disagrees with the determinant at the holdout point")]
    InterpolationInconsistent,
    #[error("characteristic polynomial does not have the one-dimensional structure: {0}")]
    MalformedCharPoly(String),
    #[error("Laurent variables must be nonzero")]
    ZeroCoordinate,
    #[error("|z| = {radius} is below the required radius {required}")]
    RadiusTooSmall { radius: f64, required: f64 },
    #[error("eigenvalue labeling is ambiguous at |z| = {radius}; increase the radius")]
    AmbiguousLabel { radius: f64 },
    #[error("eigenvalue computation did not converge")]
    EigenFailure,
    #[error("sample count {0} must be a power of two and at least 1024")]
    InvalidSamples(usize),
    #[error("branch label {label} out of range for period {period}")]
    InvalidLabel { label: usize, period: usize },
    #[error("potentials have different averages")]
    AverageMismatch,
    #[error("potentials are Floquet isospectral, so no branch coefficient differs")]
    FloquetIsospectral,
    #[error("offset must satisfy 0 < |eta| < eps")]
    InvalidOffset,
    #[error("no differing branch coefficient up to order {terms}")]
    NoDifferingCoefficient { terms: usize },
    #[error("no root of the branch difference found in the disk: {0}")]
    NoRootInDisk(String),
    #[error("operation requires periods {expected:?}, found {found:?}")]
    UnsupportedPeriods {
        expected: alloc::vec::Vec<usize>,
        found: alloc::vec::Vec<usize>,
    },
    #[error("lambda0 must equal the potential average")]
    LambdaNotAverage,
    #[error("tolerance required when comparing exact and floating-point polynomials")]
    MissingTolerance,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            InvalidScalar(_) => ErrorClass::Parse,
            InterpolationInconsistent
            | AmbiguousLabel { .. }
            | EigenFailure
            | NoDifferingCoefficient { .. }
            | NoRootInDisk(_) => ErrorClass::Numeric,
            _ => ErrorClass::Contract,
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
