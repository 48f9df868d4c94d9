use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the library. Variants distinguish invalid input
/// (parsing, dimension mismatches) from computational refusals
/// (degenerate geometry, failed hypotheses), which the CLI maps to
/// different exit codes.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("polynomial has no terms")]
    EmptyPolynomial,
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("dimension {0} is not supported by this operation")]
    UnsupportedDimension(usize),
    #[error("coordinate {index} of the evaluation point is zero but a negative exponent is present")]
    ZeroCoordinate { index: usize },
    #[error("Hadamard exponent must be positive, got {0}")]
    NonPositivePower(f64),
    #[error("Hadamard power drives |a| = {modulus:e} at exponent {exp:?} out of the f64 range")]
    CoefficientRange { exp: Vec<i64>, modulus: f64 },
    #[error("truncation to the cell removed every term")]
    EmptyTruncation,
    #[error("points do not affinely span the ambient space")]
    DegenerateSpan,
    #[error("cell is not a full-dimensional simplex")]
    NotASimplex,
    #[error("the induced subdivision is not a triangulation")]
    NotATriangulation,
    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("polynomial degree is zero after trimming")]
    DegreeZero,
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("exponent {0:?} is not in the support")]
    NotInSupport(Vec<i64>),
    #[error("polynomial must depend on both variables")]
    UnivariateFiber,
    #[error("order of the point is indeterminate on axis {axis}: draws returned {counts:?}")]
    IndeterminateOrder { axis: usize, counts: Vec<i64> },
    #[error("a fiber root lies on the counting circle (log distance {dist:e})")]
    RootOnCircle { dist: f64 },
    #[error("window is empty or inverted")]
    BadWindow,
    #[error("sampling produced no hypersurface points")]
    NoSamples,
    #[error("layers mix log-space and polytope-space ambients")]
    MixedAmbient,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Io(String),
}

impl Error {
    /// True for errors that reject the input itself rather than refuse a
    /// computation on valid input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::EmptyPolynomial
                | Error::DimensionMismatch { .. }
                | Error::InvalidArgument(_)
                | Error::BadWindow
                | Error::Io(_)
        )
    }
}
