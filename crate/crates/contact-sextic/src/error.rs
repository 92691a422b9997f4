//! Error type shared by the symbolic and numeric layers.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    // polynomial / rational-function layer
    #[error("input has degree 0 in {0}")]
    ZeroDegree(String),
    #[error("leading coefficient in {0} is the zero polynomial")]
    ZeroLeadingCoefficient(String),
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("variable {0} is not bound")]
    UnboundVariable(String),
    #[error("exact division failed: {0}")]
    ExactDivision(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),

    // contact geometry / transformations
    #[error("bracket falls outside the span of the generators")]
    ClosureFailure,
    #[error("degenerate transformation parameters: {0}")]
    DegenerateMap(String),
    #[error("map denominator vanishes identically on the curve")]
    DegenerateDenominator,
    #[error("curve has identically vanishing dx/dt")]
    VerticalCurve,

    // curves
    #[error("point does not lie on the curve")]
    NotOnCurve,
    #[error("singular branch: df/dy vanishes at the point")]
    SingularBranch,
    #[error("singular locus is not zero-dimensional")]
    NonZeroDimensional,

    // families
    #[error("quartic is inadmissible: {0}")]
    InadmissibleQuartic(String),
    #[error("leading y^3 coefficient degenerates")]
    DegenerateLeading,
    #[error("degenerate conic: {0}")]
    DegenerateConic(String),

    // numerics
    #[error("singular jet: |y'''| below the singularity guard")]
    SingularJet,
    #[error("step limit exceeded during integration")]
    StepLimitExceeded,
    #[error("singular Jacobian in Newton iteration")]
    SingularJacobian,
    #[error("Newton iteration did not converge within the iteration limit")]
    MaxIterations,
    #[error("no usable real branch at the requested point")]
    BranchSelectionFailure,
    #[error("coincident points in cross-ratio")]
    CoincidentPoints,

    // io
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
