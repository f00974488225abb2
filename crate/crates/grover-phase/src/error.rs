use thiserror::Error;

/// Errors surfaced by the analysis routines.
///
/// Degeneracies are reported rather than papered over: a caller that sees
/// [`Error::SpectralDegenerate`] can fall back to brute-force evolution,
/// while the remaining variants indicate invalid inputs.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("beta = {0} must lie in (0, pi/2]")]
    InvalidBeta(f64),

    #[error("{name} = {value} is not a finite angle")]
    NonFiniteAngle { name: &'static str, value: f64 },

    /// The kernel is a phase times the identity; the rotation angle `w`
    /// and the mixing angle `x` are undefined.
    #[error("spectral decomposition is degenerate: sin(w) = {sin_w:e}")]
    SpectralDegenerate { sin_w: f64 },

    /// The factored form of the normalizer came out negative by more than
    /// rounding can explain, which indicates a bug rather than noise.
    #[error("normalizer l_m = {l_m:e} is negative beyond rounding tolerance")]
    NegativeNormalizer { l_m: f64 },

    /// The stationarity condition degenerates: either its scale factor `b`
    /// vanishes (the success probability is constant in the iteration
    /// count) or the squared-cosine argument leaves [0, 1] by more than
    /// the clamp tolerance.
    #[error("iteration extremum is degenerate: b = {b:e}, cos^2 argument = {ratio}")]
    DegenerateExtremum { b: f64, ratio: f64 },

    #[error("phi = {phi} and theta = {theta} do not satisfy the matching condition")]
    NotMatched { phi: f64, theta: f64 },

    /// Both the phase error and the overlap term vanish, so the estimate
    /// is a 0/0 form.
    #[error("estimate denominator vanishes: delta = 0 and beta*sin(theta/2) = 0")]
    UndefinedRatio,

    #[error("invalid tolerance query: {0}")]
    InvalidToleranceQuery(&'static str),

    #[error("qubit count must be at least 1")]
    ZeroQubits,

    #[error("qubit count {n} exceeds the configured maximum {max}")]
    SizeExceeded { n: u32, max: u32 },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
}
