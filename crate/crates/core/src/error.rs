use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),
    #[error("matrix is not Hermitian (violation {violation:e})")]
    Hermiticity { violation: f64 },
    #[error("determinant drifted from 1 by {drift:e}")]
    DeterminantDrift { drift: f64 },
    #[error("four-momentum has non-positive energy t = {energy}")]
    NonPositiveEnergy { energy: f64 },
    #[error("spacelike four-vector (m² = {mass_squared}) has no standard form")]
    SpacelikeUnsupported { mass_squared: f64 },
    #[error("little-group kind {kind} is not available for a {class} momentum")]
    KindMismatch {
        kind: &'static str,
        class: &'static str,
    },
    #[error("decoherence parameter must be non-negative, got {0}")]
    NegativeSigma(f64),
    #[error("negative amplitude {0}")]
    NegativeAmplitude(f64),
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("invalid coherency matrix: {0}")]
    InvalidCoherency(String),
    #[error("zero intensity in channel {0}")]
    ZeroIntensity(usize),
    #[error("unphysical Stokes vector: S0² − |S|² = {excess:e}")]
    Unphysical { excess: f64 },
    #[error("{what} = {value} is outside {range}")]
    Domain {
        what: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("zero momentum: decoherence parameter is unbounded")]
    ZeroMomentum,
    #[error("sigma = {sigma} exceeds the achievable bound {bound} for these m, p")]
    OutOfRange { sigma: f64, bound: f64 },
    #[error("samples file row {row}: {msg}")]
    SampleFormat { row: usize, msg: String },
}
