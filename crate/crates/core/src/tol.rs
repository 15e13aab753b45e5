//! Numerical tolerances shared across modules.

/// Allowed `|det G − 1|` for a group element, relative to the rounding scale
/// `max(1, |e00·e11| + |e01·e10|)` of the determinant evaluation.
pub const DETERMINANT: f64 = 1e-12;

/// Hermiticity violation accepted by `matrix_to_four_vector`, relative to
/// `max(1, max |entry|)`.
pub const HERMITICITY: f64 = 1e-10;

/// Relative scale for the massive/massless/spacelike split.
pub const CLASSIFY: f64 = 1e-10;

/// Hermiticity and positivity slack for coherency matrices, relative to the trace.
pub const COHERENCY: f64 = 1e-12;

/// Physicality slack for Stokes vectors, relative to `S0²`.
pub const STOKES_PHYSICAL: f64 = 1e-9;

/// Default CLI residual tolerance when neither `--tolerance` nor
/// `POINCARE_KIT_TOL` is given.
pub const CLI_DEFAULT: f64 = 1e-9;
