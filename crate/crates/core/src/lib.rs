//! Lorentz-group numerics in the two-by-two `SL(2,C)` representation, applied
//! to both relativistic kinematics and partially coherent polarization optics.
//!
//! Four-vectors are ordered `(t, z, x, y)` throughout the crate, *not* the
//! more common `(t, x, y, z)`. The boost generator acts along `z`, so keeping
//! `z` next to `t` makes the boost block of every 4×4 matrix the top-left
//! 2×2 corner. Stokes vectors use the matching order `(S0, S3, S1, S2)`.
//!
//! Modules:
//!
//! * [`matrix`]: complex 2×2 matrices.
//! * [`sl2c`]: four-vectors, generators, group elements and the covering map.
//! * [`wigner`]: mass classification, standard forms and little groups.
//! * [`polarization`]: Jones states, coherency matrices and Stokes vectors.
//! * [`desitter`]: two-mass decomposition and the decoherence/mass-angle bridge.
//! * [`cli`]: command implementations behind the `poincare-kit` binary.

pub mod cli;
mod compensated;
pub mod desitter;
mod error;
pub mod matrix;
pub mod polarization;
pub mod sl2c;
pub mod tol;
pub mod wigner;

pub use error::{Error, Result};
pub use matrix::{Complex, ComplexMat2};
pub use sl2c::{FourVector, GeneratorKind, GroupElement, Mat4R};
