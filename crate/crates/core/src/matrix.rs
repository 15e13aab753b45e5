//! Complex 2×2 matrices.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use num_complex::Complex64 as Complex;

use crate::{Error, Result};

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);

/// A 2×2 complex matrix `[[e00, e01], [e10, e11]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat2 {
    pub e00: Complex,
    pub e01: Complex,
    pub e10: Complex,
    pub e11: Complex,
}

impl ComplexMat2 {
    pub const IDENTITY: Self = Self::new(ONE, ZERO, ZERO, ONE);
    pub const ZERO: Self = Self::new(ZERO, ZERO, ZERO, ZERO);

    pub const fn new(e00: Complex, e01: Complex, e10: Complex, e11: Complex) -> Self {
        Self { e00, e01, e10, e11 }
    }

    /// Checked constructor rejecting NaN and infinite entries.
    pub fn try_new(e00: Complex, e01: Complex, e10: Complex, e11: Complex) -> Result<Self> {
        let m = Self::new(e00, e01, e10, e11);
        if m.is_finite() {
            Ok(m)
        } else {
            Err(Error::NonFinite("matrix entry"))
        }
    }

    pub fn from_real(e00: f64, e01: f64, e10: f64, e11: f64) -> Self {
        Self::new(e00.into(), e01.into(), e10.into(), e11.into())
    }

    pub fn diag(d0: Complex, d1: Complex) -> Self {
        Self::new(d0, ZERO, ZERO, d1)
    }

    pub fn entries(&self) -> [Complex; 4] {
        [self.e00, self.e01, self.e10, self.e11]
    }

    pub fn is_finite(&self) -> bool {
        self.entries()
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn det(&self) -> Complex {
        self.e00 * self.e11 - self.e01 * self.e10
    }

    pub fn trace(&self) -> Complex {
        self.e00 + self.e11
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(
            self.e00.conj(),
            self.e10.conj(),
            self.e01.conj(),
            self.e11.conj(),
        )
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::new(
            self.e00.conj(),
            self.e01.conj(),
            self.e10.conj(),
            self.e11.conj(),
        )
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.e00, self.e10, self.e01, self.e11)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.e00 * s, self.e01 * s, self.e10 * s, self.e11 * s)
    }

    /// `self · x · self†`.
    pub fn congruence(&self, x: &Self) -> Self {
        *self * *x * self.adjoint()
    }

    /// Largest entry modulus.
    pub fn max_norm(&self) -> f64 {
        self.entries().iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest deviation from Hermitian symmetry: the off-diagonal mismatch
    /// `|e01 − conj(e10)|` and the imaginary parts of the diagonal.
    pub fn hermiticity_violation(&self) -> f64 {
        (self.e01 - self.e10.conj())
            .norm()
            .max(self.e00.im.abs())
            .max(self.e11.im.abs())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_violation() <= tol
    }

    /// Hermitian part `(M + M†)/2`.
    pub fn hermitian_part(&self) -> Self {
        (*self + self.adjoint()).scale(0.5)
    }

    pub fn apply(&self, v: [Complex; 2]) -> [Complex; 2] {
        [
            self.e00 * v[0] + self.e01 * v[1],
            self.e10 * v[0] + self.e11 * v[1],
        ]
    }

    /// Max-norm distance between two matrices.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }
}

impl Default for ComplexMat2 {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl Mul for ComplexMat2 {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        Self::new(
            self.e00 * r.e00 + self.e01 * r.e10,
            self.e00 * r.e01 + self.e01 * r.e11,
            self.e10 * r.e00 + self.e11 * r.e10,
            self.e10 * r.e01 + self.e11 * r.e11,
        )
    }
}

impl Add for ComplexMat2 {
    type Output = Self;

    fn add(self, r: Self) -> Self {
        Self::new(
            self.e00 + r.e00,
            self.e01 + r.e01,
            self.e10 + r.e10,
            self.e11 + r.e11,
        )
    }
}

impl Sub for ComplexMat2 {
    type Output = Self;

    fn sub(self, r: Self) -> Self {
        Self::new(
            self.e00 - r.e00,
            self.e01 - r.e01,
            self.e10 - r.e10,
            self.e11 - r.e11,
        )
    }
}

impl Neg for ComplexMat2 {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.e00, -self.e01, -self.e10, -self.e11)
    }
}

impl fmt::Display for ComplexMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e00, self.e01, self.e10, self.e11
        )
    }
}
