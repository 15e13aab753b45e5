//! Four-vectors as Hermitian matrices and the `SL(2,C)` action on them.
//!
//! A four-vector `(t, z, x, y)` is carried by
//!
//! ```text
//! X = [[t + z, x − iy],
//!      [x + iy, t − z]]      det X = t² − z² − x² − y²
//! ```
//!
//! and a unit-determinant `G` acts by `X' = G X G†`. Every such `G` is
//! produced by composing three one-parameter generators:
//!
//! | kind    | matrix                                  | 4×4 action            |
//! |---------|-----------------------------------------|-----------------------|
//! | PhaseZ  | `diag(e^{−iφ/2}, e^{iφ/2})`             | rotation about z by φ |
//! | RotY    | `[[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]]` | rotation about y, z toward x |
//! | BoostZ  | `diag(e^{μ/2}, e^{−μ/2})`               | boost along z, rapidity μ |

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::compensated::Acc;
use crate::matrix::{Complex, ComplexMat2, ONE};
use crate::{tol, Error, Result};

/// A real four-vector in `(t, z, x, y)` order, `c = 1`.
///
/// Also used for four-momenta `(E, p_z, p_x, p_y)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FourVector {
    pub t: f64,
    pub z: f64,
    pub x: f64,
    pub y: f64,
}

impl FourVector {
    pub const fn new(t: f64, z: f64, x: f64, y: f64) -> Self {
        Self { t, z, x, y }
    }

    pub const fn basis(i: usize) -> Self {
        match i {
            0 => Self::new(1.0, 0.0, 0.0, 0.0),
            1 => Self::new(0.0, 1.0, 0.0, 0.0),
            2 => Self::new(0.0, 0.0, 1.0, 0.0),
            _ => Self::new(0.0, 0.0, 0.0, 1.0),
        }
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.z, self.x, self.y]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|c| c.is_finite())
    }

    /// Minkowski interval `t² − z² − x² − y²`, summed in double-word
    /// arithmetic so near-null vectors keep their relative accuracy.
    pub fn interval(&self) -> f64 {
        let mut acc = Acc::default();
        acc.add_prod(self.t, self.t);
        acc.add_prod(-self.z, self.z);
        acc.add_prod(-self.x, self.x);
        acc.add_prod(-self.y, self.y);
        acc.value()
    }

    /// Squared length of the spatial part.
    pub fn spatial_norm_sq(&self) -> f64 {
        self.z * self.z + self.x * self.x + self.y * self.y
    }

    pub fn to_matrix(&self) -> Result<ComplexMat2> {
        if !self.is_finite() {
            return Err(Error::NonFinite("four-vector component"));
        }
        Ok(self.to_matrix_unchecked())
    }

    fn to_matrix_unchecked(self) -> ComplexMat2 {
        ComplexMat2::new(
            Complex::new(self.t + self.z, 0.0),
            Complex::new(self.x, -self.y),
            Complex::new(self.x, self.y),
            Complex::new(self.t - self.z, 0.0),
        )
    }

    /// Inverse of [`FourVector::to_matrix`].
    ///
    /// Fails if the anti-Hermitian part exceeds `1e-10 · max(1, ‖h‖_max)`;
    /// anything below that is discarded.
    pub fn from_hermitian(h: &ComplexMat2) -> Result<Self> {
        if !h.is_finite() {
            return Err(Error::NonFinite("matrix entry"));
        }
        let violation = h.hermiticity_violation();
        if violation > tol::HERMITICITY * h.max_norm().max(1.0) {
            return Err(Error::Hermiticity { violation });
        }
        Ok(Self::from_hermitian_part(h))
    }

    fn from_hermitian_part(h: &ComplexMat2) -> Self {
        let off = (h.e10 + h.e01.conj()) * 0.5;
        Self::new(
            (h.e00.re + h.e11.re) / 2.0,
            (h.e00.re - h.e11.re) / 2.0,
            off.re,
            off.im,
        )
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().map(|c| c.abs()).fold(0.0, f64::max)
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(t={}, z={}, x={}, y={})",
            self.t, self.z, self.x, self.y
        )
    }
}

/// Real 4×4 matrix acting on column vectors `(t, z, x, y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4R(pub [[f64; 4]; 4]);

impl Mat4R {
    pub const IDENTITY: Self = Self([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    /// Minkowski metric `diag(1, −1, −1, −1)`.
    pub const METRIC: Self = Self([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
    ]);

    pub fn apply(&self, v: &FourVector) -> FourVector {
        let a = v.to_array();
        let row = |r: &[f64; 4]| r.iter().zip(a).map(|(m, x)| m * x).sum::<f64>();
        FourVector::new(
            row(&self.0[0]),
            row(&self.0[1]),
            row(&self.0[2]),
            row(&self.0[3]),
        )
    }

    pub fn transpose(&self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in self.0.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        Self(out)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `‖Λᵀ η Λ − η‖_max`.
    pub fn metric_residual(&self) -> f64 {
        (self.transpose() * Self::METRIC * *self).max_abs_diff(&Self::METRIC)
    }

    /// Row-major flat copy.
    pub fn to_row_major(&self) -> [f64; 16] {
        let mut out = [0.0; 16];
        for (i, v) in self.0.iter().flatten().enumerate() {
            out[i] = *v;
        }
        out
    }
}

impl Mul for Mat4R {
    type Output = Self;

    fn mul(self, r: Self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).map(|k| self.0[i][k] * r.0[k][j]).sum();
            }
        }
        Self(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// `Z(φ)`: phase shift / rotation about z.
    PhaseZ,
    /// `R(θ)`: rotation about y.
    RotY,
    /// `B(μ)`: squeeze / boost along z.
    BoostZ,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::PhaseZ => "phase",
            Self::RotY => "rot",
            Self::BoostZ => "boost",
        }
    }

    pub fn matrix(self, param: f64) -> ComplexMat2 {
        let h = param / 2.0;
        match self {
            Self::PhaseZ => {
                ComplexMat2::diag(Complex::from_polar(1.0, -h), Complex::from_polar(1.0, h))
            }
            Self::RotY => {
                let (s, c) = h.sin_cos();
                ComplexMat2::from_real(c, -s, s, c)
            }
            Self::BoostZ => ComplexMat2::from_real(h.exp(), 0.0, 0.0, (-h).exp()),
        }
    }
}

/// One factor of a recorded generator decomposition.
pub type Factor = (GeneratorKind, f64);

/// A unit-determinant 2×2 complex matrix.
///
/// `provenance` lists the generator factors left to right (so the matrix is
/// their ordered product) when every factor is known.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    mat: ComplexMat2,
    provenance: Option<Vec<Factor>>,
}

fn check_determinant(m: &ComplexMat2) -> Result<()> {
    let drift = (m.det() - ONE).norm();
    let scale = ((m.e00 * m.e11).norm() + (m.e01 * m.e10).norm()).max(1.0);
    if drift.is_nan() || drift > tol::DETERMINANT * scale {
        return Err(Error::DeterminantDrift { drift });
    }
    Ok(())
}

impl GroupElement {
    /// Wraps a matrix, rejecting it unless `det = 1` within tolerance.
    pub fn new(mat: ComplexMat2) -> Result<Self> {
        if !mat.is_finite() {
            return Err(Error::NonFinite("matrix entry"));
        }
        check_determinant(&mat)?;
        Ok(Self {
            mat,
            provenance: None,
        })
    }

    pub fn identity() -> Self {
        Self {
            mat: ComplexMat2::IDENTITY,
            provenance: Some(Vec::new()),
        }
    }

    pub fn generator(kind: GeneratorKind, param: f64) -> Result<Self> {
        if !param.is_finite() {
            return Err(Error::NonFinite("generator parameter"));
        }
        let mat = kind.matrix(param);
        if !mat.is_finite() {
            return Err(Error::NonFinite("generator overflow"));
        }
        Ok(Self {
            mat,
            provenance: Some(vec![(kind, param)]),
        })
    }

    pub fn phase_z(phi: f64) -> Result<Self> {
        Self::generator(GeneratorKind::PhaseZ, phi)
    }

    pub fn rot_y(theta: f64) -> Result<Self> {
        Self::generator(GeneratorKind::RotY, theta)
    }

    pub fn boost_z(mu: f64) -> Result<Self> {
        Self::generator(GeneratorKind::BoostZ, mu)
    }

    /// Builds `G = G₁·G₂·…` from a factor list.
    pub fn from_factors(factors: &[Factor]) -> Result<Self> {
        factors.iter().try_fold(Self::identity(), |acc, &(k, p)| {
            acc.compose(&Self::generator(k, p)?)
        })
    }

    pub fn matrix(&self) -> &ComplexMat2 {
        &self.mat
    }

    pub fn provenance(&self) -> Option<&[Factor]> {
        self.provenance.as_deref()
    }

    /// `self · other`. Fails rather than renormalizing if the product's
    /// determinant has drifted.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let mat = self.mat * other.mat;
        if !mat.is_finite() {
            return Err(Error::NonFinite("composition overflow"));
        }
        check_determinant(&mat)?;
        let provenance = match (&self.provenance, &other.provenance) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(Self { mat, provenance })
    }

    /// `−G`, the other preimage of the same Lorentz transformation.
    pub fn negate(&self) -> Self {
        Self {
            mat: -self.mat,
            provenance: None,
        }
    }

    /// Exact inverse `[[d, −b], [−c, a]]`.
    pub fn inverse(&self) -> Self {
        let m = &self.mat;
        let provenance = self
            .provenance
            .as_ref()
            .map(|f| f.iter().rev().map(|&(k, p)| (k, -p)).collect());
        Self {
            mat: ComplexMat2::new(m.e11, -m.e01, -m.e10, m.e00),
            provenance,
        }
    }

    /// `‖G G† − I‖_max`.
    pub fn unitarity_residual(&self) -> f64 {
        (self.mat * self.mat.adjoint()).distance(&ComplexMat2::IDENTITY)
    }

    /// Lorentz action `X' = G X G†` on a four-vector.
    ///
    /// Only the lower triangle of `X'` is evaluated, so the result is
    /// Hermitian by construction. Each entry is a compensated sum of the
    /// sixteen real triple products `G_ik X_kl conj(G_jl)`, with the `t` and
    /// `z` parts of the diagonal of `X` kept as separate terms.
    pub fn act(&self, v: &FourVector) -> Result<FourVector> {
        if !v.is_finite() {
            return Err(Error::NonFinite("four-vector component"));
        }
        let out = congruence(&self.mat, v);
        if !out.is_finite() {
            return Err(Error::NonFinite("action overflow"));
        }
        Ok(out)
    }

    /// The 4×4 Lorentz matrix `Λ(G)`, assembled column by column from the
    /// action on the basis four-vectors.
    pub fn covering_map(&self) -> Mat4R {
        let mut out = [[0.0; 4]; 4];
        for j in 0..4 {
            let col = congruence(&self.mat, &FourVector::basis(j)).to_array();
            for (i, row) in out.iter_mut().enumerate() {
                row[j] = col[i];
            }
        }
        Mat4R(out)
    }
}

/// Accumulates `a · m · conj(b)` for complex `a`, `b` and complex `m` into
/// `(re, im)`.
fn add_triple(re: &mut Acc, im: &mut Acc, a: Complex, m: Complex, b: Complex) {
    let b = b.conj();
    // (a·m)·b expanded into real triple products
    re.add_prod3(a.re, m.re, b.re);
    re.add_prod3(-a.im, m.im, b.re);
    re.add_prod3(-a.re, m.im, b.im);
    re.add_prod3(-a.im, m.re, b.im);
    im.add_prod3(a.re, m.re, b.im);
    im.add_prod3(-a.im, m.im, b.im);
    im.add_prod3(a.re, m.im, b.re);
    im.add_prod3(a.im, m.re, b.re);
}

fn congruence(g: &ComplexMat2, v: &FourVector) -> FourVector {
    let rows = [[g.e00, g.e01], [g.e10, g.e11]];
    let q = Complex::new(v.x, v.y);
    // X as a sum of (k, l, value) terms with exact values
    let terms = [
        (0, 0, Complex::new(v.t, 0.0)),
        (0, 0, Complex::new(v.z, 0.0)),
        (1, 1, Complex::new(v.t, 0.0)),
        (1, 1, Complex::new(-v.z, 0.0)),
        (0, 1, q.conj()),
        (1, 0, q),
    ];
    let entry = |i: usize, j: usize| {
        let (mut re, mut im) = (Acc::default(), Acc::default());
        for &(k, l, m) in &terms {
            add_triple(&mut re, &mut im, rows[i][k], m, rows[j][l]);
        }
        (re, im)
    };
    let (d0, _) = entry(0, 0);
    let (d1, _) = entry(1, 1);
    let (ore, oim) = entry(1, 0);
    FourVector::new(
        d0.combine(&d1, 1.0, 0.5),
        d0.combine(&d1, -1.0, 0.5),
        ore.value(),
        oim.value(),
    )
}

impl Default for GroupElement {
    fn default() -> Self {
        Self::identity()
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mat)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, LN_2, PI};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn four_vector_matrix_examples() {
        assert_eq!(
            FourVector::new(1.0, 0.0, 0.0, 0.0).to_matrix().unwrap(),
            ComplexMat2::IDENTITY
        );
        assert_eq!(
            FourVector::new(0.0, 0.0, 0.0, 1.0).to_matrix().unwrap(),
            ComplexMat2::new(c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0))
        );
        let v = FourVector::new(5.0, 3.0, 0.0, 4.0);
        let m = v.to_matrix().unwrap();
        assert_eq!(
            m,
            ComplexMat2::new(c(8.0, 0.0), c(0.0, -4.0), c(0.0, 4.0), c(2.0, 0.0))
        );
        assert_eq!(m.det(), c(0.0, 0.0));
        assert_eq!(v.interval(), 25.0 - 9.0 - 16.0);
    }

    #[test]
    fn to_matrix_rejects_nan() {
        assert!(matches!(
            FourVector::new(f64::NAN, 0.0, 0.0, 0.0).to_matrix(),
            Err(Error::NonFinite(_))
        ));
    }

    #[test]
    fn from_hermitian_examples() {
        assert_eq!(
            FourVector::from_hermitian(&ComplexMat2::IDENTITY).unwrap(),
            FourVector::new(1.0, 0.0, 0.0, 0.0)
        );
        assert_eq!(
            FourVector::from_hermitian(&ComplexMat2::from_real(2.0, 0.0, 0.0, 0.0)).unwrap(),
            FourVector::new(1.0, 1.0, 0.0, 0.0)
        );
        let m = ComplexMat2::new(c(8.0, 0.0), c(0.0, -4.0), c(0.0, 4.0), c(2.0, 0.0));
        assert_eq!(
            FourVector::from_hermitian(&m).unwrap(),
            FourVector::new(5.0, 3.0, 0.0, 4.0)
        );
    }

    #[test]
    fn from_hermitian_reports_violation() {
        let m = ComplexMat2::new(c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        match FourVector::from_hermitian(&m) {
            Err(Error::Hermiticity { violation }) => assert!(close(violation, 0.5, 1e-15)),
            other => panic!("unexpected {other:?}"),
        }
        // below tolerance: anti-Hermitian part dropped
        let m = ComplexMat2::new(c(1.0, 1e-13), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0));
        assert_eq!(
            FourVector::from_hermitian(&m).unwrap(),
            FourVector::new(1.0, 0.0, 0.0, 0.0)
        );
    }

    #[test]
    fn generator_examples() {
        assert_eq!(
            *GroupElement::phase_z(0.0).unwrap().matrix(),
            ComplexMat2::IDENTITY
        );
        let b = GroupElement::boost_z(2.0 * LN_2).unwrap();
        assert!(
            b.matrix()
                .distance(&ComplexMat2::from_real(2.0, 0.0, 0.0, 0.5))
                < 1e-15
        );
        let r = GroupElement::rot_y(PI).unwrap();
        assert!(
            r.matrix()
                .distance(&ComplexMat2::from_real(0.0, -1.0, 1.0, 0.0))
                < 1e-15
        );
        for kind in [
            GeneratorKind::PhaseZ,
            GeneratorKind::RotY,
            GeneratorKind::BoostZ,
        ] {
            let g = GroupElement::generator(kind, 0.73).unwrap();
            assert!((g.matrix().det() - ONE).norm() < 1e-15);
        }
        assert!(GroupElement::rot_y(0.4).unwrap().unitarity_residual() < 1e-15);
        assert!(GroupElement::phase_z(0.4).unwrap().unitarity_residual() < 1e-15);
        assert!(GroupElement::boost_z(f64::INFINITY).is_err());
    }

    #[test]
    fn compose_examples() {
        let id = GroupElement::phase_z(0.9)
            .unwrap()
            .compose(&GroupElement::phase_z(-0.9).unwrap())
            .unwrap();
        assert!(id.matrix().distance(&ComplexMat2::IDENTITY) < 1e-15);

        let bb = GroupElement::boost_z(0.3)
            .unwrap()
            .compose(&GroupElement::boost_z(0.5).unwrap())
            .unwrap();
        assert!(
            bb.matrix()
                .distance(GroupElement::boost_z(0.8).unwrap().matrix())
                < 1e-15
        );
        assert_eq!(
            bb.provenance().unwrap(),
            &[(GeneratorKind::BoostZ, 0.3), (GeneratorKind::BoostZ, 0.5)]
        );

        // R(π/2)·Z(π/2), multiplied out by hand:
        // [[h e^{−iπ/4}, −h e^{iπ/4}], [h e^{−iπ/4}, h e^{iπ/4}]], h = √2/2
        let rz = GroupElement::rot_y(FRAC_PI_2)
            .unwrap()
            .compose(&GroupElement::phase_z(FRAC_PI_2).unwrap())
            .unwrap();
        let h = FRAC_1_SQRT_2;
        let em = Complex::from_polar(h, -FRAC_PI_4);
        let ep = Complex::from_polar(h, FRAC_PI_4);
        let expected = ComplexMat2::new(em, -ep, em, ep);
        assert!(rz.matrix().distance(&expected) < 1e-15);
        // e^{∓iπ/4}·√2/2 = (1 ∓ i)/2
        assert!((em - c(0.5, -0.5)).norm() < 1e-15);
    }

    #[test]
    fn compose_detects_drift() {
        let bad = GroupElement {
            mat: ComplexMat2::from_real(1.0, 1e-6, 0.0, 1.0),
            provenance: None,
        };
        assert!(bad.compose(&GroupElement::identity()).is_ok());
        let bad = GroupElement {
            mat: ComplexMat2::from_real(1.0 + 1e-9, 0.0, 0.0, 1.0),
            provenance: None,
        };
        assert!(matches!(
            bad.compose(&GroupElement::identity()),
            Err(Error::DeterminantDrift { .. })
        ));
        assert!(GroupElement::new(ComplexMat2::from_real(2.0, 0.0, 0.0, 2.0)).is_err());
    }

    #[test]
    fn act_examples() {
        let v = FourVector::new(1.5, -2.0, 0.25, 7.0);
        assert_eq!(GroupElement::identity().act(&v).unwrap(), v);

        // B(μ) diag(1,1) B† = diag(e^μ, e^{−μ}) → (cosh μ, sinh μ, 0, 0)
        let rest = FourVector::new(1.0, 0.0, 0.0, 0.0);
        let out = GroupElement::boost_z(LN_2).unwrap().act(&rest).unwrap();
        assert!(out.max_abs_diff(&FourVector::new(1.25, 0.75, 0.0, 0.0)) < 1e-15);
        let out = GroupElement::boost_z(4f64.ln())
            .unwrap()
            .act(&rest)
            .unwrap();
        assert!(out.max_abs_diff(&FourVector::new(2.125, 1.875, 0.0, 0.0)) < 1e-15);

        // positive RotY takes z toward x
        let out = GroupElement::rot_y(FRAC_PI_2)
            .unwrap()
            .act(&FourVector::basis(1))
            .unwrap();
        assert!(out.max_abs_diff(&FourVector::basis(2)) < 1e-15);
        // positive PhaseZ takes x toward y
        let out = GroupElement::phase_z(FRAC_PI_2)
            .unwrap()
            .act(&FourVector::basis(2))
            .unwrap();
        assert!(out.max_abs_diff(&FourVector::basis(3)) < 1e-15);
    }

    #[test]
    fn covering_map_examples() {
        assert_eq!(GroupElement::identity().covering_map(), Mat4R::IDENTITY);
        assert_eq!(
            GroupElement::identity().negate().covering_map(),
            Mat4R::IDENTITY
        );

        let mu = 0.7_f64;
        let (ch, sh) = (mu.cosh(), mu.sinh());
        let expected = Mat4R([
            [ch, sh, 0.0, 0.0],
            [sh, ch, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ]);
        let lam = GroupElement::boost_z(mu).unwrap().covering_map();
        assert!(lam.max_abs_diff(&expected) < 1e-15);
        assert!(lam.metric_residual() < 1e-14);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(FourVector::new(1.0, 0.0, 0.0, 0.0).interval(), 1.0);
        assert_eq!(FourVector::new(5.0, 3.0, 0.0, 4.0).interval(), 0.0);
        assert_eq!(FourVector::new(1.25, 0.75, 0.0, 0.0).interval(), 1.0);
    }

    #[test]
    fn inverse_undoes_element() {
        let g = GroupElement::from_factors(&[
            (GeneratorKind::BoostZ, 0.4),
            (GeneratorKind::RotY, 1.1),
            (GeneratorKind::PhaseZ, -2.0),
        ])
        .unwrap();
        let prod = g.compose(&g.inverse()).unwrap();
        assert!(prod.matrix().distance(&ComplexMat2::IDENTITY) < 1e-14);
        let by_factors = GroupElement::from_factors(g.inverse().provenance().unwrap()).unwrap();
        assert!(by_factors.matrix().distance(g.inverse().matrix()) < 1e-14);
    }
}
