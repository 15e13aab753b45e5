//! Jones states, coherency matrices, Stokes vectors and Poincaré-sphere
//! geometry.
//!
//! The coherency matrix holds the equal-time correlations
//! `S_ij = ⟨ψ_i* ψ_j⟩`. Its Stokes vector is stored in the order
//! `(S0, S3, S1, S2)`, which lines up with `(t, z, x, y)`: an optical element
//! `G` acting on Jones vectors moves the Stokes vector by the same 4×4 matrix
//! [`GroupElement::covering_map`] that moves four-momenta.
//!
//! Stokes parameters carry a `1/√2` normalization, so `S0² − |S|² = 2 det C`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::io::Read;

use serde::Serialize;

use crate::compensated::Acc;
use crate::matrix::{Complex, ComplexMat2};
use crate::sl2c::{FourVector, GeneratorKind, GroupElement};
use crate::{tol, Error, Result};

/// Minimum number of samples for a time average.
pub const MIN_SAMPLES: usize = 100;

/// Optical elements acting on a Jones vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum OpticalElement {
    /// `Z(φ)`: relative phase shift.
    PhaseShift(f64),
    /// `B(μ)`: amplitude squeeze, `a·e^{μ/2}`, `b·e^{−μ/2}`.
    Attenuation(f64),
    /// `R(θ)`: rotation of the polarization axis.
    Rotation(f64),
}

impl OpticalElement {
    pub fn generator(self) -> (GeneratorKind, f64) {
        match self {
            Self::PhaseShift(p) => (GeneratorKind::PhaseZ, p),
            Self::Attenuation(p) => (GeneratorKind::BoostZ, p),
            Self::Rotation(p) => (GeneratorKind::RotY, p),
        }
    }

    pub fn matrix(self) -> ComplexMat2 {
        let (kind, p) = self.generator();
        kind.matrix(p)
    }
}

/// A two-component field `(a e^{i(kz−ωt+φ1)}, b e^{i(kz−ωt+φ2)})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JonesState {
    pub a: f64,
    pub b: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub k: f64,
    pub omega: f64,
}

impl JonesState {
    pub fn new(a: f64, b: f64, phi1: f64, phi2: f64, k: f64, omega: f64) -> Result<Self> {
        if ![a, b, phi1, phi2, k, omega].iter().all(|v| v.is_finite()) {
            return Err(Error::NonFinite("Jones parameter"));
        }
        if a < 0.0 {
            return Err(Error::NegativeAmplitude(a));
        }
        if b < 0.0 {
            return Err(Error::NegativeAmplitude(b));
        }
        Ok(Self {
            a,
            b,
            phi1,
            phi2,
            k,
            omega,
        })
    }

    /// The equal-amplitude state `(a e^{−iφ/2}, a e^{iφ/2})`.
    pub fn equal_amplitude(a: f64, phi: f64, k: f64, omega: f64) -> Result<Self> {
        Self::new(a, a, -phi / 2.0, phi / 2.0, k, omega)
    }

    /// Complex envelopes `(a e^{iφ1}, b e^{iφ2})`.
    pub fn amplitudes(&self) -> [Complex; 2] {
        [
            Complex::from_polar(self.a, self.phi1),
            Complex::from_polar(self.b, self.phi2),
        ]
    }

    pub fn evaluate(&self, z: f64, t: f64) -> [Complex; 2] {
        let carrier = Complex::from_polar(1.0, self.k * z - self.omega * t);
        let [c1, c2] = self.amplitudes();
        [c1 * carrier, c2 * carrier]
    }

    fn from_amplitudes(c: [Complex; 2], k: f64, omega: f64) -> Self {
        let (a, phi1) = c[0].to_polar();
        let (b, phi2) = c[1].to_polar();
        Self {
            a,
            b,
            phi1,
            phi2,
            k,
            omega,
        }
    }
}

/// Applies an optical element. Diagonal elements update amplitude or phase
/// in place; a rotation mixes the components and the result is re-expressed
/// in amplitude/phase form (phases in `(−π, π]`).
pub fn apply_element(elem: OpticalElement, j: &JonesState) -> JonesState {
    match elem {
        OpticalElement::PhaseShift(phi) => JonesState {
            phi1: j.phi1 - phi / 2.0,
            phi2: j.phi2 + phi / 2.0,
            ..*j
        },
        OpticalElement::Attenuation(mu) => JonesState {
            a: j.a * (mu / 2.0).exp(),
            b: j.b * (-mu / 2.0).exp(),
            ..*j
        },
        OpticalElement::Rotation(_) => {
            JonesState::from_amplitudes(elem.matrix().apply(j.amplitudes()), j.k, j.omega)
        }
    }
}

/// A Hermitian, positive-semidefinite 2×2 matrix of field correlations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherencyMatrix {
    mat: ComplexMat2,
}

impl CoherencyMatrix {
    /// Validates Hermiticity and positivity (slack `1e-12` relative to the
    /// trace) and stores the exact Hermitian part.
    pub fn new(mat: ComplexMat2) -> Result<Self> {
        if !mat.is_finite() {
            return Err(Error::NonFinite("coherency entry"));
        }
        let scale = mat.trace().re.abs().max(1.0);
        let slack = tol::COHERENCY * scale;
        let violation = mat.hermiticity_violation();
        if violation > slack {
            return Err(Error::InvalidCoherency(format!(
                "not Hermitian (violation {violation:e})"
            )));
        }
        let h = Self {
            mat: mat.hermitian_part(),
        };
        if h.mat.e00.re < -slack || h.mat.e11.re < -slack {
            return Err(Error::InvalidCoherency("negative intensity".into()));
        }
        let det = h.det();
        if det < -slack * scale {
            return Err(Error::InvalidCoherency(format!(
                "negative determinant {det:e}"
            )));
        }
        Ok(h)
    }

    pub fn matrix(&self) -> &ComplexMat2 {
        &self.mat
    }

    pub fn s11(&self) -> f64 {
        self.mat.e00.re
    }

    pub fn s22(&self) -> f64 {
        self.mat.e11.re
    }

    pub fn s12(&self) -> Complex {
        self.mat.e01
    }

    pub fn s21(&self) -> Complex {
        self.mat.e10
    }

    /// `S11·S22 − |S12|²`, summed in double-word arithmetic.
    pub fn det(&self) -> f64 {
        let mut acc = Acc::default();
        acc.add_prod(self.s11(), self.s22());
        acc.add_prod(-self.mat.e01.re, self.mat.e01.re);
        acc.add_prod(-self.mat.e01.im, self.mat.e01.im);
        acc.value()
    }

    pub fn intensity(&self) -> f64 {
        self.s11() + self.s22()
    }
}

/// `a²·[[1, e^{−σ−iφ}], [e^{−σ+iφ}, 1]]`.
///
/// `σ = +∞` gives the incoherent `a²·I`. Note the sign convention: `φ` is the
/// phase of `S21`, so the equal-amplitude Jones state
/// `(a e^{−iφ/2}, a e^{iφ/2})` has coherency `closed_form(a, −φ, 0)`.
pub fn coherency_closed_form(a: f64, phi: f64, sigma: f64) -> Result<CoherencyMatrix> {
    if !a.is_finite() || !phi.is_finite() || sigma.is_nan() {
        return Err(Error::NonFinite("closed-form parameter"));
    }
    if a < 0.0 {
        return Err(Error::NegativeAmplitude(a));
    }
    if sigma < 0.0 {
        return Err(Error::NegativeSigma(sigma));
    }
    let i2 = a * a;
    let damp = (-sigma).exp();
    let off = Complex::from_polar(i2 * damp, -phi);
    CoherencyMatrix::new(ComplexMat2::new(i2.into(), off, off.conj(), i2.into()))
}

/// Evenly spaced samples of a two-component field.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledSignal {
    samples: Vec<[Complex; 2]>,
    dt: f64,
}

impl SampledSignal {
    pub fn new(samples: Vec<[Complex; 2]>, dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(Error::Domain {
                what: "dt",
                value: dt,
                range: "(0, ∞)",
            });
        }
        if samples
            .iter()
            .flatten()
            .any(|c| !(c.re.is_finite() && c.im.is_finite()))
        {
            return Err(Error::NonFinite("sample"));
        }
        Ok(Self { samples, dt })
    }

    /// Reads `t,re1,im1,re2,im2` CSV. The spacing is taken from the first
    /// two rows; any later row off that grid by more than `1e-6·dt` fails.
    /// Row numbers in errors count the header as row 1.
    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr
            .headers()
            .map_err(|e| Error::SampleFormat {
                row: 1,
                msg: e.to_string(),
            })?
            .clone();
        let expected = ["t", "re1", "im1", "re2", "im2"];
        if headers.iter().ne(expected) {
            return Err(Error::SampleFormat {
                row: 1,
                msg: format!("expected header `{}`", expected.join(",")),
            });
        }

        let mut times = Vec::new();
        let mut samples = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let row = i + 2;
            let rec = rec.map_err(|e| Error::SampleFormat {
                row,
                msg: e.to_string(),
            })?;
            let mut vals = [0.0_f64; 5];
            if rec.len() != 5 {
                return Err(Error::SampleFormat {
                    row,
                    msg: format!("expected 5 fields, got {}", rec.len()),
                });
            }
            for (slot, field) in vals.iter_mut().zip(rec.iter()) {
                *slot = field.parse().map_err(|_| Error::SampleFormat {
                    row,
                    msg: format!("not a number: `{field}`"),
                })?;
                if !slot.is_finite() {
                    return Err(Error::SampleFormat {
                        row,
                        msg: "non-finite value".into(),
                    });
                }
            }
            times.push(vals[0]);
            samples.push([
                Complex::new(vals[1], vals[2]),
                Complex::new(vals[3], vals[4]),
            ]);
        }

        if times.len() < 2 {
            return Err(Error::InsufficientSamples {
                needed: MIN_SAMPLES,
                got: times.len(),
            });
        }
        let dt = times[1] - times[0];
        if dt.is_nan() || dt <= 0.0 {
            return Err(Error::SampleFormat {
                row: 3,
                msg: "time must increase".into(),
            });
        }
        for (i, &t) in times.iter().enumerate().skip(2) {
            let on_grid = times[0] + dt * i as f64;
            if (t - on_grid).abs() > 1e-6 * dt {
                return Err(Error::SampleFormat {
                    row: i + 2,
                    msg: "non-uniform spacing".into(),
                });
            }
        }
        Self::new(samples, dt)
    }

    pub fn samples(&self) -> &[[Complex; 2]] {
        &self.samples
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Averaging window `T = N·dt`.
    pub fn window(&self) -> f64 {
        self.dt * self.samples.len() as f64
    }
}

/// Time-averaged correlations `⟨ψ_i* ψ_j⟩` at zero lag, as sample means.
pub fn coherency_from_samples(sig: &SampledSignal) -> Result<CoherencyMatrix> {
    let n = sig.samples.len();
    if n < MIN_SAMPLES {
        return Err(Error::InsufficientSamples {
            needed: MIN_SAMPLES,
            got: n,
        });
    }
    let (mut s11, mut s22, mut s12) = (0.0, 0.0, Complex::new(0.0, 0.0));
    for [p1, p2] in &sig.samples {
        s11 += p1.norm_sqr();
        s22 += p2.norm_sqr();
        s12 += p1.conj() * p2;
    }
    let inv = 1.0 / n as f64;
    let s12 = s12 * inv;
    CoherencyMatrix::new(ComplexMat2::new(
        (s11 * inv).into(),
        s12,
        s12.conj(),
        (s22 * inv).into(),
    ))
}

/// Coherency after the Jones map `ψ → Gψ`: `S' = conj(G)·S·Gᵀ`.
///
/// This is the action under which the Stokes vector moves by `Λ(G)`. The
/// congruence `G·S·G†` would instead move it by `Λ(conj G)`; the two agree
/// for the real generators `R(θ)` and `B(μ)` and differ in the sign of the
/// phase-shift angle.
pub fn transform_coherency(g: &GroupElement, c: &CoherencyMatrix) -> CoherencyMatrix {
    let m = g.matrix();
    let mat = m.conj() * c.mat * m.transpose();
    CoherencyMatrix {
        mat: mat.hermitian_part(),
    }
}

/// Eigenvalues `(λ+, λ−)`, descending. `λ−` is taken as `det/λ+` so it keeps
/// relative accuracy for nearly coherent light.
pub fn diagonalize_coherency(c: &CoherencyMatrix) -> (f64, f64) {
    let half_tr = 0.5 * c.intensity();
    let half_diff = 0.5 * (c.s11() - c.s22());
    let r = half_diff.hypot(c.s12().norm());
    let plus = half_tr + r;
    let minus = if plus > 0.0 { c.det() / plus } else { 0.0 };
    (plus, minus)
}

/// Stokes parameters in `(S0, S3, S1, S2)` order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StokesVector {
    pub s0: f64,
    pub s3: f64,
    pub s1: f64,
    pub s2: f64,
}

impl StokesVector {
    /// Checked constructor: `S0 ≥ 0` and `S0² − |S|² ≥ −1e-9·S0²`.
    pub fn new(s0: f64, s3: f64, s1: f64, s2: f64) -> Result<Self> {
        let s = Self { s0, s3, s1, s2 };
        if !s.as_four_vector().is_finite() {
            return Err(Error::NonFinite("Stokes parameter"));
        }
        let excess = s.as_four_vector().interval();
        if s0 < 0.0 || excess < -tol::STOKES_PHYSICAL * s0 * s0 {
            return Err(Error::Unphysical { excess });
        }
        Ok(s)
    }

    pub fn as_four_vector(&self) -> FourVector {
        FourVector::new(self.s0, self.s3, self.s1, self.s2)
    }

    pub fn from_four_vector(v: &FourVector) -> Result<Self> {
        Self::new(v.t, v.z, v.x, v.y)
    }
}

pub fn stokes_from_coherency(c: &CoherencyMatrix) -> StokesVector {
    // 1/(√2 i) = −i/√2
    let inv_i_sqrt2 = Complex::new(0.0, -FRAC_1_SQRT_2);
    StokesVector {
        s0: (c.s11() + c.s22()) * FRAC_1_SQRT_2,
        s3: (c.s11() - c.s22()) * FRAC_1_SQRT_2,
        s1: ((c.s12() + c.s21()) * FRAC_1_SQRT_2).re,
        s2: ((c.s12() - c.s21()) * inv_i_sqrt2).re,
    }
}

pub fn coherency_from_stokes(s: &StokesVector) -> Result<CoherencyMatrix> {
    let s = StokesVector::new(s.s0, s.s3, s.s1, s.s2)?;
    let s12 = Complex::new(s.s1, s.s2) * FRAC_1_SQRT_2;
    CoherencyMatrix::new(ComplexMat2::new(
        ((s.s0 + s.s3) * FRAC_1_SQRT_2).into(),
        s12,
        s12.conj(),
        ((s.s0 - s.s3) * FRAC_1_SQRT_2).into(),
    ))
}

/// `√(S1² + S2² + S3²)`; for equal amplitudes (`S3 = 0`) this is the circle
/// radius `S0·e^{−σ}`.
pub fn poincare_radius(s: &StokesVector) -> f64 {
    s.s1.hypot(s.s2).hypot(s.s3)
}

/// `|S12| / √(S11·S22)`, which is `e^{−σ}` for the closed form.
pub fn degree_of_coherence(c: &CoherencyMatrix) -> Result<f64> {
    if c.s11() <= 0.0 {
        return Err(Error::ZeroIntensity(1));
    }
    if c.s22() <= 0.0 {
        return Err(Error::ZeroIntensity(2));
    }
    Ok((c.s12().norm() / (c.s11() * c.s22()).sqrt()).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, LN_2, PI, SQRT_2};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    fn base() -> JonesState {
        JonesState::new(1.0, 1.0, 0.3, -0.2, 2.0, 5.0).unwrap()
    }

    #[test]
    fn apply_element_examples() {
        let j = base();
        assert_eq!(apply_element(OpticalElement::PhaseShift(0.0), &j), j);

        let out = apply_element(OpticalElement::Attenuation(2.0 * LN_2), &j);
        assert!((out.a - 2.0).abs() < 1e-15 && (out.b - 0.5).abs() < 1e-15);

        let j = JonesState::new(1.0, 0.0, 0.0, 0.0, 1.0, 1.0).unwrap();
        let out = apply_element(OpticalElement::Rotation(FRAC_PI_2), &j);
        assert!((out.a - FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((out.b - FRAC_1_SQRT_2).abs() < 1e-15);
        assert_eq!((out.phi1, out.phi2), (0.0, 0.0));
    }

    #[test]
    fn elements_match_matrix_on_field() {
        let j = JonesState::new(0.7, 1.3, 0.4, -1.1, 3.0, 2.0).unwrap();
        for elem in [
            OpticalElement::PhaseShift(0.9),
            OpticalElement::Attenuation(-0.6),
            OpticalElement::Rotation(2.2),
        ] {
            let (z, t) = (0.35, 1.7);
            let direct = elem.matrix().apply(j.evaluate(z, t));
            let via = apply_element(elem, &j).evaluate(z, t);
            for (a, b) in direct.iter().zip(via) {
                assert!((a - b).norm() < 1e-14, "{elem:?}");
            }
        }
    }

    #[test]
    fn jones_rejects_negative_amplitude() {
        assert!(matches!(
            JonesState::new(-1.0, 0.0, 0.0, 0.0, 0.0, 0.0),
            Err(Error::NegativeAmplitude(_))
        ));
    }

    #[test]
    fn closed_form_examples() {
        let coh = coherency_closed_form(1.0, 0.0, 0.0).unwrap();
        assert_eq!(*coh.matrix(), ComplexMat2::from_real(1.0, 1.0, 1.0, 1.0));
        assert_eq!(coh.det(), 0.0);

        let inc = coherency_closed_form(1.0, 0.0, f64::INFINITY).unwrap();
        assert_eq!(*inc.matrix(), ComplexMat2::IDENTITY);
        assert_eq!(inc.det(), 1.0);

        let m = coherency_closed_form(1.0, FRAC_PI_2, LN_2).unwrap();
        let expected = ComplexMat2::new(c(1.0, 0.0), c(0.0, -0.5), c(0.0, 0.5), c(1.0, 0.0));
        assert!(m.matrix().distance(&expected) < 1e-15);
        assert!((m.det() - 0.75).abs() < 1e-15);

        assert!(matches!(
            coherency_closed_form(1.0, 0.0, -0.1),
            Err(Error::NegativeSigma(_))
        ));
    }

    #[test]
    fn equal_amplitude_state_matches_closed_form_sign() {
        let (a, phi) = (1.3, 0.8);
        let j = JonesState::equal_amplitude(a, phi, 1.0, 1.0).unwrap();
        let [p1, p2] = j.amplitudes();
        let s21 = p2.conj() * p1;
        let cf = coherency_closed_form(a, -phi, 0.0).unwrap();
        assert!((cf.s21() - s21).norm() < 1e-14);
    }

    fn constant_signal(n: usize) -> SampledSignal {
        SampledSignal::new(vec![[c(1.0, 0.0), c(1.0, 0.0)]; n], 0.01).unwrap()
    }

    #[test]
    fn samples_constant_signal() {
        let coh = coherency_from_samples(&constant_signal(200)).unwrap();
        assert_eq!(*coh.matrix(), ComplexMat2::from_real(1.0, 1.0, 1.0, 1.0));
        assert!(matches!(
            coherency_from_samples(&constant_signal(99)),
            Err(Error::InsufficientSamples {
                needed: 100,
                got: 99
            })
        ));
    }

    #[test]
    fn samples_uniform_random_phase() {
        // deterministic equidistributed phases stand in for the uniform draw
        let n = 100_000;
        let golden = 0.618_033_988_749_894_9;
        let samples = (0..n)
            .map(|i| {
                [
                    c(1.0, 0.0),
                    Complex::from_polar(1.0, 2.0 * PI * ((i as f64 * golden) % 1.0)),
                ]
            })
            .collect();
        let coh = coherency_from_samples(&SampledSignal::new(samples, 1e-3).unwrap()).unwrap();
        assert!(coh.s12().norm() <= 3e-2);
        assert!((coh.s11() - 1.0).abs() < 1e-12 && (coh.s22() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn csv_reader() {
        let mut text = String::from("t,re1,im1,re2,im2\n");
        for i in 0..150 {
            text.push_str(&format!("{},1,0,1,0\n", i as f64 * 0.1));
        }
        let sig = SampledSignal::from_csv(text.as_bytes()).unwrap();
        assert_eq!(sig.samples().len(), 150);
        assert!((sig.dt() - 0.1).abs() < 1e-15);
        assert!((sig.window() - 15.0).abs() < 1e-12);

        let bad = "t,re1,im1,re2,im2\n0,1,0,1,0\n1,1,0,1,0\n2.5,1,0,1,0\n";
        assert!(matches!(
            SampledSignal::from_csv(bad.as_bytes()),
            Err(Error::SampleFormat { row: 4, .. })
        ));
        let bad = "t,re1,im1,re2,im2\n0,1,0,1,0\n1,x,0,1,0\n";
        assert!(matches!(
            SampledSignal::from_csv(bad.as_bytes()),
            Err(Error::SampleFormat { row: 3, .. })
        ));
        let bad = "time,a,b,c,d\n0,1,0,1,0\n";
        assert!(matches!(
            SampledSignal::from_csv(bad.as_bytes()),
            Err(Error::SampleFormat { row: 1, .. })
        ));
    }

    #[test]
    fn transform_examples() {
        let id = coherency_closed_form(1.0, 0.4, 0.2).unwrap();
        assert_eq!(transform_coherency(&GroupElement::identity(), &id), id);

        let mu = 0.8_f64;
        let inc = coherency_closed_form(1.0, 0.0, f64::INFINITY).unwrap();
        let out = transform_coherency(&GroupElement::boost_z(mu).unwrap(), &inc);
        assert!(
            out.matrix()
                .distance(&ComplexMat2::from_real(mu.exp(), 0.0, 0.0, (-mu).exp()))
                < 1e-15
        );
        assert!((out.det() - 1.0).abs() < 1e-15);

        let pure = CoherencyMatrix::new(ComplexMat2::from_real(1.0, 0.0, 0.0, 0.0)).unwrap();
        let out = transform_coherency(&GroupElement::rot_y(FRAC_PI_2).unwrap(), &pure);
        assert!(
            out.matrix()
                .distance(&ComplexMat2::from_real(0.5, 0.5, 0.5, 0.5))
                < 1e-15
        );
        assert!(out.det().abs() < 1e-16);
    }

    #[test]
    fn transform_tracks_jones_map() {
        // coherency of G·ψ equals transform_coherency(G, coherency of ψ)
        let j = JonesState::new(0.8, 1.4, 0.2, 1.9, 0.0, 0.0).unwrap();
        let g = GroupElement::phase_z(0.7)
            .unwrap()
            .compose(&GroupElement::rot_y(1.2).unwrap())
            .unwrap();
        let outer = |v: [Complex; 2]| {
            ComplexMat2::new(
                v[0].conj() * v[0],
                v[0].conj() * v[1],
                v[1].conj() * v[0],
                v[1].conj() * v[1],
            )
        };
        let before = CoherencyMatrix::new(outer(j.amplitudes())).unwrap();
        let after = outer(g.matrix().apply(j.amplitudes()));
        assert!(transform_coherency(&g, &before).matrix().distance(&after) < 1e-14);
    }

    #[test]
    fn diagonalize_examples() {
        assert_eq!(
            diagonalize_coherency(&coherency_closed_form(1.0, 0.0, f64::INFINITY).unwrap()),
            (1.0, 1.0)
        );
        let (p, m) = diagonalize_coherency(&coherency_closed_form(1.0, 2.1, LN_2).unwrap());
        assert!((p - 1.5).abs() < 1e-15 && (m - 0.5).abs() < 1e-15);
        let d = CoherencyMatrix::new(ComplexMat2::from_real(2.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(diagonalize_coherency(&d), (2.0, 0.0));
    }

    #[test]
    fn stokes_examples() {
        let s = stokes_from_coherency(&coherency_closed_form(1.0, 0.0, f64::INFINITY).unwrap());
        assert_eq!(
            s,
            StokesVector {
                s0: SQRT_2,
                s3: 0.0,
                s1: 0.0,
                s2: 0.0
            }
        );

        let s = stokes_from_coherency(&coherency_closed_form(1.0, 0.0, 0.0).unwrap());
        assert_eq!(
            s,
            StokesVector {
                s0: SQRT_2,
                s3: 0.0,
                s1: SQRT_2,
                s2: 0.0
            }
        );

        let s = stokes_from_coherency(&coherency_closed_form(1.0, FRAC_PI_2, LN_2).unwrap());
        assert!((s.s0 - SQRT_2).abs() < 1e-15);
        assert!(s.s3.abs() < 1e-15 && s.s1.abs() < 1e-15);
        assert!((s.s2 + FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn stokes_inverse_examples() {
        let id = coherency_from_stokes(&StokesVector {
            s0: SQRT_2,
            s3: 0.0,
            s1: 0.0,
            s2: 0.0,
        })
        .unwrap();
        assert!(id.matrix().distance(&ComplexMat2::IDENTITY) < 1e-15);
        let coh = coherency_from_stokes(&StokesVector {
            s0: SQRT_2,
            s3: 0.0,
            s1: SQRT_2,
            s2: 0.0,
        })
        .unwrap();
        assert!(
            coh.matrix()
                .distance(&ComplexMat2::from_real(1.0, 1.0, 1.0, 1.0))
                < 1e-15
        );
        assert!(matches!(
            coherency_from_stokes(&StokesVector {
                s0: 1.0,
                s3: 2.0,
                s1: 0.0,
                s2: 0.0
            }),
            Err(Error::Unphysical { .. })
        ));
    }

    #[test]
    fn radius_examples() {
        assert_eq!(
            poincare_radius(&StokesVector {
                s0: SQRT_2,
                s3: 0.0,
                s1: 0.0,
                s2: 0.0
            }),
            0.0
        );
        let s = stokes_from_coherency(&coherency_closed_form(1.0, 0.0, 0.0).unwrap());
        assert!((poincare_radius(&s) - s.s0).abs() < 1e-15);
        let s = stokes_from_coherency(&coherency_closed_form(1.0, 0.0, LN_2).unwrap());
        assert!((poincare_radius(&s) - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn coherence_examples() {
        let full = CoherencyMatrix::new(ComplexMat2::from_real(1.0, 1.0, 1.0, 1.0)).unwrap();
        assert_eq!(degree_of_coherence(&full).unwrap(), 1.0);
        let none = CoherencyMatrix::new(ComplexMat2::IDENTITY).unwrap();
        assert_eq!(degree_of_coherence(&none).unwrap(), 0.0);
        let half = coherency_closed_form(1.0, 0.3, LN_2).unwrap();
        assert!((degree_of_coherence(&half).unwrap() - 0.5).abs() < 1e-15);
        let dark = CoherencyMatrix::new(ComplexMat2::from_real(1.0, 0.0, 0.0, 0.0)).unwrap();
        assert!(matches!(
            degree_of_coherence(&dark),
            Err(Error::ZeroIntensity(2))
        ));
    }

    #[test]
    fn coherency_validation() {
        assert!(CoherencyMatrix::new(ComplexMat2::from_real(1.0, 2.0, 2.0, 1.0)).is_err());
        assert!(CoherencyMatrix::new(ComplexMat2::from_real(-1.0, 0.0, 0.0, 1.0)).is_err());
        assert!(CoherencyMatrix::new(ComplexMat2::from_real(1.0, 0.5, 0.0, 1.0)).is_err());
    }
}
