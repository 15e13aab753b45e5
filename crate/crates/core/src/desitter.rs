//! Two-mass decomposition and the decoherence/mass-angle bridge.
//!
//! A mass `m` is split by an angle `χ ∈ [0, π/2]` into `m1 = m cos χ` and
//! `m2 = m sin χ`. At fixed momentum `p` along `z` the two energies
//! `E_i = √(p² + m_i²)` satisfy `E1² + E2² = m² + 2p²`, and each channel has a
//! diagonal momentum matrix `diag(E_i + p, E_i − p)` with determinant `m_i²`.
//!
//! The second-channel matrix has the same shape as a diagonalized coherency
//! matrix `diag(1 + e^{−σ}, 1 − e^{−σ})`. Equating diagonal ratios,
//!
//! ```text
//! tanh(σ/2) = (E2 − p) / (E2 + p)        equivalently   σ = ln(E2 / p)
//! ```
//!
//! and with `t = tanh(σ/2)` this gives exactly
//!
//! ```text
//! t / (1 − t)² = (m / 2p)² sin²χ.
//! ```
//!
//! The often-quoted variant with `1 − t²` in the denominator equals
//! `m² sin²χ / (4 E2 p)` instead; [`bridge_lhs`] uses the `(1 − t)²` form.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::matrix::ComplexMat2;
use crate::{Error, Result};

/// `(m, χ, p)` with `m ≥ 0`, `χ ∈ [0, π/2]`, `p ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeSitterState {
    m: f64,
    chi: f64,
    p: f64,
}

fn check_mass(m: f64) -> Result<()> {
    if !(m.is_finite() && m >= 0.0) {
        return Err(Error::Domain {
            what: "m",
            value: m,
            range: "[0, ∞)",
        });
    }
    Ok(())
}

fn check_chi(chi: f64) -> Result<()> {
    if !(0.0..=FRAC_PI_2).contains(&chi) {
        return Err(Error::Domain {
            what: "chi",
            value: chi,
            range: "[0, π/2]",
        });
    }
    Ok(())
}

fn check_momentum(p: f64) -> Result<()> {
    if !(p.is_finite() && p >= 0.0) {
        return Err(Error::Domain {
            what: "p",
            value: p,
            range: "[0, ∞)",
        });
    }
    Ok(())
}

impl DeSitterState {
    pub fn new(m: f64, chi: f64, p: f64) -> Result<Self> {
        check_mass(m)?;
        check_chi(chi)?;
        check_momentum(p)?;
        Ok(Self { m, chi, p })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn masses(&self) -> (f64, f64) {
        (self.m * self.chi.cos(), self.m * self.chi.sin())
    }
}

/// `(E1, E2, p_z, p_x, p_y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FiveVector {
    pub e1: f64,
    pub e2: f64,
    pub pz: f64,
    pub px: f64,
    pub py: f64,
}

impl FiveVector {
    pub fn momentum_sq(&self) -> f64 {
        self.pz * self.pz + self.px * self.px + self.py * self.py
    }

    /// `E1² + E2² − 2|p|²`, the conserved `m²`.
    pub fn mass_sq(&self) -> f64 {
        self.e1 * self.e1 + self.e2 * self.e2 - 2.0 * self.momentum_sq()
    }
}

/// `(m cos χ, m sin χ)`.
pub fn mass_decompose(m: f64, chi: f64) -> Result<(f64, f64)> {
    check_mass(m)?;
    check_chi(chi)?;
    Ok((m * chi.cos(), m * chi.sin()))
}

/// `(√(m1² + p²), √(m2² + p²))`.
pub fn energies(state: &DeSitterState) -> (f64, f64) {
    let (m1, m2) = state.masses();
    (m1.hypot(state.p), m2.hypot(state.p))
}

pub fn five_vector(state: &DeSitterState) -> FiveVector {
    let (e1, e2) = energies(state);
    FiveVector {
        e1,
        e2,
        pz: state.p,
        px: 0.0,
        py: 0.0,
    }
}

/// `(diag(E1 + p, E1 − p), diag(E2 + p, E2 − p))`.
///
/// `E − p` is evaluated as `m_i² / (E + p)` so the determinant `m_i²` keeps
/// its relative accuracy when `m_i ≪ p`.
pub fn momentum_matrix_pair(state: &DeSitterState) -> (ComplexMat2, ComplexMat2) {
    let (m1, m2) = state.masses();
    let (e1, e2) = energies(state);
    let p = state.p;
    let channel = |mi: f64, e: f64| {
        let upper = e + p;
        let lower = if upper > 0.0 { mi * mi / upper } else { 0.0 };
        ComplexMat2::from_real(upper, 0.0, 0.0, lower)
    };
    (channel(m1, e1), channel(m2, e2))
}

/// `(E2 − p)/(E2 + p)` computed as `m2² / (E2 + p)²`.
fn second_channel_ratio(state: &DeSitterState) -> f64 {
    let (_, m2) = state.masses();
    let (_, e2) = energies(state);
    let s = e2 + state.p;
    (m2 / s) * (m2 / s)
}

/// `σ = 2·atanh((E2 − p)/(E2 + p))`.
///
/// At `p = 0` the ratio is 1 and `σ` is unbounded; that case is an error
/// unless the second-channel mass also vanishes (then `σ = 0`).
pub fn sigma_from_chi(state: &DeSitterState) -> Result<f64> {
    let (_, m2) = state.masses();
    if state.p == 0.0 {
        return if m2 > 0.0 {
            Err(Error::ZeroMomentum)
        } else {
            Ok(0.0)
        };
    }
    Ok(2.0 * second_channel_ratio(state).atanh())
}

/// Largest `σ` reachable for `(m, p)`, attained at `χ = π/2`.
pub fn sigma_bound(m: f64, p: f64) -> Result<f64> {
    sigma_from_chi(&DeSitterState::new(m, FRAC_PI_2, p)?)
}

/// `(tanh(σ/2), 1 − tanh(σ/2))`, the second without cancellation.
fn tanh_half(sigma: f64) -> (f64, f64) {
    ((sigma / 2.0).tanh(), 2.0 / (1.0 + sigma.exp()))
}

/// Inverse of [`sigma_from_chi`] at fixed `(m, p)`, in closed form:
/// `sin²χ = 4p²t / ((1 − t)² m²)` with `t = tanh(σ/2)`.
pub fn chi_from_sigma(m: f64, p: f64, sigma: f64) -> Result<f64> {
    if !(m.is_finite() && m > 0.0) {
        return Err(Error::Domain {
            what: "m",
            value: m,
            range: "(0, ∞)",
        });
    }
    if !(p.is_finite() && p > 0.0) {
        return Err(Error::Domain {
            what: "p",
            value: p,
            range: "(0, ∞)",
        });
    }
    if sigma.is_nan() {
        return Err(Error::NonFinite("sigma"));
    }
    if sigma < 0.0 {
        return Err(Error::NegativeSigma(sigma));
    }
    let (t, one_minus_t) = tanh_half(sigma);
    let ratio = 2.0 * p / (one_minus_t * m);
    let sin_sq = ratio * ratio * t;
    if sin_sq.is_nan() || sin_sq > 1.0 + 1e-12 {
        return Err(Error::OutOfRange {
            sigma,
            bound: sigma_bound(m, p)?,
        });
    }
    Ok(sin_sq.min(1.0).sqrt().asin())
}

/// `t / (1 − t)²` with `t = tanh(σ/2)`.
pub fn bridge_lhs(sigma: f64) -> f64 {
    let (t, one_minus_t) = tanh_half(sigma);
    t / (one_minus_t * one_minus_t)
}

/// `(m / 2p)² sin²χ`.
pub fn bridge_rhs(m: f64, p: f64, chi: f64) -> f64 {
    let r = m / (2.0 * p) * chi.sin();
    r * r
}

/// One row of a fixed-momentum mass-angle sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BridgeRow {
    pub chi: f64,
    pub sigma: f64,
    pub e1: f64,
    pub e2: f64,
    pub m1: f64,
    pub m2: f64,
    /// `|E1² + E2² − (m² + 2p²)|`.
    pub residual: f64,
}

/// Outcome of one requested sweep point; `σ` values past the achievable
/// bound are kept and flagged.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum BridgePoint {
    Row(BridgeRow),
    OutOfRange { sigma: f64, bound: f64 },
}

pub fn bridge_row(state: &DeSitterState) -> Result<BridgeRow> {
    let (m1, m2) = state.masses();
    let (e1, e2) = energies(state);
    let m = state.m;
    let residual = (e1 * e1 + e2 * e2 - (m * m + 2.0 * state.p * state.p)).abs();
    Ok(BridgeRow {
        chi: state.chi,
        sigma: sigma_from_chi(state)?,
        e1,
        e2,
        m1,
        m2,
        residual,
    })
}

/// `n` evenly spaced points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| {
            if i + 1 == n {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn check_count(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain {
            what: "n",
            value: n as f64,
            range: "[2, ∞)",
        });
    }
    Ok(())
}

/// Sweeps `χ` over `chi_range` at fixed `(m, p)`.
pub fn sweep_chi(m: f64, p: f64, chi_range: (f64, f64), n: usize) -> Result<Vec<BridgeRow>> {
    check_count(n)?;
    if p.is_nan() || p <= 0.0 {
        return Err(Error::ZeroMomentum);
    }
    linspace(chi_range.0, chi_range.1, n)
        .into_iter()
        .map(|chi| bridge_row(&DeSitterState::new(m, chi, p)?))
        .collect()
}

/// Sweeps `σ` over `sigma_range` at fixed `(m, p)`, solving for `χ`.
pub fn sweep_sigma(m: f64, p: f64, sigma_range: (f64, f64), n: usize) -> Result<Vec<BridgePoint>> {
    check_count(n)?;
    if p.is_nan() || p <= 0.0 {
        return Err(Error::ZeroMomentum);
    }
    linspace(sigma_range.0, sigma_range.1, n)
        .into_iter()
        .map(|sigma| match chi_from_sigma(m, p, sigma) {
            Ok(chi) => {
                let mut row = bridge_row(&DeSitterState::new(m, chi, p)?)?;
                row.sigma = sigma;
                Ok(BridgePoint::Row(row))
            }
            Err(Error::OutOfRange { sigma, bound }) => Ok(BridgePoint::OutOfRange { sigma, bound }),
            Err(e) => Err(e),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HyperbolaRow {
    pub m: f64,
    pub p: f64,
    pub e: f64,
}

/// Mass-shell energies `E = √(p² + m²)` for each mass over a momentum grid,
/// mass-major.
pub fn hyperbola_sweep(masses: &[f64], p_range: (f64, f64), n: usize) -> Result<Vec<HyperbolaRow>> {
    check_count(n)?;
    if masses.is_empty() {
        return Err(Error::Domain {
            what: "mass count",
            value: 0.0,
            range: "[1, ∞)",
        });
    }
    for &m in masses {
        check_mass(m)?;
    }
    let (lo, hi) = p_range;
    check_momentum(lo)?;
    check_momentum(hi)?;
    if hi < lo {
        return Err(Error::Domain {
            what: "p_max",
            value: hi,
            range: "[p_min, ∞)",
        });
    }
    let grid = linspace(lo, hi, n);
    Ok(masses
        .iter()
        .flat_map(|&m| {
            grid.iter().map(move |&p| HyperbolaRow {
                m,
                p,
                e: p.hypot(m),
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

    fn state(m: f64, chi: f64, p: f64) -> DeSitterState {
        DeSitterState::new(m, chi, p).unwrap()
    }

    #[test]
    fn mass_decompose_examples() {
        assert_eq!(mass_decompose(2.0, 0.0).unwrap(), (2.0, 0.0));
        let (m1, m2) = mass_decompose(2.0, FRAC_PI_2).unwrap();
        assert!(m1.abs() < 1e-15 && m2 == 2.0);
        let (m1, m2) = mass_decompose(2.0, FRAC_PI_6).unwrap();
        assert!((m1 - 3f64.sqrt()).abs() < 1e-15 && (m2 - 1.0).abs() < 1e-15);
        assert!(matches!(
            mass_decompose(2.0, 1.6),
            Err(Error::Domain { what: "chi", .. })
        ));
        assert!(matches!(
            mass_decompose(2.0, -0.1),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn energies_examples() {
        let (e1, e2) = energies(&state(2.0, FRAC_PI_6, 1.0));
        assert!((e1 - 2.0).abs() < 1e-15 && (e2 - 2f64.sqrt()).abs() < 1e-15);
        assert!((e1 * e1 + e2 * e2 - (4.0 + 2.0)).abs() < 1e-14);
        assert_eq!(energies(&state(0.0, 0.7, 3.0)), (3.0, 3.0));
        assert_eq!(energies(&state(3.0, 0.0, 0.0)), (3.0, 0.0));
    }

    #[test]
    fn five_vector_examples() {
        let f = five_vector(&state(2.0, FRAC_PI_6, 1.0));
        assert!((f.e1 - 2.0).abs() < 1e-15 && (f.e2 - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!((f.pz, f.px, f.py), (1.0, 0.0, 0.0));
        assert!((f.mass_sq() - 4.0).abs() < 1e-14);
        let f = five_vector(&state(0.0, 0.0, 1.0));
        assert_eq!((f.e1, f.e2, f.pz), (1.0, 1.0, 1.0));
        let f = five_vector(&state(1.0, FRAC_PI_2, 0.0));
        assert!(f.e1 < 1e-16 && f.e2 == 1.0);
    }

    #[test]
    fn momentum_matrix_examples() {
        let (_, p2) = momentum_matrix_pair(&state(2.0, FRAC_PI_2, 1.0));
        let s5 = 5f64.sqrt();
        assert!(p2.distance(&ComplexMat2::from_real(s5 + 1.0, 0.0, 0.0, s5 - 1.0)) < 1e-15);
        assert!((p2.det().re - 4.0).abs() < 1e-14);

        let (_, p2) = momentum_matrix_pair(&state(1.7, 0.0, 0.6));
        assert_eq!(p2, ComplexMat2::from_real(1.2, 0.0, 0.0, 0.0));

        let (p1, _) = momentum_matrix_pair(&state(2.0, FRAC_PI_6, 1.0));
        assert!(p1.distance(&ComplexMat2::from_real(3.0, 0.0, 0.0, 1.0)) < 1e-15);
        assert!((p1.det().re - 4.0 * FRAC_PI_6.cos().powi(2)).abs() < 1e-14);
    }

    #[test]
    fn sigma_from_chi_examples() {
        assert_eq!(sigma_from_chi(&state(2.0, 0.0, 1.0)).unwrap(), 0.0);
        // E2 = √5, ratio (√5 − 1)/(√5 + 1) = 0.381966…, σ = ln √5
        let s = sigma_from_chi(&state(2.0, FRAC_PI_2, 1.0)).unwrap();
        assert!((s - 0.804_718_956_217_050_2).abs() < 1e-15, "{s}");
        assert!((s - 5f64.sqrt().ln()).abs() < 1e-15);
        assert_eq!(sigma_from_chi(&state(0.0, 1.0, 1.0)).unwrap(), 0.0);
        assert!(matches!(
            sigma_from_chi(&state(1.0, 0.5, 0.0)),
            Err(Error::ZeroMomentum)
        ));
        assert_eq!(sigma_from_chi(&state(1.0, 0.0, 0.0)).unwrap(), 0.0);
    }

    #[test]
    fn chi_from_sigma_examples() {
        assert_eq!(chi_from_sigma(2.0, 1.0, 0.0).unwrap(), 0.0);
        let s = sigma_from_chi(&state(2.0, FRAC_PI_2, 1.0)).unwrap();
        assert!((chi_from_sigma(2.0, 1.0, s).unwrap() - FRAC_PI_2).abs() < 1e-6);
        match chi_from_sigma(2.0, 1.0, 10.0) {
            Err(Error::OutOfRange { bound, .. }) => assert!((bound - s).abs() < 1e-15),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            chi_from_sigma(2.0, 1.0, -1.0),
            Err(Error::NegativeSigma(_))
        ));
        assert!(matches!(
            chi_from_sigma(2.0, 0.0, 1.0),
            Err(Error::Domain { what: "p", .. })
        ));
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(bridge_lhs(0.0), 0.0);
        assert_eq!(bridge_rhs(2.0, 1.0, 0.0), 0.0);

        // golden ratio: t = 0.381966…, (1 − t)² = t, so the left side is 1
        assert!((bridge_rhs(2.0, 1.0, FRAC_PI_2) - 1.0).abs() < 1e-15);
        let s = sigma_from_chi(&state(2.0, FRAC_PI_2, 1.0)).unwrap();
        assert!((bridge_lhs(s) - 1.0).abs() < 1e-14);

        let rhs = bridge_rhs(1.0, 10.0, FRAC_PI_4);
        assert!((rhs - 0.00125).abs() < 1e-17);
        let s = sigma_from_chi(&state(1.0, FRAC_PI_4, 10.0)).unwrap();
        assert!((bridge_lhs(s) - rhs).abs() < 1e-10 * rhs);
    }

    #[test]
    fn one_minus_t_squared_form_differs_by_e2_over_p() {
        let st = state(2.0, 1.1, 0.7);
        let s = sigma_from_chi(&st).unwrap();
        let t = (s / 2.0).tanh();
        let (_, e2) = energies(&st);
        let (_, m2) = st.masses();
        let alt = t / (1.0 - t * t);
        assert!((alt - m2 * m2 / (4.0 * e2 * st.p())).abs() < 1e-14);
        assert!((bridge_lhs(s) - alt * e2 / st.p()).abs() < 1e-13);
    }

    #[test]
    fn hyperbola_examples() {
        let rows = hyperbola_sweep(&[0.0], (3.0, 3.0), 2).unwrap();
        assert!(rows.iter().all(|r| r.e == 3.0));
        let rows = hyperbola_sweep(&[3.0], (4.0, 4.0), 2).unwrap();
        assert!(rows.iter().all(|r| r.e == 5.0));
        let rows = hyperbola_sweep(&[1.0, 2.0], (1.0, 1.0), 2).unwrap();
        assert_eq!(rows[0].e, 2f64.sqrt());
        assert_eq!(rows[2].e, 5f64.sqrt());
        assert!(rows[2].e > rows[0].e);

        let rows = hyperbola_sweep(&[0.0, 1.0, 2.0], (0.0, 3.0), 31).unwrap();
        assert_eq!(rows.len(), 93);
        assert_eq!(
            rows[30],
            HyperbolaRow {
                m: 0.0,
                p: 3.0,
                e: 3.0
            }
        );

        assert!(hyperbola_sweep(&[], (0.0, 1.0), 3).is_err());
        assert!(hyperbola_sweep(&[1.0], (0.0, 1.0), 1).is_err());
        assert!(hyperbola_sweep(&[-1.0], (0.0, 1.0), 2).is_err());
    }

    #[test]
    fn sweeps() {
        let rows = sweep_chi(2.0, 1.0, (0.0, FRAC_PI_2), 3).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].sigma, 0.0);
        assert!((rows[2].sigma - 0.804_718_956_217_050_2).abs() < 1e-15);
        assert!(rows[1].sigma > 0.0 && rows[1].sigma < rows[2].sigma);

        let pts = sweep_sigma(2.0, 1.0, (0.0, 1.0), 5).unwrap();
        assert!(matches!(pts[0], BridgePoint::Row(_)));
        assert!(matches!(pts[3], BridgePoint::Row(_)));
        assert!(matches!(pts[4], BridgePoint::OutOfRange { .. }));
        assert!(sweep_chi(2.0, 0.0, (0.0, 1.0), 3).is_err());
        assert!(sweep_chi(2.0, 1.0, (0.0, 1.0), 1).is_err());
    }
}
