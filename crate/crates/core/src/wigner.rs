//! Mass classification, standard forms and Wigner little groups.
//!
//! A timelike momentum is brought to rest, `(m, 0, 0, 0)`, whose little group
//! is generated by `Z(φ)` and `R(θ)` (the unitary `SU(2)` subset). A lightlike
//! momentum is brought onto the `z` axis, `(E, E, 0, 0)`, whose little group is
//! generated by `Z(φ)` and the triangular matrix `[[1, γ], [0, 1]]`.
//!
//! The massless standard form keeps the physical energy `E`. The textbook
//! representative `diag(1, 0)` is the `E = 1/2` member of that family; no
//! Lorentz transformation relates members of different `E` along `z` without
//! a boost, so fixing the scale would make [`canonical_form`] non-invertible.

use serde::Serialize;

use crate::matrix::{Complex, ComplexMat2};
use crate::sl2c::{FourVector, GroupElement};
use crate::{tol, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MassTag {
    Massive,
    Massless,
    Spacelike,
}

impl MassTag {
    pub fn name(self) -> &'static str {
        match self {
            Self::Massive => "massive",
            Self::Massless => "massless",
            Self::Spacelike => "spacelike",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MassClass {
    pub tag: MassTag,
    pub mass_squared: f64,
}

impl MassClass {
    /// The representative momentum of the class: `(m, 0, 0, 0)` for massive,
    /// `(1/2, 1/2, 0, 0)` (matrix `diag(1, 0)`) for massless.
    pub fn standard_form(&self) -> Result<FourVector> {
        match self.tag {
            MassTag::Massive => Ok(FourVector::new(self.mass_squared.sqrt(), 0.0, 0.0, 0.0)),
            MassTag::Massless => Ok(FourVector::new(0.5, 0.5, 0.0, 0.0)),
            MassTag::Spacelike => Err(Error::SpacelikeUnsupported {
                mass_squared: self.mass_squared,
            }),
        }
    }
}

/// Classifies a four-momentum by the sign of `det P = m²`.
///
/// The massless band is `|m²| ≤ 1e-10·(E² + |p|²)`.
pub fn classify(p: &FourVector) -> Result<MassClass> {
    if !p.is_finite() {
        return Err(Error::NonFinite("four-momentum component"));
    }
    let mass_squared = p.interval();
    let band = tol::CLASSIFY * (p.t * p.t + p.spatial_norm_sq());
    let tag = if mass_squared < -band {
        MassTag::Spacelike
    } else if p.t <= 0.0 {
        return Err(Error::NonPositiveEnergy { energy: p.t });
    } else if mass_squared > band {
        MassTag::Massive
    } else {
        MassTag::Massless
    };
    Ok(MassClass { tag, mass_squared })
}

/// Returns `(standard, g)` with `g · standard = p`.
///
/// `g = Z(φ)·R(θ)·B(μ)`: boost the standard form along `z` to `|p|`, tilt it
/// from `z` toward `x` by the polar angle, then turn it about `z` by the
/// azimuth. Zero-parameter factors are left out of the provenance.
pub fn canonical_form(p: &FourVector) -> Result<(FourVector, GroupElement)> {
    let class = classify(p)?;
    let rho = p.x.hypot(p.y);
    let pn = p.z.hypot(rho);
    let polar = rho.atan2(p.z);
    let azimuth = p.y.atan2(p.x);

    let (standard, rapidity) = match class.tag {
        MassTag::Massive => {
            let m = class.mass_squared.sqrt();
            (FourVector::new(m, 0.0, 0.0, 0.0), (pn / m).asinh())
        }
        MassTag::Massless => (FourVector::new(p.t, p.t, 0.0, 0.0), 0.0),
        MassTag::Spacelike => {
            return Err(Error::SpacelikeUnsupported {
                mass_squared: class.mass_squared,
            })
        }
    };

    let mut g = GroupElement::identity();
    for (param, make) in [
        (
            azimuth,
            GroupElement::phase_z as fn(f64) -> Result<GroupElement>,
        ),
        (polar, GroupElement::rot_y),
        (rapidity, GroupElement::boost_z),
    ] {
        if param != 0.0 {
            g = g.compose(&make(param)?)?;
        }
    }
    Ok((standard, g))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum LittleKind {
    ZPhase(f64),
    YRotation(f64),
    GaugeTriangular(f64),
}

impl LittleKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::ZPhase(_) => "phase",
            Self::YRotation(_) => "rot",
            Self::GaugeTriangular(_) => "gauge",
        }
    }

    pub fn param(self) -> f64 {
        match self {
            Self::ZPhase(v) | Self::YRotation(v) | Self::GaugeTriangular(v) => v,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LittleGroupElement {
    pub element: GroupElement,
    pub kind: LittleKind,
    /// Wigner residual on the class's standard form.
    pub residual: f64,
}

/// `[[1, γ], [0, 1]]`.
pub fn gauge_triangular(gamma: f64) -> Result<GroupElement> {
    if !gamma.is_finite() {
        return Err(Error::NonFinite("gauge parameter"));
    }
    GroupElement::new(ComplexMat2::new(
        Complex::new(1.0, 0.0),
        Complex::new(gamma, 0.0),
        Complex::new(0.0, 0.0),
        Complex::new(1.0, 0.0),
    ))
}

/// Builds a little-group element for the given class.
///
/// Massive momenta admit `ZPhase` and `YRotation`; massless momenta admit
/// `ZPhase` and `GaugeTriangular`.
pub fn little_group_generator(class: &MassClass, kind: LittleKind) -> Result<LittleGroupElement> {
    let standard = class.standard_form()?;
    let element = match (class.tag, kind) {
        (_, LittleKind::ZPhase(phi)) => GroupElement::phase_z(phi)?,
        (MassTag::Massive, LittleKind::YRotation(theta)) => GroupElement::rot_y(theta)?,
        (MassTag::Massless, LittleKind::GaugeTriangular(gamma)) => gauge_triangular(gamma)?,
        (tag, kind) => {
            return Err(Error::KindMismatch {
                kind: kind.name(),
                class: tag.name(),
            })
        }
    };
    let residual = verify_little_group(&element, &standard);
    Ok(LittleGroupElement {
        element,
        kind,
        residual,
    })
}

/// `‖W X_P W† − X_P‖_max`, zero exactly when `W` fixes `P`.
pub fn verify_little_group(w: &GroupElement, p: &FourVector) -> f64 {
    let x = match p.to_matrix() {
        Ok(x) => x,
        Err(_) => return f64::NAN,
    };
    w.matrix().congruence(&x).distance(&x)
}

/// `g · w · g⁻¹`: carries a little-group element of the standard form to
/// one of `g · standard`.
pub fn conjugate(g: &GroupElement, w: &GroupElement) -> Result<GroupElement> {
    g.compose(w)?.compose(&g.inverse())
}
