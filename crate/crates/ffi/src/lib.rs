//! C ABI for `poincare-kit`.
//!
//! Group elements and coherency matrices cross the boundary as opaque
//! handles created and freed here. Every fallible function returns a
//! [`PkStatus`]; on failure a message is available from [`pk_last_error`]
//! on the same thread. Four-vectors are `double[4]` in `(t, z, x, y)` order,
//! 2×2 complex matrices are split into `re[4]`/`im[4]` in row-major order and
//! 4×4 real matrices are `double[16]`, row-major.
//!
//! The header `include/poincare_kit.h` is generated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use poincare_kit::desitter::{self, DeSitterState};
use poincare_kit::matrix::{Complex, ComplexMat2};
use poincare_kit::polarization::{self, CoherencyMatrix};
use poincare_kit::sl2c::{FourVector, GeneratorKind, GroupElement};
use poincare_kit::wigner::{self, LittleKind, MassTag};
use poincare_kit::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkStatus {
    Ok = 0,
    NullPointer = 1,
    NonFinite = 2,
    Hermiticity = 3,
    DeterminantDrift = 4,
    NonPositiveEnergy = 5,
    SpacelikeUnsupported = 6,
    KindMismatch = 7,
    InvalidArgument = 8,
    InvalidCoherency = 9,
    ZeroMomentum = 10,
    OutOfRange = 11,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkGenerator {
    PhaseZ = 0,
    RotY = 1,
    BoostZ = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkMassTag {
    Massive = 0,
    Massless = 1,
    Spacelike = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PkLittleKind {
    ZPhase = 0,
    YRotation = 1,
    GaugeTriangular = 2,
}

/// Opaque SL(2,C) element.
pub struct PkGroup(GroupElement);

/// Opaque coherency matrix.
pub struct PkCoherency(CoherencyMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(PkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NonFinite(_) => PkStatus::NonFinite,
            Error::Hermiticity { .. } => PkStatus::Hermiticity,
            Error::DeterminantDrift { .. } => PkStatus::DeterminantDrift,
            Error::NonPositiveEnergy { .. } => PkStatus::NonPositiveEnergy,
            Error::SpacelikeUnsupported { .. } => PkStatus::SpacelikeUnsupported,
            Error::KindMismatch { .. } => PkStatus::KindMismatch,
            Error::InvalidCoherency(_) | Error::Unphysical { .. } | Error::ZeroIntensity(_) => {
                PkStatus::InvalidCoherency
            }
            Error::ZeroMomentum => PkStatus::ZeroMomentum,
            Error::OutOfRange { .. } => PkStatus::OutOfRange,
            _ => PkStatus::InvalidArgument,
        };
        Fail(code, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(PkStatus::NullPointer, format!("null pointer: {what}"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PkStatus::Ok,
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic".into());
            PkStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn arr<'a, const N: usize>(p: *const f64, what: &str) -> Result<&'a [f64; N], Fail> {
    deref(p.cast::<[f64; N]>(), what)
}

unsafe fn arr_out<'a, const N: usize>(p: *mut f64, what: &str) -> Result<&'a mut [f64; N], Fail> {
    out(p.cast::<[f64; N]>(), what)
}

fn write_mat2(m: &ComplexMat2, re: &mut [f64; 4], im: &mut [f64; 4]) {
    for (i, c) in [m.e00, m.e01, m.e10, m.e11].into_iter().enumerate() {
        re[i] = c.re;
        im[i] = c.im;
    }
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Creates a generator `Z(φ)`, `R(θ)` or `B(μ)`.
///
/// # Safety
/// `out_group` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_group_generator(
    kind: PkGenerator,
    param: f64,
    out_group: *mut *mut PkGroup,
) -> PkStatus {
    guard(|| {
        let slot = out(out_group, "out_group")?;
        let kind = match kind {
            PkGenerator::PhaseZ => GeneratorKind::PhaseZ,
            PkGenerator::RotY => GeneratorKind::RotY,
            PkGenerator::BoostZ => GeneratorKind::BoostZ,
        };
        *slot = Box::into_raw(Box::new(PkGroup(GroupElement::generator(kind, param)?)));
        Ok(())
    })
}

/// Creates an element from an explicit matrix; `det` must be 1.
///
/// # Safety
/// `re` and `im` must point to 4 doubles each; `out_group` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_group_from_matrix(
    re: *const f64,
    im: *const f64,
    out_group: *mut *mut PkGroup,
) -> PkStatus {
    guard(|| {
        let (re, im) = (arr::<4>(re, "re")?, arr::<4>(im, "im")?);
        let slot = out(out_group, "out_group")?;
        let c = |i: usize| Complex::new(re[i], im[i]);
        let mat = ComplexMat2::try_new(c(0), c(1), c(2), c(3))?;
        *slot = Box::into_raw(Box::new(PkGroup(GroupElement::new(mat)?)));
        Ok(())
    })
}

/// `out = a · b` (b acts first).
///
/// # Safety
/// `a` and `b` must be live handles; `out_group` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_group_compose(
    a: *const PkGroup,
    b: *const PkGroup,
    out_group: *mut *mut PkGroup,
) -> PkStatus {
    guard(|| {
        let (a, b) = (deref(a, "a")?, deref(b, "b")?);
        let slot = out(out_group, "out_group")?;
        *slot = Box::into_raw(Box::new(PkGroup(a.0.compose(&b.0)?)));
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out_group` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_group_inverse(
    g: *const PkGroup,
    out_group: *mut *mut PkGroup,
) -> PkStatus {
    guard(|| {
        let g = deref(g, "g")?;
        let slot = out(out_group, "out_group")?;
        *slot = Box::into_raw(Box::new(PkGroup(g.0.inverse())));
        Ok(())
    })
}

/// Applies `X → G X G†` to a four-vector.
///
/// # Safety
/// `g` must be a live handle; `v` and `out_v` must point to 4 doubles.
#[no_mangle]
pub unsafe extern "C" fn pk_group_act(
    g: *const PkGroup,
    v: *const f64,
    out_v: *mut f64,
) -> PkStatus {
    guard(|| {
        let (g, v) = (deref(g, "g")?, arr::<4>(v, "v")?);
        let dst = arr_out::<4>(out_v, "out_v")?;
        *dst = g.0.act(&FourVector::from_array(*v))?.to_array();
        Ok(())
    })
}

/// The induced 4×4 Lorentz matrix, row-major.
///
/// # Safety
/// `g` must be a live handle; `out_m` must point to 16 doubles.
#[no_mangle]
pub unsafe extern "C" fn pk_group_covering_map(g: *const PkGroup, out_m: *mut f64) -> PkStatus {
    guard(|| {
        let g = deref(g, "g")?;
        *arr_out::<16>(out_m, "out_m")? = g.0.covering_map().to_row_major();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `re` and `im` must point to 4 doubles each.
#[no_mangle]
pub unsafe extern "C" fn pk_group_matrix(
    g: *const PkGroup,
    re: *mut f64,
    im: *mut f64,
) -> PkStatus {
    guard(|| {
        let g = deref(g, "g")?;
        write_mat2(g.0.matrix(), arr_out(re, "re")?, arr_out(im, "im")?);
        Ok(())
    })
}

/// Frees a handle. Null is ignored.
///
/// # Safety
/// `g` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pk_group_free(g: *mut PkGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `p` must point to 4 doubles; `tag` and `mass_squared` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_classify(
    p: *const f64,
    tag: *mut PkMassTag,
    mass_squared: *mut f64,
) -> PkStatus {
    guard(|| {
        let p = arr::<4>(p, "p")?;
        let (tag, m2) = (out(tag, "tag")?, out(mass_squared, "mass_squared")?);
        let class = wigner::classify(&FourVector::from_array(*p))?;
        *tag = match class.tag {
            MassTag::Massive => PkMassTag::Massive,
            MassTag::Massless => PkMassTag::Massless,
            MassTag::Spacelike => PkMassTag::Spacelike,
        };
        *m2 = class.mass_squared;
        Ok(())
    })
}

/// Wigner residual `‖W X_P W† − X_P‖_max` of the little-group element of the
/// given kind, carried from the standard form to `p`.
///
/// # Safety
/// `p` must point to 4 doubles; `residual` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_little_group_residual(
    p: *const f64,
    kind: PkLittleKind,
    param: f64,
    residual: *mut f64,
) -> PkStatus {
    guard(|| {
        let p = FourVector::from_array(*arr::<4>(p, "p")?);
        let dst = out(residual, "residual")?;
        let kind = match kind {
            PkLittleKind::ZPhase => LittleKind::ZPhase(param),
            PkLittleKind::YRotation => LittleKind::YRotation(param),
            PkLittleKind::GaugeTriangular => LittleKind::GaugeTriangular(param),
        };
        let class = wigner::classify(&p)?;
        let (_, g) = wigner::canonical_form(&p)?;
        let lg = wigner::little_group_generator(&class, kind)?;
        *dst = wigner::verify_little_group(&wigner::conjugate(&g, &lg.element)?, &p);
        Ok(())
    })
}

/// Closed-form coherency matrix `a²[[1, e^{−σ−iφ}], [e^{−σ+iφ}, 1]]`.
///
/// # Safety
/// `out_c` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_coherency_closed_form(
    a: f64,
    phi: f64,
    sigma: f64,
    out_c: *mut *mut PkCoherency,
) -> PkStatus {
    guard(|| {
        let slot = out(out_c, "out_c")?;
        let c = polarization::coherency_closed_form(a, phi, sigma)?;
        *slot = Box::into_raw(Box::new(PkCoherency(c)));
        Ok(())
    })
}

/// Coherency matrix of the field after the Jones map `ψ → Gψ`.
///
/// # Safety
/// `g` and `c` must be live handles; `out_c` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_coherency_transform(
    g: *const PkGroup,
    c: *const PkCoherency,
    out_c: *mut *mut PkCoherency,
) -> PkStatus {
    guard(|| {
        let (g, c) = (deref(g, "g")?, deref(c, "c")?);
        let slot = out(out_c, "out_c")?;
        *slot = Box::into_raw(Box::new(PkCoherency(polarization::transform_coherency(
            &g.0, &c.0,
        ))));
        Ok(())
    })
}

/// Stokes parameters in `(S0, S3, S1, S2)` order.
///
/// # Safety
/// `c` must be a live handle; `out_s` must point to 4 doubles.
#[no_mangle]
pub unsafe extern "C" fn pk_coherency_stokes(c: *const PkCoherency, out_s: *mut f64) -> PkStatus {
    guard(|| {
        let c = deref(c, "c")?;
        let s = polarization::stokes_from_coherency(&c.0);
        *arr_out::<4>(out_s, "out_s")? = [s.s0, s.s3, s.s1, s.s2];
        Ok(())
    })
}

/// # Safety
/// `c` must be a live handle; `re` and `im` must point to 4 doubles each.
#[no_mangle]
pub unsafe extern "C" fn pk_coherency_matrix(
    c: *const PkCoherency,
    re: *mut f64,
    im: *mut f64,
) -> PkStatus {
    guard(|| {
        let c = deref(c, "c")?;
        write_mat2(c.0.matrix(), arr_out(re, "re")?, arr_out(im, "im")?);
        Ok(())
    })
}

/// Frees a handle. Null is ignored.
///
/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pk_coherency_free(c: *mut PkCoherency) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Energies `E1 = √(p² + m1²)`, `E2 = √(p² + m2²)` at mass angle `χ`.
///
/// # Safety
/// `e1` and `e2` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_desitter_energies(
    m: f64,
    chi: f64,
    p: f64,
    e1: *mut f64,
    e2: *mut f64,
) -> PkStatus {
    guard(|| {
        let (e1, e2) = (out(e1, "e1")?, out(e2, "e2")?);
        let (a, b) = desitter::energies(&DeSitterState::new(m, chi, p)?);
        *e1 = a;
        *e2 = b;
        Ok(())
    })
}

/// # Safety
/// `sigma` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_sigma_from_chi(m: f64, chi: f64, p: f64, sigma: *mut f64) -> PkStatus {
    guard(|| {
        let dst = out(sigma, "sigma")?;
        *dst = desitter::sigma_from_chi(&DeSitterState::new(m, chi, p)?)?;
        Ok(())
    })
}

/// Returns `PK_STATUS_OUT_OF_RANGE` when `σ` exceeds the bound reached at
/// `χ = π/2`.
///
/// # Safety
/// `chi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pk_chi_from_sigma(m: f64, p: f64, sigma: f64, chi: *mut f64) -> PkStatus {
    guard(|| {
        let dst = out(chi, "chi")?;
        *dst = desitter::chi_from_sigma(m, p, sigma)?;
        Ok(())
    })
}
