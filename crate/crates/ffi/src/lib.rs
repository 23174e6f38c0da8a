//! C ABI over `nctoric`.
//!
//! Objects cross the boundary as opaque handles created by `*_from_json` or
//! `*_parse` and released by the matching `*_free`. Every fallible call
//! returns an [`NctStatus`]; on failure a message is available from
//! [`nct_last_error_message`] until the next call on the same thread.
//! Strings handed out by the library must be released with
//! [`nct_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nctoric::fan;
use nctoric::fvec;
use nctoric::hj;
use nctoric::hochschild::{self, AlgebraSpec, FinDimAlgebra, FiniteGroupoid};
use nctoric::lvm::{self, Configuration, ConfigurationSpec};
use nctoric::nctorus;
use nctoric::polytope::{PolytopeSpec, SimplePolytope};
use nctoric::{galois_conjugate, Error, Scalar};
use num_bigint::BigInt;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NctStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed literal or JSON.
    InputError = 3,
    /// Well-formed input the computation rejects.
    DomainError = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// An element of `ℚ` or `ℚ(√d)`.
pub struct NctScalar(Scalar);

/// A simple polytope `{x : ⟨uᵢ, x⟩ ≥ λᵢ}`.
pub struct NctPolytope(SimplePolytope);

/// An LVM configuration.
pub struct NctConfiguration(Configuration);

/// A finite-dimensional unital algebra over `ℚ`.
pub struct NctAlgebra(FinDimAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail {
    status: NctStatus,
    message: String,
}

impl Fail {
    fn new(status: NctStatus, message: impl Into<String>) -> Self {
        Fail {
            status,
            message: message.into(),
        }
    }

    fn input(message: impl std::fmt::Display) -> Self {
        Fail::new(NctStatus::InputError, message.to_string())
    }
}

impl<E: Into<Error>> From<E> for Fail {
    fn from(e: E) -> Self {
        let e: Error = e.into();
        Fail::new(NctStatus::DomainError, format!("{}: {e}", e.name()))
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> NctStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NctStatus::Ok,
        Ok(Err(fail)) => {
            set_error(&fail.message);
            fail.status
        }
        Err(payload) => {
            let text = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(&format!("panic: {text}"));
            NctStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::new(NctStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::new(NctStatus::InvalidUtf8, "argument is not valid UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::new(NctStatus::NullPointer, "null handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(NctStatus::NullPointer, "null output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::input("output contains a nul byte"))?;
    write(out, c.into_raw())
}

unsafe fn write_json<T: serde::Serialize + ?Sized>(out: *mut *mut c_char, value: &T) -> Result<(), Fail> {
    write_string(out, serde_json::to_string(value).expect("serializable"))
}

unsafe fn write_handle<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::new(NctStatus::NullPointer, "null output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

/// Message of the last failed call on this thread, or null.
///
/// The pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn nct_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn nct_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nct_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// Scalars

/// Parses a literal such as `3/4`, `sqrt(2)` or `1/2+1/2*sqrt(5)`.
///
/// # Safety
/// `literal` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_parse(literal: *const c_char, out: *mut *mut NctScalar) -> NctStatus {
    guard(|| {
        let x: Scalar = text(literal)?.parse().map_err(Fail::input)?;
        write_handle(out, NctScalar(x))
    })
}

/// # Safety
/// `x` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_free(x: *mut NctScalar) {
    if !x.is_null() {
        drop(Box::from_raw(x));
    }
}

/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_to_string(x: *const NctScalar, out: *mut *mut c_char) -> NctStatus {
    guard(|| write_string(out, handle(x)?.0.to_string()))
}

/// Nearest `double`; for display only.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_to_f64(x: *const NctScalar, out: *mut f64) -> NctStatus {
    guard(|| write(out, handle(x)?.0.to_f64()))
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_add(a: *const NctScalar, b: *const NctScalar, out: *mut *mut NctScalar) -> NctStatus {
    guard(|| {
        let sum = handle(a)?.0.checked_add(&handle(b)?.0)?;
        write_handle(out, NctScalar(sum))
    })
}

/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_mul(a: *const NctScalar, b: *const NctScalar, out: *mut *mut NctScalar) -> NctStatus {
    guard(|| {
        let prod = handle(a)?.0.checked_mul(&handle(b)?.0)?;
        write_handle(out, NctScalar(prod))
    })
}

/// `a + b√d ↦ a − b√d`.
///
/// # Safety
/// `x` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_scalar_conjugate(x: *const NctScalar, out: *mut *mut NctScalar) -> NctStatus {
    guard(|| write_handle(out, NctScalar(galois_conjugate(&handle(x)?.0))))
}

// Polytopes

/// Reads `{"dim":n,"facets":[{"normal":[…],"offset":…},…]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_polytope_from_json(json: *const c_char, out: *mut *mut NctPolytope) -> NctStatus {
    guard(|| {
        let spec: PolytopeSpec = serde_json::from_str(text(json)?).map_err(Fail::input)?;
        write_handle(out, NctPolytope(SimplePolytope::from_spec(spec)?))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nct_polytope_free(p: *mut NctPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_polytope_dim(p: *const NctPolytope, out: *mut usize) -> NctStatus {
    guard(|| write(out, handle(p)?.0.dim()))
}

/// Vertices, facet family, classification and face counts as JSON.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_polytope_info_json(p: *const NctPolytope, out: *mut *mut c_char) -> NctStatus {
    guard(|| write_json(out, &nctoric::cli::polytope_payload(&handle(p)?.0)))
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_polytope_normal_fan_json(p: *const NctPolytope, out: *mut *mut c_char) -> NctStatus {
    guard(|| write_json(out, &fan::normal_fan(&handle(p)?.0)?))
}

// LVM configurations

/// Reads `{"m":…,"lambdas":[[{"re":…,"im":…},…],…]}`, one row per `λᵢ ∈ ℂᵐ`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_configuration_from_json(json: *const c_char, out: *mut *mut NctConfiguration) -> NctStatus {
    guard(|| {
        let spec: ConfigurationSpec = serde_json::from_str(text(json)?).map_err(Fail::input)?;
        write_handle(out, NctConfiguration(Configuration::try_from(spec)?))
    })
}

/// # Safety
/// `c` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nct_configuration_free(c: *mut NctConfiguration) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a live handle; `siegel` and `weak_hyperbolic` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_configuration_check(
    c: *const NctConfiguration,
    siegel: *mut bool,
    weak_hyperbolic: *mut bool,
) -> NctStatus {
    guard(|| {
        let a = lvm::check_admissible(&handle(c)?.0);
        write(siegel, a.siegel)?;
        write(weak_hyperbolic, a.weak_hyperbolic)
    })
}

/// Condition (K) and whether the leaves are compact tori.
///
/// # Safety
/// `c` must be a live handle; `condition_k` and `compact_leaves` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_configuration_dichotomy(
    c: *const NctConfiguration,
    condition_k: *mut bool,
    compact_leaves: *mut bool,
) -> NctStatus {
    guard(|| {
        let cfg = &handle(c)?.0;
        let k = lvm::condition_k(cfg)?;
        let leaf = lvm::leaf_dichotomy(cfg)?;
        write(condition_k, k)?;
        write(compact_leaves, leaf == lvm::LeafType::CompactTori)
    })
}

/// Gale transform with all `εᵢ = 1`, as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_configuration_gale_json(c: *const NctConfiguration, out: *mut *mut c_char) -> NctStatus {
    guard(|| write_json(out, &lvm::gale_transform(&handle(c)?.0, None)?))
}

/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_configuration_fiber_json(c: *const NctConfiguration, out: *mut *mut c_char) -> NctStatus {
    guard(|| write_json(out, &lvm::generic_fiber(&handle(c)?.0)?))
}

// Algebras

/// Reads `{"dim":…,"unit":[…],"c":[[[…]]]}` with `e_i e_j = Σ_k c[i][j][k] e_k`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_algebra_from_json(json: *const c_char, out: *mut *mut NctAlgebra) -> NctStatus {
    guard(|| {
        let spec: AlgebraSpec = serde_json::from_str(text(json)?).map_err(Fail::input)?;
        write_handle(out, NctAlgebra(FinDimAlgebra::try_from(spec)?))
    })
}

/// One of `field`, `fields2`, `z2`, `dual`, `pair2`, `upper2`.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_algebra_builtin(name: *const c_char, out: *mut *mut NctAlgebra) -> NctStatus {
    guard(|| {
        let a = match text(name)? {
            "field" => FinDimAlgebra::ground_field(),
            "fields2" => FinDimAlgebra::product_of_fields(2),
            "z2" => FinDimAlgebra::cyclic_group_algebra(2),
            "dual" => FinDimAlgebra::truncated_polynomial(2),
            "pair2" => hochschild::convolution_algebra(&FiniteGroupoid::pair(2))?,
            "upper2" => FinDimAlgebra::upper_triangular_2(),
            other => return Err(Fail::input(format!("unknown builtin algebra `{other}`"))),
        };
        write_handle(out, NctAlgebra(a))
    })
}

/// # Safety
/// `a` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn nct_algebra_free(a: *mut NctAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_algebra_dim(a: *const NctAlgebra, out: *mut usize) -> NctStatus {
    guard(|| write(out, handle(a)?.0.dim()))
}

/// Writes `HH_0 … HH_{up_to}` into `ranks[0..=up_to]`. Needs `len > up_to`,
/// otherwise returns `BufferTooSmall` without computing.
///
/// # Safety
/// `a` must be a live handle; `ranks` must point to `len` writable elements.
#[no_mangle]
pub unsafe extern "C" fn nct_algebra_hh_ranks(
    a: *const NctAlgebra,
    up_to: usize,
    ranks: *mut usize,
    len: usize,
) -> NctStatus {
    guard(|| {
        let alg = &handle(a)?.0;
        if ranks.is_null() {
            return Err(Fail::new(NctStatus::NullPointer, "null output pointer"));
        }
        if len <= up_to {
            return Err(Fail::new(NctStatus::BufferTooSmall, format!("need {} slots, got {len}", up_to + 1)));
        }
        let r = hochschild::hh_ranks(alg, up_to)?;
        ptr::copy_nonoverlapping(r.as_ptr(), ranks, r.len());
        Ok(())
    })
}

/// Truncated periodic cyclic homology at order `n` as JSON.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_algebra_hp_json(
    a: *const NctAlgebra,
    n: usize,
    window: usize,
    out: *mut *mut c_char,
) -> NctStatus {
    guard(|| write_json(out, &hochschild::hp_truncated(&handle(a)?.0, n, window)?))
}

// Stateless computations

/// Hirzebruch–Jung expansion of a literal; `depth == 0` uses the default.
///
/// # Safety
/// `value` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_hj_expand_json(value: *const c_char, depth: usize, out: *mut *mut c_char) -> NctStatus {
    guard(|| {
        let x: Scalar = text(value)?.parse().map_err(Fail::input)?;
        let depth = (depth > 0).then_some(depth);
        write_json(out, &hj::hj_expand(&x, depth)?)
    })
}

/// Morita equivalence of two irrational quadratic parameters as JSON.
///
/// # Safety
/// `theta1`, `theta2` must be nul-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_morita_json(theta1: *const c_char, theta2: *const c_char, out: *mut *mut c_char) -> NctStatus {
    guard(|| {
        let a: Scalar = text(theta1)?.parse().map_err(Fail::input)?;
        let b: Scalar = text(theta2)?.parse().map_err(Fail::input)?;
        write_json(out, &nctorus::morita_equivalent(&a, &b, None)?)
    })
}

/// h-vector, g-vector and the g-theorem necessity check as JSON.
///
/// # Safety
/// `f` must point to `len` readable elements; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nct_gvec_json(f: *const i64, len: usize, d: usize, out: *mut *mut c_char) -> NctStatus {
    guard(|| {
        if f.is_null() {
            return Err(Fail::new(NctStatus::NullPointer, "null f-vector"));
        }
        let f: Vec<BigInt> = std::slice::from_raw_parts(f, len).iter().map(|&x| BigInt::from(x)).collect();
        write_json(out, &fvec::g_theorem_necessity(&f, d)?)
    })
}
