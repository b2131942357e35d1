//! C ABI over the gammaverify kernels and verdict engine.
//!
//! Every fallible call returns a `GvStatus` code. On failure the message is
//! kept per thread and read back with `gv_last_error`. Handles are opaque;
//! each `*_new`/`*_verify` result is released with the matching `*_free`.
//! Strings returned as `char *` are owned by the caller and released with
//! `gv_string_free`.

use gammaverify::registry::{Registry, Selection, SuiteOptions, TolClass, Verdict};
use gammaverify::report::{to_json, Config};
use gammaverify::{cli, Error, Settings};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result codes shared by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    UnknownId = 3,
    Domain = 4,
    Numeric = 5,
    Misuse = 6,
    Panic = 7,
}

/// Verdict status of an identity check.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GvVerdictStatus {
    Confirmed = 0,
    Refuted = 1,
    Inconclusive = 2,
}

/// Tolerance selection; `PerIdentity` keeps each record's own class.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GvTolClass {
    PerIdentity = -1,
    Strict = 0,
    Standard = 1,
    Slow = 2,
}

/// A value with its absolute error estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct GvValue {
    pub value: f64,
    pub abs_err: f64,
}

/// Opaque identity registry.
pub struct GvRegistry {
    inner: Registry,
    ids: Vec<CString>,
}

/// Opaque verdict.
pub struct GvVerdict {
    inner: Verdict,
    id: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn code_of(e: &Error) -> GvStatus {
    match e {
        Error::UnknownId(_) => GvStatus::UnknownId,
        Error::Domain(_) | Error::ParamDomain { .. } | Error::Pole(_) | Error::LogSingularity(_) | Error::UnsupportedOrder(_) => {
            GvStatus::Domain
        }
        Error::Overflow(_) | Error::NonFinite(_) | Error::Inconsistent(_) => GvStatus::Numeric,
        Error::Misuse(_) | Error::EmptySelection => GvStatus::Misuse,
    }
}

struct Fail(GvStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(code_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> GvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GvStatus::Ok
        }
        Ok(Err(Fail(code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            GvStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(GvStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(GvStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn slice_arg<'a>(p: *const f64, n: usize) -> Result<&'a [f64], Fail> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Fail(GvStatus::NullPointer, "params is null".into()));
    }
    Ok(std::slice::from_raw_parts(p, n))
}

fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, Fail> {
    // SAFETY: callers pass either null or a valid, writable pointer.
    unsafe { p.as_mut() }.ok_or_else(|| Fail(GvStatus::NullPointer, "output pointer is null".into()))
}

fn tol_of(t: GvTolClass) -> Option<TolClass> {
    match t {
        GvTolClass::PerIdentity => None,
        GvTolClass::Strict => Some(TolClass::Strict),
        GvTolClass::Standard => Some(TolClass::Standard),
        GvTolClass::Slow => Some(TolClass::Slow),
    }
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', "")).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates a named special function, e.g. `"lambda"` or `"hurwitz-zeta"`.
///
/// # Safety
/// `name` must be a NUL-terminated string, `params` must point to
/// `n_params` doubles (or be null when `n_params` is 0), and `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn gv_eval_fn(name: *const c_char, params: *const f64, n_params: usize, out: *mut GvValue) -> GvStatus {
    guard(|| {
        let name = str_arg(name, "name")?;
        let p = slice_arg(params, n_params)?;
        let r = cli::eval_fn(name, p)?;
        *out_arg(out)? = GvValue { value: r.value, abs_err: r.abs_err };
        Ok(())
    })
}

/// Sums a catalog series by id (`S-*`, `FS-*` or `PS-*`).
///
/// # Safety
/// Same contract as `gv_eval_fn`.
#[no_mangle]
pub unsafe extern "C" fn gv_eval_series(
    id: *const c_char,
    params: *const f64,
    n_params: usize,
    max_terms: u64,
    out: *mut GvValue,
) -> GvStatus {
    guard(|| {
        let id = str_arg(id, "id")?;
        let p = slice_arg(params, n_params)?;
        let r = cli::eval_series(id, p, &settings(max_terms)?)?;
        *out_arg(out)? = GvValue { value: r.value, abs_err: r.abs_err };
        Ok(())
    })
}

/// Evaluates a catalog integral by id (`Q-*`).
///
/// # Safety
/// Same contract as `gv_eval_fn`.
#[no_mangle]
pub unsafe extern "C" fn gv_eval_integral(id: *const c_char, params: *const f64, n_params: usize, out: *mut GvValue) -> GvStatus {
    guard(|| {
        let id = str_arg(id, "id")?;
        let p = slice_arg(params, n_params)?;
        let r = cli::eval_integral(id, p, &Settings::default())?;
        *out_arg(out)? = GvValue { value: r.value, abs_err: r.abs_err };
        Ok(())
    })
}

fn settings(max_terms: u64) -> Result<Settings, Fail> {
    let mut s = Settings::default();
    if max_terms != 0 {
        if max_terms < 10 {
            return Err(Fail(GvStatus::Misuse, "max_terms must be 0 (default) or at least 10".into()));
        }
        s.max_terms = max_terms;
    }
    Ok(s)
}

/// Creates a handle on the built-in identity catalog.
#[no_mangle]
pub extern "C" fn gv_registry_new() -> *mut GvRegistry {
    catch_unwind(|| {
        let inner = Registry::builtin();
        let ids = inner.records().iter().map(|r| CString::new(r.id).unwrap_or_default()).collect();
        Box::into_raw(Box::new(GvRegistry { inner, ids }))
    })
    .unwrap_or(ptr::null_mut())
}

/// Releases a registry handle. Null is ignored.
///
/// # Safety
/// `reg` must come from `gv_registry_new` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gv_registry_free(reg: *mut GvRegistry) {
    if !reg.is_null() {
        drop(Box::from_raw(reg));
    }
}

/// Number of identities in the registry; 0 for a null handle.
///
/// # Safety
/// `reg` must be null or a live registry handle.
#[no_mangle]
pub unsafe extern "C" fn gv_registry_len(reg: *const GvRegistry) -> usize {
    reg.as_ref().map_or(0, |r| r.ids.len())
}

/// Id of the identity at `index`, or null when out of range. The string
/// is owned by the registry.
///
/// # Safety
/// `reg` must be null or a live registry handle.
#[no_mangle]
pub unsafe extern "C" fn gv_registry_id(reg: *const GvRegistry, index: usize) -> *const c_char {
    reg.as_ref().and_then(|r| r.ids.get(index)).map_or(ptr::null(), |s| s.as_ptr())
}

unsafe fn run_verdict(
    reg: *const GvRegistry,
    id: *const c_char,
    out: *mut *mut GvVerdict,
    f: impl FnOnce(&Registry, &str) -> gammaverify::Result<Verdict>,
) -> GvStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = ptr::null_mut();
        let reg = reg.as_ref().ok_or_else(|| Fail(GvStatus::NullPointer, "registry is null".into()))?;
        let id = str_arg(id, "id")?;
        let inner = f(&reg.inner, id)?;
        let id = CString::new(inner.id.clone()).unwrap_or_default();
        *slot = Box::into_raw(Box::new(GvVerdict { inner, id }));
        Ok(())
    })
}

/// Checks one identity. Pass `n_params` 0 to use the record's first
/// default parameter set.
///
/// # Safety
/// `reg` must be a live registry handle, `id` a NUL-terminated string,
/// `params` valid for `n_params` doubles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gv_verify(
    reg: *const GvRegistry,
    id: *const c_char,
    params: *const f64,
    n_params: usize,
    tol: GvTolClass,
    out: *mut *mut GvVerdict,
) -> GvStatus {
    let p = match slice_arg(params, n_params) {
        Ok(p) => p,
        Err(Fail(code, msg)) => {
            set_error(msg);
            return code;
        }
    };
    run_verdict(reg, id, out, |r, id| r.verify(id, (!p.is_empty()).then_some(p), tol_of(tol), &Settings::default()))
}

/// Re-evaluates a DISPUTED identity with both routes and convergence
/// diagnostics.
///
/// # Safety
/// Same contract as `gv_verify`.
#[no_mangle]
pub unsafe extern "C" fn gv_adjudicate(reg: *const GvRegistry, id: *const c_char, out: *mut *mut GvVerdict) -> GvStatus {
    run_verdict(reg, id, out, |r, id| r.adjudicate(id, None, &Settings::default()))
}

/// Releases a verdict. Null is ignored.
///
/// # Safety
/// `v` must come from `gv_verify` or `gv_adjudicate` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn gv_verdict_free(v: *mut GvVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Identity id of a verdict, owned by the verdict.
///
/// # Safety
/// `v` must be a live verdict handle.
#[no_mangle]
pub unsafe extern "C" fn gv_verdict_id(v: *const GvVerdict) -> *const c_char {
    v.as_ref().map_or(ptr::null(), |v| v.id.as_ptr())
}

/// Status of a verdict; `Inconclusive` for a null handle.
///
/// # Safety
/// `v` must be null or a live verdict handle.
#[no_mangle]
pub unsafe extern "C" fn gv_verdict_status(v: *const GvVerdict) -> GvVerdictStatus {
    use gammaverify::registry::Status;
    match v.as_ref().map(|v| v.inner.status) {
        Some(Status::Confirmed) => GvVerdictStatus::Confirmed,
        Some(Status::Refuted) => GvVerdictStatus::Refuted,
        _ => GvVerdictStatus::Inconclusive,
    }
}

/// Both side values and the residual/budget pair. Fails with `Numeric`
/// when a route did not produce a value; the note is then in
/// `gv_last_error`.
///
/// # Safety
/// `v` must be a live verdict handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn gv_verdict_sides(
    v: *const GvVerdict,
    lhs: *mut GvValue,
    rhs: *mut GvValue,
    residual: *mut f64,
    budget: *mut f64,
) -> GvStatus {
    guard(|| {
        let v = &v.as_ref().ok_or_else(|| Fail(GvStatus::NullPointer, "verdict is null".into()))?.inner;
        let (Some(l), Some(r), Some(res), Some(b)) = (v.lhs, v.rhs, v.residual, v.budget) else {
            return Err(Fail(GvStatus::Numeric, v.note.clone().unwrap_or_else(|| "route failed".into())));
        };
        *out_arg(lhs)? = GvValue { value: l.value, abs_err: l.abs_err };
        *out_arg(rhs)? = GvValue { value: r.value, abs_err: r.abs_err };
        *out_arg(residual)? = res;
        *out_arg(budget)? = b;
        Ok(())
    })
}

/// The verdict as a JSON object. Free with `gv_string_free`.
///
/// # Safety
/// `v` must be null or a live verdict handle.
#[no_mangle]
pub unsafe extern "C" fn gv_verdict_json(v: *const GvVerdict) -> *mut c_char {
    v.as_ref().and_then(|v| serde_json::to_string(&v.inner).ok()).map_or(ptr::null_mut(), owned_string)
}

/// Runs the full catalog and writes the JSON report to `*out` (free with
/// `gv_string_free`). `parallelism` 0 means one thread; `timing` 0 drops
/// wall times so the output is reproducible.
///
/// # Safety
/// `reg` must be a live registry handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gv_run_all_json(
    reg: *const GvRegistry,
    tol: GvTolClass,
    parallelism: usize,
    timing: i32,
    out: *mut *mut c_char,
) -> GvStatus {
    guard(|| {
        let slot = out_arg(out)?;
        *slot = ptr::null_mut();
        let reg = reg.as_ref().ok_or_else(|| Fail(GvStatus::NullPointer, "registry is null".into()))?;
        let threads = parallelism.max(1);
        let opts = SuiteOptions { tol_override: tol_of(tol), settings: Settings::default(), parallelism: Some(threads) };
        let report = reg.inner.run_suite(&Selection::All, &opts)?;
        let config = Config::new(opts.tol_override, opts.settings, threads);
        *slot = owned_string(to_json(&report, &config, timing != 0));
        Ok(())
    })
}
