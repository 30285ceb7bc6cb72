//! C ABI over the `nichols` crate.
//!
//! Every function returns a [`NicholsStatus`]. On anything other than
//! `NICHOLS_STATUS_OK` or `NICHOLS_STATUS_VERDICT`, a message is available
//! from [`nichols_last_error`] on the same thread. Strings handed out by this
//! library are released with [`nichols_string_free`], braidings with
//! [`nichols_braiding_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use libc::{c_char, c_int};
use nichols::approx::{cover_check, nichols_dims, CoverVerdict};
use nichols::braid::{Braiding, Budget, Options};
use nichols::cli::{self, Job};
use nichols::Error;

/// Status codes; the first four agree with the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NicholsStatus {
    Ok = 0,
    /// The computation finished with a negative verdict.
    Verdict = 1,
    InvalidInput = 2,
    Budget = 3,
    NullPointer = 4,
    BufferTooSmall = 5,
    Panic = 6,
}

/// Marks a degree whose dimension was not reached before the budget ran out
/// (`SIZE_MAX` in C).
pub const NICHOLS_DIM_NA: usize = usize::MAX;

/// Opaque braided vector space.
pub struct NicholsBraiding {
    inner: Braiding,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: &Error) -> NicholsStatus {
    set_error(e.to_string());
    match e {
        Error::Budget { .. } => NicholsStatus::Budget,
        _ => NicholsStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> NicholsStatus) -> NicholsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("internal panic");
        NicholsStatus::Panic
    })
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, NicholsStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(NicholsStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        NicholsStatus::InvalidInput
    })
}

fn options(work_budget: u64) -> Options {
    let mut o = Options::default();
    if work_budget > 0 {
        o.budget = Budget { work: work_budget as u128, ..o.budget };
    }
    o
}

/// The message of the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn nichols_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a braiding from a JSON input object (the same keys as CLI job
/// inputs) or from the string `fixture:NAME`.
///
/// # Safety
/// `input` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nichols_braiding_new(input: *const c_char, out: *mut *mut NicholsBraiding) -> NicholsStatus {
    guard(|| {
        if out.is_null() {
            set_error("null output pointer");
            return NicholsStatus::NullPointer;
        }
        let text = match str_arg(input) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let value = if text.starts_with("fixture:") {
            serde_json::Value::String(text.to_string())
        } else {
            match serde_json::from_str(text) {
                Ok(v) => v,
                Err(e) => return fail(&Error::from(e)),
            }
        };
        match cli::braiding_from_input(&value) {
            Ok(b) => {
                *out = Box::into_raw(Box::new(NicholsBraiding { inner: b }));
                NicholsStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// # Safety
/// `b` must come from [`nichols_braiding_new`] and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn nichols_braiding_free(b: *mut NicholsBraiding) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Dimension of the underlying vector space, or 0 for a null handle.
///
/// # Safety
/// `b` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn nichols_braiding_dim(b: *const NicholsBraiding) -> usize {
    b.as_ref().map_or(0, |b| b.inner.dim())
}

/// Writes the Nichols algebra dimensions of degrees `0..=n_max` to `out`,
/// which must hold `n_max + 1` entries. A `work_budget` of 0 selects the
/// default. When the budget runs out, the degrees not reached are set to
/// `SIZE_MAX` and `NICHOLS_STATUS_BUDGET` is returned.
///
/// # Safety
/// `b` must be a live handle and `out` must point to `out_len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn nichols_dims_compute(
    b: *const NicholsBraiding,
    n_max: usize,
    work_budget: u64,
    out: *mut usize,
    out_len: usize,
) -> NicholsStatus {
    guard(|| {
        let Some(b) = b.as_ref() else {
            set_error("null braiding");
            return NicholsStatus::NullPointer;
        };
        if out.is_null() {
            set_error("null output buffer");
            return NicholsStatus::NullPointer;
        }
        if out_len < n_max + 1 {
            set_error(format!("output buffer holds {out_len} entries, {} needed", n_max + 1));
            return NicholsStatus::BufferTooSmall;
        }
        let out = std::slice::from_raw_parts_mut(out, n_max + 1);
        let (prefix, status) = match nichols_dims(&b.inner, n_max, &options(work_budget)) {
            Ok(p) => (p, NicholsStatus::Ok),
            Err(e) => {
                let status = fail(&e);
                match e {
                    Error::Budget { partial: Some(p), .. } => (*p, status),
                    _ => return status,
                }
            }
        };
        for (n, slot) in out.iter_mut().enumerate() {
            *slot = prefix.get(n).unwrap_or(NICHOLS_DIM_NA);
        }
        status
    })
}

/// Compares the `d`-atic cover with the Nichols algebra through degree
/// `n_max`. Returns `NICHOLS_STATUS_OK` when they agree and
/// `NICHOLS_STATUS_VERDICT` on a mismatch, whose degree is written to
/// `mismatch_degree` (when non-null).
///
/// # Safety
/// `b` must be a live handle; `mismatch_degree` must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn nichols_cover_check(
    b: *const NicholsBraiding,
    d: usize,
    n_max: usize,
    work_budget: u64,
    mismatch_degree: *mut usize,
) -> NicholsStatus {
    guard(|| {
        let Some(b) = b.as_ref() else {
            set_error("null braiding");
            return NicholsStatus::NullPointer;
        };
        match cover_check(&b.inner, d, n_max, &options(work_budget)) {
            Ok(r) => match r.verdict {
                CoverVerdict::Agree { .. } => NicholsStatus::Ok,
                CoverVerdict::Mismatch { degree, .. } => {
                    if !mismatch_degree.is_null() {
                        *mismatch_degree = degree;
                    }
                    NicholsStatus::Verdict
                }
            },
            Err(e) => fail(&e),
        }
    })
}

/// Runs a CLI job given as JSON. The rendered output is stored in `*output`
/// (release it with [`nichols_string_free`]) and the exit status in
/// `*exit_code`. The return value reports whether the job could be read.
///
/// # Safety
/// `job` must be a nul-terminated string; `output` and `exit_code` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn nichols_run_job(job: *const c_char, output: *mut *mut c_char, exit_code: *mut c_int) -> NicholsStatus {
    guard(|| {
        if output.is_null() || exit_code.is_null() {
            set_error("null output pointer");
            return NicholsStatus::NullPointer;
        }
        let text = match str_arg(job) {
            Ok(s) => s,
            Err(s) => return s,
        };
        let job: Job = match serde_json::from_str(text) {
            Ok(j) => j,
            Err(e) => return fail(&Error::from(e)),
        };
        let outcome = cli::run(&job, Path::new("."));
        *exit_code = outcome.code;
        *output = CString::new(outcome.output).map_or(ptr::null_mut(), CString::into_raw);
        NicholsStatus::Ok
    })
}

/// # Safety
/// `s` must come from this library and not be freed yet, or be null.
#[no_mangle]
pub unsafe extern "C" fn nichols_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
