//! C ABI over the `semisym` library.
//!
//! Polynomials cross the boundary as opaque `SemisymPoly` handles. Every
//! fallible function returns a `SemisymStatus`; on failure the message is
//! available from `semisym_last_error` on the same thread. Strings returned
//! through `char **` out-parameters are owned by the caller and released with
//! `semisym_string_free`. The header lives in `include/semisym.h`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use semisym::cli::parse_r;
use semisym::combinatorics::{order_test, Partition, Relation};
use semisym::diffops::{determinant_expand, Kind};
use semisym::exactalg::{json, parse_rational, MultiPoly};
use semisym::interpolation::{build_r, elementary_semisym};
use semisym::verify::{self, Suite, Sweep};
use semisym::{Ambient, Error};

/// Status codes; keep in sync with `include/semisym.h`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SemisymStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InadmissibleR = 3,
    Singular = 4,
    VerificationFailed = 5,
    Internal = 6,
}

/// Opaque handle to a polynomial in `n` variables over `Q(r)`.
pub struct SemisymPoly(MultiPoly);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SemisymStatus {
    match e {
        Error::InadmissibleR(..) | Error::Pole(..) | Error::DivisionByZero(_) => SemisymStatus::InadmissibleR,
        Error::Singular { .. } => SemisymStatus::Singular,
        Error::Mismatch(_) => SemisymStatus::VerificationFailed,
        Error::NonZeroRemainder(_) | Error::Invariant(_) => SemisymStatus::Internal,
        _ => SemisymStatus::InvalidArgument,
    }
}

struct Fail(SemisymStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SemisymStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<SemisymStatus, Fail>) -> SemisymStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == SemisymStatus::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SemisymStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SemisymStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// `NULL` selects the symbolic parameter.
unsafe fn r_arg(p: *const c_char, n: usize) -> Result<semisym::exactalg::ParamScalar, Fail> {
    let s = if p.is_null() { "sym" } else { str_arg(p, "r")? };
    Ok(parse_r(s, n)?)
}

unsafe fn ints<'a>(p: *const i64, len: usize, what: &str) -> Result<&'a [i64], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<SemisymStatus, Fail> {
    let c = CString::new(s).map_err(|_| Fail(SemisymStatus::Internal, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(SemisymStatus::Ok)
}

unsafe fn put_poly(out: *mut *mut SemisymPoly, p: MultiPoly) -> Result<SemisymStatus, Fail> {
    *out = Box::into_raw(Box::new(SemisymPoly(p)));
    Ok(SemisymStatus::Ok)
}

unsafe fn poly_arg<'a>(p: *const SemisymPoly) -> Result<&'a MultiPoly, Fail> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null("poly"))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn semisym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or an empty string.
///
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn semisym_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds `R_λ` in `n = len` variables.
///
/// # Safety
/// `lambda` must point to `len` readable integers, `r` must be null or a
/// NUL-terminated string, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_build_r(
    lambda: *const i64,
    len: usize,
    r: *const c_char,
    out: *mut *mut SemisymPoly,
) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let amb = Ambient { n: len, r: r_arg(r, len)? };
        let lam = Partition::new(ints(lambda, len, "lambda")?.to_vec(), len)?;
        put_poly(out, (*build_r(&amb, &lam)?).clone())
    })
}

/// Builds the elementary semisymmetric polynomial `e_m` in `n` variables.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_elementary(m: usize, n: usize, out: *mut *mut SemisymPoly) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        put_poly(out, elementary_semisym(m, n)?)
    })
}

/// Parses a polynomial from its canonical JSON form.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_poly_from_json(text: *const c_char, out: *mut *mut SemisymPoly) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        put_poly(out, json::from_json(str_arg(text, "text")?)?)
    })
}

/// Writes the canonical JSON form of `p` to `*out`.
///
/// # Safety
/// `p` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_poly_to_json(p: *const SemisymPoly, out: *mut *mut c_char) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, json::to_json(poly_arg(p)?))
    })
}

/// Writes a human-readable form of `p`, such as `z1 - z2 + z3 - r`, to `*out`.
///
/// # Safety
/// `p` must be a live handle and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_poly_to_string(p: *const SemisymPoly, out: *mut *mut c_char) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        put_string(out, poly_arg(p)?.to_string())
    })
}

/// Number of variables of `p`, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn semisym_poly_nvars(p: *const SemisymPoly) -> usize {
    p.as_ref().map_or(0, |h| h.0.nvars())
}

/// Value of `p` at `ρ+μ`, written to `*out` as a string such as `1/(2r+1)`.
///
/// # Safety
/// `p` must be a live handle, `mu` must point to `len` readable integers,
/// `r` must be null or a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_poly_eval_rho_plus(
    p: *const SemisymPoly,
    mu: *const i64,
    len: usize,
    r: *const c_char,
    out: *mut *mut c_char,
) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let f = poly_arg(p)?;
        let amb = Ambient { n: len, r: r_arg(r, len)? };
        put_string(out, f.eval(&amb.rho_plus(ints(mu, len, "mu")?))?.to_string())
    })
}

/// Applies `X(t)` (`kind = 'X'`) or `Y(t)` (`kind = 'Y'`) to `p`.
///
/// # Safety
/// `p` must be a live handle, `t` a NUL-terminated rational such as `"3/2"`,
/// `r` null or a NUL-terminated string, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_apply_operator(
    kind: c_char,
    t: *const c_char,
    r: *const c_char,
    p: *const SemisymPoly,
    out: *mut *mut SemisymPoly,
) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let kind = match kind as u8 {
            b'X' => Kind::X,
            b'Y' => Kind::Y,
            other => return Err(Fail(SemisymStatus::InvalidArgument, format!("unknown operator `{}`", other as char))),
        };
        let f = poly_arg(p)?;
        let amb = Ambient { n: f.nvars(), r: r_arg(r, f.nvars())? };
        let t = parse_rational(str_arg(t, "t")?)?;
        put_poly(out, determinant_expand(kind, &amb, &t)?.apply(f)?)
    })
}

/// Writes 1 to `*out` if `a` is below `b` in `relation`, else 0.
///
/// `relation` is one of `subseteq`, `sqsubseteq`, `dominance`,
/// `dominance_hom`, `prec`, `prec_hom`.
///
/// # Safety
/// `a` and `b` must each point to `len` readable integers, `relation` must
/// be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_order_test(
    a: *const i64,
    b: *const i64,
    len: usize,
    relation: *const c_char,
    out: *mut c_int,
) -> SemisymStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let rel: Relation = str_arg(relation, "relation")?.parse()?;
        *out = order_test(ints(a, len, "a")?, ints(b, len, "b")?, rel)? as c_int;
        Ok(SemisymStatus::Ok)
    })
}

/// Runs verification suites (`"all"` or a comma-separated list) with the
/// default sweeps and writes the JSON report to `*report`.
///
/// Returns `SEMISYM_VERIFICATION_FAILED` when a non-advisory case fails; the
/// report is written in that case too. `threads = 0` uses one per core.
///
/// # Safety
/// `suites` must be a NUL-terminated string, `r` null or a NUL-terminated
/// string, and `report` writable.
#[no_mangle]
pub unsafe extern "C" fn semisym_verify(
    suites: *const c_char,
    r: *const c_char,
    threads: usize,
    report: *mut *mut c_char,
) -> SemisymStatus {
    guard(|| {
        if report.is_null() {
            return Err(null("report"));
        }
        let list = Suite::parse_list(str_arg(suites, "suites")?)?;
        let r = r_arg(r, 1)?;
        if r.is_zero() {
            return Err(Fail(SemisymStatus::InadmissibleR, "r = 0 is not admissible".into()));
        }
        let rep = verify::run(&list, &Sweep::default(), &r, threads)?;
        put_string(report, rep.to_json())?;
        Ok(if rep.passed() { SemisymStatus::Ok } else { SemisymStatus::VerificationFailed })
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `p` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn semisym_poly_free(p: *mut SemisymPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned through a `char **` out-parameter; null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn semisym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

