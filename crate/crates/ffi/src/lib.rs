//! C ABI over `szlenk-calc`.
//!
//! Ordinals cross the boundary as opaque [`SzOrdinal`] handles; every other
//! value travels as a NUL-terminated UTF-8 string in the calculator's
//! canonical text form. Strings returned through `out` pointers are owned by
//! the caller and must be released with [`sz_string_free`]. Fallible calls
//! return an [`SzStatus`]; on failure the message is kept per thread and can
//! be fetched with [`sz_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use szlenk_calc::gamma::{gamma_node_classify, prob, GammaNode};
use szlenk_calc::rational::{parse_rational, render_rational};
use szlenk_calc::record::Record;
use szlenk_calc::szlenk::{attainable, sz_c_interval, sz_frak_g, sz_frak_s, IndexKind, NormingParams};
use szlenk_calc::{Error, ExtOrdinal, Ordinal};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SzStatus {
    Ok = 0,
    Parse = 1,
    Overflow = 2,
    DivisionByZero = 3,
    NotALimit = 4,
    Domain = 5,
    PreconditionViolated = 6,
    SizeBound = 7,
    InvariantViolation = 8,
    NotMember = 9,
    NotMaximal = 10,
    MixedEpsilon = 11,
    NullPointer = 12,
    InvalidUtf8 = 13,
    Panic = 14,
}

impl From<&Error> for SzStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => SzStatus::Parse,
            Error::Overflow(_) => SzStatus::Overflow,
            Error::DivisionByZero => SzStatus::DivisionByZero,
            Error::NotALimit(_) => SzStatus::NotALimit,
            Error::Domain(_) => SzStatus::Domain,
            Error::PreconditionViolated(_) => SzStatus::PreconditionViolated,
            Error::SizeBound(_) => SzStatus::SizeBound,
            Error::InvariantViolation(_) => SzStatus::InvariantViolation,
            Error::NotMember(_) => SzStatus::NotMember,
            Error::NotMaximal(_) => SzStatus::NotMaximal,
            Error::MixedEpsilon => SzStatus::MixedEpsilon,
        }
    }
}

/// An ordinal below ε₀.
pub struct SzOrdinal(Ordinal);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(SzStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(SzStatus::from(&e), e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn guard(body: impl FnOnce() -> Outcome<()>) -> SzStatus {
    let result = catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| Err(Failure(SzStatus::Panic, "internal panic".into())));
    match result {
        Ok(()) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SzStatus::Ok
        }
        Err(Failure(status, msg)) => {
            let msg = CString::new(msg.replace('\0', " ")).expect("NULs removed");
            LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
            status
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(SzStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SzStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a>(p: *const SzOrdinal) -> Outcome<&'a Ordinal> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| Failure(SzStatus::NullPointer, "null ordinal handle".into()))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(SzStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(SzStatus::InvalidUtf8, "NUL in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_ordinal(out: *mut *mut SzOrdinal, o: Ordinal) -> Outcome<()> {
    if out.is_null() {
        return Err(Failure(SzStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(SzOrdinal(o)));
    Ok(())
}

/// Parses an ordinal expression into a new handle.
///
/// # Safety
/// `src` must be a valid C string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_parse(src: *const c_char, out: *mut *mut SzOrdinal) -> SzStatus {
    guard(|| put_ordinal(out, Ordinal::parse(text(src)?)?))
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `o` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_free(o: *mut SzOrdinal) {
    if !o.is_null() {
        drop(Box::from_raw(o));
    }
}

/// Canonical ASCII rendering.
///
/// # Safety
/// `o` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_render(o: *const SzOrdinal, out: *mut *mut c_char) -> SzStatus {
    guard(|| put_string(out, handle(o)?.to_string()))
}

/// Writes the sign of the comparison of `a` with `b` to `out`.
///
/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_cmp(
    a: *const SzOrdinal,
    b: *const SzOrdinal,
    out: *mut c_int,
) -> SzStatus {
    guard(|| {
        let ord = handle(a)?.cmp(handle(b)?) as c_int;
        if out.is_null() {
            return Err(Failure(SzStatus::NullPointer, "null output pointer".into()));
        }
        *out = ord;
        Ok(())
    })
}

unsafe fn binary(
    a: *const SzOrdinal,
    b: *const SzOrdinal,
    out: *mut *mut SzOrdinal,
    f: fn(&Ordinal, &Ordinal) -> szlenk_calc::Result<Ordinal>,
) -> SzStatus {
    guard(|| put_ordinal(out, f(handle(a)?, handle(b)?)?))
}

/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_add(
    a: *const SzOrdinal,
    b: *const SzOrdinal,
    out: *mut *mut SzOrdinal,
) -> SzStatus {
    binary(a, b, out, Ordinal::checked_add)
}

/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_mul(
    a: *const SzOrdinal,
    b: *const SzOrdinal,
    out: *mut *mut SzOrdinal,
) -> SzStatus {
    binary(a, b, out, Ordinal::checked_mul)
}

/// # Safety
/// Both handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_pow(
    a: *const SzOrdinal,
    b: *const SzOrdinal,
    out: *mut *mut SzOrdinal,
) -> SzStatus {
    binary(a, b, out, Ordinal::checked_pow)
}

/// Left division: `a = b·q + r` with `r < b`.
///
/// # Safety
/// Both handles must be live and both outputs writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_divmod(
    a: *const SzOrdinal,
    b: *const SzOrdinal,
    quotient: *mut *mut SzOrdinal,
    remainder: *mut *mut SzOrdinal,
) -> SzStatus {
    guard(|| {
        if quotient.is_null() || remainder.is_null() {
            return Err(Failure(SzStatus::NullPointer, "null output pointer".into()));
        }
        let (q, r) = handle(a)?.divmod(handle(b)?)?;
        put_ordinal(quotient, q)?;
        put_ordinal(remainder, r)
    })
}

/// Least gamma number at or above `a`.
///
/// # Safety
/// `a` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_ordinal_gamma(a: *const SzOrdinal, out: *mut *mut SzOrdinal) -> SzStatus {
    guard(|| put_ordinal(out, handle(a)?.gamma()?))
}

/// Szlenk index of `C([0, ξ])`.
///
/// # Safety
/// `xi` must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_c_interval_index(xi: *const SzOrdinal, out: *mut *mut SzOrdinal) -> SzStatus {
    guard(|| {
        let v = sz_c_interval(handle(xi)?)?;
        put_ordinal(out, v.as_ordinal().expect("finite").clone())
    })
}

/// Writes 1 or 0 to `out`. `kind` is `"sz"`, `"i1"` or `"iinf"`; `value` is
/// an ordinal expression or `"infinity"`.
///
/// # Safety
/// Both strings must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_attainable(kind: *const c_char, value: *const c_char, out: *mut c_int) -> SzStatus {
    guard(|| {
        let k: IndexKind = text(kind)?.parse()?;
        let v = ExtOrdinal::parse(text(value)?)?;
        if out.is_null() {
            return Err(Failure(SzStatus::NullPointer, "null output pointer".into()));
        }
        *out = attainable(k, &v) as c_int;
        Ok(())
    })
}

/// Runs the first norming pipeline and writes its JSON record.
///
/// # Safety
/// Both strings must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_frak_g_record(
    alpha: *const c_char,
    theta: *const c_char,
    out: *mut *mut c_char,
) -> SzStatus {
    guard(|| {
        let params = NormingParams::new(Ordinal::parse(text(alpha)?)?, parse_rational(text(theta)?)?);
        let (v, audit) = sz_frak_g(&params)?;
        let rec = Record::new("szlenk frak-g", v.to_string())
            .input("alpha", params.alpha.to_string())
            .input("theta", render_rational(&params.theta))
            .with_audit(&audit);
        put_string(out, rec.to_json())
    })
}

/// Runs the second norming pipeline and writes its JSON record.
///
/// # Safety
/// All strings must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_frak_s_record(
    alpha: *const c_char,
    beta: *const c_char,
    theta: *const c_char,
    out: *mut *mut c_char,
) -> SzStatus {
    guard(|| {
        let params = NormingParams::new(Ordinal::parse(text(alpha)?)?, parse_rational(text(theta)?)?)
            .with_beta(Ordinal::parse(text(beta)?)?);
        let (v, audit) = sz_frak_s(&params)?;
        let rec = Record::new("szlenk frak-s", v.to_string())
            .input("alpha", params.alpha.to_string())
            .input("beta", params.beta.as_ref().expect("set").to_string())
            .input("theta", render_rational(&params.theta))
            .with_audit(&audit);
        put_string(out, rec.to_json())
    })
}

/// Writes `"not-member"`, `"member"` or `"maximal"` for `node` in `Γ_ξ`.
///
/// # Safety
/// Both strings must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_gnode_classify(
    node: *const c_char,
    xi: *const c_char,
    out: *mut *mut c_char,
) -> SzStatus {
    guard(|| {
        let t: GammaNode = text(node)?.parse()?;
        let m = gamma_node_classify(&t, &Ordinal::parse(text(xi)?)?);
        put_string(out, m.to_string())
    })
}

/// Writes the exact weight of `node` in `Γ_ξ` as `p/q`.
///
/// # Safety
/// Both strings must be valid and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sz_gnode_prob(node: *const c_char, xi: *const c_char, out: *mut *mut c_char) -> SzStatus {
    guard(|| {
        let t: GammaNode = text(node)?.parse()?;
        let p = prob(&t, &Ordinal::parse(text(xi)?)?)?;
        put_string(out, render_rational(&p))
    })
}

/// Runs a command line (without the program name) and writes its standard
/// output and error text. Returns the process exit status.
///
/// # Safety
/// `argv` must hold `argc` valid C strings; `out` and `err` may be null.
#[no_mangle]
pub unsafe extern "C" fn sz_run_cli(
    argc: c_int,
    argv: *const *const c_char,
    out: *mut *mut c_char,
    err: *mut *mut c_char,
) -> c_int {
    let mut args = vec!["szlenk".to_owned()];
    for i in 0..argc.max(0) as usize {
        match text(*argv.add(i)) {
            Ok(s) => args.push(s.to_owned()),
            Err(_) => return 2,
        }
    }
    let (code, stdout, stderr) = match catch_unwind(|| szlenk_calc::cli::run(args)) {
        Ok(r) => r,
        Err(_) => return 70,
    };
    if !out.is_null() {
        *out = CString::new(stdout).map_or(ptr::null_mut(), CString::into_raw);
    }
    if !err.is_null() {
        *err = CString::new(stderr).map_or(ptr::null_mut(), CString::into_raw);
    }
    code
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// A copy of the calling thread's last error message, or null if the last
/// call succeeded. Free with [`sz_string_free`].
#[no_mangle]
pub extern "C" fn sz_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().clone().map_or(ptr::null_mut(), CString::into_raw))
}
