//! C interface to the moment problem solver.
//!
//! Every fallible function returns an [`SsStatus`] and writes results through
//! out-pointers. Strings handed out by the library are released with
//! [`ss_string_free`]; handles with their own `_free` function. After a
//! failure, [`ss_last_error_message`] describes it (per thread).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schur_stieltjes::algebra::{parse_field, Parameter, Polynomial, RationalFunction};
use schur_stieltjes::hankel::{MomentSequence, Parity};
use schur_stieltjes::report::{error_json, run, Command, Problem, ProblemInput, Report};
use schur_stieltjes::Error;

/// Status codes; the nonzero values below 20 equal the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsStatus {
    Ok = 0,
    Parse = 2,
    NotRegular = 3,
    InsufficientMoments = 4,
    NoNormalIndex = 5,
    InadmissibleParameter = 6,
    InternalConsistency = 7,
    NullPointer = 20,
    InvalidUtf8 = 21,
    OutOfRange = 22,
    Panic = 23,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsParity {
    /// Take the parity from the number of moments.
    Infer = 0,
    Odd = 1,
    Even = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsCommand {
    Analyze = 0,
    Expand = 1,
    Solve = 2,
    String = 3,
}

impl From<SsCommand> for Command {
    fn from(c: SsCommand) -> Self {
        match c {
            SsCommand::Analyze => Command::Analyze,
            SsCommand::Expand => Command::Expand,
            SsCommand::Solve => Command::Solve,
            SsCommand::String => Command::String,
        }
    }
}

/// A moment problem: moments plus optional parity, free moment and parameter.
pub struct SsProblem {
    inner: Problem,
}

/// The result of expanding a problem.
pub struct SsExpansion {
    report: Report,
}

struct Failure {
    status: SsStatus,
    message: String,
}

impl Failure {
    fn new(status: SsStatus, message: impl Into<String>) -> Self {
        Failure { status, message: message.into() }
    }
}

fn status_of(e: &Error) -> SsStatus {
    match e.exit_code() {
        2 => SsStatus::Parse,
        3 => SsStatus::NotRegular,
        4 => SsStatus::InsufficientMoments,
        5 => SsStatus::NoNormalIndex,
        6 => SsStatus::InadmissibleParameter,
        _ => SsStatus::InternalConsistency,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { status: status_of(&e), message: e.to_string() }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SsStatus::Ok
        }
        Ok(Err(fail)) => {
            set_error(&fail.message);
            fail.status
        }
        Err(_) => {
            set_error("internal panic");
            SsStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::new(SsStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Failure::new(SsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn texts<'a>(p: *const *const c_char, count: usize, what: &str) -> Result<Vec<&'a str>, Failure> {
    if count == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(Failure::new(SsStatus::NullPointer, format!("{what} is null")));
    }
    (0..count).map(|i| text(*p.add(i), &format!("{what}[{i}]"))).collect()
}

fn out_check<T>(out: *mut T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::new(SsStatus::NullPointer, "output pointer is null"));
    }
    Ok(())
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior nul").into_raw()
}

unsafe fn problem_ref<'a>(p: *const SsProblem) -> Result<&'a SsProblem, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(SsStatus::NullPointer, "problem handle is null"))
}

unsafe fn expansion_ref<'a>(p: *const SsExpansion) -> Result<&'a SsExpansion, Failure> {
    p.as_ref().ok_or_else(|| Failure::new(SsStatus::NullPointer, "expansion handle is null"))
}

/// Build a problem from `count` rational strings such as `"3/4"`.
///
/// # Safety
/// `moments` must point to `count` valid NUL-terminated strings and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn ss_problem_from_moments(
    moments: *const *const c_char,
    count: usize,
    out: *mut *mut SsProblem,
) -> SsStatus {
    guard(|| {
        out_check(out)?;
        let values = texts(moments, count, "moments")?
            .iter()
            .enumerate()
            .map(|(i, m)| parse_field(&format!("moments[{i}]"), m))
            .collect::<Result<Vec<_>, _>>()?;
        let inner = Problem {
            moments: MomentSequence::new(values)?,
            parity: None,
            kappa: None,
            k: None,
            free_tail: None,
            tau: None,
        };
        *out = Box::into_raw(Box::new(SsProblem { inner }));
        Ok(())
    })
}

/// Build a problem from a JSON document in the CLI input format.
///
/// # Safety
/// `json` must be a valid NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_problem_from_json(json: *const c_char, out: *mut *mut SsProblem) -> SsStatus {
    guard(|| {
        out_check(out)?;
        let inner = ProblemInput::from_json(text(json, "json")?)?.parse()?;
        *out = Box::into_raw(Box::new(SsProblem { inner }));
        Ok(())
    })
}

/// # Safety
/// `problem` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ss_problem_set_parity(problem: *mut SsProblem, parity: SsParity) -> SsStatus {
    guard(|| {
        let p = problem.as_mut().ok_or_else(|| Failure::new(SsStatus::NullPointer, "problem handle is null"))?;
        p.inner.parity = match parity {
            SsParity::Infer => None,
            SsParity::Odd => Some(Parity::Odd),
            SsParity::Even => Some(Parity::Even),
        };
        Ok(())
    })
}

/// Set the free moment `s_{2n−1}` of an odd problem; a null `value` clears it.
///
/// # Safety
/// `problem` must be a live handle; `value` null or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ss_problem_set_free_tail(problem: *mut SsProblem, value: *const c_char) -> SsStatus {
    guard(|| {
        let p = problem.as_mut().ok_or_else(|| Failure::new(SsStatus::NullPointer, "problem handle is null"))?;
        p.inner.free_tail = if value.is_null() { None } else { Some(parse_field("free_tail", text(value, "value")?)?) };
        Ok(())
    })
}

/// Set the parameter to `num/den` (ascending coefficient strings), or to
/// infinity when `den_len` is 0.
///
/// # Safety
/// `problem` must be a live handle; `num` and `den` must point to `num_len`
/// and `den_len` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn ss_problem_set_tau(
    problem: *mut SsProblem,
    num: *const *const c_char,
    num_len: usize,
    den: *const *const c_char,
    den_len: usize,
) -> SsStatus {
    guard(|| {
        let p = problem.as_mut().ok_or_else(|| Failure::new(SsStatus::NullPointer, "problem handle is null"))?;
        if den_len == 0 {
            p.inner.tau = Some(Parameter::Infinity);
            return Ok(());
        }
        let poly = |items: Vec<&str>, field: &str| -> Result<Polynomial, Failure> {
            let cs = items
                .iter()
                .enumerate()
                .map(|(i, c)| parse_field(&format!("{field}[{i}]"), c))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Polynomial::new(cs))
        };
        let n = poly(texts(num, num_len, "num")?, "tau.num")?;
        let d = poly(texts(den, den_len, "den")?, "tau.den")?;
        let f = RationalFunction::new(n, d).map_err(|_| Failure::new(SsStatus::Parse, "tau has a zero denominator"))?;
        p.inner.tau = Some(Parameter::Function(f));
        Ok(())
    })
}

/// # Safety
/// `problem` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ss_problem_free(problem: *mut SsProblem) {
    if !problem.is_null() {
        drop(Box::from_raw(problem));
    }
}

/// Run a command and write its JSON report to `out_json`. On failure the
/// JSON error object is written instead and the status says why.
///
/// # Safety
/// `problem` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_run(problem: *const SsProblem, command: SsCommand, out_json: *mut *mut c_char) -> SsStatus {
    let mut doc = None;
    let status = guard(|| {
        out_check(out_json)?;
        let p = problem_ref(problem)?;
        match run(command.into(), &p.inner) {
            Ok(r) => {
                doc = Some(r.to_json());
                Ok(())
            }
            Err(e) => {
                doc = Some(error_json(&e).to_string());
                Err(e.into())
            }
        }
    });
    if let Some(d) = doc {
        *out_json = to_c_string(d);
    }
    status
}

/// Expand a problem into a handle.
///
/// # Safety
/// `problem` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_expand(problem: *const SsProblem, out: *mut *mut SsExpansion) -> SsStatus {
    guard(|| {
        out_check(out)?;
        let report = run(Command::Expand, &problem_ref(problem)?.inner)?;
        *out = Box::into_raw(Box::new(SsExpansion { report }));
        Ok(())
    })
}

/// Number of steps `N`, or 0 for a null handle.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ss_expansion_len(e: *const SsExpansion) -> usize {
    e.as_ref().and_then(|e| e.report.expansion.as_ref()).map_or(0, |x| x.steps.len())
}

/// `κ_N`, the number of negative squares of the top Hankel block.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_expansion_kappa(e: *const SsExpansion, out: *mut usize) -> SsStatus {
    guard(|| {
        out_check(out)?;
        *out = expansion_ref(e)?.report.kappa_n;
        Ok(())
    })
}

/// `k_N`, the number of negative squares of the matching shifted block.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_expansion_k(e: *const SsExpansion, out: *mut usize) -> SsStatus {
    guard(|| {
        out_check(out)?;
        *out = expansion_ref(e)?.report.k_n;
        Ok(())
    })
}

/// Step `index` (0-based) as `{"order", "m", "l"}`.
///
/// # Safety
/// `e` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_expansion_step_json(
    e: *const SsExpansion,
    index: usize,
    out_json: *mut *mut c_char,
) -> SsStatus {
    guard(|| {
        out_check(out_json)?;
        let steps = &expansion_ref(e)?.report.expansion.as_ref().expect("expand report has steps").steps;
        let step = steps
            .get(index)
            .ok_or_else(|| Failure::new(SsStatus::OutOfRange, format!("step {index} of {}", steps.len())))?;
        *out_json = to_c_string(serde_json::to_string(step).expect("step serializes"));
        Ok(())
    })
}

/// The full expansion report as JSON.
///
/// # Safety
/// `e` must be a live handle and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_expansion_to_json(e: *const SsExpansion, out_json: *mut *mut c_char) -> SsStatus {
    guard(|| {
        out_check(out_json)?;
        *out_json = to_c_string(expansion_ref(e)?.report.to_json());
        Ok(())
    })
}

/// # Safety
/// `e` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ss_expansion_free(e: *mut SsExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// One-shot: parse `input` (CLI JSON format), run `command`, write the
/// report or error object to `out_json`.
///
/// # Safety
/// `input` must be a NUL-terminated string and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ss_run_json(command: SsCommand, input: *const c_char, out_json: *mut *mut c_char) -> SsStatus {
    let mut problem = ptr::null_mut();
    let status = ss_problem_from_json(input, &mut problem);
    if status != SsStatus::Ok {
        if !out_json.is_null() {
            let message = LAST_ERROR.with(|e| e.borrow().as_ref().map(|c| c.to_string_lossy().into_owned()));
            let e = Error::Parse { field: "input".into(), message: message.unwrap_or_default() };
            let e = match status {
                SsStatus::Parse => e,
                _ => Error::MalformedInput(e.to_string()),
            };
            *out_json = to_c_string(error_json(&e).to_string());
        }
        return status;
    }
    let status = ss_run(problem, command, out_json);
    ss_problem_free(problem);
    status
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn ss_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ss_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
