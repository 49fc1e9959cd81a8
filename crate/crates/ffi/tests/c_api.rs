use std::ffi::{c_char, CStr, CString};
use std::ptr;

use schur_stieltjes_ffi::*;

fn owned(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { ss_string_free(s) };
    text
}

fn last_error() -> Option<String> {
    let p = ss_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn problem(moments: &[&str]) -> (SsStatus, *mut SsProblem) {
    let owned: Vec<CString> = moments.iter().map(|m| CString::new(*m).unwrap()).collect();
    let ptrs: Vec<*const c_char> = owned.iter().map(|c| c.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let status = unsafe { ss_problem_from_moments(ptrs.as_ptr(), ptrs.len(), &mut out) };
    (status, out)
}

#[test]
fn expansion_handle_exposes_steps() {
    let (status, p) = problem(&["1", "1"]);
    assert_eq!(status, SsStatus::Ok);
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { ss_expand(p, &mut e) }, SsStatus::Ok);
    assert_eq!(unsafe { ss_expansion_len(e) }, 1);
    let (mut kappa, mut k) = (9, 9);
    assert_eq!(unsafe { ss_expansion_kappa(e, &mut kappa) }, SsStatus::Ok);
    assert_eq!(unsafe { ss_expansion_k(e, &mut k) }, SsStatus::Ok);
    assert_eq!((kappa, k), (0, 0));

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { ss_expansion_step_json(e, 0, &mut s) }, SsStatus::Ok);
    let step: serde_json::Value = serde_json::from_str(&owned(s)).unwrap();
    assert!(step.get("m").is_some() && step.get("l").is_some());

    assert_eq!(unsafe { ss_expansion_step_json(e, 1, &mut s) }, SsStatus::OutOfRange);
    assert!(last_error().unwrap().contains("step 1"));

    assert_eq!(unsafe { ss_expansion_to_json(e, &mut s) }, SsStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&owned(s)).unwrap();
    assert_eq!(report["command"], "expand");
    assert_eq!(report["verification"]["match"], true);
    unsafe {
        ss_expansion_free(e);
        ss_problem_free(p);
    }
}

#[test]
fn status_codes_match_cli_exit_codes() {
    let (status, _) = problem(&["1", "x"]);
    assert_eq!(status, SsStatus::Parse);
    assert!(last_error().unwrap().contains("moments[1]"));

    let (status, p) = problem(&["0", "0"]);
    assert_eq!(status, SsStatus::Ok);
    let mut e = ptr::null_mut();
    assert_eq!(unsafe { ss_expand(p, &mut e) }, SsStatus::NoNormalIndex);
    assert!(e.is_null());
    unsafe { ss_problem_free(p) };
}

#[test]
fn run_json_writes_report_or_error() {
    let input = CString::new(r#"{"moments":["1","1","2"]}"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ss_run_json(SsCommand::Analyze, input.as_ptr(), &mut out) }, SsStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&owned(out)).unwrap();
    assert_eq!(v["command"], "analyze");
    assert!(last_error().is_none());

    let bad = CString::new(r#"{"moments":["1"],"bogus":1}"#).unwrap();
    assert_eq!(unsafe { ss_run_json(SsCommand::Expand, bad.as_ptr(), &mut out) }, SsStatus::Parse);
    let v: serde_json::Value = serde_json::from_str(&owned(out)).unwrap();
    assert_eq!(v["error"]["exit_code"], 2);
}

#[test]
fn setters_change_the_problem() {
    let (_, p) = problem(&["1", "1", "2"]);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ss_problem_set_parity(p, SsParity::Odd) }, SsStatus::Ok);
    assert_eq!(unsafe { ss_run(p, SsCommand::Analyze, &mut out) }, SsStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&owned(out)).unwrap();
    assert_eq!(v["parity"], "odd");

    let tail = CString::new("5").unwrap();
    assert_eq!(unsafe { ss_problem_set_free_tail(p, tail.as_ptr()) }, SsStatus::Ok);
    assert_eq!(unsafe { ss_problem_set_free_tail(p, ptr::null()) }, SsStatus::Ok);
    assert_eq!(unsafe { ss_problem_set_tau(p, ptr::null(), 0, ptr::null(), 0) }, SsStatus::Ok);

    let one = CString::new("1").unwrap();
    let zero = CString::new("0").unwrap();
    let num = [one.as_ptr()];
    let den = [zero.as_ptr()];
    assert_eq!(unsafe { ss_problem_set_tau(p, num.as_ptr(), 1, den.as_ptr(), 1) }, SsStatus::Parse);
    unsafe { ss_problem_free(p) };
}

#[test]
fn null_pointers_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ss_problem_from_json(ptr::null(), &mut out) }, SsStatus::NullPointer);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { ss_run(ptr::null(), SsCommand::Expand, &mut json) }, SsStatus::NullPointer);
    assert_eq!(unsafe { ss_expansion_len(ptr::null()) }, 0);
    unsafe {
        ss_problem_free(ptr::null_mut());
        ss_expansion_free(ptr::null_mut());
        ss_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(ss_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/schur_stieltjes.h")).unwrap();
    for name in [
        "ss_problem_from_moments",
        "ss_problem_from_json",
        "ss_problem_set_parity",
        "ss_problem_set_free_tail",
        "ss_problem_set_tau",
        "ss_problem_free",
        "ss_run",
        "ss_expand",
        "ss_expansion_len",
        "ss_expansion_kappa",
        "ss_expansion_k",
        "ss_expansion_step_json",
        "ss_expansion_to_json",
        "ss_expansion_free",
        "ss_run_json",
        "ss_string_free",
        "ss_last_error_message",
        "ss_version",
        "typedef struct SsProblem SsProblem",
        "SS_STATUS_NO_NORMAL_INDEX = 5",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
