use std::ffi::{c_char, CStr, CString};
use std::ptr;

use endoaip_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(endoaip_last_error()) }
        .to_string_lossy()
        .into_owned()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    endoaip_string_free(s);
    out
}

const Z4: &str = r#"{"ring": {"kind": "cyclic", "n": 4}, "kind": "z_module", "orders": [4]}"#;
const T2: &str = r#"{"kind": "triangular", "base": {"kind": "cyclic", "n": 2}, "k": 2}"#;

#[test]
fn module_check_and_replay() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(
            endoaip_module_from_json(c(Z4).as_ptr(), ptr::null(), &mut m),
            EndoaipStatus::Ok
        );
        assert_eq!(endoaip_module_order(m), 4);

        let mut holds = true;
        let mut json = ptr::null_mut();
        let st = endoaip_module_check(m, c("endo_aip").as_ptr(), ptr::null(), &mut holds, &mut json);
        assert_eq!(st, EndoaipStatus::Ok);
        assert!(!holds);
        let verdict = take(json);
        let v: serde_json::Value = serde_json::from_str(&verdict).unwrap();
        assert_eq!(v["witness"]["submodule"], serde_json::json!([[0], [2]]));

        let mut valid = false;
        let st = endoaip_module_replay(m, c(&verdict).as_ptr(), ptr::null(), &mut valid);
        assert_eq!(st, EndoaipStatus::Ok);
        assert!(valid, "{}", last_error());

        // A tampered witness is rejected with a reason.
        let forged = verdict.replace("[[0],[2]]", "[[0]]");
        assert_ne!(forged, verdict);
        let st = endoaip_module_replay(m, c(&forged).as_ptr(), ptr::null(), &mut valid);
        assert_eq!(st, EndoaipStatus::Ok);
        assert!(!valid);
        assert!(!last_error().is_empty());

        endoaip_module_free(m);
    }
}

#[test]
fn ring_handles() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(
            endoaip_ring_from_json(c(T2).as_ptr(), ptr::null(), &mut r),
            EndoaipStatus::Ok
        );
        assert_eq!(endoaip_ring_order(r), 8);

        let mut holds = true;
        let st = endoaip_ring_check(
            r,
            c("centrally_aip").as_ptr(),
            false,
            ptr::null(),
            &mut holds,
            ptr::null_mut(),
        );
        assert_eq!(st, EndoaipStatus::Ok);
        assert!(!holds);

        let mut m = ptr::null_mut();
        assert_eq!(endoaip_module_regular(r, &mut m), EndoaipStatus::Ok);
        let mut json = ptr::null_mut();
        let st = endoaip_module_check(m, c("ring:aip").as_ptr(), ptr::null(), &mut holds, &mut json);
        assert_eq!(st, EndoaipStatus::Ok);
        assert!(holds);
        let mut valid = false;
        assert_eq!(
            endoaip_module_replay(m, json, ptr::null(), &mut valid),
            EndoaipStatus::Ok
        );
        assert!(valid, "{}", last_error());
        endoaip_string_free(json);

        let mut r2 = ptr::null_mut();
        assert_eq!(endoaip_module_ring(m, &mut r2), EndoaipStatus::Ok);
        assert_eq!(endoaip_ring_order(r2), 8);
        endoaip_ring_free(r2);
        endoaip_module_free(m);
        endoaip_ring_free(r);
    }
}

#[test]
fn error_statuses() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(
            endoaip_ring_from_json(ptr::null(), ptr::null(), &mut r),
            EndoaipStatus::NullPointer
        );
        assert!(last_error().contains("null"));
        assert_eq!(
            endoaip_ring_from_json(c("{").as_ptr(), ptr::null(), &mut r),
            EndoaipStatus::Malformed
        );
        assert_eq!(
            endoaip_ring_from_json(c(Z4).as_ptr(), ptr::null(), &mut r),
            EndoaipStatus::Malformed
        );
        let bad_utf8 = [0xffu8, 0xfe, 0];
        assert_eq!(
            endoaip_ring_from_json(bad_utf8.as_ptr().cast(), ptr::null(), &mut r),
            EndoaipStatus::InvalidUtf8
        );
        let tiny = EndoaipCaps {
            ring: 4,
            ..endoaip_default_caps()
        };
        assert_eq!(
            endoaip_ring_from_json(c(T2).as_ptr(), &tiny, &mut r),
            EndoaipStatus::SizeCapExceeded
        );
        assert!(r.is_null());

        let mut m = ptr::null_mut();
        assert_eq!(
            endoaip_module_from_json(c(Z4).as_ptr(), ptr::null(), &mut m),
            EndoaipStatus::Ok
        );
        let st = endoaip_module_check(m, c("no_such").as_ptr(), ptr::null(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(st, EndoaipStatus::UnknownProperty);
        let st = endoaip_module_check(
            ptr::null(),
            c("rickart").as_ptr(),
            ptr::null(),
            ptr::null_mut(),
            ptr::null_mut(),
        );
        assert_eq!(st, EndoaipStatus::NullPointer);
        endoaip_module_free(m);

        assert_eq!(endoaip_ring_order(ptr::null()), 0);
        endoaip_string_free(ptr::null_mut());
        endoaip_ring_free(ptr::null_mut());
        endoaip_module_free(ptr::null_mut());
    }
}

#[test]
fn describe_and_suite() {
    unsafe {
        let mut out = ptr::null_mut();
        let z22 = r#"{"ring": {"kind": "cyclic", "n": 2}, "kind": "z_module", "orders": [2, 2]}"#;
        assert_eq!(
            endoaip_describe(c(z22).as_ptr(), ptr::null(), &mut out),
            EndoaipStatus::Ok
        );
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["module"]["uniform_dimension"], 2);

        let spec = c(
            r#"{"z_cyclic_max": 6, "z_pair_max": 3, "cyclic_ring_max": 4, "rings": [], "free_rank": 0, "random_z_modules": 0}"#,
        );
        let mut violations = usize::MAX;
        let st = endoaip_suite(spec.as_ptr(), c("HIER, SPEQ").as_ptr(), &mut out, &mut violations);
        assert_eq!(st, EndoaipStatus::Ok, "{}", last_error());
        assert_eq!(violations, 0);
        let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(report["theorems"].as_array().unwrap().len(), 2);

        let st = endoaip_suite(spec.as_ptr(), c("NOPE").as_ptr(), &mut out, ptr::null_mut());
        assert_ne!(st, EndoaipStatus::Ok);
        assert!(!last_error().is_empty());
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(endoaip_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
