//! Exercise the C ABI exactly as a C caller would: raw pointers in, status
//! codes and JSON strings out, explicit frees.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use nichols_capi::{
    nichols_braiding_dim, nichols_braiding_free, nichols_braiding_parse, nichols_cartan_json,
    nichols_hilbert_json, nichols_last_error, nichols_rank2_classes_json, nichols_relations_json,
    nichols_roots_json, nichols_string_free, nichols_weylgroupoid_dot, NicholsBraiding,
    NICHOLS_ERR_INVALID, NICHOLS_OK,
};

const SL3: &str = r#"{"kind":"diagonal_rou","order":3,"exponents":[[2,2],[2,2]]}"#;
const SL21: &str = r#"{"kind":"diagonal_rou","order":6,"exponents":[[2,5],[5,3]]}"#;
const B2: &str = r#"{"kind":"diagonal_generic","exponents":[[2,-2],[-2,4]]}"#;

fn parse(text: &str) -> *mut NicholsBraiding {
    let c = CString::new(text).unwrap();
    let mut handle: *mut NicholsBraiding = ptr::null_mut();
    let code = unsafe { nichols_braiding_parse(c.as_ptr(), &mut handle) };
    assert_eq!(code, NICHOLS_OK, "parse failed: {}", last_error());
    assert!(!handle.is_null());
    handle
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { nichols_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(nichols_last_error()) }.to_str().unwrap().to_owned()
}

#[test]
fn hilbert_series_through_the_abi() {
    let handle = parse(SL3);
    let mut dim = 0u32;
    assert_eq!(unsafe { nichols_braiding_dim(handle, &mut dim) }, NICHOLS_OK);
    assert_eq!(dim, 2);
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe { nichols_hilbert_json(handle, 12, 100_000, &mut out) };
    assert_eq!(code, NICHOLS_OK, "{}", last_error());
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 2, 4, 4, 5, 4, 4, 2, 1, 0, 0]));
    assert_eq!(v["total"], serde_json::json!(27));
    assert_eq!(v["factorization"]["factors"].as_array().unwrap().len(), 3);
    unsafe { nichols_braiding_free(handle) };
}

#[test]
fn cartan_and_relations_through_the_abi() {
    let handle = parse(B2);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { nichols_cartan_json(handle, &mut out) }, NICHOLS_OK);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["cartan"], serde_json::json!([[2, -2], [-1, 2]]));
    unsafe { nichols_braiding_free(handle) };

    let handle = parse(SL3);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { nichols_relations_json(handle, 3, 100_000, &mut out) }, NICHOLS_OK);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["relations"].as_array().unwrap().len(), 4);
    unsafe { nichols_braiding_free(handle) };
}

#[test]
fn roots_and_dot_through_the_abi() {
    let handle = parse(SL21);
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { nichols_roots_json(handle, &mut out) }, NICHOLS_OK);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["chambers"], serde_json::json!(6));
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 3);
    assert_eq!(v["violations"], serde_json::json!([]));

    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { nichols_weylgroupoid_dot(handle, &mut out) }, NICHOLS_OK);
    let dot = take_string(out);
    assert!(dot.starts_with("graph "));
    unsafe { nichols_braiding_free(handle) };
}

#[test]
fn rank2_classes_through_the_abi() {
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { nichols_rank2_classes_json(5, &mut out) }, NICHOLS_OK);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v, serde_json::json!([[1, 2, 2, 1, 3]]));
}

#[test]
fn failures_set_codes_and_messages() {
    // Unparseable description.
    let bad = CString::new("{\"kind\":\"wobble\"}").unwrap();
    let mut handle: *mut NicholsBraiding = ptr::null_mut();
    let code = unsafe { nichols_braiding_parse(bad.as_ptr(), &mut handle) };
    assert_eq!(code, NICHOLS_ERR_INVALID);
    assert!(handle.is_null());
    assert!(!last_error().is_empty());

    // Null pointers are rejected, not dereferenced.
    let code = unsafe { nichols_braiding_parse(ptr::null(), &mut handle) };
    assert_eq!(code, NICHOLS_ERR_INVALID);
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe { nichols_cartan_json(ptr::null(), &mut out) };
    assert_eq!(code, NICHOLS_ERR_INVALID);

    // A non-diagonal braiding refuses diagonal-only operations.
    let s3 = r#"{
        "kind": "group_yd",
        "points": 3,
        "generators": [[2,1,3],[2,3,1]],
        "class_rep": [2,1,3],
        "character": {"order": 2, "values": [{"element": [2,1,3], "exponent": 1}]}
    }"#;
    let handle = parse(s3);
    let mut out: *mut c_char = ptr::null_mut();
    let code = unsafe { nichols_cartan_json(handle, &mut out) };
    assert_eq!(code, NICHOLS_ERR_INVALID);
    assert!(last_error().contains("diagonal"));
    unsafe { nichols_braiding_free(handle) };

    // Frees of null are no-ops.
    unsafe { nichols_braiding_free(ptr::null_mut()) };
    unsafe { nichols_string_free(ptr::null_mut()) };
}
