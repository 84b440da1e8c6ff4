use std::ffi::{c_char, CStr, CString};
use std::ptr;

use domcount_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { dc_string_free(s) };
    out
}

fn last_error() -> String {
    let p = dc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn family(spec: &str) -> *mut DcGraph {
    let spec = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { dc_graph_from_family(spec.as_ptr(), &mut g) }, DcStatus::Ok);
    g
}

#[test]
fn counts_through_the_abi() {
    let g = family("cycle:4");
    let mut out = ptr::null_mut();
    let ds = CString::new("ds").unwrap();
    assert_eq!(unsafe { dc_count_structure(g, ds.as_ptr(), &mut out) }, DcStatus::Ok);
    assert_eq!(take(out), "11");
    assert!(dc_last_error().is_null());

    let cond = CString::new("dominating").unwrap();
    let weights = CString::new("1,2").unwrap();
    assert_eq!(
        unsafe { dc_count_legal(g, cond.as_ptr(), 2, true, weights.as_ptr(), &mut out) },
        DcStatus::Ok
    );
    // D_{C_4}(2) = 6*4 + 4*8 + 16
    assert_eq!(take(out), "72");

    assert_eq!(unsafe { dc_domination_polynomial(g, false, &mut out) }, DcStatus::Ok);
    assert_eq!(take(out), r#"["0","0","6","4","1"]"#);

    let hind = CString::new("hind").unwrap();
    assert_eq!(unsafe { dc_hom_count(g, hind.as_ptr(), false, &mut out) }, DcStatus::Ok);
    assert_eq!(take(out), "11");
    assert_eq!(unsafe { dc_hom_count(g, hind.as_ptr(), true, &mut out) }, DcStatus::Ok);
    assert_eq!(take(out), "7");

    assert_eq!(unsafe { dc_graph_to_graph6(g, &mut out) }, DcStatus::Ok);
    assert_eq!(take(out), "Cl");
    assert_eq!(unsafe { dc_graph_vertex_count(g) }, 4);
    unsafe { dc_graph_free(g) };
}

#[test]
fn graph_constructors() {
    let text = CString::new("A_").unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { dc_graph_from_graph6(text.as_ptr(), &mut g) }, DcStatus::Ok);
    assert_eq!(unsafe { dc_graph_vertex_count(g) }, 2);
    unsafe { dc_graph_free(g) };

    let edges = [0u32, 1, 1, 2, 2, 0];
    assert_eq!(
        unsafe { dc_graph_from_edges(3, edges.as_ptr(), 3, &mut g) },
        DcStatus::Ok
    );
    let mut out = ptr::null_mut();
    let ds = CString::new("ds").unwrap();
    assert_eq!(unsafe { dc_count_structure(g, ds.as_ptr(), &mut out) }, DcStatus::Ok);
    assert_eq!(take(out), "7");
    unsafe { dc_graph_free(g) };

    let bad = [0u32, 5];
    assert_eq!(
        unsafe { dc_graph_from_edges(3, bad.as_ptr(), 1, &mut g) },
        DcStatus::InvalidInput
    );
    assert_eq!(
        unsafe { dc_graph_from_edges(3, ptr::null(), 1, &mut g) },
        DcStatus::NullArgument
    );
    assert_eq!(unsafe { dc_graph_from_edges(3, ptr::null(), 0, &mut g) }, DcStatus::Ok);
    unsafe { dc_graph_free(g) };
    unsafe { dc_graph_free(ptr::null_mut()) };
}

#[test]
fn bound_checks_return_json() {
    let g = family("cycle:4");
    let mut out = ptr::null_mut();
    let check = CString::new("ds").unwrap();
    assert_eq!(unsafe { dc_bound_check(g, check.as_ptr(), &mut out) }, DcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v[0]["lhs"], "1331");
    assert_eq!(v[0]["rhs"], "2401");
    assert_eq!(v[0]["verdict"], "holds");

    let check = CString::new("background").unwrap();
    assert_eq!(unsafe { dc_bound_check(g, check.as_ptr(), &mut out) }, DcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v[1]["check"], "kahn-zhao");
    assert_eq!(v[1]["verdict"], "equality");
    unsafe { dc_graph_free(g) };

    let p3 = family("path:3");
    let check = CString::new("ds").unwrap();
    assert_eq!(
        unsafe { dc_bound_check(p3, check.as_ptr(), &mut out) },
        DcStatus::NotRegular
    );
    assert!(last_error().contains("regular"));
    unsafe { dc_graph_free(p3) };
}

#[test]
fn error_statuses() {
    let mut g = ptr::null_mut();
    let bad = CString::new("A\u{7f}").unwrap();
    assert_eq!(
        unsafe { dc_graph_from_graph6(bad.as_ptr(), &mut g) },
        DcStatus::InvalidInput
    );
    assert!(!last_error().is_empty());
    assert_eq!(
        unsafe { dc_graph_from_graph6(ptr::null(), &mut g) },
        DcStatus::NullArgument
    );
    assert!(last_error().contains("text"));

    let latin1 = [0xffu8, 0];
    assert_eq!(
        unsafe { dc_graph_from_family(latin1.as_ptr().cast(), &mut g) },
        DcStatus::InvalidUtf8
    );

    let big = family("cycle:40");
    let ds = CString::new("ds").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { dc_count_structure(big, ds.as_ptr(), &mut out) },
        DcStatus::CapExceeded
    );
    assert!(out.is_null());
    unsafe { dc_graph_free(big) };

    let version = unsafe { CStr::from_ptr(dc_version()) }.to_str().unwrap();
    assert_eq!(version, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/domcount.h")).unwrap();
    for symbol in [
        "dc_version",
        "dc_set_cap_bits",
        "dc_graph_from_graph6",
        "dc_graph_from_family",
        "dc_graph_from_edges",
        "dc_graph_free",
        "dc_graph_vertex_count",
        "dc_graph_to_graph6",
        "dc_count_structure",
        "dc_count_legal",
        "dc_domination_polynomial",
        "dc_hom_count",
        "dc_bound_check",
        "dc_last_error",
        "dc_string_free",
        "typedef struct DcGraph DcGraph",
        "DC_STATUS_CAP_EXCEEDED = 4",
    ] {
        assert!(header.contains(symbol), "header lacks {symbol}");
    }
}
