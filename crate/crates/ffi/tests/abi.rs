use std::ffi::{CStr, CString};
use std::ptr;

use powerdom_ffi::*;

fn last_error() -> String {
    let p = pd_last_error_message();
    assert!(!p.is_null(), "expected an error message");
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn parse(text: &str) -> *mut PdGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pd_graph_parse(c.as_ptr(), &mut g) }, PdStatus::Ok);
    g
}

#[test]
fn parse_and_count() {
    let g = parse("# triangle\n3 3\n1 2\n2 3\n1 3\n");
    unsafe {
        assert_eq!(pd_graph_vertex_count(g), 3);
        assert_eq!(pd_graph_edge_count(g), 3);
        pd_graph_free(g);
        assert_eq!(pd_graph_vertex_count(ptr::null()), 0);
        pd_graph_free(ptr::null_mut());
    }
    assert!(pd_last_error_message().is_null());
}

#[test]
fn parse_error_reports_line() {
    let c = CString::new("2 1\n1 1\n").unwrap();
    let mut g = ptr::null_mut();
    let status = unsafe { pd_graph_parse(c.as_ptr(), &mut g) };
    assert_eq!(status, PdStatus::Parse);
    assert!(g.is_null());
    assert!(last_error().contains("line 2"));
}

#[test]
fn min_pds_of_e0_with_size_query() {
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(pd_graph_gen_e(4, 0, &mut g), PdStatus::Ok);
        let mut len = 0;
        assert_eq!(pd_min_pds(g, ptr::null_mut(), 0, &mut len), PdStatus::BufferTooSmall);
        assert_eq!(len, 2);
        let mut ids = vec![0usize; len];
        assert_eq!(pd_min_pds(g, ids.as_mut_ptr(), ids.len(), &mut len), PdStatus::Ok);
        let mut ok = false;
        assert_eq!(pd_is_pds(g, ids.as_ptr(), len, &mut ok), PdStatus::Ok);
        assert!(ok);
        pd_graph_free(g);
    }
}

#[test]
fn weighted_search_and_closure() {
    let us = [0usize, 1];
    let vs = [1usize, 2];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(pd_graph_from_edges(3, us.as_ptr(), vs.as_ptr(), 2, &mut g), PdStatus::Ok);
        let w = [5.0, 1.0, 5.0];
        let mut weight = 0.0;
        let mut ids = [0usize; 3];
        let mut len = 0;
        let status = pd_min_weight_pds(g, w.as_ptr(), 3, &mut weight, ids.as_mut_ptr(), 3, &mut len);
        assert_eq!(status, PdStatus::Ok);
        assert_eq!((weight, &ids[..len]), (1.0, &[1usize][..]));

        let seeds = [0usize];
        let status = pd_closure(g, seeds.as_ptr(), 1, ptr::null(), 0, ids.as_mut_ptr(), 3, &mut len);
        assert_eq!(status, PdStatus::Ok);
        assert_eq!(&ids[..len], &[0, 1, 2]);

        let bad = [7usize];
        let mut ok = true;
        assert_eq!(pd_is_pds(g, bad.as_ptr(), 1, &mut ok), PdStatus::InvalidInput);
        assert!(last_error().contains('7'));

        let status = pd_min_weight_pds(g, w.as_ptr(), 2, &mut weight, ids.as_mut_ptr(), 3, &mut len);
        assert_eq!(status, PdStatus::InvalidInput);
        pd_graph_free(g);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        assert_eq!(pd_graph_parse(ptr::null(), &mut ptr::null_mut()), PdStatus::NullPointer);
        let mut len = 0;
        assert_eq!(pd_min_pds(ptr::null(), ptr::null_mut(), 0, &mut len), PdStatus::NullPointer);
        let g = parse("1 0\n");
        assert_eq!(pd_min_pds(g, ptr::null_mut(), 0, ptr::null_mut()), PdStatus::NullPointer);
        assert!(last_error().contains("out_len"));
        pd_graph_free(g);
    }
}

#[test]
fn resource_cap() {
    let mut text = String::from("30 29\n");
    for v in 1..30 {
        text.push_str(&format!("{v} {}\n", v + 1));
    }
    let g = parse(&text);
    let mut len = 0;
    unsafe {
        assert_eq!(pd_min_pds(g, ptr::null_mut(), 0, &mut len), PdStatus::Resource);
        pd_graph_free(g);
    }
}

#[test]
fn tree_solver_uses_document_ids() {
    // path 1 - 2 - 3 rooted at 3, cheap vertex 1
    let c = CString::new("3\n1 2 1\n2 3 50\n3 0 2\n").unwrap();
    let mut t = ptr::null_mut();
    unsafe {
        assert_eq!(pd_tree_parse(c.as_ptr(), &mut t), PdStatus::Ok);
        assert_eq!(pd_tree_vertex_count(t), 3);
        let mut weight = 0.0;
        let mut ids = [0usize; 3];
        let mut len = 0;
        assert_eq!(pd_wpdt(t, &mut weight, ids.as_mut_ptr(), 3, &mut len), PdStatus::Ok);
        assert_eq!((weight, &ids[..len]), (1.0, &[0usize][..]));
        pd_tree_free(t);

        let bad = CString::new("2\n1 2 3\n2 1 5\n").unwrap();
        assert_eq!(pd_tree_parse(bad.as_ptr(), &mut t), PdStatus::Parse);
    }
}

#[test]
fn header_is_generated() {
    let header = include_str!("../include/powerdom.h");
    for name in ["PdStatus", "PD_STATUS_BUFFER_TOO_SMALL", "pd_wpdt", "pd_closure", "typedef struct PdGraph PdGraph"] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
