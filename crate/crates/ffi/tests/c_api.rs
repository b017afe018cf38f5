use std::ffi::{CStr, CString};
use std::ptr;

use strongcolor_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(sc_last_error()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn color_and_verify_prism() {
    unsafe {
        let name = CString::new("prism").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(sc_graph_named(name.as_ptr(), &mut g), ScStatus::Ok);
        assert_eq!(sc_graph_edge_count(g), 9);
        let mut c = ptr::null_mut();
        assert_eq!(sc_color(g, &mut c), ScStatus::Ok);
        assert!(sc_coloring_max_color(c) <= 9);
        assert!((0..9).all(|e| sc_coloring_get(c, e) >= 1));
        assert_eq!(sc_coloring_get(c, 9), 0);
        let mut valid = false;
        assert_eq!(sc_verify(g, c, &mut valid), ScStatus::Ok);
        assert!(valid);
        let mut chi = 0;
        assert_eq!(sc_exact(g, 9, false, &mut chi), ScStatus::Ok);
        assert_eq!(chi, 9);
        assert_eq!(sc_exact(g, 8, false, &mut chi), ScStatus::Ok);
        assert_eq!(chi, -1);
        sc_coloring_free(c);
        sc_graph_free(g);
    }
}

#[test]
fn text_round_trip() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(sc_graph_generate(40, 7, 0.2, true, &mut g), ScStatus::Ok);
        let mut text = ptr::null_mut();
        assert_eq!(sc_graph_serialize(g, &mut text), ScStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(sc_graph_parse(text, &mut h), ScStatus::Ok);
        assert_eq!(sc_graph_edge_count(h), sc_graph_edge_count(g));
        sc_string_free(text);

        let mut c = ptr::null_mut();
        assert_eq!(sc_color(h, &mut c), ScStatus::Ok);
        let mut ctext = ptr::null_mut();
        assert_eq!(sc_coloring_serialize(c, &mut ctext), ScStatus::Ok);
        let mut c2 = ptr::null_mut();
        assert_eq!(sc_coloring_parse(ctext, &mut c2), ScStatus::Ok);
        let mut valid = false;
        assert_eq!(sc_verify(g, c2, &mut valid), ScStatus::Ok);
        assert!(valid);
        sc_string_free(ctext);
        for p in [c, c2] {
            sc_coloring_free(p);
        }
        sc_graph_free(g);
        sc_graph_free(h);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut g = ptr::null_mut();
        // K5
        let k5: Vec<u32> = (0..5u32)
            .flat_map(|a| (a + 1..5).flat_map(move |b| [a, b]))
            .collect();
        assert_eq!(
            sc_graph_from_edges(5, k5.as_ptr(), 10, &mut g),
            ScStatus::InvalidInput
        );
        assert!(last_error().contains("not planar"), "{}", last_error());
        assert!(g.is_null());

        let bad = [0u32, 7];
        assert_eq!(
            sc_graph_from_edges(3, bad.as_ptr(), 1, &mut g),
            ScStatus::InvalidInput
        );
        assert_eq!(sc_graph_parse(ptr::null(), &mut g), ScStatus::NullPointer);
        let text = CString::new("0 0").unwrap();
        assert_eq!(sc_graph_parse(text.as_ptr(), &mut g), ScStatus::InvalidInput);
        assert!(last_error().contains("loop"));

        let star = [0u32, 1, 0, 2, 0, 3, 0, 4];
        assert_eq!(sc_graph_from_edges(5, star.as_ptr(), 4, &mut g), ScStatus::Ok);
        let mut c = ptr::null_mut();
        assert_eq!(sc_color(g, &mut c), ScStatus::InvalidInput);
        sc_graph_free(g);

        let mut g = ptr::null_mut();
        assert_eq!(sc_graph_generate(200, 1, 0.0, false, &mut g), ScStatus::Ok);
        let mut chi = 0;
        assert_eq!(sc_exact(g, 9, false, &mut chi), ScStatus::TooLarge);
        assert_eq!(
            sc_graph_generate(2, 1, 0.0, false, &mut g),
            ScStatus::InvalidInput
        );
        let name = CString::new("nope").unwrap();
        assert_eq!(sc_graph_named(name.as_ptr(), &mut g), ScStatus::InvalidInput);
        assert_eq!(sc_graph_vertex_count(ptr::null()), 0);
        sc_graph_free(ptr::null_mut());
        sc_string_free(ptr::null_mut());

        let ok = CString::new("0 1").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(sc_graph_parse(ok.as_ptr(), &mut h), ScStatus::Ok);
        assert_eq!(last_error(), "");
        sc_graph_free(h);
    }
}
