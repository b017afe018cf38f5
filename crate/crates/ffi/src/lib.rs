//! C ABI for strongcolor.
//!
//! Graphs and colorings are opaque heap handles released with their `_free`
//! function. Every fallible call returns an [`ScStatus`]; on failure
//! [`sc_last_error`] describes what went wrong on the calling thread.
//! Strings handed out by the library are released with [`sc_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use libc::c_char;
use strongcolor::coloring::{verify_strong, ColoringError, PartialColoring};
use strongcolor::exact::{strong_chromatic_index_with, ExactError};
use strongcolor::generate::{generate, named_instance, GenSpec};
use strongcolor::graph::{embed_edge_list, PlaneMultigraph};
use strongcolor::io;
use strongcolor::reduce::{color_graph, ReduceError};

/// Opaque plane multigraph.
pub struct ScGraph(PlaneMultigraph);

/// Opaque edge coloring.
pub struct ScColoring(PartialColoring);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed text, bad edge list, nonplanar or non-subcubic input.
    InvalidInput = 2,
    /// Above the exact solver's edge guard, or a palette too large.
    TooLarge = 3,
    /// An internal invariant failed; this is a bug.
    Internal = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let msg = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).unwrap());
}

/// Runs `f`, turning errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), (ScStatus, String)>) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ScStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside strongcolor");
            ScStatus::Internal
        }
    }
}

fn invalid(e: impl ToString) -> (ScStatus, String) {
    (ScStatus::InvalidInput, e.to_string())
}

fn null() -> (ScStatus, String) {
    (ScStatus::NullPointer, "null pointer argument".into())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (ScStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(invalid)
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (ScStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (ScStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    *out = CString::new(s).map_err(invalid)?.into_raw();
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, (ScStatus, String)> {
    p.as_ref().ok_or_else(null)
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn sc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a `pmg` file or an edge list.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_parse(text: *const c_char, out: *mut *mut ScGraph) -> ScStatus {
    guard(|| {
        let g = io::parse_graph(read_str(text)?).map_err(invalid)?;
        put(out, ScGraph(g))
    })
}

/// Embeds `edge_count` edges given as `endpoints[2i], endpoints[2i + 1]`.
///
/// # Safety
/// `endpoints` must point to `2 * edge_count` readable values (it may be
/// null when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_from_edges(
    vertex_count: usize,
    endpoints: *const u32,
    edge_count: usize,
    out: *mut *mut ScGraph,
) -> ScStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null());
        } else {
            std::slice::from_raw_parts(endpoints, 2 * edge_count)
        };
        let edges: Vec<(usize, usize)> = flat
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
            .collect();
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a.max(b) >= vertex_count) {
            return Err(invalid(format!("edge ({a}, {b}) has an endpoint out of range")));
        }
        let g = embed_edge_list(vertex_count, &edges).map_err(invalid)?;
        put(out, ScGraph(g))
    })
}

/// Seeded random subcubic plane multigraph with `vertex_count` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_generate(
    vertex_count: usize,
    seed: u64,
    two_vertex_fraction: f64,
    allow_parallel: bool,
    out: *mut *mut ScGraph,
) -> ScStatus {
    guard(|| {
        let spec = GenSpec {
            target_vertices: vertex_count,
            seed,
            two_vertex_fraction,
            allow_parallel,
        };
        put(out, ScGraph(generate(&spec).map_err(invalid)?))
    })
}

/// One of the built-in instances, e.g. `"prism"` or `"dodecahedron"`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_named(name: *const c_char, out: *mut *mut ScGraph) -> ScStatus {
    guard(|| {
        let g = named_instance(read_str(name)?).map_err(invalid)?;
        put(out, ScGraph(g))
    })
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_vertex_count(g: *const ScGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` must be a live graph handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_edge_count(g: *const ScGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Writes the graph in `pmg` form; free the string with [`sc_string_free`].
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_serialize(g: *const ScGraph, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, io::serialize_pmg(&borrow(g)?.0)))
}

/// # Safety
/// `g` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sc_graph_free(g: *mut ScGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Strong coloring with at most 9 colors, by reduction.
///
/// # Safety
/// `g` must be a live graph handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_color(g: *const ScGraph, out: *mut *mut ScColoring) -> ScStatus {
    guard(|| {
        let g = borrow(g)?;
        match color_graph(&g.0) {
            Ok((c, _)) => put(out, ScColoring(c)),
            Err(e @ ReduceError::InputInvalid(_)) => Err(invalid(e)),
            Err(e) => Err((ScStatus::Internal, e.to_string())),
        }
    })
}

/// Parses a coloring file (`k <palette>` then `c <edge> <color>` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_parse(text: *const c_char, out: *mut *mut ScColoring) -> ScStatus {
    guard(|| {
        let c = io::parse_coloring(read_str(text)?).map_err(invalid)?;
        put(out, ScColoring(c))
    })
}

/// # Safety
/// `c` must be a live coloring handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_serialize(c: *const ScColoring, out: *mut *mut c_char) -> ScStatus {
    guard(|| put_string(out, io::serialize_coloring(&borrow(c)?.0)))
}

/// Color of `edge`, or 0 if it is uncolored or out of range.
///
/// # Safety
/// `c` must be a live coloring handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_get(c: *const ScColoring, edge: usize) -> u8 {
    c.as_ref()
        .and_then(|c| (edge < c.0.edge_count()).then(|| c.0.get(edge)).flatten())
        .unwrap_or(0)
}

/// Largest color used, 0 for an empty coloring.
///
/// # Safety
/// `c` must be a live coloring handle or null.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_max_color(c: *const ScColoring) -> u8 {
    c.as_ref().map_or(0, |c| c.0.max_color())
}

/// # Safety
/// `c` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sc_coloring_free(c: *mut ScColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Sets `*valid` to whether `c` is a total strong coloring of `g`. A
/// coloring naming edges the graph lacks is invalid input.
///
/// # Safety
/// `g` and `c` must be live handles; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_verify(g: *const ScGraph, c: *const ScColoring, valid: *mut bool) -> ScStatus {
    guard(|| {
        let (g, c) = (borrow(g)?, borrow(c)?);
        if valid.is_null() {
            return Err(null());
        }
        if c.0.edge_count() > g.0.edge_count() {
            return Err(invalid("coloring has more edges than the graph"));
        }
        let c = c.0.clone().resized(g.0.edge_count());
        *valid = match verify_strong(&g.0, &c) {
            Ok(v) => v.is_empty(),
            Err(ColoringError::UncoloredEdge(_)) => false,
            Err(e) => return Err(invalid(e)),
        };
        Ok(())
    })
}

/// Strong chromatic index if it is at most `max_k`, else -1. Graphs above
/// the edge guard need `force`.
///
/// # Safety
/// `g` must be a live graph handle; `chi` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sc_exact(g: *const ScGraph, max_k: u8, force: bool, chi: *mut i32) -> ScStatus {
    guard(|| {
        let g = borrow(g)?;
        if chi.is_null() {
            return Err(null());
        }
        match strong_chromatic_index_with(&g.0, max_k, force) {
            Ok(r) => {
                *chi = r.chi_s.map_or(-1, i32::from);
                Ok(())
            }
            Err(e @ (ExactError::TooLarge { .. } | ExactError::PaletteTooLarge(_))) => {
                Err((ScStatus::TooLarge, e.to_string()))
            }
        }
    })
}
