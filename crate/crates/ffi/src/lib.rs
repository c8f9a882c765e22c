//! C ABI for `powerdom`.
//!
//! Graphs and trees live behind opaque handles created by `pd_*_parse` or
//! a generator and released with the matching `*_free`. Every fallible
//! function returns a [`PdStatus`]; on failure a message is available from
//! [`pd_last_error_message`] on the same thread.
//!
//! Vertex ids crossing the boundary are 0-based. For trees they are the
//! document ids minus one.
//!
//! Set-returning functions take a caller buffer `out_ids` of capacity
//! `capacity` and always store the set size in `*out_len`. If the buffer
//! is too small they return `PD_STATUS_BUFFER_TOO_SMALL` and write nothing
//! else, so a first call with `capacity = 0` can query the size.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use powerdom::io::{parse_graph, parse_tree};
use powerdom::tree_dp::input_labels;
use powerdom::{families, Error, Graph, VertexSet, WeightedTree};

/// Result codes shared by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    /// An exact solver's vertex cap was exceeded.
    Resource = 4,
    BufferTooSmall = 5,
    /// A Rust panic was caught at the boundary; this is a bug.
    Internal = 6,
}

/// Opaque graph handle.
pub struct PdGraph(Graph);

/// Opaque weighted-tree handle.
pub struct PdTree(WeightedTree);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    let c = CString::new(text).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PdStatus {
    match e {
        Error::Parse { .. } => PdStatus::Parse,
        Error::Resource(_) => PdStatus::Resource,
        Error::Input(_) | Error::Io { .. } => PdStatus::InvalidInput,
    }
}

type FfiResult<T> = Result<T, PdStatus>;

fn fail<T>(status: PdStatus, msg: impl Into<String>) -> FfiResult<T> {
    set_error(msg);
    Err(status)
}

fn lift<T>(r: powerdom::Result<T>) -> FfiResult<T> {
    r.or_else(|e| fail(status_of(&e), e.to_string()))
}

/// Runs `body`, mapping panics to `Internal` and recording the outcome.
fn guard(body: impl FnOnce() -> FfiResult<()>) -> PdStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PdStatus::Ok,
        Ok(Err(status)) => status,
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal error: {msg}"));
            PdStatus::Internal
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    match p.as_ref() {
        Some(r) => Ok(r),
        None => fail(PdStatus::NullPointer, format!("{what} is NULL")),
    }
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &str) -> FfiResult<&'a mut T> {
    match p.as_mut() {
        Some(r) => Ok(r),
        None => fail(PdStatus::NullPointer, format!("{what} is NULL")),
    }
}

unsafe fn c_text<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return fail(PdStatus::NullPointer, "text is NULL");
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|_| fail(PdStatus::InvalidInput, "text is not valid UTF-8"))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> FfiResult<&'a [T]> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return fail(PdStatus::NullPointer, format!("{what} is NULL"));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn id_set(n: usize, ids: &[usize], what: &str) -> FfiResult<VertexSet> {
    if let Some(bad) = ids.iter().find(|&&v| v >= n) {
        return fail(
            PdStatus::InvalidInput,
            format!("{what}: id {bad} out of range 0..{n}"),
        );
    }
    lift(VertexSet::from_ids(n, ids.iter().copied()))
}

unsafe fn write_ids(ids: &[usize], out_ids: *mut usize, capacity: usize, out_len: *mut usize) -> FfiResult<()> {
    *out_ptr(out_len, "out_len")? = ids.len();
    if ids.len() > capacity {
        return fail(
            PdStatus::BufferTooSmall,
            format!("result has {} ids, buffer holds {capacity}", ids.len()),
        );
    }
    if !ids.is_empty() {
        if out_ids.is_null() {
            return fail(PdStatus::NullPointer, "out_ids is NULL");
        }
        ptr::copy_nonoverlapping(ids.as_ptr(), out_ids, ids.len());
    }
    Ok(())
}

fn store<T>(out: *mut *mut T, value: T) -> FfiResult<()> {
    let slot = unsafe { out_ptr(out, "out")? };
    *slot = Box::into_raw(Box::new(value));
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next `pd_*` call on the same thread.
#[no_mangle]
pub extern "C" fn pd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an edge-list document (1-based ids in the text).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_parse(text: *const c_char, out: *mut *mut PdGraph) -> PdStatus {
    guard(|| {
        let g = lift(parse_graph(c_text(text)?))?;
        store(out, PdGraph(g))
    })
}

/// Builds a graph from `m` edges `(us[i], vs[i])`, 0-based.
///
/// # Safety
/// `us` and `vs` must point to `m` readable ids each; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_from_edges(
    n: usize,
    us: *const usize,
    vs: *const usize,
    m: usize,
    out: *mut *mut PdGraph,
) -> PdStatus {
    guard(|| {
        let us = slice(us, m, "us")?;
        let vs = slice(vs, m, "vs")?;
        let g = lift(Graph::from_edges(n, us.iter().copied().zip(vs.iter().copied())))?;
        store(out, PdGraph(g))
    })
}

/// The extremal family `E_k` for even `r >= 4`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_gen_e(r: usize, k: usize, out: *mut *mut PdGraph) -> PdStatus {
    guard(|| store(out, PdGraph(lift(families::gen_e(r, k))?)))
}

/// Releases a graph. NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_free(g: *mut PdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_vertex_count(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// Edge count, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_graph_edge_count(g: *const PdGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// Minimum-cardinality power dominating set by exhaustive search.
///
/// # Safety
/// `g` must be a live handle; see the module notes for the buffer.
#[no_mangle]
pub unsafe extern "C" fn pd_min_pds(
    g: *const PdGraph,
    out_ids: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> PdStatus {
    guard(|| {
        let r = lift(powerdom::min_pds(&deref(g, "graph")?.0))?;
        write_ids(&r.set.to_vec(), out_ids, capacity, out_len)
    })
}

/// Minimum-weight power dominating set by exhaustive search. `weights`
/// holds one positive weight per vertex.
///
/// # Safety
/// `g` must be a live handle, `weights` must hold `n_weights` values and
/// `out_weight` must be writable; see the module notes for the buffer.
#[no_mangle]
pub unsafe extern "C" fn pd_min_weight_pds(
    g: *const PdGraph,
    weights: *const f64,
    n_weights: usize,
    out_weight: *mut f64,
    out_ids: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> PdStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        let w = slice(weights, n_weights, "weights")?;
        let r = lift(powerdom::min_weight_pds(g, w))?;
        *out_ptr(out_weight, "out_weight")? = r.weight;
        write_ids(&r.set.to_vec(), out_ids, capacity, out_len)
    })
}

/// Whether `ids` is a power dominating set of `g`.
///
/// # Safety
/// `g` must be a live handle, `ids` must hold `len` values and `out` must
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_is_pds(
    g: *const PdGraph,
    ids: *const usize,
    len: usize,
    out: *mut bool,
) -> PdStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        let s = id_set(g.vertex_count(), slice(ids, len, "ids")?, "ids")?;
        *out_ptr(out, "out")? = powerdom::is_pds(g, &s);
        Ok(())
    })
}

/// Observation closure of `seeds`, with `pre` observed in advance.
/// Writes the observed vertices in ascending order.
///
/// # Safety
/// `g` must be a live handle, `seeds`/`pre` must hold `n_seeds`/`n_pre`
/// values; see the module notes for the buffer.
#[no_mangle]
pub unsafe extern "C" fn pd_closure(
    g: *const PdGraph,
    seeds: *const usize,
    n_seeds: usize,
    pre: *const usize,
    n_pre: usize,
    out_ids: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> PdStatus {
    guard(|| {
        let g = &deref(g, "graph")?.0;
        let n = g.vertex_count();
        let s = id_set(n, slice(seeds, n_seeds, "seeds")?, "seeds")?;
        let p = id_set(n, slice(pre, n_pre, "pre")?, "pre")?;
        write_ids(&powerdom::closure(g, &s, &p).to_vec(), out_ids, capacity, out_len)
    })
}

/// Parses a weighted-tree document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_tree_parse(text: *const c_char, out: *mut *mut PdTree) -> PdStatus {
    guard(|| {
        let t = lift(parse_tree(c_text(text)?))?;
        store(out, PdTree(t))
    })
}

/// Releases a tree. NULL is ignored.
///
/// # Safety
/// `t` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pd_tree_free(t: *mut PdTree) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `t` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_tree_vertex_count(t: *const PdTree) -> usize {
    t.as_ref().map_or(0, |t| t.0.vertex_count())
}

/// Minimum-weight power dominating set of a tree in linear time. The ids
/// are document ids minus one, ascending.
///
/// # Safety
/// `t` must be a live handle and `out_weight` writable; see the module
/// notes for the buffer.
#[no_mangle]
pub unsafe extern "C" fn pd_wpdt(
    t: *const PdTree,
    out_weight: *mut f64,
    out_ids: *mut usize,
    capacity: usize,
    out_len: *mut usize,
) -> PdStatus {
    guard(|| {
        let t = &deref(t, "tree")?.0;
        let r = powerdom::wpdt(t);
        *out_ptr(out_weight, "out_weight")? = r.weight;
        write_ids(&input_labels(t, &r.set), out_ids, capacity, out_len)
    })
}
