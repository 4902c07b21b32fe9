//! C ABI over `symbreak`.
//!
//! Graphs and construction results cross the boundary as opaque handles that
//! the caller frees with the matching `*_free` function. Every fallible call
//! returns an [`SbStatus`]; on failure a message is available from
//! [`sb_last_error_message`] on the same thread until the next failing call.
//! Strings returned through `char **` out-parameters are owned by the caller
//! and released with [`sb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use symbreak::colouring::EdgeColouring;
use symbreak::construct::{construct, ConstructionTrace};
use symbreak::graph::{parse_edge_list, parse_graph6, to_graph6};
use symbreak::solver::{distinguishing_index, small_distinguishing_index, DEFAULT_MAX_COLOURS};
use symbreak::symmetry::{automorphism_group, small_automorphisms, DEFAULT_ENUMERATION_LIMIT};
use symbreak::{Error, Graph, IndexValue, SolverConfig};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    /// The graph is too large for an exact computation.
    Limit = 4,
    Precondition = 5,
    /// No 2-colouring breaking every small automorphism was found.
    TheoremFalsified = 6,
    BufferTooSmall = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SbIndexKind {
    /// The index equals `value`.
    Finite = 0,
    /// The index is larger than `value`, the largest count tried.
    Exceeds = 1,
    /// No number of colours suffices.
    Infinite = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SbIndex {
    pub kind: SbIndexKind,
    pub value: u32,
}

impl From<IndexValue> for SbIndex {
    fn from(v: IndexValue) -> Self {
        match v {
            IndexValue::Finite(k) => SbIndex {
                kind: SbIndexKind::Finite,
                value: k,
            },
            IndexValue::Exceeds(k) => SbIndex {
                kind: SbIndexKind::Exceeds,
                value: k,
            },
            IndexValue::Infinite => SbIndex {
                kind: SbIndexKind::Infinite,
                value: 0,
            },
        }
    }
}

/// Opaque graph handle.
pub struct SbGraph {
    graph: Graph,
}

/// Opaque result of [`sb_construct`].
pub struct SbConstruction {
    colouring: EdgeColouring,
    text: String,
    trace: ConstructionTrace,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> SbStatus {
    match e {
        Error::Graph(_) => SbStatus::Parse,
        Error::EnumerationLimit { .. } | Error::ColouringLimit { .. } => SbStatus::Limit,
        Error::Precondition(_) => SbStatus::Precondition,
        Error::TheoremFalsified { .. } => SbStatus::TheoremFalsified,
        _ => SbStatus::Internal,
    }
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), SbStatus>) -> SbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SbStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside symbreak");
            SbStatus::Panic
        }
    }
}

fn fail(e: Error) -> SbStatus {
    set_error(e.to_string());
    status_of(&e)
}

fn null(what: &str) -> SbStatus {
    set_error(format!("{what} is null"));
    SbStatus::NullPointer
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, SbStatus> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(format!("{what} is not valid UTF-8"));
        SbStatus::InvalidUtf8
    })
}

unsafe fn graph_ref<'a>(g: *const SbGraph) -> Result<&'a Graph, SbStatus> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SbStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn to_c_string(s: String) -> Result<*mut c_char, SbStatus> {
    CString::new(s).map(CString::into_raw).map_err(|_| {
        set_error("string contains an interior NUL");
        SbStatus::Internal
    })
}

fn config(max_colours: u32) -> SolverConfig {
    let max_colours = if max_colours == 0 {
        DEFAULT_MAX_COLOURS
    } else {
        max_colours
    };
    SolverConfig {
        max_colours,
        ..Default::default()
    }
}

/// Message of the last failing call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be NULL or a string obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn sb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn sb_graph_from_graph6(
    text: *const c_char,
    out: *mut *mut SbGraph,
) -> SbStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let graph = parse_graph6(text).map_err(|e| fail(e.into()))?;
        write_out(out, Box::into_raw(Box::new(SbGraph { graph })))
    })
}

/// Parses an edge list: a line holding the order, then one `u v` pair per
/// line.
///
/// # Safety
/// As for [`sb_graph_from_graph6`].
#[no_mangle]
pub unsafe extern "C" fn sb_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut SbGraph,
) -> SbStatus {
    guard(|| {
        let text = read_str(text, "text")?;
        let graph = parse_edge_list(text).map_err(|e| fail(e.into()))?;
        write_out(out, Box::into_raw(Box::new(SbGraph { graph })))
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_graph_free(g: *mut SbGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sb_graph_order(g: *const SbGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sb_graph_size(g: *const SbGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.size())
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_graph_to_graph6(g: *const SbGraph, out: *mut *mut c_char) -> SbStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let s = to_graph6(g).map_err(|e| fail(e.into()))?;
        write_out(out, to_c_string(s)?)
    })
}

/// Order of the automorphism group.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_automorphism_count(g: *const SbGraph, out: *mut u64) -> SbStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let grp = automorphism_group(g, DEFAULT_ENUMERATION_LIMIT).map_err(fail)?;
        write_out(out, grp.order() as u64)
    })
}

/// Number of small automorphisms (those moving some vertex to a neighbour).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_small_automorphism_count(g: *const SbGraph, out: *mut u64) -> SbStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let grp = automorphism_group(g, DEFAULT_ENUMERATION_LIMIT).map_err(fail)?;
        write_out(out, small_automorphisms(g, &grp).len() as u64)
    })
}

/// Distinguishing index, trying up to `max_colours` colours (0 selects the
/// default).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_distinguishing_index(
    g: *const SbGraph,
    max_colours: u32,
    out: *mut SbIndex,
) -> SbStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = distinguishing_index(g, &config(max_colours)).map_err(fail)?;
        write_out(out, r.value.into())
    })
}

/// Small distinguishing index; arguments as for [`sb_distinguishing_index`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_small_distinguishing_index(
    g: *const SbGraph,
    max_colours: u32,
    out: *mut SbIndex,
) -> SbStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = small_distinguishing_index(g, &config(max_colours)).map_err(fail)?;
        write_out(out, r.value.into())
    })
}

/// Runs the construction. Fails with `SB_STATUS_PRECONDITION` for graphs
/// that are disconnected or of order below six.
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_construct(
    g: *const SbGraph,
    out: *mut *mut SbConstruction,
) -> SbStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let (colouring, trace) = construct(g, &SolverConfig::default()).map_err(fail)?;
        let text = colouring.to_text(g);
        write_out(
            out,
            Box::into_raw(Box::new(SbConstruction {
                colouring,
                text,
                trace,
            })),
        )
    })
}

/// # Safety
/// `c` must be NULL or a handle from [`sb_construct`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sb_construction_free(c: *mut SbConstruction) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Whether the construction's colouring was checked to break every small
/// automorphism.
///
/// # Safety
/// `c` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sb_construction_verified(c: *const SbConstruction) -> bool {
    c.as_ref().is_some_and(|c| c.trace.verified)
}

/// Copies the edge colours, in the graph's lexicographic edge order, into
/// `buf`. `len` must be at least the graph's size.
///
/// # Safety
/// `c` must be a live handle and `buf` valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn sb_construction_colours(
    c: *const SbConstruction,
    buf: *mut u8,
    len: usize,
) -> SbStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("construction"))?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        let colours = c.colouring.colours();
        if len < colours.len() {
            set_error(format!(
                "buffer holds {len} colours, {} needed",
                colours.len()
            ));
            return Err(SbStatus::BufferTooSmall);
        }
        ptr::copy_nonoverlapping(colours.as_ptr(), buf, colours.len());
        Ok(())
    })
}

/// The colouring as `u v colour` lines.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_construction_text(
    c: *const SbConstruction,
    out: *mut *mut c_char,
) -> SbStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("construction"))?;
        write_out(out, to_c_string(c.text.clone())?)
    })
}

/// The construction trace as a JSON object.
///
/// # Safety
/// `c` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sb_construction_trace_json(
    c: *const SbConstruction,
    out: *mut *mut c_char,
) -> SbStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("construction"))?;
        let json = serde_json::to_string(&c.trace).map_err(|e| fail(e.into()))?;
        write_out(out, to_c_string(json)?)
    })
}
