//! C ABI for `cmpowers`.
//!
//! Objects cross the boundary as opaque pointers owned by the caller and
//! released with the matching `*_free` function. Every call returns a
//! [`CmpStatus`]; on failure [`cmp_last_error_message`] describes the cause.
//! Results are written through out-pointers.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};
use std::ptr;

use cmpowers::census::analyze;
use cmpowers::cohomology::LocalCohomology;
use cmpowers::graph::{self, GraphClass};
use cmpowers::{Graph, Monomial, MonomialIdeal};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    OutOfRange = 3,
    Panic = 4,
}

/// Shape of a graph as used by the characterizations.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpGraphClass {
    Path = 0,
    Cycle = 1,
    TwoDisjointEdges = 2,
    Other = 3,
}

/// The six combinatorial predictions for a graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CmpCriteria {
    pub cm_sym2: bool,
    pub cm_sym_high: bool,
    pub eq2: bool,
    pub eq_high: bool,
    pub cm_ord2: bool,
    pub cm_ord_high: bool,
}

/// Opaque simple graph.
pub struct CmpGraph(Graph);

/// Opaque monomial ideal.
pub struct CmpIdeal(MonomialIdeal);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(CmpStatus, String);

impl From<cmpowers::Error> for Failure {
    fn from(e: cmpowers::Error) -> Self {
        let status = match e {
            cmpowers::Error::OutOfRange(_) => CmpStatus::OutOfRange,
            _ => CmpStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(CmpStatus::NullPointer, format!("`{what}` is null"))
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CmpStatus {
    match panic::catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CmpStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            CmpStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Moves `value` to the heap only once `out` is known to be writable.
unsafe fn put_new<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

/// Message for the most recent failure on this thread, or null. The
/// pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn cmp_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn cmp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// ---------------------------------------------------------------------------
// graphs

/// Builds a graph on vertices `1..=n` from `edge_count` pairs stored flat
/// in `edges` (`u0, v0, u1, v1, ...`).
#[no_mangle]
pub unsafe extern "C" fn cmp_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut CmpGraph,
) -> CmpStatus {
    guard(|| {
        if edges.is_null() && edge_count > 0 {
            return Err(null("edges"));
        }
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        let g = Graph::new(n, pairs)?;
        put_new(out, CmpGraph(g))
    })
}

/// Parses the text format: a header `n <count>` then one `u v` per line.
#[no_mangle]
pub unsafe extern "C" fn cmp_graph_parse(
    text: *const c_char,
    out: *mut *mut CmpGraph,
) -> CmpStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| Failure(CmpStatus::InvalidInput, format!("text is not UTF-8: {e}")))?;
        let g: Graph = s.parse()?;
        put_new(out, CmpGraph(g))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_graph_free(g: *mut CmpGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

#[no_mangle]
pub unsafe extern "C" fn cmp_graph_vertex_count(g: *const CmpGraph, out: *mut usize) -> CmpStatus {
    guard(|| put(out, get(g, "g")?.0.n(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn cmp_graph_edge_count(g: *const CmpGraph, out: *mut usize) -> CmpStatus {
    guard(|| put(out, get(g, "g")?.0.edges().len(), "out"))
}

/// Diameter, or -1 when the graph is disconnected.
#[no_mangle]
pub unsafe extern "C" fn cmp_graph_diameter(g: *const CmpGraph, out: *mut i32) -> CmpStatus {
    guard(|| {
        let d = match get(g, "g")?.0.diameter() {
            graph::Diameter::Finite(d) => d as i32,
            graph::Diameter::Infinite => -1,
        };
        put(out, d, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_graph_class(g: *const CmpGraph, out: *mut CmpGraphClass) -> CmpStatus {
    guard(|| {
        let c = match get(g, "g")?.0.classify() {
            GraphClass::Path => CmpGraphClass::Path,
            GraphClass::Cycle => CmpGraphClass::Cycle,
            GraphClass::TwoDisjointEdges => CmpGraphClass::TwoDisjointEdges,
            GraphClass::Other => CmpGraphClass::Other,
        };
        put(out, c, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_graph_criteria(
    g: *const CmpGraph,
    out: *mut CmpCriteria,
) -> CmpStatus {
    guard(|| {
        let c = graph::criteria(&get(g, "g")?.0, 2)?;
        put(
            out,
            CmpCriteria {
                cm_sym2: c.cm_sym2,
                cm_sym_high: c.cm_sym_high,
                eq2: c.eq2,
                eq_high: c.eq_high,
                cm_ord2: c.cm_ord2,
                cm_ord_high: c.cm_ord_high,
            },
            "out",
        )
    })
}

/// Full analysis for powers `1..=m_max` as a JSON document. Release the
/// string with [`cmp_string_free`].
#[no_mangle]
pub unsafe extern "C" fn cmp_graph_analyze_json(
    g: *const CmpGraph,
    m_max: u32,
    out: *mut *mut c_char,
) -> CmpStatus {
    guard(|| {
        let report = analyze(&get(g, "g")?.0, m_max)?;
        let json = serde_json::to_string(&report)
            .map_err(|e| Failure(CmpStatus::InvalidInput, e.to_string()))?;
        if out.is_null() {
            return Err(null("out"));
        }
        out.write(
            CString::new(json)
                .expect("JSON has no nul bytes")
                .into_raw(),
        );
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------------------
// ideals

#[no_mangle]
pub unsafe extern "C" fn cmp_symbolic_power(
    g: *const CmpGraph,
    m: u32,
    out: *mut *mut CmpIdeal,
) -> CmpStatus {
    guard(|| {
        let i = graph::symbolic_power(&get(g, "g")?.0, m);
        put_new(out, CmpIdeal(i))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_ordinary_power(
    g: *const CmpGraph,
    m: u32,
    out: *mut *mut CmpIdeal,
) -> CmpStatus {
    guard(|| {
        let i = graph::ordinary_power(&get(g, "g")?.0, m);
        put_new(out, CmpIdeal(i))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_free(i: *mut CmpIdeal) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// Number of variables of the ambient ring.
#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_vars(i: *const CmpIdeal, out: *mut usize) -> CmpStatus {
    guard(|| put(out, get(i, "i")?.0.n(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_generator_count(
    i: *const CmpIdeal,
    out: *mut usize,
) -> CmpStatus {
    guard(|| put(out, get(i, "i")?.0.generators().len(), "out"))
}

/// Copies the exponent vector of minimal generator `index` into `exps`,
/// which must hold `len == vars` entries.
#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_generator(
    i: *const CmpIdeal,
    index: usize,
    exps: *mut u32,
    len: usize,
) -> CmpStatus {
    guard(|| {
        let ideal = &get(i, "i")?.0;
        let g = ideal.generators().get(index).ok_or_else(|| {
            Failure(
                CmpStatus::OutOfRange,
                format!("generator {index} of {}", ideal.generators().len()),
            )
        })?;
        exponent_buffer(exps, len, ideal.n())?.copy_from_slice(g.exponents());
        Ok(())
    })
}

unsafe fn exponent_buffer<'a>(p: *mut u32, len: usize, n: usize) -> Result<&'a mut [u32], Failure> {
    if p.is_null() {
        return Err(null("exps"));
    }
    if len != n {
        return Err(Failure(
            CmpStatus::InvalidInput,
            format!("exponent buffer has length {len}, ring has {n} variables"),
        ));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_contains(
    i: *const CmpIdeal,
    exps: *const u32,
    len: usize,
    out: *mut bool,
) -> CmpStatus {
    guard(|| {
        let ideal = &get(i, "i")?.0;
        if exps.is_null() {
            return Err(null("exps"));
        }
        if len != ideal.n() {
            return Err(Failure(
                CmpStatus::InvalidInput,
                format!(
                    "monomial has {len} exponents, ring has {} variables",
                    ideal.n()
                ),
            ));
        }
        let f = Monomial::new(std::slice::from_raw_parts(exps, len).to_vec());
        put(out, ideal.contains(&f), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_equals(
    a: *const CmpIdeal,
    b: *const CmpIdeal,
    out: *mut bool,
) -> CmpStatus {
    guard(|| put(out, get(a, "a")?.0.equals(&get(b, "b")?.0), "out"))
}

/// Depth of `S/I`.
#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_depth(i: *const CmpIdeal, out: *mut usize) -> CmpStatus {
    guard(|| {
        let lc = LocalCohomology::new(&get(i, "i")?.0)?;
        put(out, lc.depth_report().depth, "out")
    })
}

/// Krull dimension of `S/I`.
#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_krull_dim(i: *const CmpIdeal, out: *mut usize) -> CmpStatus {
    guard(|| {
        put(
            out,
            cmpowers::cohomology::krull_dim(&get(i, "i")?.0)?,
            "out",
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn cmp_ideal_is_cohen_macaulay(
    i: *const CmpIdeal,
    out: *mut bool,
) -> CmpStatus {
    guard(|| {
        put(
            out,
            cmpowers::cohomology::is_cohen_macaulay(&get(i, "i")?.0)?,
            "out",
        )
    })
}
