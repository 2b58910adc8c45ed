//! C interface. Graphs and star-set catalogs are opaque handles; reports come
//! back as JSON strings owned by the caller and released with
//! `starkit_string_free`. Eigenvalues are passed as `"p"` or `"p/q"` strings.
//!
//! Every function returns a `StarkitStatus`; on failure the message is
//! available from `starkit_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::json;
use starkit::exactla::{fmt_rational, parse_rational, Rational};
use starkit::graphio::{from_graph6, named, to_graph6, Graph};
use starkit::invariants::report;
use starkit::isocheck::{compare, CompareOptions, IsoStatus};
use starkit::spectral::rational_spectrum;
use starkit::starsets::{default_cap, enumerate_star_sets, StarSetCatalog};
use starkit::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarkitStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    NotAnEigenvalue = 5,
    CapExceeded = 6,
    UnsupportedSpectrum = 7,
    PreconditionViolated = 8,
    Panic = 9,
}

pub struct StarkitGraph {
    graph: Graph,
}

pub struct StarkitCatalog {
    catalog: StarSetCatalog,
    labels: Vec<String>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> StarkitStatus {
    match e {
        Error::Parse { .. } | Error::UnknownName(_) => StarkitStatus::Parse,
        Error::NotAnEigenvalue(_) => StarkitStatus::NotAnEigenvalue,
        Error::CapExceeded { .. } | Error::IncompleteCatalog => StarkitStatus::CapExceeded,
        Error::UnsupportedSpectrum { .. } | Error::IrrationalSpectrum { .. } => StarkitStatus::UnsupportedSpectrum,
        Error::PreconditionViolated(_) | Error::IsolatedVertices { .. } | Error::NotSrg(_) => StarkitStatus::PreconditionViolated,
        _ => StarkitStatus::InvalidInput,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), (StarkitStatus, String)>) -> StarkitStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => StarkitStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            StarkitStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (StarkitStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (StarkitStatus, String) {
    (StarkitStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (StarkitStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (StarkitStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_lambda(p: *const c_char) -> Result<Rational, (StarkitStatus, String)> {
    parse_rational(read_str(p, "lambda")?).map_err(lib_err)
}

unsafe fn graph_ref<'a>(g: *const StarkitGraph) -> Result<&'a Graph, (StarkitStatus, String)> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), (StarkitStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (StarkitStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).expect("JSON has no interior nul").into_raw();
    Ok(())
}

fn cap_or_default(cap: usize, g: &Graph, lambda: &Rational) -> usize {
    if cap == 0 {
        default_cap(g, lambda)
    } else {
        cap
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn starkit_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn starkit_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn starkit_graph_from_graph6(text: *const c_char, out: *mut *mut StarkitGraph) -> StarkitStatus {
    guard(|| {
        let g = from_graph6(read_str(text, "graph6 text")?).map_err(lib_err)?;
        write_out(out, StarkitGraph { graph: g })
    })
}

/// Built-in graph such as `petersen`, `G`, `K5` or `K1,4`.
///
/// # Safety
/// As for `starkit_graph_from_graph6`.
#[no_mangle]
pub unsafe extern "C" fn starkit_graph_named(name: *const c_char, out: *mut *mut StarkitGraph) -> StarkitStatus {
    guard(|| {
        let g = named(read_str(name, "name")?).map_err(lib_err)?;
        write_out(out, StarkitGraph { graph: g })
    })
}

/// # Safety
/// `g` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn starkit_graph_free(g: *mut StarkitGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn starkit_graph_order(g: *const StarkitGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn starkit_graph_to_graph6(g: *const StarkitGraph, out: *mut *mut c_char) -> StarkitStatus {
    guard(|| write_string(out, to_graph6(graph_ref(g)?)))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn starkit_spectrum_json(g: *const StarkitGraph, out: *mut *mut c_char) -> StarkitStatus {
    guard(|| write_string(out, rational_spectrum(graph_ref(g)?).to_json().to_string()))
}

/// Enumerates the λ-star sets. `cap` 0 means no more than `C(n, k)`.
///
/// # Safety
/// `g` must be a live handle, `lambda` a nul-terminated string and `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn starkit_star_sets(
    g: *const StarkitGraph,
    lambda: *const c_char,
    cap: usize,
    out: *mut *mut StarkitCatalog,
) -> StarkitStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let lambda = read_lambda(lambda)?;
        let catalog = enumerate_star_sets(g, &lambda, cap_or_default(cap, g, &lambda)).map_err(lib_err)?;
        let labels = (0..g.order()).map(|v| g.label(v)).collect();
        write_out(out, StarkitCatalog { catalog, labels })
    })
}

/// Number of star sets, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn starkit_catalog_len(c: *const StarkitCatalog) -> usize {
    c.as_ref().map_or(0, |h| h.catalog.len())
}

/// `{"lambda", "k_lambda", "complete", "star_sets": [{"X", "main"}]}`
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn starkit_catalog_json(c: *const StarkitCatalog, out: *mut *mut c_char) -> StarkitStatus {
    guard(|| {
        let h = c.as_ref().ok_or_else(|| null("catalog"))?;
        let name = |s: &starkit::graphio::VertexSet| s.iter().map(|v| h.labels[v].clone()).collect::<Vec<_>>();
        let items: Vec<_> = h
            .catalog
            .items
            .iter()
            .map(|i| json!({"X": name(&i.star_set.star), "main": name(&i.main_vertices)}))
            .collect();
        let doc = json!({
            "lambda": fmt_rational(&h.catalog.lambda),
            "k_lambda": h.catalog.k_lambda,
            "complete": h.catalog.complete,
            "star_sets": items,
        });
        write_string(out, doc.to_string())
    })
}

/// # Safety
/// `c` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn starkit_catalog_free(c: *mut StarkitCatalog) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Star-set invariants at λ as JSON.
///
/// # Safety
/// As for `starkit_star_sets`.
#[no_mangle]
pub unsafe extern "C" fn starkit_invariants_json(
    g: *const StarkitGraph,
    lambda: *const c_char,
    cap: usize,
    out: *mut *mut c_char,
) -> StarkitStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let lambda = read_lambda(lambda)?;
        let c = enumerate_star_sets(g, &lambda, cap_or_default(cap, g, &lambda)).map_err(lib_err)?;
        write_string(out, report(&c, g).map_err(lib_err)?.to_json().to_string())
    })
}

/// Non-isomorphism screen. `*not_isomorphic` is set to 1 when a difference
/// was found and 0 when the screen is inconclusive. `verdict_json` may be
/// null; otherwise it receives the full witness trail.
///
/// # Safety
/// `a`, `b` must be live handles; `not_isomorphic` must be writable.
#[no_mangle]
pub unsafe extern "C" fn starkit_isocheck(
    a: *const StarkitGraph,
    b: *const StarkitGraph,
    not_isomorphic: *mut i32,
    verdict_json: *mut *mut c_char,
) -> StarkitStatus {
    guard(|| {
        let (a, b) = (graph_ref(a)?, graph_ref(b)?);
        if not_isomorphic.is_null() {
            return Err(null("not_isomorphic"));
        }
        let v = compare(a, b, &CompareOptions::default()).map_err(lib_err)?;
        *not_isomorphic = i32::from(v.status == IsoStatus::NotIsomorphic);
        if !verdict_json.is_null() {
            write_string(verdict_json, v.to_json().to_string())?;
        }
        Ok(())
    })
}
