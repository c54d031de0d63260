//! C ABI over `gpauto`.
//!
//! Graphs and automorphisms are opaque heap handles. Every fallible call
//! returns a [`GpaStatus`]; on failure the message is kept per thread and
//! read with [`gpa_last_error`]. Strings handed out by the library must be
//! released with [`gpa_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gpauto::aut::{self, AutWord, AutZeroElement};
use gpauto::report;
use gpauto::structure;
use gpauto::{Error, LabeledGraph, Word};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GpaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Graph parsing and validation.
    GraphCore = 3,
    /// Word parsing and normal forms.
    WordEngine = 4,
    /// Partial conjugations and automorphism words.
    AutCalculus = 5,
    /// Preconditions of the structural predicates.
    Structure = 6,
    /// Handles belong to different graphs.
    GraphMismatch = 7,
    Panic = 8,
}

/// A labeled graph.
pub struct GpaGraph {
    graph: LabeledGraph,
}

/// An automorphism fixing every vertex up to conjugacy, tied to its graph.
pub struct GpaAut {
    graph: LabeledGraph,
    aut: AutZeroElement,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(GpaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.module() {
            "graph_core" => GpaStatus::GraphCore,
            "word_engine" => GpaStatus::WordEngine,
            "aut_calculus" => GpaStatus::AutCalculus,
            _ => GpaStatus::Structure,
        };
        Failure(status, format!("{}::{}: {e}", e.module(), e.name()))
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|l| *l.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> GpaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            GpaStatus::Ok
        }
        Ok(Err(Failure(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            GpaStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(GpaStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(GpaStatus::InvalidUtf8, e.to_string()))
}

unsafe fn reference<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(GpaStatus::InvalidUtf8, e.to_string()))?;
    write(out, c.into_raw())
}

/// Message of the last failed call on this thread, or "" after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gpa_last_error() -> *const c_char {
    LAST_ERROR.with(|l| l.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library, or be null.
#[no_mangle]
pub unsafe extern "C" fn gpa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the text graph format.
///
/// # Safety
/// `src` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_graph_parse(src: *const c_char, out: *mut *mut GpaGraph) -> GpaStatus {
    guard(|| {
        let graph: LabeledGraph = text(src)?.parse()?;
        write(out, Box::into_raw(Box::new(GpaGraph { graph })))
    })
}

/// # Safety
/// `g` comes from [`gpa_graph_parse`], or is null.
#[no_mangle]
pub unsafe extern "C" fn gpa_graph_free(g: *mut GpaGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for a null handle.
///
/// # Safety
/// `g` is a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn gpa_graph_vertex_count(g: *const GpaGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// The graph in its canonical text form.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_graph_to_string(g: *const GpaGraph, out: *mut *mut c_char) -> GpaStatus {
    guard(|| write_string(out, reference(g)?.graph.to_string()))
}

/// Normal form of a word such as `"v1 v2^-1 v1"`. The identity is "".
///
/// # Safety
/// `g` is a live handle; `word` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_normal_form(
    g: *const GpaGraph,
    word: *const c_char,
    out: *mut *mut c_char,
) -> GpaStatus {
    guard(|| {
        let g = &reference(g)?.graph;
        let w: Word = text(word)?.parse()?;
        write_string(out, gpauto::word::normal_form(g, &w)?.to_string())
    })
}

/// All partial conjugations, space separated, in canonical order.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_partial_conjugations(
    g: *const GpaGraph,
    out: *mut *mut c_char,
) -> GpaStatus {
    guard(|| {
        let g = &reference(g)?.graph;
        write_string(out, report::letters(&aut::all_partial_conjugations(g)))
    })
}

/// The reduced generating set, space separated.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_pc_zero(g: *const GpaGraph, out: *mut *mut c_char) -> GpaStatus {
    guard(|| {
        let g = &reference(g)?.graph;
        write_string(out, report::letters(&aut::pc_zero(g)))
    })
}

/// Least separating intersection of links as `"i=.. j=.. R={..}"`, or "none".
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_sil(g: *const GpaGraph, out: *mut *mut c_char) -> GpaStatus {
    guard(|| write_string(out, report::sil_text(&reference(g)?.graph.find_sil())))
}

/// Whether the pure outer automorphism group is abelian.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_out0_abelian(g: *const GpaGraph, out: *mut bool) -> GpaStatus {
    guard(|| write(out, structure::out0_is_abelian(&reference(g)?.graph).abelian))
}

/// Virtual cohomological dimension of `Out`, defined for trees with
/// finite orders. `defined` is set false otherwise and `vcd` is left alone.
///
/// # Safety
/// `g` is a live handle; `defined` and `vcd` are writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_vcd(g: *const GpaGraph, defined: *mut bool, vcd: *mut usize) -> GpaStatus {
    guard(|| {
        let v = structure::vcd_out(&reference(g)?.graph);
        write(defined, v.is_some())?;
        match v {
            Some(v) => write(vcd, v),
            None => Ok(()),
        }
    })
}

/// Full structure report in `key: value` lines.
///
/// # Safety
/// `g` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_structure_report(g: *const GpaGraph, out: *mut *mut c_char) -> GpaStatus {
    guard(|| {
        let r = structure::structure_report(&reference(g)?.graph);
        write_string(out, report::structure_text(&r).to_string())
    })
}

/// Evaluates a word in partial conjugations such as `"x2:8,15 x1:4'"`.
/// The empty string gives the identity.
///
/// # Safety
/// `g` is a live handle; `word` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_aut_parse(
    g: *const GpaGraph,
    word: *const c_char,
    out: *mut *mut GpaAut,
) -> GpaStatus {
    guard(|| {
        let graph = reference(g)?.graph.clone();
        let w = AutWord::parse(&graph, text(word)?)?;
        let aut = aut::evaluate(&graph, &w);
        write(out, Box::into_raw(Box::new(GpaAut { graph, aut })))
    })
}

/// # Safety
/// `a` comes from this library, or is null.
#[no_mangle]
pub unsafe extern "C" fn gpa_aut_free(a: *mut GpaAut) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// `first ∘ second`; both must belong to the same graph.
///
/// # Safety
/// Both handles are live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_aut_compose(
    first: *const GpaAut,
    second: *const GpaAut,
    out: *mut *mut GpaAut,
) -> GpaStatus {
    guard(|| {
        let (a, b) = (reference(first)?, reference(second)?);
        if a.graph != b.graph {
            return Err(Failure(
                GpaStatus::GraphMismatch,
                "automorphisms belong to different graphs".into(),
            ));
        }
        let aut = aut::compose(&a.graph, &a.aut, &b.aut);
        let graph = a.graph.clone();
        write(out, Box::into_raw(Box::new(GpaAut { graph, aut })))
    })
}

/// Image of a word, in normal form.
///
/// # Safety
/// `a` is live; `word` is NUL-terminated; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_aut_apply(
    a: *const GpaAut,
    word: *const c_char,
    out: *mut *mut c_char,
) -> GpaStatus {
    guard(|| {
        let a = reference(a)?;
        let w: Word = text(word)?.parse()?;
        write_string(out, aut::apply(&a.graph, &a.aut, &w)?.to_string())
    })
}

/// Whether the automorphism is the identity.
///
/// # Safety
/// `a` is live; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn gpa_aut_is_identity(a: *const GpaAut, out: *mut bool) -> GpaStatus {
    guard(|| write(out, reference(a)?.aut.is_identity()))
}

/// Whether the automorphism is inner. When it is and `witness` is not null,
/// a conjugating word is stored there (free with [`gpa_string_free`]);
/// otherwise `*witness` is set to null.
///
/// # Safety
/// `a` is live; `inner` is writable; `witness` is writable or null.
#[no_mangle]
pub unsafe extern "C" fn gpa_aut_is_inner(
    a: *const GpaAut,
    inner: *mut bool,
    witness: *mut *mut c_char,
) -> GpaStatus {
    guard(|| {
        let a = reference(a)?;
        let w = aut::find_inner_witness(&a.graph, &a.aut);
        write(inner, w.is_some())?;
        if !witness.is_null() {
            match w {
                Some(w) => write_string(witness, w.to_string())?,
                None => witness.write(ptr::null_mut()),
            }
        }
        Ok(())
    })
}
