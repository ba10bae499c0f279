//! C ABI over the `mereo` library.
//!
//! Objects cross the boundary as opaque handles that the caller frees with
//! the matching `_free` function. Reports come back as JSON strings owned by
//! the library and released with [`mereo_string_free`]. Every function
//! returns a [`MereoStatus`]; on failure [`mereo_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mereo::algebra::{eca_from_rc, ExtendedContactAlgebra, Strength};
use mereo::commands::{self, CommandOutput, Kind};
use mereo::io::{Document, EcaDoc, LabeledTopology};
use mereo::topology::RegularClosedAlgebra;
use mereo::{Caps, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MereoStatus {
    Ok = 0,
    /// The call ran but at least one check failed.
    CheckFailed = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    NullPointer = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MereoKind {
    Parametrized = 0,
    Type1 = 1,
    Type2 = 2,
}

/// A labelled finite topology.
pub struct MereoTopology(LabeledTopology);

/// A verified (weak) extended contact algebra.
pub struct MereoAlgebra(ExtendedContactAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> MereoStatus {
    match err {
        Error::CapExceeded { .. } => MereoStatus::CapExceeded,
        Error::AxiomViolation { .. } | Error::NotAntitone { .. } => MereoStatus::CheckFailed,
        _ => MereoStatus::InvalidInput,
    }
}

/// Runs `f`, recording its error and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<MereoStatus, (MereoStatus, String)>) -> MereoStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            MereoStatus::Internal
        }
    }
}

fn lib(err: Error) -> (MereoStatus, String) {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> (MereoStatus, String) {
    (MereoStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (MereoStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (MereoStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn write_report(
    out: *mut *mut c_char,
    report: CommandOutput,
) -> Result<MereoStatus, (MereoStatus, String)> {
    let json = CString::new(report.json_text())
        .map_err(|_| (MereoStatus::Internal, "report contains nul".into()))?;
    *out = json.into_raw();
    Ok(if report.passed {
        MereoStatus::Ok
    } else {
        MereoStatus::CheckFailed
    })
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn mereo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mereo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a topology document `{"universe": [...], "subbasis": [[...], ...]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_topology_from_json(
    json: *const c_char,
    out: *mut *mut MereoTopology,
) -> MereoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let t = LabeledTopology::parse(read_str(json, "json")?).map_err(lib)?;
        *out = Box::into_raw(Box::new(MereoTopology(t)));
        Ok(MereoStatus::Ok)
    })
}

/// # Safety
/// `t` must come from [`mereo_topology_from_json`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mereo_topology_free(t: *mut MereoTopology) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of regular closed regions of the space.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_topology_region_count(
    t: *const MereoTopology,
    out: *mut usize,
) -> MereoStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("topology"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = RegularClosedAlgebra::new(t.0.topology.clone()).len();
        Ok(MereoStatus::Ok)
    })
}

/// Tabulates the covering relation of the space's regions.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_algebra_from_topology(
    t: *const MereoTopology,
    out: *mut *mut MereoAlgebra,
) -> MereoStatus {
    guard(|| {
        let t = t.as_ref().ok_or_else(|| null("topology"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let e = eca_from_rc(
            &RegularClosedAlgebra::new(t.0.topology.clone()),
            &Caps::default(),
        )
        .map_err(lib)?;
        *out = Box::into_raw(Box::new(MereoAlgebra(e)));
        Ok(MereoStatus::Ok)
    })
}

/// Parses `{"atoms": k, "covering": [[a,b,d], ...]}` (or `"covering_mode":
/// "discrete"`) and accepts it if it satisfies the weak axioms.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_algebra_from_json(
    json: *const c_char,
    out: *mut *mut MereoAlgebra,
) -> MereoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let doc: EcaDoc =
            serde_json::from_str(read_str(json, "json")?).map_err(|e| lib(e.into()))?;
        let e = ExtendedContactAlgebra::classify(doc.covering().map_err(lib)?, &Caps::default())
            .map_err(lib)?;
        *out = Box::into_raw(Box::new(MereoAlgebra(e)));
        Ok(MereoStatus::Ok)
    })
}

/// # Safety
/// `a` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn mereo_algebra_free(a: *mut MereoAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_algebra_atom_count(
    a: *const MereoAlgebra,
    out: *mut usize,
) -> MereoStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a.0.algebra().atom_count();
        Ok(MereoStatus::Ok)
    })
}

/// Whether the algebra is a full ECA (`true`) or only a weak one.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_algebra_is_eca(
    a: *const MereoAlgebra,
    out: *mut bool,
) -> MereoStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = a.0.strength() == Strength::Full;
        Ok(MereoStatus::Ok)
    })
}

/// `(x, y) ⊢ z` for elements given as atom masks.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_algebra_covers(
    a: *const MereoAlgebra,
    x: usize,
    y: usize,
    z: usize,
    out: *mut bool,
) -> MereoStatus {
    guard(|| {
        let a = a.as_ref().ok_or_else(|| null("algebra"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let ba = a.0.algebra();
        for v in [x, y, z] {
            ba.check(v).map_err(lib)?;
        }
        *out = a.0.covers(x, y, z);
        Ok(MereoStatus::Ok)
    })
}

/// Runs every axiom family on a topology, algebra or frame document and
/// writes the JSON report to `*out`. Returns `CHECK_FAILED` when an axiom fails.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_check_axioms(
    json: *const c_char,
    out: *mut *mut c_char,
) -> MereoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let doc = Document::parse(read_str(json, "json")?).map_err(lib)?;
        write_report(
            out,
            commands::check_axioms(&doc, &Caps::default()).map_err(lib)?,
        )
    })
}

/// Builds a frame representation and writes the verification report.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_represent(
    json: *const c_char,
    kind: MereoKind,
    out: *mut *mut c_char,
) -> MereoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let doc = Document::parse(read_str(json, "json")?).map_err(lib)?;
        let kind = match kind {
            MereoKind::Parametrized => Kind::Parametrized,
            MereoKind::Type1 => Kind::Type1,
            MereoKind::Type2 => Kind::Type2,
        };
        write_report(
            out,
            commands::represent(&doc, kind, &Caps::default()).map_err(lib)?,
        )
    })
}

/// The golden pair of spaces separating contact from connectedness.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_example1(out: *mut *mut c_char) -> MereoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write_report(
            out,
            commands::example1(&Caps::default(), false).map_err(lib)?,
        )
    })
}

/// A seeded random campaign; the report is identical for identical arguments.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mereo_random(
    seed: u64,
    trials: usize,
    max_universe: usize,
    out: *mut *mut c_char,
) -> MereoStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        write_report(
            out,
            commands::random(seed, trials, max_universe, &Caps::default(), false).map_err(lib)?,
        )
    })
}
