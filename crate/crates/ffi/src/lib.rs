//! C ABI for the `endoaip` engine.
//!
//! Structures are built from the same JSON descriptions the CLI reads and are
//! returned as opaque handles. Every fallible function returns an
//! [`EndoaipStatus`]; on failure a message is available from
//! [`endoaip_last_error`] on the calling thread. Strings handed out by the
//! library must be released with [`endoaip_string_free`], handles with their
//! matching `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use endoaip::annprop::{check_ring_property_oriented, AnyProperty};
use endoaip::describe::{build_structure, parse_structure, summarize, Structure};
use endoaip::harness::{generate_corpus, run_theorem_suite, CorpusSpec, TheoremId};
use endoaip::module::regular_module;
use endoaip::replay::{replay_module, replay_ring};
use endoaip::{
    check_module_property, Caps, Error, FiniteModule, FiniteRing, Orientation, PropertyId, RingPropertyId, Verdict,
};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoaipStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Malformed = 3,
    SizeCapExceeded = 4,
    UnknownProperty = 5,
    RingMismatch = 6,
    Internal = 7,
}

/// Size limits; see [`endoaip_default_caps`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndoaipCaps {
    pub ring: usize,
    pub module: usize,
    pub lattice: usize,
}

impl From<EndoaipCaps> for Caps {
    fn from(c: EndoaipCaps) -> Self {
        Caps {
            ring: c.ring,
            module: c.module,
            lattice: c.lattice,
        }
    }
}

/// Opaque finite ring.
pub struct EndoaipRing(Arc<FiniteRing>);

/// Opaque finite right module.
pub struct EndoaipModule(FiniteModule);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(EndoaipStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::SizeCapExceeded { .. } => EndoaipStatus::SizeCapExceeded,
            Error::RingMismatch => EndoaipStatus::RingMismatch,
            Error::UnknownProperty(_) => EndoaipStatus::UnknownProperty,
            Error::Malformed(_) | Error::InvalidStructure(_) | Error::NotAnIdeal(_) => EndoaipStatus::Malformed,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(EndoaipStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> EndoaipStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            EndoaipStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error");
            EndoaipStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(EndoaipStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn read_caps(p: *const EndoaipCaps) -> Caps {
    if p.is_null() {
        Caps::default()
    } else {
        (*p).into()
    }
}

unsafe fn put<T>(out: *mut T, value: T) {
    if !out.is_null() {
        *out = value;
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

fn verdict_to_json(v: &Verdict) -> String {
    serde_json::to_string(v).expect("verdict serializes")
}

fn parse_property(s: &str) -> Result<AnyProperty, Failure> {
    Ok(s.parse::<AnyProperty>()
        .or_else(|e| s.parse::<RingPropertyId>().map(AnyProperty::Ring).map_err(|_| e))?)
}

fn read_verdict(json: &str) -> Result<Verdict, Failure> {
    serde_json::from_str(json).map_err(|e| Failure(EndoaipStatus::Malformed, format!("verdict: {e}")))
}

/// The built-in size limits.
#[no_mangle]
pub extern "C" fn endoaip_default_caps() -> EndoaipCaps {
    let c = Caps::default();
    EndoaipCaps {
        ring: c.ring,
        module: c.module,
        lattice: c.lattice,
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn endoaip_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn endoaip_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a ring from a JSON ring description. `caps` may be null.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn endoaip_ring_from_json(
    json: *const c_char,
    caps: *const EndoaipCaps,
    out: *mut *mut EndoaipRing,
) -> EndoaipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        match build_structure(&parse_structure(text)?, &read_caps(caps))? {
            Structure::Ring(r) => {
                *out = Box::into_raw(Box::new(EndoaipRing(r)));
                Ok(())
            }
            Structure::Module(_) => Err(Failure(EndoaipStatus::Malformed, "expected a ring description".into())),
        }
    })
}

/// Builds a module from a JSON module description. A ring description yields
/// its regular module. `caps` may be null.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_from_json(
    json: *const c_char,
    caps: *const EndoaipCaps,
    out: *mut *mut EndoaipModule,
) -> EndoaipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let text = read_str(json, "json")?;
        let m = match build_structure(&parse_structure(text)?, &read_caps(caps))? {
            Structure::Ring(r) => regular_module(&r),
            Structure::Module(m) => m,
        };
        *out = Box::into_raw(Box::new(EndoaipModule(m)));
        Ok(())
    })
}

/// The regular module of a ring.
///
/// # Safety
/// `ring` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_regular(
    ring: *const EndoaipRing,
    out: *mut *mut EndoaipModule,
) -> EndoaipStatus {
    guard(|| {
        let r = ring.as_ref().ok_or_else(|| null("ring"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(EndoaipModule(regular_module(&r.0))));
        Ok(())
    })
}

/// The ring a module is defined over, as a new handle.
///
/// # Safety
/// `module` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_ring(
    module: *const EndoaipModule,
    out: *mut *mut EndoaipRing,
) -> EndoaipStatus {
    guard(|| {
        let m = module.as_ref().ok_or_else(|| null("module"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = Box::into_raw(Box::new(EndoaipRing(m.0.ring().clone())));
        Ok(())
    })
}

/// Number of elements of the ring, or 0 for a null handle.
///
/// # Safety
/// `ring` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn endoaip_ring_order(ring: *const EndoaipRing) -> usize {
    ring.as_ref().map_or(0, |r| r.0.order())
}

/// Number of elements of the module, or 0 for a null handle.
///
/// # Safety
/// `module` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_order(module: *const EndoaipModule) -> usize {
    module.as_ref().map_or(0, |m| m.0.order())
}

/// Decides a module property (or, with a `ring:` prefix or a ring-only name,
/// a property of the module's ring). `holds` and `verdict_json` may be null;
/// a returned verdict string must be freed with [`endoaip_string_free`].
///
/// # Safety
/// `module` must be a live handle and `property` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_check(
    module: *const EndoaipModule,
    property: *const c_char,
    caps: *const EndoaipCaps,
    holds: *mut bool,
    verdict_json: *mut *mut c_char,
) -> EndoaipStatus {
    guard(|| {
        let m = module.as_ref().ok_or_else(|| null("module"))?;
        let caps = read_caps(caps);
        let v = match parse_property(read_str(property, "property")?)? {
            AnyProperty::Module(p) => check_module_property(&m.0, p, &caps)?,
            AnyProperty::Ring(p) => check_ring_property_oriented(m.0.ring(), p, Orientation::Standard, &caps)?,
        };
        put(holds, v.holds);
        put(verdict_json, into_c_string(verdict_to_json(&v)));
        Ok(())
    })
}

/// Decides a ring property. `mirrored` selects the mirrored annihilator
/// orientation. `holds` and `verdict_json` may be null.
///
/// # Safety
/// `ring` must be a live handle and `property` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn endoaip_ring_check(
    ring: *const EndoaipRing,
    property: *const c_char,
    mirrored: bool,
    caps: *const EndoaipCaps,
    holds: *mut bool,
    verdict_json: *mut *mut c_char,
) -> EndoaipStatus {
    guard(|| {
        let r = ring.as_ref().ok_or_else(|| null("ring"))?;
        let name = read_str(property, "property")?;
        let p: RingPropertyId = name.strip_prefix("ring:").unwrap_or(name).parse()?;
        let o = if mirrored {
            Orientation::Mirrored
        } else {
            Orientation::Standard
        };
        let v = check_ring_property_oriented(&r.0, p, o, &read_caps(caps))?;
        put(holds, v.holds);
        put(verdict_json, into_c_string(verdict_to_json(&v)));
        Ok(())
    })
}

/// Re-validates a verdict produced for this module (module- or ring-level)
/// through the independent replay path. `valid` receives the outcome; a
/// rejection reason is available from [`endoaip_last_error`].
///
/// # Safety
/// `module` must be a live handle and `verdict_json` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_replay(
    module: *const EndoaipModule,
    verdict_json: *const c_char,
    caps: *const EndoaipCaps,
    valid: *mut bool,
) -> EndoaipStatus {
    let mut reason = String::new();
    let status = guard(|| {
        let m = module.as_ref().ok_or_else(|| null("module"))?;
        let v = read_verdict(read_str(verdict_json, "verdict_json")?)?;
        let outcome = if v.property.parse::<PropertyId>().is_ok() {
            replay_module(&m.0, &v, &read_caps(caps))
        } else {
            replay_ring(m.0.ring(), &v)
        };
        put(valid, outcome.is_ok());
        reason = outcome.err().unwrap_or_default();
        Ok(())
    });
    if status == EndoaipStatus::Ok {
        set_last_error(&reason);
    }
    status
}

/// JSON summary (orders, lattice counts, uniform dimension) of a described
/// structure.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn endoaip_describe(
    json: *const c_char,
    caps: *const EndoaipCaps,
    out: *mut *mut c_char,
) -> EndoaipStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let caps = read_caps(caps);
        let s = summarize(
            &build_structure(&parse_structure(read_str(json, "json")?)?, &caps)?,
            &caps,
        )?;
        *out = into_c_string(serde_json::to_string(&s).expect("summary serializes"));
        Ok(())
    })
}

/// Runs the theorem suite. `corpus_json` is a corpus spec (null for the
/// default corpus) and `theorems` a comma-separated id list (null for all).
/// Writes the report JSON and the violation count.
///
/// # Safety
/// Non-null string arguments must be NUL-terminated; `report_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn endoaip_suite(
    corpus_json: *const c_char,
    theorems: *const c_char,
    report_json: *mut *mut c_char,
    violations: *mut usize,
) -> EndoaipStatus {
    guard(|| {
        if report_json.is_null() {
            return Err(null("report_json"));
        }
        let spec: CorpusSpec = if corpus_json.is_null() {
            CorpusSpec::default()
        } else {
            serde_json::from_str(read_str(corpus_json, "corpus_json")?)
                .map_err(|e| Failure(EndoaipStatus::Malformed, format!("corpus spec: {e}")))?
        };
        let ids: Vec<TheoremId> = if theorems.is_null() {
            TheoremId::ALL.to_vec()
        } else {
            read_str(theorems, "theorems")?
                .split(',')
                .map(|t| t.trim().parse::<TheoremId>())
                .collect::<Result<_, _>>()?
        };
        let report = run_theorem_suite(&generate_corpus(&spec), &ids, &spec.caps);
        put(violations, report.violation_count());
        *report_json = into_c_string(report.to_json());
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn endoaip_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a ring handle. Null is ignored.
///
/// # Safety
/// `ring` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn endoaip_ring_free(ring: *mut EndoaipRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Releases a module handle. Null is ignored.
///
/// # Safety
/// `module` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn endoaip_module_free(module: *mut EndoaipModule) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}
