//! C ABI for polygv.
//!
//! Complexes live behind the opaque `PolygvComplex` handle. Every fallible
//! call returns a `PolygvStatus` and writes its result through an out
//! pointer; on failure the message is kept per thread and can be read with
//! `polygv_last_error`. Integer vectors cross the boundary as JSON arrays
//! of exact integers, since their entries need not fit in 64 bits.
//!
//! Strings returned by this library must be released with
//! `polygv_string_free`, handles with `polygv_complex_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Display;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polygv::constructions::{cyclic_facets, diamond_boundary, mw_boundary, DiamondSpec, MwSpec};
use polygv::q_analysis::{gc_q_closed, QSpec};
use polygv::{Error, SimplicialComplex};

/// Return codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParameter = 2,
    Parse = 3,
    TooManyVertices = 4,
    InvalidUtf8 = 5,
    Complex = 6,
    Panic = 7,
}

/// Opaque handle to a simplicial complex.
pub struct PolygvComplex(SimplicialComplex);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Display) {
    let text = CString::new(msg.to_string().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> PolygvStatus {
    match e {
        Error::InvalidParameter(_) => PolygvStatus::InvalidParameter,
        Error::Parse(_) => PolygvStatus::Parse,
        Error::TooManyVertices(_) => PolygvStatus::TooManyVertices,
        _ => PolygvStatus::Complex,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), PolygvStatus>) -> PolygvStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PolygvStatus::Ok,
        Ok(Err(s)) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            PolygvStatus::Panic
        }
    }
}

fn lift<T>(r: polygv::Result<T>) -> Result<T, PolygvStatus> {
    r.map_err(|e| {
        set_error(&e);
        status_of(&e)
    })
}

fn null(what: &str) -> PolygvStatus {
    set_error(format!("null pointer: {what}"));
    PolygvStatus::NullPointer
}

unsafe fn write_handle(out: *mut *mut PolygvComplex, k: SimplicialComplex) {
    *out = Box::into_raw(Box::new(PolygvComplex(k)));
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s).expect("no interior nul").into_raw();
}

fn json_array<T: Display>(v: &[T]) -> String {
    let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", cells.join(","))
}

fn build(
    out: *mut *mut PolygvComplex,
    make: impl FnOnce() -> polygv::Result<SimplicialComplex>,
) -> PolygvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let k = lift(make())?;
        unsafe { write_handle(out, k) };
        Ok(())
    })
}

/// Boundary of the cyclic polytope `C(dim, m)` on vertices `c1..cm`.
#[no_mangle]
pub extern "C" fn polygv_cyclic(
    dim: usize,
    m: usize,
    out: *mut *mut PolygvComplex,
) -> PolygvStatus {
    build(out, || cyclic_facets(dim, m))
}

/// Boundary of the McMullen-Walkup polytope `MW(k, d, n)`.
#[no_mangle]
pub extern "C" fn polygv_mw(
    k: usize,
    d: usize,
    n: usize,
    out: *mut *mut PolygvComplex,
) -> PolygvStatus {
    build(out, || mw_boundary(MwSpec::new(k, d, n)?))
}

/// Boundary of the diamond `D_a(k, d, n)`.
#[no_mangle]
pub extern "C" fn polygv_diamond(
    k: usize,
    d: usize,
    n: usize,
    a: usize,
    out: *mut *mut PolygvComplex,
) -> PolygvStatus {
    build(out, || diamond_boundary(DiamondSpec::new(k, d, n, a)?))
}

/// Parses a complex from its JSON form.
///
/// # Safety
/// `json` must be null or a valid nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_from_json(
    json: *const c_char,
    out: *mut *mut PolygvComplex,
) -> PolygvStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| {
            set_error(e);
            PolygvStatus::InvalidUtf8
        })?;
        let k = lift(SimplicialComplex::from_json(text))?;
        write_handle(out, k);
        Ok(())
    })
}

/// Releases a handle. Null is accepted and ignored.
///
/// # Safety
/// `complex` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_free(complex: *mut PolygvComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Runs `f` on the complex behind `complex` and returns its string result.
unsafe fn query(
    complex: *const PolygvComplex,
    out: *mut *mut c_char,
    f: impl FnOnce(&SimplicialComplex) -> String,
) -> PolygvStatus {
    guard(|| {
        if complex.is_null() {
            return Err(null("complex"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        write_string(out, f(&(*complex).0));
        Ok(())
    })
}

/// The complex as JSON: `{"dim", "vertices", "facets"}`.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_to_json(
    complex: *const PolygvComplex,
    out: *mut *mut c_char,
) -> PolygvStatus {
    query(complex, out, SimplicialComplex::to_json)
}

/// f-vector as a JSON array `[f_-1, f_0, ...]`.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_f_vector(
    complex: *const PolygvComplex,
    out: *mut *mut c_char,
) -> PolygvStatus {
    query(complex, out, |k| json_array(k.f_vector().counts()))
}

/// h-vector as a JSON array.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_h_vector(
    complex: *const PolygvComplex,
    out: *mut *mut c_char,
) -> PolygvStatus {
    query(complex, out, |k| json_array(k.h_vector().entries()))
}

/// g-vector as a JSON array.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_g_vector(
    complex: *const PolygvComplex,
    out: *mut *mut c_char,
) -> PolygvStatus {
    query(complex, out, |k| json_array(k.g_vector().entries()))
}

/// Number of facets.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polygv_complex_num_facets(
    complex: *const PolygvComplex,
    out: *mut usize,
) -> PolygvStatus {
    guard(|| {
        if complex.is_null() {
            return Err(null("complex"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        *out = (*complex).0.num_facets();
        Ok(())
    })
}

/// Long cubical g-vector of `Q(k, d, n)` as a JSON array.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn polygv_gc_q(
    k: usize,
    d: usize,
    n: usize,
    out: *mut *mut c_char,
) -> PolygvStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec = lift(QSpec::new(k, d, n))?;
        write_string(out, json_array(gc_q_closed(spec).entries()));
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn polygv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn polygv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn polygv_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_arrays() {
        assert_eq!(json_array::<u8>(&[]), "[]");
        assert_eq!(json_array(&[1, 2, 3]), "[1,2,3]");
    }

    #[test]
    fn error_mapping() {
        assert_eq!(status_of(&Error::Parse(String::new())), PolygvStatus::Parse);
        assert_eq!(
            status_of(&Error::NotAFace(String::new())),
            PolygvStatus::Complex
        );
    }
}
