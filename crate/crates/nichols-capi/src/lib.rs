//! C ABI over the engine: parse a braiding description once into an opaque
//! handle, then request results as JSON strings.
//!
//! Conventions, mirrored in the generated header:
//! - Every fallible function returns an `int32_t` status: 0 ok, 1 runtime
//!   failure, 2 invalid input, 3 degree bound refused the computation.
//! - On failure, [`nichols_last_error`] returns a message for the calling
//!   thread, valid until that thread's next failing call.
//! - Strings written through `out` parameters are NUL-terminated, owned by
//!   the caller, and must be released with [`nichols_string_free`].
//! - Handles must be released with [`nichols_braiding_free`], exactly once.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use nichols::braiding::{BraidingInput, LoweredSpace};
use nichols::cartan::DiagonalBraiding;
use nichols::engine::{
    factor_hilbert, generic_exact_rank, hilbert_series, relations_generic, relations_rou,
    rou_rank, HilbertSeries,
};
use nichols::error::EngineError;
use nichols::groupoid::{
    groupoid_dot, root_system, validate_axioms, weyl_groupoid, GroupoidOptions, RootOptions,
};
use nichols::rank2;
use serde_json::{json, Value};

/// Success.
pub const NICHOLS_OK: i32 = 0;
/// The computation itself failed (unbounded case, internal mismatch, ...).
pub const NICHOLS_ERR_RUNTIME: i32 = 1;
/// The input could not be parsed or does not fit the requested operation.
pub const NICHOLS_ERR_INVALID: i32 = 2;
/// A configured degree bound refused the computation.
pub const NICHOLS_ERR_DEGREE: i32 = 3;

/// A parsed braiding description.  Opaque; create with
/// [`nichols_braiding_parse`], release with [`nichols_braiding_free`].
pub struct NicholsBraiding {
    input: BraidingInput,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn code_for(e: &EngineError) -> i32 {
    match e {
        EngineError::DegreeTooLarge { .. } => NICHOLS_ERR_DEGREE,
        EngineError::InvalidInput(_)
        | EngineError::Unsupported(_)
        | EngineError::NotACharacter(_)
        | EngineError::GroupTooLarge(_)
        | EngineError::LetterOutOfRange { .. }
        | EngineError::YangBaxterViolation(_)
        | EngineError::NotInvertible => NICHOLS_ERR_INVALID,
        _ => NICHOLS_ERR_RUNTIME,
    }
}

fn fail(e: EngineError) -> i32 {
    let code = code_for(&e);
    set_error(e.to_string());
    code
}

/// Run `body`, report panics as runtime errors instead of unwinding across
/// the ABI boundary.
fn guarded(body: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(code) => code,
        Err(_) => {
            set_error("internal panic".into());
            NICHOLS_ERR_RUNTIME
        }
    }
}

/// # Safety
/// `out` must be a valid pointer to pointer-sized writable storage.
unsafe fn write_string(s: String, out: *mut *mut c_char) -> i32 {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            NICHOLS_OK
        }
        Err(_) => {
            set_error("result contained an interior NUL byte".into());
            NICHOLS_ERR_RUNTIME
        }
    }
}

/// # Safety
/// `handle` must be null or a pointer returned by [`nichols_braiding_parse`].
unsafe fn borrow<'a>(handle: *const NicholsBraiding) -> Option<&'a NicholsBraiding> {
    unsafe { handle.as_ref() }
}

fn diagonal_of(b: &NicholsBraiding) -> Result<DiagonalBraiding, EngineError> {
    let Some((exps, order)) = b.input.diagonal_exponents() else {
        return Err(EngineError::Unsupported(
            "this operation needs a diagonal braiding".into(),
        ));
    };
    match order {
        Some(n) => DiagonalBraiding::rou(n, exps),
        None => DiagonalBraiding::generic(exps),
    }
}

fn hilbert_value(h: &HilbertSeries) -> Value {
    let factorization = h.terminated.then(|| {
        serde_json::to_value(factor_hilbert(&h.dims)).expect("serializable")
    });
    json!({
        "dims": h.dims,
        "terminated": h.terminated,
        "total": h.total,
        "factorization": factorization,
    })
}

/// The message from this thread's most recent failing call, as a
/// NUL-terminated string.  Never null; empty before the first failure.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn nichols_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parse a JSON braiding description into a fresh handle.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must point to writable
/// pointer storage.  On success `*out` owns the handle.
#[no_mangle]
pub unsafe extern "C" fn nichols_braiding_parse(
    json: *const c_char,
    out: *mut *mut NicholsBraiding,
) -> i32 {
    guarded(|| {
        if json.is_null() || out.is_null() {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        }
        let text = match unsafe { CStr::from_ptr(json) }.to_str() {
            Ok(t) => t,
            Err(_) => {
                set_error("description is not valid UTF-8".into());
                return NICHOLS_ERR_INVALID;
            }
        };
        match BraidingInput::from_json(text) {
            Ok(input) => {
                let handle = Box::new(NicholsBraiding { input });
                unsafe { *out = Box::into_raw(handle) };
                NICHOLS_OK
            }
            Err(e) => fail(e),
        }
    })
}

/// Release a handle returned by [`nichols_braiding_parse`].  Null is a
/// no-op; anything else must be released exactly once.
///
/// # Safety
/// `handle` must be null or a pointer returned by [`nichols_braiding_parse`]
/// that has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn nichols_braiding_free(handle: *mut NicholsBraiding) {
    if !handle.is_null() {
        drop(unsafe { Box::from_raw(handle) });
    }
}

/// Release a string returned through an `out` parameter.  Null is a no-op.
///
/// # Safety
/// `s` must be null or a string pointer produced by this library that has
/// not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn nichols_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// The dimension of the underlying braided vector space.
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_braiding_dim(
    handle: *const NicholsBraiding,
    out: *mut u32,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let dim = match b.input.lower() {
            Ok(LoweredSpace::Rou(s)) => s.dim,
            Ok(LoweredSpace::Generic(s)) => s.dim,
            Err(e) => return fail(e),
        };
        unsafe { *out = dim as u32 };
        NICHOLS_OK
    })
}

/// Graded dimensions up to `kmax`, as JSON
/// `{dims, terminated, total, factorization}`.
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_hilbert_json(
    handle: *const NicholsBraiding,
    kmax: u32,
    block_cap: u32,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let result = match b.input.lower() {
            Ok(LoweredSpace::Rou(space)) => {
                let field = space.ring.clone();
                hilbert_series(&space, kmax as usize, block_cap as usize, rou_rank(&field))
            }
            Ok(LoweredSpace::Generic(space)) => {
                hilbert_series(&space, kmax as usize, block_cap as usize, generic_exact_rank())
            }
            Err(e) => return fail(e),
        };
        match result {
            Ok(h) => unsafe { write_string(hilbert_value(&h).to_string(), out) },
            Err(e) => fail(e),
        }
    })
}

/// Kernel relations in one degree, as JSON `{degree, relations: [...]}` with
/// coefficient strings.
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_relations_json(
    handle: *const NicholsBraiding,
    degree: u32,
    block_cap: u32,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let rels: Result<Vec<Value>, EngineError> = match b.input.lower() {
            Ok(LoweredSpace::Rou(space)) => {
                relations_rou(&space, degree as usize, block_cap as usize).map(|rs| {
                    rs.iter()
                        .map(|r| {
                            json!({
                                "degree": r.degree,
                                "primitive": r.primitive,
                                "terms": r
                                    .terms
                                    .iter()
                                    .map(|(w, c)| json!({"word": w, "coeff": c.to_string()}))
                                    .collect::<Vec<_>>(),
                            })
                        })
                        .collect()
                })
            }
            Ok(LoweredSpace::Generic(space)) => {
                relations_generic(&space, degree as usize, block_cap as usize).map(|rs| {
                    rs.iter()
                        .map(|r| {
                            json!({
                                "degree": r.degree,
                                "primitive": r.primitive,
                                "terms": r
                                    .terms
                                    .iter()
                                    .map(|(w, c)| json!({"word": w, "coeff": c.to_string()}))
                                    .collect::<Vec<_>>(),
                            })
                        })
                        .collect()
                })
            }
            Err(e) => return fail(e),
        };
        match rels {
            Ok(list) => unsafe {
                write_string(json!({"degree": degree, "relations": list}).to_string(), out)
            },
            Err(e) => fail(e),
        }
    })
}

/// Cartan matrix of a diagonal braiding, as JSON `{cartan: [[...]]}`.
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_cartan_json(
    handle: *const NicholsBraiding,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let cartan = match diagonal_of(b).and_then(|d| d.cartan_matrix()) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        unsafe { write_string(json!({ "cartan": cartan }).to_string(), out) }
    })
}

/// Reflection closure of a diagonal braiding, as JSON (objects, arrows,
/// status, and the three type counts).
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_weylgroupoid_json(
    handle: *const NicholsBraiding,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let g = match diagonal_of(b)
            .and_then(|d| weyl_groupoid(&d, &GroupoidOptions::default()))
        {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        unsafe {
            write_string(serde_json::to_value(&g).expect("serializable").to_string(), out)
        }
    })
}

/// Reflection closure rendered in graphviz dot.
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_weylgroupoid_dot(
    handle: *const NicholsBraiding,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let g = match diagonal_of(b)
            .and_then(|d| weyl_groupoid(&d, &GroupoidOptions::default()))
        {
            Ok(g) => g,
            Err(e) => return fail(e),
        };
        unsafe { write_string(groupoid_dot(&g), out) }
    })
}

/// Root system over the reflection closure, as JSON with a `violations`
/// array from the built-in consistency re-check.
///
/// # Safety
/// `handle` must be a live handle; `out` must point to writable pointer
/// storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_roots_json(
    handle: *const NicholsBraiding,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let (Some(b), false) = (unsafe { borrow(handle) }, out.is_null()) else {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        };
        let result = diagonal_of(b)
            .and_then(|d| weyl_groupoid(&d, &GroupoidOptions::default()))
            .and_then(|g| root_system(&g, &RootOptions::default()).map(|r| (g, r)));
        let (g, r) = match result {
            Ok(pair) => pair,
            Err(e) => return fail(e),
        };
        let mut v = serde_json::to_value(&r).expect("serializable");
        v["violations"] = json!(validate_axioms(&g, &r));
        unsafe { write_string(v.to_string(), out) }
    })
}

/// Admissible rank-2 sequence classes of the given length, as a JSON array.
///
/// # Safety
/// `out` must point to writable pointer storage.
#[no_mangle]
pub unsafe extern "C" fn nichols_rank2_classes_json(
    length: u32,
    out: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        if out.is_null() {
            set_error("null pointer argument".into());
            return NICHOLS_ERR_INVALID;
        }
        match rank2::enumerate_classes(length as usize) {
            Ok(classes) => unsafe { write_string(json!(classes).to_string(), out) },
            Err(e) => fail(e),
        }
    })
}
