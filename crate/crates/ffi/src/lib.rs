//! C interface to the comrade matrix library.
//!
//! Matrices and inverses are opaque handles owned by the caller and released with
//! the matching `*_free` function. Every fallible call returns a [`ComradeStatus`];
//! on failure [`comrade_last_error_message`] describes the error for the calling
//! thread. Strings returned through out-parameters are owned by the caller and
//! released with [`comrade_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use comrade::{
    invert_in, io, ComradeMatrix, DenseMatrix, Error, ExactRational, Inverse, InvertOptions, Number, ScalarMode,
};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComradeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Singular = 4,
    ZeroPivot = 5,
    Pole = 6,
    OutOfRange = 7,
    Internal = 8,
}

/// Field the algorithms run in.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComradeMode {
    Exact = 0,
    Symbolic = 1,
    Float = 2,
}

impl From<ComradeMode> for ScalarMode {
    fn from(m: ComradeMode) -> Self {
        match m {
            ComradeMode::Exact => ScalarMode::Exact,
            ComradeMode::Symbolic => ScalarMode::Symbolic,
            ComradeMode::Float => ScalarMode::Float,
        }
    }
}

/// Opaque comrade matrix.
pub struct ComradeHandle {
    matrix: ComradeMatrix,
}

/// Opaque inverse of a comrade matrix.
pub struct InverseHandle {
    inverse: Inverse,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: ComradeStatus, message: impl Into<String>) -> ComradeStatus {
    set_error(message.into());
    status
}

fn status_of(err: &Error) -> ComradeStatus {
    match err {
        Error::Format { .. } | Error::ParseRational(_) | Error::Order(_) | Error::Shape { .. } => ComradeStatus::Parse,
        Error::Singular => ComradeStatus::Singular,
        Error::ZeroPivot(_) | Error::ZeroAlpha(_) => ComradeStatus::ZeroPivot,
        Error::PoleAtZero => ComradeStatus::Pole,
        _ => ComradeStatus::Internal,
    }
}

fn from_error(err: Error) -> ComradeStatus {
    fail(status_of(&err), err.to_string())
}

/// Runs `body`, turning a panic into [`ComradeStatus::Internal`].
fn guard(body: impl FnOnce() -> ComradeStatus) -> ComradeStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|_| fail(ComradeStatus::Internal, "internal panic"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, ComradeStatus> {
    if p.is_null() {
        return Err(fail(ComradeStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(ComradeStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn read_strs<'a>(p: *const *const c_char, len: usize, what: &str) -> Result<Vec<&'a str>, ComradeStatus> {
    if p.is_null() {
        return Err(fail(ComradeStatus::NullPointer, format!("{what} is null")));
    }
    (0..len).map(|i| read_str(*p.add(i), &format!("{what}[{i}]"))).collect()
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or NULL if none.
/// Valid until the next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn comrade_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds an order-`n` matrix from rational strings ("p/q" or "p").
/// `beta` has `n` entries, `alpha` and `gamma` (γ2…γn) `n - 1`, `a` (a3…an) `n - 2`.
///
/// # Safety
/// Every array must hold the stated number of valid NUL-terminated strings and
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_matrix_new(
    n: usize,
    beta: *const *const c_char,
    alpha: *const *const c_char,
    gamma: *const *const c_char,
    a: *const *const c_char,
    out: *mut *mut ComradeHandle,
) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        if n < 3 {
            return from_error(Error::Order(n));
        }
        let parts = (|| {
            Ok::<_, ComradeStatus>((
                read_strs(beta, n, "beta")?,
                read_strs(alpha, n - 1, "alpha")?,
                read_strs(gamma, n - 1, "gamma")?,
                read_strs(a, n - 2, "a")?,
            ))
        })();
        let (beta, alpha, gamma, a) = match parts {
            Ok(p) => p,
            Err(s) => return s,
        };
        match ComradeMatrix::from_strs(n, &beta, &alpha, &gamma, &a) {
            Ok(matrix) => {
                *out = Box::into_raw(Box::new(ComradeHandle { matrix }));
                ComradeStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parses a matrix file's JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_matrix_from_json(json: *const c_char, out: *mut *mut ComradeHandle) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        let text = match read_str(json, "json") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::parse_matrix_str(text) {
            Ok(matrix) => {
                *out = Box::into_raw(Box::new(ComradeHandle { matrix }));
                ComradeStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `m` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn comrade_matrix_free(m: *mut ComradeHandle) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Order of the matrix, 0 for NULL.
///
/// # Safety
/// `m` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn comrade_matrix_order(m: *const ComradeHandle) -> usize {
    m.as_ref().map_or(0, |h| h.matrix.n())
}

unsafe fn det_number(m: *const ComradeHandle, mode: ComradeMode) -> Result<Number, ComradeStatus> {
    let h = m
        .as_ref()
        .ok_or_else(|| fail(ComradeStatus::NullPointer, "matrix is null"))?;
    comrade::determinant_in(&h.matrix, mode.into())
        .map(|d| d.value)
        .map_err(from_error)
}

/// Determinant as a string: "p/q" in exact and symbolic mode, a decimal in float mode.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_det(
    m: *const ComradeHandle,
    mode: ComradeMode,
    out: *mut *mut c_char,
) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        match det_number(m, mode) {
            Ok(v) => {
                *out = new_string(v.to_string());
                ComradeStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Determinant rounded to the nearest double.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_det_f64(m: *const ComradeHandle, mode: ComradeMode, out: *mut f64) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        match det_number(m, mode) {
            Ok(v) => {
                *out = v.to_f64();
                ComradeStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Inverts the matrix.
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_invert(
    m: *const ComradeHandle,
    mode: ComradeMode,
    out: *mut *mut InverseHandle,
) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        let Some(h) = m.as_ref() else {
            return fail(ComradeStatus::NullPointer, "matrix is null");
        };
        match invert_in(&h.matrix, mode.into(), InvertOptions::default()) {
            Ok(inverse) => {
                *out = Box::into_raw(Box::new(InverseHandle { inverse }));
                ComradeStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `inv` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn comrade_inverse_free(inv: *mut InverseHandle) {
    if !inv.is_null() {
        drop(Box::from_raw(inv));
    }
}

enum Entries<'a> {
    Exact(&'a DenseMatrix<ExactRational>),
    Float(&'a DenseMatrix<f64>),
}

impl InverseHandle {
    fn entries(&self) -> Entries<'_> {
        match &self.inverse {
            Inverse::Exact { result, .. } => Entries::Exact(&result.inverse),
            Inverse::Float(r) => Entries::Float(&r.inverse),
        }
    }

    fn order(&self) -> usize {
        match self.entries() {
            Entries::Exact(m) => m.n(),
            Entries::Float(m) => m.n(),
        }
    }
}

/// Order of the inverse, 0 for NULL.
///
/// # Safety
/// `inv` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn comrade_inverse_order(inv: *const InverseHandle) -> usize {
    inv.as_ref().map_or(0, InverseHandle::order)
}

unsafe fn entry_number(inv: *const InverseHandle, i: usize, j: usize) -> Result<Number, ComradeStatus> {
    let h = inv
        .as_ref()
        .ok_or_else(|| fail(ComradeStatus::NullPointer, "inverse is null"))?;
    let n = h.order();
    if i >= n || j >= n {
        return Err(fail(
            ComradeStatus::OutOfRange,
            format!("entry ({i}, {j}) outside a {n}x{n} matrix"),
        ));
    }
    Ok(match h.entries() {
        Entries::Exact(m) => Number::Exact(m.get(i, j).clone()),
        Entries::Float(m) => Number::Float(*m.get(i, j)),
    })
}

/// Entry `(i, j)`, 0-based, as a string.
///
/// # Safety
/// `inv` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_inverse_entry(
    inv: *const InverseHandle,
    i: usize,
    j: usize,
    out: *mut *mut c_char,
) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        match entry_number(inv, i, j) {
            Ok(v) => {
                *out = new_string(v.to_string());
                ComradeStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Entry `(i, j)`, 0-based, rounded to the nearest double.
///
/// # Safety
/// `inv` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_inverse_entry_f64(
    inv: *const InverseHandle,
    i: usize,
    j: usize,
    out: *mut f64,
) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        match entry_number(inv, i, j) {
            Ok(v) => {
                *out = v.to_f64();
                ComradeStatus::Ok
            }
            Err(s) => s,
        }
    })
}

/// Determinant carried by an inverse, as a string.
///
/// # Safety
/// `inv` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn comrade_inverse_det(inv: *const InverseHandle, out: *mut *mut c_char) -> ComradeStatus {
    guard(|| {
        if out.is_null() {
            return fail(ComradeStatus::NullPointer, "out is null");
        }
        let Some(h) = inv.as_ref() else {
            return fail(ComradeStatus::NullPointer, "inverse is null");
        };
        *out = new_string(h.inverse.determinant().to_string());
        ComradeStatus::Ok
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn comrade_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
