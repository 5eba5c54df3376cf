//! C interface to `leibniz`.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns an
//! [`LbStatus`]; on anything but `LB_STATUS_OK` the message is available
//! from [`lb_last_error_message`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use leibniz::algebra::LeibnizAlgebra;
use leibniz::bialgebra::{classify, factorize};
use leibniz::catalog;
use leibniz::cli::formats::{AlgebraFile, TensorFile, TensorKind};
use leibniz::linear::{format_rational, parse_rational, Matrix, Rational, TwoTensor};
use leibniz::rota_baxter::quadratic_rb_from_factorizable;
use leibniz::Error;
use serde_json::json;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    NotLeibniz = 4,
    DimensionMismatch = 5,
    NotFactorizable = 6,
    Math = 7,
    UnknownFixture = 8,
    Panic = 9,
}

/// Opaque handle to a Leibniz algebra.
pub struct LbAlgebra(LeibnizAlgebra);

/// Opaque handle to an element of `A ⊗ A`.
pub struct LbTensor2(TwoTensor);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LbClassification {
    pub is_bialgebra: bool,
    pub quasi_triangular: bool,
    pub triangular: bool,
    pub factorizable: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

struct Failure(LbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) | Error::Io { .. } => LbStatus::Parse,
            Error::NotLeibniz { .. } => LbStatus::NotLeibniz,
            Error::DimensionMismatch(_) | Error::ShapeMismatch(_) => LbStatus::DimensionMismatch,
            Error::NotFactorizable(_) => LbStatus::NotFactorizable,
            _ => LbStatus::Math,
        };
        Failure(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> LbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LbStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(LbStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(LbStatus::InvalidUtf8, e.to_string()))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure(LbStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(LbStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no nul bytes").into_raw()
}

fn rational(text: &str) -> Result<Rational, Failure> {
    parse_rational(text.trim()).ok_or_else(|| Failure(LbStatus::Parse, format!("not a rational: {text:?}")))
}

fn matrix_json(m: &Matrix) -> serde_json::Value {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect::<Vec<_>>())
        .collect()
}

fn same_dim(alg: &LeibnizAlgebra, r: &TwoTensor) -> Result<(), Failure> {
    if alg.dim() != r.dim() {
        return Err(Failure(
            LbStatus::DimensionMismatch,
            format!("algebra has dimension {}, tensor {}", alg.dim(), r.dim()),
        ));
    }
    Ok(())
}

/// Parses an algebra file and checks the Leibniz identity.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_from_json(json: *const c_char, out: *mut *mut LbAlgebra) -> LbStatus {
    guard(|| {
        let alg = AlgebraFile::parse(str_arg(json)?)?.to_algebra()?;
        put(out, Box::into_raw(Box::new(LbAlgebra(alg))))
    })
}

/// Looks up a registry algebra such as `"e4"` or `"abelian5"`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_fixture(name: *const c_char, out: *mut *mut LbAlgebra) -> LbStatus {
    guard(|| {
        let name = str_arg(name)?;
        let alg = catalog::lookup(name).ok_or_else(|| Failure(LbStatus::UnknownFixture, format!("no fixture {name:?}")))?;
        put(out, Box::into_raw(Box::new(LbAlgebra(alg))))
    })
}

/// Dimension of the algebra, 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_dim(alg: *const LbAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.0.dim())
}

/// # Safety
/// `alg` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lb_algebra_free(alg: *mut LbAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Parses a `tensor2` file.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_tensor2_from_json(json: *const c_char, out: *mut *mut LbTensor2) -> LbStatus {
    guard(|| {
        let file = TensorFile::parse(str_arg(json)?)?;
        if file.kind != TensorKind::Tensor2 {
            return Err(Failure(LbStatus::Parse, "expected kind \"tensor2\"".into()));
        }
        put(out, Box::into_raw(Box::new(LbTensor2(file.to_tensor()?))))
    })
}

/// # Safety
/// `r` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lb_tensor2_free(r: *mut LbTensor2) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Writes whether the left Leibniz identity holds.
///
/// # Safety
/// `alg` must be a live handle and `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_check_leibniz(alg: *const LbAlgebra, holds: *mut bool) -> LbStatus {
    guard(|| put(holds, handle(alg)?.0.is_leibniz()))
}

/// Writes whether `[[r, r]] = 0`.
///
/// # Safety
/// Handles must be live and `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_check_clybe(alg: *const LbAlgebra, r: *const LbTensor2, holds: *mut bool) -> LbStatus {
    guard(|| {
        let (alg, r) = (&handle(alg)?.0, &handle(r)?.0);
        same_dim(alg, r)?;
        put(holds, leibniz::yang_baxter::is_clybe_solution(alg, r)?)
    })
}

/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_classify(
    alg: *const LbAlgebra,
    r: *const LbTensor2,
    out: *mut LbClassification,
) -> LbStatus {
    guard(|| {
        let (alg, r) = (&handle(alg)?.0, &handle(r)?.0);
        same_dim(alg, r)?;
        let c = classify(alg, r)?;
        put(
            out,
            LbClassification {
                is_bialgebra: c.is_bialgebra,
                quasi_triangular: c.quasi_triangular,
                triangular: c.triangular,
                factorizable: c.factorizable,
            },
        )
    })
}

/// Splits `x = x1 - x2` along a factorizable `r`. `coords` is a
/// comma-separated list of rationals; the result is
/// `{"x1": [...], "x2": [...]}` and must be released with [`lb_string_free`].
///
/// # Safety
/// Handles must be live, `coords` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_factorize(
    alg: *const LbAlgebra,
    r: *const LbTensor2,
    coords: *const c_char,
    out: *mut *mut c_char,
) -> LbStatus {
    guard(|| {
        let (alg, r) = (&handle(alg)?.0, &handle(r)?.0);
        same_dim(alg, r)?;
        let x = str_arg(coords)?.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
        let (x1, x2) = factorize(alg, r, &x)?;
        let fmt = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        put(out, into_c_string(json!({"x1": fmt(&x1), "x2": fmt(&x2)}).to_string()))
    })
}

/// Quadratic Rota-Baxter data of weight `lambda` from a factorizable `r`,
/// as `{"omega": [[...]], "beta": [[...]], "weight": "..."}` with
/// row-major matrices. Release with [`lb_string_free`].
///
/// # Safety
/// Handles must be live, `lambda` nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lb_quadratic_rb_from_factorizable(
    alg: *const LbAlgebra,
    r: *const LbTensor2,
    lambda: *const c_char,
    out: *mut *mut c_char,
) -> LbStatus {
    guard(|| {
        let (alg, r) = (&handle(alg)?.0, &handle(r)?.0);
        same_dim(alg, r)?;
        let lambda = rational(str_arg(lambda)?)?;
        let data = quadratic_rb_from_factorizable(alg, r, &lambda)?;
        let value = json!({
            "omega": matrix_json(data.omega()),
            "beta": matrix_json(data.beta()),
            "weight": format_rational(data.weight()),
        });
        put(out, into_c_string(value.to_string()))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn lb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
