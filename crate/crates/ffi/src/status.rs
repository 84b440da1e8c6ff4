use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};

use domcount::Error;

/// Result code of every fallible `dc_*` call. On anything but
/// `DC_STATUS_OK`, `dc_last_error()` describes the failure.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Malformed graph6, family, condition, weights or other input.
    InvalidInput = 3,
    /// The enumeration would exceed the configured cap.
    CapExceeded = 4,
    /// The check needs a regular (or 2-regular) graph.
    NotRegular = 5,
    /// Internal failure; the library state is still usable.
    Panic = 6,
}

pub(crate) enum FfiError {
    Null(&'static str),
    Utf8(&'static str),
    Core(Error),
}

impl From<Error> for FfiError {
    fn from(e: Error) -> Self {
        FfiError::Core(e)
    }
}

impl FfiError {
    fn status(&self) -> DcStatus {
        match self {
            FfiError::Null(_) => DcStatus::NullArgument,
            FfiError::Utf8(_) => DcStatus::InvalidUtf8,
            FfiError::Core(e) if e.is_cap_exceeded() => DcStatus::CapExceeded,
            FfiError::Core(Error::NotRegular | Error::NotRegularOfDegree(_)) => DcStatus::NotRegular,
            FfiError::Core(_) => DcStatus::InvalidInput,
        }
    }

    fn message(&self) -> String {
        match self {
            FfiError::Null(arg) => format!("argument `{arg}` is null"),
            FfiError::Utf8(arg) => format!("argument `{arg}` is not valid UTF-8"),
            FfiError::Core(e) => e.to_string(),
        }
    }
}

pub(crate) type FfiResult<T> = std::result::Result<T, FfiError>;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

/// Runs `f`, converting errors and panics into a status code and the
/// thread's last-error message.
pub(crate) fn guard(f: impl FnOnce() -> FfiResult<()> + UnwindSafe) -> DcStatus {
    match catch_unwind(f) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            DcStatus::Ok
        }
        Ok(Err(e)) => {
            set_last_error(e.message());
            e.status()
        }
        Err(payload) => {
            let what = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal error: {what}"));
            DcStatus::Panic
        }
    }
}

/// Borrows a C string argument.
///
/// # Safety
/// `ptr` must be null or point to a NUL-terminated string that outlives the call.
pub(crate) unsafe fn str_arg<'a>(ptr: *const c_char, name: &'static str) -> FfiResult<&'a str> {
    if ptr.is_null() {
        return Err(FfiError::Null(name));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| FfiError::Utf8(name))
}

/// Like [`str_arg`] but null means "absent".
pub(crate) unsafe fn opt_str_arg<'a>(ptr: *const c_char, name: &'static str) -> FfiResult<Option<&'a str>> {
    if ptr.is_null() {
        Ok(None)
    } else {
        str_arg(ptr, name).map(Some)
    }
}

/// Hands ownership of `s` to the caller through `out`.
pub(crate) unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    if out.is_null() {
        return Err(FfiError::Null("out"));
    }
    let c = CString::new(s).map_err(|_| FfiError::Core(Error::InvalidParameter("output contains NUL".into())))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the most recent failed call on this thread, or null if the
/// last call succeeded. The pointer stays valid until the next `dc_*` call
/// on the same thread.
#[no_mangle]
pub extern "C" fn dc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(std::ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from a `dc_*` output parameter and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
