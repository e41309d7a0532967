//! C ABI for the generalized-topological-space engine.
//!
//! Spaces and mappings are exposed as opaque handles created from the same
//! JSON documents the CLI accepts. Subsets cross the boundary as plain bit
//! patterns (bit i = point i in document order). Every fallible call
//! returns a status code; functions that allocate return ownership to the
//! caller, who must release it with the matching `*_free`.

use gt_core::doc::{MappingDoc, SpaceDoc};
use gt_core::mapping::{ClassificationVector, GtMapping};
use gt_core::set::SubSet;
use gt_core::space::GtSpace;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum GtStatus {
    Ok = 0,
    /// Input was not valid JSON for the expected document schema.
    ParseError = 1,
    /// The document parsed but violates the space or mapping axioms.
    InvalidInput = 2,
    /// A null pointer or out-of-range argument was passed.
    BadArgument = 3,
}

/// Opaque validated space.
pub struct GtSpaceHandle(GtSpace);

/// Opaque validated surjection.
pub struct GtMappingHandle(GtMapping);

/// Flat classification result: the definition-mode class flags plus the
/// hereditary variants.
#[repr(C)]
pub struct GtClassification {
    pub g_continuous: bool,
    pub open: bool,
    pub closed: bool,
    pub pseudo_open: bool,
    pub quotient: bool,
    pub hereditarily_open: bool,
    pub hereditarily_closed: bool,
    pub hereditarily_pseudo_open: bool,
    pub hereditarily_quotient: bool,
}

unsafe fn str_arg<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        return None;
    }
    CStr::from_ptr(p).to_str().ok()
}

fn string_out(s: String, out: *mut *mut c_char) -> GtStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            GtStatus::Ok
        }
        Err(_) => GtStatus::BadArgument,
    }
}

/// Parse and validate a space document. On success writes a new handle to
/// `out`; on failure optionally writes an error message to `err` (release
/// with `gt_string_free`).
///
/// # Safety
/// `json` must be a valid NUL-terminated UTF-8 string and `out` a valid
/// pointer; `err` may be null.
#[no_mangle]
pub unsafe extern "C" fn gt_space_parse(
    json: *const c_char,
    out: *mut *mut GtSpaceHandle,
    err: *mut *mut c_char,
) -> GtStatus {
    if out.is_null() {
        return GtStatus::BadArgument;
    }
    *out = ptr::null_mut();
    let Some(text) = str_arg(json) else {
        return GtStatus::BadArgument;
    };
    let doc: SpaceDoc = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(e) => {
            if !err.is_null() {
                string_out(e.to_string(), err);
            }
            return GtStatus::ParseError;
        }
    };
    match doc.to_space() {
        Ok(space) => {
            *out = Box::into_raw(Box::new(GtSpaceHandle(space)));
            GtStatus::Ok
        }
        Err(e) => {
            if !err.is_null() {
                string_out(e.to_string(), err);
            }
            GtStatus::InvalidInput
        }
    }
}

/// # Safety
/// `handle` must come from `gt_space_parse` and not already be freed.
#[no_mangle]
pub unsafe extern "C" fn gt_space_free(handle: *mut GtSpaceHandle) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of points in the ground set; 0 for a null handle.
///
/// # Safety
/// `handle` must be a live space handle or null.
#[no_mangle]
pub unsafe extern "C" fn gt_space_points(handle: *const GtSpaceHandle) -> usize {
    handle.as_ref().map_or(0, |h| h.0.len())
}

/// # Safety
/// `handle` must be a live space handle or null.
#[no_mangle]
pub unsafe extern "C" fn gt_space_is_topology(handle: *const GtSpaceHandle) -> bool {
    handle.as_ref().is_some_and(|h| h.0.is_topology())
}

#[repr(C)]
pub enum GtOperator {
    Interior = 0,
    Closure = 1,
    DerivedSet = 2,
}

/// Apply an operator to the subset encoded by `bits` and write the result
/// pattern to `out`.
///
/// # Safety
/// `handle` must be a live space handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gt_space_operator(
    handle: *const GtSpaceHandle,
    op: GtOperator,
    bits: u32,
    out: *mut u32,
) -> GtStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return GtStatus::BadArgument;
    };
    let n = h.0.len();
    if bits & !SubSet::full(n).bits() != 0 {
        return GtStatus::BadArgument;
    }
    let b = SubSet::new(bits, n);
    let r = match op {
        GtOperator::Interior => h.0.interior(b),
        GtOperator::Closure => h.0.closure(b),
        GtOperator::DerivedSet => h.0.derived_set(b),
    };
    *out = r.bits();
    GtStatus::Ok
}

/// Intersection of all opens containing the point.
///
/// # Safety
/// `handle` must be a live space handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gt_space_neighborhood_core(
    handle: *const GtSpaceHandle,
    point: usize,
    out: *mut u32,
) -> GtStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return GtStatus::BadArgument;
    };
    if point >= h.0.len() {
        return GtStatus::BadArgument;
    }
    *out = h.0.neighborhood_core(point).bits();
    GtStatus::Ok
}

/// Canonical JSON echo of the space (release with `gt_string_free`).
///
/// # Safety
/// `handle` must be a live space handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gt_space_to_json(
    handle: *const GtSpaceHandle,
    out: *mut *mut c_char,
) -> GtStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return GtStatus::BadArgument;
    };
    let doc = SpaceDoc::from_space(&h.0);
    string_out(serde_json::to_string(&doc).expect("document serialization"), out)
}

/// Parse and validate a mapping document (inline spaces only).
///
/// # Safety
/// As for `gt_space_parse`.
#[no_mangle]
pub unsafe extern "C" fn gt_mapping_parse(
    json: *const c_char,
    out: *mut *mut GtMappingHandle,
    err: *mut *mut c_char,
) -> GtStatus {
    if out.is_null() {
        return GtStatus::BadArgument;
    }
    *out = ptr::null_mut();
    let Some(text) = str_arg(json) else {
        return GtStatus::BadArgument;
    };
    let doc: MappingDoc = match serde_json::from_str(text) {
        Ok(d) => d,
        Err(e) => {
            if !err.is_null() {
                string_out(e.to_string(), err);
            }
            return GtStatus::ParseError;
        }
    };
    match doc.to_mapping(None) {
        Ok(mapping) => {
            *out = Box::into_raw(Box::new(GtMappingHandle(mapping)));
            GtStatus::Ok
        }
        Err(e) => {
            if !err.is_null() {
                string_out(e.to_string(), err);
            }
            GtStatus::InvalidInput
        }
    }
}

/// # Safety
/// `handle` must come from `gt_mapping_parse` and not already be freed.
#[no_mangle]
pub unsafe extern "C" fn gt_mapping_free(handle: *mut GtMappingHandle) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Classify the mapping by definition-mode predicates and hereditary flags.
///
/// # Safety
/// `handle` must be a live mapping handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gt_mapping_classify(
    handle: *const GtMappingHandle,
    out: *mut GtClassification,
) -> GtStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return GtStatus::BadArgument;
    };
    let v = ClassificationVector::classify(&h.0);
    *out = GtClassification {
        g_continuous: h.0.is_g_continuous(),
        open: v.open[0],
        closed: v.closed[0],
        pseudo_open: v.pseudo_open[0],
        quotient: v.quotient[0],
        hereditarily_open: v.hereditarily_open,
        hereditarily_closed: v.hereditarily_closed,
        hereditarily_pseudo_open: v.hereditarily_pseudo_open,
        hereditarily_quotient: v.hereditarily_quotient,
    };
    GtStatus::Ok
}

/// Image (forward) or preimage (inverse) of a subset under the mapping.
///
/// # Safety
/// `handle` must be a live mapping handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gt_mapping_image(
    handle: *const GtMappingHandle,
    bits: u32,
    inverse: bool,
    out: *mut u32,
) -> GtStatus {
    let (Some(h), false) = (handle.as_ref(), out.is_null()) else {
        return GtStatus::BadArgument;
    };
    let (src_n, _dst_n) = if inverse {
        (h.0.cod().len(), h.0.dom().len())
    } else {
        (h.0.dom().len(), h.0.cod().len())
    };
    if bits & !SubSet::full(src_n).bits() != 0 {
        return GtStatus::BadArgument;
    }
    let b = SubSet::new(bits, src_n);
    *out = if inverse {
        h.0.preimage(b).bits()
    } else {
        h.0.image(b).bits()
    };
    GtStatus::Ok
}

/// Release a string allocated by this library.
///
/// # Safety
/// `s` must have been returned by a `gt_*` function and not already freed.
#[no_mangle]
pub unsafe extern "C" fn gt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    const INTRO: &str =
        r#"{"points":["a","b","c"],"opens":[[],["a","b"],["b","c"],["a","b","c"]]}"#;

    fn parse_space(json: &str) -> (*mut GtSpaceHandle, GtStatus) {
        let c = CString::new(json).unwrap();
        let mut h: *mut GtSpaceHandle = ptr::null_mut();
        let status = unsafe { gt_space_parse(c.as_ptr(), &mut h, ptr::null_mut()) };
        (h, status)
    }

    #[test]
    fn space_lifecycle_and_operators() {
        let (h, status) = parse_space(INTRO);
        assert!(status == GtStatus::Ok);
        unsafe {
            assert_eq!(gt_space_points(h), 3);
            assert!(!gt_space_is_topology(h));
            let mut out = 0u32;
            // closure of {b} is X
            assert!(gt_space_operator(h, GtOperator::Closure, 0b010, &mut out) == GtStatus::Ok);
            assert_eq!(out, 0b111);
            // interior of {b} is empty
            assert!(gt_space_operator(h, GtOperator::Interior, 0b010, &mut out) == GtStatus::Ok);
            assert_eq!(out, 0);
            // N(b) = {b}
            assert!(gt_space_neighborhood_core(h, 1, &mut out) == GtStatus::Ok);
            assert_eq!(out, 0b010);
            gt_space_free(h);
        }
    }

    #[test]
    fn invalid_space_reports_message() {
        let c = CString::new(r#"{"points":["a"],"opens":[["a"]]}"#).unwrap();
        let mut h: *mut GtSpaceHandle = ptr::null_mut();
        let mut err: *mut c_char = ptr::null_mut();
        let status = unsafe { gt_space_parse(c.as_ptr(), &mut h, &mut err) };
        assert!(status == GtStatus::InvalidInput);
        assert!(h.is_null());
        unsafe {
            let msg = CStr::from_ptr(err).to_str().unwrap();
            assert!(msg.contains("empty set"));
            gt_string_free(err);
        }
    }

    #[test]
    fn out_of_range_bits_are_rejected() {
        let (h, _) = parse_space(INTRO);
        let mut out = 0u32;
        unsafe {
            assert!(
                gt_space_operator(h, GtOperator::Closure, 0b1000, &mut out)
                    == GtStatus::BadArgument
            );
            gt_space_free(h);
        }
    }

    #[test]
    fn mapping_classification_roundtrip() {
        let json = r#"{
            "domain": {"points":["1","2","3","4"],"opens":[[],["2","3"],["1","2","3","4"]]},
            "codomain": {"points":["a","b","c"],"opens":[[],["a","b","c"]]},
            "map": {"1":"a","2":"b","3":"c","4":"c"}
        }"#;
        let c = CString::new(json).unwrap();
        let mut h: *mut GtMappingHandle = ptr::null_mut();
        unsafe {
            assert!(gt_mapping_parse(c.as_ptr(), &mut h, ptr::null_mut()) == GtStatus::Ok);
            let mut cls = std::mem::zeroed::<GtClassification>();
            assert!(gt_mapping_classify(h, &mut cls) == GtStatus::Ok);
            assert!(cls.quotient);
            assert!(!cls.pseudo_open);
            assert!(!cls.hereditarily_quotient);
            let mut out = 0u32;
            // preimage of {b} is {2}
            assert!(gt_mapping_image(h, 0b010, true, &mut out) == GtStatus::Ok);
            assert_eq!(out, 0b0010);
            gt_mapping_free(h);
        }
    }
}
