//! C ABI for `domcount`.
//!
//! Graphs are opaque `DcGraph` handles. Every fallible function returns a
//! `DcStatus`; results come back through out-parameters, exact numbers as
//! decimal strings (`"1331"`, `"25/16"`) and structured results as JSON.
//! Strings returned by the library are released with `dc_string_free`.

#![allow(clippy::missing_safety_doc)]

mod status;

use std::ffi::c_char;
use std::sync::RwLock;

use domcount::bounds::{
    check_background_bounds, check_ds_bound, check_legal_bounds, check_polynomial_bounds, check_prorain_bounds,
    cycle_extremal_check, shearer_report, ShearerFamily,
};
use domcount::conditions::{format_rational, parse_rational, Activation, ColoringCondition};
use domcount::counting::{
    count_structure, dominating_polynomial, hom_count, legal_colorings, xhom_count, ImageGraph, Mode, Structure,
};
use domcount::graph::graph6::parse_graph6;
use domcount::graph::parse_family;
use domcount::{Error, Graph, Limits};
use serde_json::{json, Value};

pub use status::{dc_last_error, dc_string_free, DcStatus};
use status::{guard, opt_str_arg, str_arg, write_string, FfiError, FfiResult};

/// Opaque graph handle.
pub struct DcGraph {
    graph: Graph,
}

static LIMITS: RwLock<Option<Limits>> = RwLock::new(None);

fn limits() -> FfiResult<Limits> {
    match *LIMITS.read().unwrap_or_else(|e| e.into_inner()) {
        Some(l) => Ok(l),
        None => Ok(Limits::from_env()?),
    }
}

unsafe fn graph_arg<'a>(g: *const DcGraph) -> FfiResult<&'a Graph> {
    g.as_ref().map(|h| &h.graph).ok_or(FfiError::Null("graph"))
}

unsafe fn emit_graph(out: *mut *mut DcGraph, graph: Graph) -> FfiResult<()> {
    if out.is_null() {
        return Err(FfiError::Null("out"));
    }
    *out = Box::into_raw(Box::new(DcGraph { graph }));
    Ok(())
}

fn mode_of(closed: bool) -> Mode {
    if closed {
        Mode::Closed
    } else {
        Mode::Open
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn dc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Sets the enumeration cap (log2 of the largest search space) for all
/// later calls; 0 restores the default.
#[no_mangle]
pub extern "C" fn dc_set_cap_bits(bits: u32) -> DcStatus {
    guard(|| {
        let new = if bits == 0 {
            None
        } else {
            Some(Limits::default().with_cap_bits(bits)?)
        };
        *LIMITS.write().unwrap_or_else(|e| e.into_inner()) = new;
        Ok(())
    })
}

/// Parses a graph6 string.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_graph6(text: *const c_char, out: *mut *mut DcGraph) -> DcStatus {
    guard(|| {
        let text = str_arg(text, "text")?;
        emit_graph(out, parse_graph6(text)?)
    })
}

/// Builds a named graph such as `"cycle:6"` or `"complete:3+complete:3"`.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_family(spec: *const c_char, out: *mut *mut DcGraph) -> DcStatus {
    guard(|| {
        let spec = str_arg(spec, "spec")?;
        emit_graph(out, parse_family(spec)?.build()?)
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_edges(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut DcGraph,
) -> DcStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(FfiError::Null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        emit_graph(out, Graph::from_edges(n as usize, pairs)?)
    })
}

/// Releases a graph handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_free(g: *mut DcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_vertex_count(g: *const DcGraph) -> u32 {
    g.as_ref().map_or(0, |h| h.graph.n() as u32)
}

#[no_mangle]
pub unsafe extern "C" fn dc_graph_to_graph6(g: *const DcGraph, out: *mut *mut c_char) -> DcStatus {
    guard(|| write_string(out, graph_arg(g)?.to_graph6()))
}

/// Counts `"ds"`, `"sds"`, `"minimal-ds"`, `"mis"` or `"is"`.
#[no_mangle]
pub unsafe extern "C" fn dc_count_structure(
    g: *const DcGraph,
    structure: *const c_char,
    out: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let structure: Structure = str_arg(structure, "structure")?.parse()?;
        write_string(out, count_structure(g, structure, &limits()?)?.to_string())
    })
}

/// Legal colorings for a condition spec (`"dominating"`, `"proper"`,
/// `"rainbow"`, `"at-least:C:M"`, `"file:PATH"`) over `colors` colors,
/// weighted by `weights` (`"1,3/2"`) unless it is null.
#[no_mangle]
pub unsafe extern "C" fn dc_count_legal(
    g: *const DcGraph,
    condition: *const c_char,
    colors: u32,
    closed: bool,
    weights: *const c_char,
    out: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let condition = ColoringCondition::parse_spec(str_arg(condition, "condition")?, colors as usize)?;
        let lambda = opt_str_arg(weights, "weights")?.map(Activation::parse).transpose()?;
        let value = legal_colorings(g, &condition, mode_of(closed), lambda.as_ref(), &limits()?)?;
        write_string(out, format_rational(&value))
    })
}

/// Domination polynomial as a JSON array of decimal coefficient strings,
/// constant term first.
#[no_mangle]
pub unsafe extern "C" fn dc_domination_polynomial(g: *const DcGraph, strong: bool, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let p = dominating_polynomial(g, strong, &limits()?)?;
        let coeffs: Vec<String> = p.coefficients().iter().map(|c| c.to_string()).collect();
        write_string(out, json!(coeffs).to_string())
    })
}

/// `xhom(G, H)`, or `hom(G, H)` when `plain_hom`, for an image spec
/// (`"hind"`, `"eq:Q"`, `"kq:Q"`, `"file:PATH"`).
#[no_mangle]
pub unsafe extern "C" fn dc_hom_count(
    g: *const DcGraph,
    image: *const c_char,
    plain_hom: bool,
    out: *mut *mut c_char,
) -> DcStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let h = ImageGraph::parse_spec(str_arg(image, "image")?)?;
        let limits = limits()?;
        let value = if plain_hom {
            hom_count(g, &h, &limits)?
        } else {
            xhom_count(g, &h, &limits)?
        };
        write_string(out, value.to_string())
    })
}

fn bound_records(g: &Graph, check: &str, limits: &Limits) -> FfiResult<Vec<Value>> {
    let (name, arg) = match check.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (check, None),
    };
    let parse_usize = |a: Option<&str>, default: usize| -> FfiResult<usize> {
        a.map_or(Ok(default), |s| {
            s.parse()
                .map_err(|_| FfiError::Core(Error::InvalidParameter(format!("bad number {s:?}"))))
        })
    };
    Ok(match name {
        "ds" => vec![check_ds_bound(g, limits)?.to_json()],
        "legal" => {
            let condition = ColoringCondition::parse_spec(arg.unwrap_or("dominating"), 2)?;
            check_legal_bounds(g, &condition, None, limits)?
                .reports()
                .map(|r| r.to_json())
                .collect()
        }
        "poly" => {
            let mu = parse_rational(arg.unwrap_or("1"))?;
            check_polynomial_bounds(g, &mu, limits)?
                .reports()
                .map(|r| r.to_json())
                .collect()
        }
        "prorain" => check_prorain_bounds(g, parse_usize(arg, 2)?, limits)?
            .iter()
            .map(|r| r.to_json())
            .collect(),
        "cycle-extremal" => vec![cycle_extremal_check(g, limits)?.to_json()],
        "background" => {
            let image = arg.map(ImageGraph::parse_spec).transpose()?;
            check_background_bounds(g, image.as_ref(), None, limits)?
                .iter()
                .map(|r| r.to_json())
                .collect()
        }
        "shearer" => {
            let family = match arg.unwrap_or("ds") {
                "ds" => ShearerFamily::Dominating,
                "sds" => ShearerFamily::StrongDominating,
                other => {
                    return Err(FfiError::Core(Error::InvalidParameter(format!(
                        "shearer family must be ds or sds, got {other:?}"
                    ))))
                }
            };
            let mode = if family == ShearerFamily::Dominating {
                Mode::Closed
            } else {
                Mode::Open
            };
            vec![shearer_report(g, &family, mode, limits)?.to_json()]
        }
        other => {
            return Err(FfiError::Core(Error::InvalidParameter(format!(
                "unknown check {other:?}"
            ))));
        }
    })
}

/// Runs one bound check and returns its reports as a JSON array. `check`
/// is `ds`, `legal[:CONDITION]`, `poly[:MU]`, `prorain[:Q]`,
/// `cycle-extremal`, `background[:IMAGE]` or `shearer[:ds|sds]`.
#[no_mangle]
pub unsafe extern "C" fn dc_bound_check(g: *const DcGraph, check: *const c_char, out: *mut *mut c_char) -> DcStatus {
    guard(|| {
        let g = graph_arg(g)?;
        let records = bound_records(g, str_arg(check, "check")?, &limits()?)?;
        write_string(out, Value::Array(records).to_string())
    })
}
