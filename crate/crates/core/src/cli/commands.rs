use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use super::{error_record, Command, Options};
use crate::bounds::sweep::{
    cycle_extremal_sweep, ds_bound_sweep, fomin_sweep, legal_bound_sweep, moon_moser_sweep, shearer_sweep,
    tree_extremal_sweep,
};
use crate::bounds::{
    check_background_bounds, check_ds_bound, check_legal_bounds, check_polynomial_bounds, check_prorain_bounds,
    cycle_extremal_check, shearer_report, BoundReport, ShearerFamily,
};
use crate::conditions::{format_rational, parse_rational, Activation, ColoringCondition};
use crate::counting::{
    count_structure, dominating_polynomial, hom_count, legal_colorings, weighted_hom_count, xhom_count, ImageGraph,
    Mode, Structure,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

const BOUND_CHECKS: [&str; 6] = ["ds", "legal", "poly", "prorain", "cycle", "background"];
const SWEEPS: [&str; 7] = [
    "tree-extremal",
    "ds",
    "legal",
    "cycle-extremal",
    "moon-moser",
    "fomin",
    "shearer",
];
const DEFAULT_COLORS: usize = 2;

/// Flags parsed into typed values once, before any graph is processed.
pub(super) struct Context {
    limits: Limits,
    mode: Option<Mode>,
    condition: Option<ColoringCondition>,
    colors: usize,
    lambda: Option<Activation>,
    mu: Option<BigRational>,
    image: Option<(String, ImageGraph)>,
    structures: Vec<Structure>,
    checks: Vec<String>,
    hom: bool,
    strong: bool,
}

impl Context {
    pub(super) fn new(command: Command, opts: &Options) -> Result<Self> {
        let mut limits = Limits::from_env()?;
        if let Some(bits) = opts.cap_bits {
            limits = limits.with_cap_bits(bits)?;
        }
        let colors = opts.colors.unwrap_or(DEFAULT_COLORS);
        let structures = match opts.structure.as_deref() {
            None => vec![Structure::Dominating],
            Some("all") => Structure::ALL.to_vec(),
            Some(s) => vec![s.parse()?],
        };
        let checks = match command {
            Command::BoundCheck => match &opts.check {
                None => BOUND_CHECKS.iter().map(|s| s.to_string()).collect(),
                Some(list) => {
                    let checks: Vec<String> = list.split(',').map(|s| s.trim().to_string()).collect();
                    if let Some(bad) = checks.iter().find(|c| !BOUND_CHECKS.contains(&c.as_str())) {
                        return Err(Error::Config(format!(
                            "unknown check {bad:?} (one of {})",
                            BOUND_CHECKS.join(", ")
                        )));
                    }
                    checks
                }
            },
            Command::Sweep => match &opts.check {
                Some(name) if SWEEPS.contains(&name.as_str()) => vec![name.clone()],
                Some(name) => {
                    return Err(Error::Config(format!(
                        "unknown sweep {name:?} (one of {})",
                        SWEEPS.join(", ")
                    )))
                }
                None => {
                    return Err(Error::Config(format!(
                        "sweep needs --check (one of {})",
                        SWEEPS.join(", ")
                    )))
                }
            },
            _ => Vec::new(),
        };
        Ok(Context {
            limits,
            mode: opts.mode.as_deref().map(str::parse).transpose()?,
            condition: opts
                .condition
                .as_deref()
                .map(|spec| ColoringCondition::parse_spec(spec, colors))
                .transpose()?,
            colors,
            lambda: opts.weights.as_deref().map(Activation::parse).transpose()?,
            mu: opts.mu.as_deref().map(parse_rational).transpose()?,
            image: opts
                .image
                .as_deref()
                .map(|spec| ImageGraph::parse_spec(spec).map(|h| (spec.to_string(), h)))
                .transpose()?,
            structures,
            checks,
            hom: opts.hom,
            strong: opts.strong,
        })
    }

    fn mode(&self) -> Mode {
        self.mode.unwrap_or(Mode::Closed)
    }
}

fn rational(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

/// `base` extended with the fields of `f()`, or with the error.
fn attempt(mut base: Value, f: impl FnOnce() -> Result<Value>) -> Value {
    let extra = f().unwrap_or_else(|e| error_record(&e));
    if let (Value::Object(b), Value::Object(x)) = (&mut base, extra) {
        b.extend(x);
    }
    base
}

fn report_record(report: &BoundReport) -> Value {
    report.to_json()
}

fn not_applicable(check: &str, reason: &str) -> Value {
    json!({ "check": check, "verdict": "not applicable", "reason": reason })
}

pub(super) fn per_graph(command: Command, g: &Graph, ctx: &Context) -> Vec<Value> {
    match command {
        Command::Count => count(g, ctx),
        Command::Poly => vec![poly(g, ctx)],
        Command::BoundCheck => bound_check(g, ctx),
        Command::Entropy => vec![entropy(g, ctx)],
        Command::Xhom => vec![xhom(g, ctx)],
        Command::Sweep => unreachable!("sweeps do not take input graphs"),
    }
}

fn count(g: &Graph, ctx: &Context) -> Vec<Value> {
    if let Some(cond) = &ctx.condition {
        let mode = ctx.mode();
        let mut base = json!({ "command": "count", "condition": cond.name(), "mode": mode.to_string() });
        if let Some(l) = &ctx.lambda {
            base["weights"] = json!(l.to_string());
        }
        return vec![attempt(base, || {
            let value = legal_colorings(g, cond, mode, ctx.lambda.as_ref(), &ctx.limits)?;
            Ok(json!({ "value": rational(&value) }))
        })];
    }
    ctx.structures
        .iter()
        .map(|&s| {
            attempt(json!({ "command": "count", "structure": s.name() }), || {
                Ok(json!({ "value": count_structure(g, s, &ctx.limits)?.to_string() }))
            })
        })
        .collect()
}

fn poly(g: &Graph, ctx: &Context) -> Value {
    attempt(json!({ "command": "poly", "strong": ctx.strong }), || {
        let p = dominating_polynomial(g, ctx.strong, &ctx.limits)?;
        let mut v = json!({
            "coefficients": p.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "polynomial": p.to_string(),
        });
        if let Some(mu) = &ctx.mu {
            v["mu"] = rational(mu);
            v["value"] = rational(&p.eval(mu));
        }
        Ok(v)
    })
}

fn bound_check(g: &Graph, ctx: &Context) -> Vec<Value> {
    let mut out = Vec::new();
    let regular = g.regular_degree();
    let wrap = |check: &str, result: Result<Vec<Value>>| -> Vec<Value> {
        result.unwrap_or_else(|e| vec![attempt(json!({ "check": check }), || Err(e))])
    };
    for check in &ctx.checks {
        let records = match check.as_str() {
            "ds" | "legal" | "poly" | "prorain" if regular.is_none() => {
                vec![not_applicable(check, "graph is not regular")]
            }
            "ds" => wrap(check, check_ds_bound(g, &ctx.limits).map(|r| vec![report_record(&r)])),
            "legal" => {
                let dominating = ColoringCondition::dominating();
                let cond = ctx.condition.as_ref().unwrap_or(&dominating);
                wrap(
                    check,
                    check_legal_bounds(g, cond, ctx.lambda.as_ref(), &ctx.limits)
                        .map(|b| b.reports().map(report_record).collect()),
                )
            }
            "poly" => {
                let mu = ctx.mu.clone().unwrap_or_else(BigRational::one);
                wrap(
                    check,
                    check_polynomial_bounds(g, &mu, &ctx.limits).map(|b| {
                        b.reports()
                            .map(|r| {
                                let mut v = report_record(r);
                                v["mu"] = rational(&mu);
                                v
                            })
                            .collect()
                    }),
                )
            }
            "prorain" => wrap(
                check,
                check_prorain_bounds(g, ctx.colors, &ctx.limits).map(|rs| rs.iter().map(report_record).collect()),
            ),
            "cycle" if regular != Some(2) => vec![not_applicable("cycle-extremal", "graph is not 2-regular")],
            "cycle" => wrap(
                check,
                cycle_extremal_check(g, &ctx.limits).map(|r| vec![report_record(&r)]),
            ),
            "background" => wrap(
                check,
                check_background_bounds(g, ctx.image.as_ref().map(|(_, h)| h), ctx.lambda.as_ref(), &ctx.limits)
                    .map(|rs| rs.iter().map(|r| r.to_json()).collect()),
            ),
            other => unreachable!("check {other} was validated"),
        };
        out.extend(records.into_iter().map(|mut r| {
            r["command"] = json!("bound-check");
            r
        }));
    }
    out
}

fn shearer_family(ctx: &Context) -> Result<ShearerFamily> {
    if let Some(cond) = &ctx.condition {
        return Ok(ShearerFamily::Custom(cond.clone()));
    }
    match ctx.structures.as_slice() {
        [Structure::Dominating] => Ok(ShearerFamily::Dominating),
        [Structure::StrongDominating] => Ok(ShearerFamily::StrongDominating),
        _ => Err(Error::Config(
            "entropy supports --structure ds or sds, or a --condition".into(),
        )),
    }
}

fn entropy(g: &Graph, ctx: &Context) -> Value {
    attempt(json!({ "command": "entropy" }), || {
        let family = shearer_family(ctx)?;
        Ok(shearer_report(g, &family, ctx.mode(), &ctx.limits)?.to_json())
    })
}

fn xhom(g: &Graph, ctx: &Context) -> Value {
    let (spec, h) = match &ctx.image {
        Some((spec, h)) => (spec.clone(), h.clone()),
        None => ("hind".to_string(), ImageGraph::h_ind()),
    };
    attempt(json!({ "command": "xhom", "image": spec }), || {
        if ctx.hom {
            let value = match &ctx.lambda {
                Some(l) => rational(&weighted_hom_count(g, &h, l, &ctx.limits)?),
                None => Value::String(hom_count(g, &h, &ctx.limits)?.to_string()),
            };
            Ok(json!({ "hom": value }))
        } else {
            Ok(json!({ "xhom": xhom_count(g, &h, &ctx.limits)?.to_string() }))
        }
    })
}

fn required(value: Option<usize>, flag: &str, sweep: &str) -> Result<usize> {
    value.ok_or_else(|| Error::Config(format!("the {sweep} sweep needs --{flag}")))
}

pub(super) fn sweep(opts: &Options, ctx: &Context) -> Result<Value> {
    let name = ctx.checks[0].as_str();
    let limits = &ctx.limits;
    let summary = match name {
        "tree-extremal" => tree_extremal_sweep(required(opts.trees.or(opts.n), "trees", name)?, limits)?,
        "ds" => ds_bound_sweep(required(opts.n, "n", name)?, required(opts.r, "r", name)?, limits)?,
        "legal" => {
            let conditions = match &ctx.condition {
                Some(c) => vec![c.clone()],
                None => vec![
                    ColoringCondition::dominating(),
                    ColoringCondition::proper(2)?,
                    ColoringCondition::rainbow(2)?,
                ],
            };
            legal_bound_sweep(required(opts.n, "n", name)?, opts.r.unwrap_or(2), &conditions, limits)?
        }
        "cycle-extremal" => cycle_extremal_sweep(required(opts.n, "n", name)?, limits)?,
        "moon-moser" => moon_moser_sweep(required(opts.n, "n", name)?, limits)?,
        "fomin" => fomin_sweep(required(opts.n, "n", name)?, limits)?,
        "shearer" => shearer_sweep(
            required(opts.n, "n", name)?,
            opts.r.unwrap_or(2),
            &shearer_family(ctx)?,
            ctx.mode(),
            limits,
        )?,
        other => unreachable!("sweep {other} was validated"),
    };
    let mut v = summary.to_json();
    v["command"] = json!("sweep");
    Ok(v)
}
