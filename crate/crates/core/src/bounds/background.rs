use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{check_power_inequality, exact_u, BoundReport, CheckRecord};
use crate::conditions::Activation;
use crate::counting::{
    count_independent_sets, count_maximal_independent_sets, count_minimal_dominating_sets, hom_count,
    weighted_hom_count, ImageGraph,
};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::limits::Limits;

/// The largest number of maximal independent sets in an `n`-vertex graph:
/// `3^{n/3}`, `4 * 3^{n/3 - 1}` or `2 * 3^{n/3}` by `n mod 3`.
pub fn moon_moser_limit(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid(format!("Moon-Moser needs n >= 2, got {n}")));
    }
    let three = BigUint::from(3u32);
    let k = (n / 3) as u32;
    Ok(match n % 3 {
        0 => three.pow(k),
        1 => three.pow(k - 1) * 4u32,
        _ => three.pow(k) * 2u32,
    })
}

pub fn moon_moser_bound(g: &Graph, limits: &Limits) -> Result<BoundReport> {
    let limit = moon_moser_limit(g.n())?;
    let mis = count_maximal_independent_sets(g, limits)?;
    Ok(check_power_inequality(
        "moon-moser",
        &exact_u(mis),
        1,
        &exact_u(limit),
        1,
    ))
}

/// `i(G)^{2r} <= i(K_{r,r})^n` with `i(K_{r,r}) = 2^{r+1} - 1`.
pub fn kahn_zhao_bound(g: &Graph, limits: &Limits) -> Result<BoundReport> {
    let r = match g.regular_degree() {
        Some(r) if r >= 1 => r,
        _ => return Err(Error::NotRegular),
    };
    let is = count_independent_sets(g, limits)?;
    let biclique = (BigUint::one() << (r + 1)) - 1u32;
    Ok(check_power_inequality(
        "kahn-zhao",
        &exact_u(is),
        2 * r as u32,
        &exact_u(biclique),
        g.n() as u32,
    ))
}

/// Minimal dominating sets against `1.7159^n`. The constant is taken as the
/// rational 17159/10000, so the verdict is exact; `margin` is
/// `n ln 1.7159 - ln(count)`.
pub fn fomin_bound(g: &Graph, limits: &Limits) -> Result<BoundReport> {
    let count = count_minimal_dominating_sets(g, limits)?;
    let base = BigRational::new(17159.into(), 10000.into());
    let mut report = check_power_inequality("fomin", &exact_u(count.clone()), 1, &base, g.n() as u32);
    let ln_count = count.to_f64().expect("finite").ln();
    report.margin = Some(g.n() as f64 * 1.7159f64.ln() - ln_count);
    Ok(report)
}

fn galvin_tetali_bound(
    g: &Graph,
    r: usize,
    h: &ImageGraph,
    lambda: Option<&Activation>,
    limits: &Limits,
) -> Result<BoundReport> {
    let biclique = Family::CompleteBipartite(r, r).build()?;
    let (lhs, rhs, name) = match lambda {
        Some(l) => (
            weighted_hom_count(g, h, l, limits)?,
            weighted_hom_count(&biclique, h, l, limits)?,
            "galvin-tetali-weighted",
        ),
        None => (
            exact_u(hom_count(g, h, limits)?),
            exact_u(hom_count(&biclique, h, limits)?),
            "galvin-tetali",
        ),
    };
    Ok(check_power_inequality(name, &lhs, 2 * r as u32, &rhs, g.n() as u32))
}

fn not_applicable(name: &str, reason: &str) -> CheckRecord {
    CheckRecord::NotApplicable {
        name: name.into(),
        reason: reason.into(),
    }
}

/// Moon–Moser, Kahn–Zhao, Galvin–Tetali (when an image graph is given) and
/// Fomin et al., each marked not applicable where its hypotheses fail.
pub fn check_background_bounds(
    g: &Graph,
    h: Option<&ImageGraph>,
    lambda: Option<&Activation>,
    limits: &Limits,
) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    out.push(if g.n() >= 2 {
        CheckRecord::Report(moon_moser_bound(g, limits)?)
    } else {
        not_applicable("moon-moser", "needs at least 2 vertices")
    });
    let regular = g.regular_degree().filter(|&r| r >= 1);
    out.push(match regular {
        Some(_) => CheckRecord::Report(kahn_zhao_bound(g, limits)?),
        None => not_applicable("kahn-zhao", "graph is not regular of positive degree"),
    });
    if let Some(h) = h {
        let name = if lambda.is_some() {
            "galvin-tetali-weighted"
        } else {
            "galvin-tetali"
        };
        out.push(match regular {
            Some(r) if g.is_bipartite() => CheckRecord::Report(galvin_tetali_bound(g, r, h, lambda, limits)?),
            Some(_) => not_applicable(name, "graph is not bipartite"),
            None => not_applicable(name, "graph is not regular of positive degree"),
        });
    }
    out.push(CheckRecord::Report(fomin_bound(g, limits)?));
    Ok(out)
}
