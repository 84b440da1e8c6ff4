//! Exhaustive sweeps of the bounds over labeled graph families.
//!
//! Every sweep visits its instances in generator order and aggregates
//! verdicts into a [`SweepSummary`]; the first few violations are kept as
//! witnesses.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use super::{
    check_ds_bound, check_legal_bounds, check_power_inequality, cycle_extremal_check, exact_u, fomin_bound,
    moon_moser_bound, shearer_report, BoundReport, ShearerFamily, Verdict,
};
use crate::conditions::ColoringCondition;
use crate::counting::{cycle_xhom_closed_form, id_count, path_id_closed_form, Mode};
use crate::error::{Error, Result};
use crate::graph::{labeled_graphs, labeled_regular_graphs, labeled_trees, Family, Graph};
use crate::limits::Limits;

const MAX_WITNESSES: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSummary {
    pub check: String,
    /// Graphs visited (labeled, counted with multiplicity).
    pub instances: u64,
    /// Bound comparisons made, with multiplicity.
    pub comparisons: u64,
    pub violations: u64,
    pub equalities: u64,
    /// Equality cases that are not expected extremal graphs.
    pub unexpected_equalities: u64,
    /// Expected extremal graphs where the bound was strict.
    pub missed_extremal: u64,
    pub witnesses: Vec<Value>,
    pub details: Map<String, Value>,
}

impl SweepSummary {
    fn new(check: impl Into<String>) -> Self {
        SweepSummary {
            check: check.into(),
            instances: 0,
            comparisons: 0,
            violations: 0,
            equalities: 0,
            unexpected_equalities: 0,
            missed_extremal: 0,
            witnesses: Vec::new(),
            details: Map::new(),
        }
    }

    /// No violations, and equality exactly on the expected extremal graphs
    /// (for sweeps that track them).
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.unexpected_equalities == 0 && self.missed_extremal == 0
    }

    fn record(&mut self, g: &Graph, report: &BoundReport, multiplicity: u64, extremal: Option<bool>) {
        self.comparisons += multiplicity;
        match report.verdict {
            Verdict::Fails => {
                self.violations += multiplicity;
                if self.witnesses.len() < MAX_WITNESSES {
                    let mut w = report.to_json();
                    w["graph6"] = json!(g.to_graph6());
                    self.witnesses.push(w);
                }
            }
            Verdict::Equality => {
                self.equalities += multiplicity;
                if extremal == Some(false) {
                    self.unexpected_equalities += multiplicity;
                }
            }
            Verdict::Holds => {
                if extremal == Some(true) {
                    self.missed_extremal += multiplicity;
                }
            }
        }
    }

    fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.into(), value.into());
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "sweep": self.check,
            "instances": self.instances,
            "comparisons": self.comparisons,
            "violations": self.violations,
            "equalities": self.equalities,
            "unexpected_equalities": self.unexpected_equalities,
            "missed_extremal": self.missed_extremal,
            "verdict": if self.passed() { "holds" } else { "fails" },
        });
        for (k, x) in &self.details {
            v[k] = x.clone();
        }
        if !self.witnesses.is_empty() {
            v["witnesses"] = Value::Array(self.witnesses.clone());
        }
        v
    }
}

fn component_sizes(g: &Graph) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.components().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

/// `id(T) <= id(P_n) = 2 F_{n-2}` over all labeled trees, with equality
/// expected exactly on paths (maximum degree at most 2).
pub fn tree_extremal_sweep(n: usize, limits: &Limits) -> Result<SweepSummary> {
    let bound = path_id_closed_form(n)?;
    let mut s = SweepSummary::new("tree-extremal");
    let mut paths = 0u64;
    for tree in labeled_trees(n, limits)? {
        let id = id_count(&tree, limits)?;
        let report = check_power_inequality("tree-extremal", &exact_u(id), 1, &exact_u(bound.clone()), 1);
        let is_path = tree.max_degree() <= 2;
        paths += is_path as u64;
        s.instances += 1;
        s.record(&tree, &report, 1, Some(is_path));
    }
    s.detail("n", n);
    s.detail("bound", bound.to_string());
    s.detail("paths", paths);
    Ok(s)
}

/// The dominating-set bound over all labeled `r`-regular graphs. Equality is
/// compared against disjoint unions of `K_{r+1}`.
pub fn ds_bound_sweep(n: usize, r: usize, limits: &Limits) -> Result<SweepSummary> {
    let mut s = SweepSummary::new("ds");
    for g in labeled_regular_graphs(n, r, limits)? {
        let report = check_ds_bound(&g, limits)?;
        let clique_union = g.components().iter().all(|c| c.len() == r + 1);
        s.instances += 1;
        s.record(&g, &report, 1, Some(clique_union));
    }
    s.detail("n", n);
    s.detail("r", r);
    Ok(s)
}

/// Both legal-coloring bounds for every condition over all labeled
/// `r`-regular graphs. For `r <= 2` a graph is determined up to isomorphism
/// by its component sizes, so each class is evaluated once.
pub fn legal_bound_sweep(
    n: usize,
    r: usize,
    conditions: &[ColoringCondition],
    limits: &Limits,
) -> Result<SweepSummary> {
    let mut s = SweepSummary::new("legal");
    let evaluate = |g: &Graph| -> Result<Vec<BoundReport>> {
        let mut reports = Vec::new();
        for c in conditions {
            reports.extend(check_legal_bounds(g, c, None, limits)?.reports().cloned());
        }
        Ok(reports)
    };
    // class key -> (first labeled member, number of labeled members)
    let mut classes: HashMap<Vec<usize>, (Graph, u64)> = HashMap::new();
    let mut order: Vec<Vec<usize>> = Vec::new();
    for g in labeled_regular_graphs(n, r, limits)? {
        s.instances += 1;
        if r <= 2 {
            let key = component_sizes(&g);
            match classes.get_mut(&key) {
                Some(entry) => entry.1 += 1,
                None => {
                    order.push(key.clone());
                    classes.insert(key, (g, 1));
                }
            }
        } else {
            for report in &evaluate(&g)? {
                s.record(&g, report, 1, None);
            }
        }
    }
    for key in &order {
        let (g, count) = &classes[key];
        for report in &evaluate(g)? {
            s.record(g, report, *count, None);
        }
    }
    s.detail("n", n);
    s.detail("r", r);
    s.detail("conditions", conditions.iter().map(|c| c.name()).collect::<Vec<_>>());
    if r <= 2 {
        s.detail("classes", order.len());
    }
    Ok(s)
}

fn partitions_at_least_three(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for part in (3..=rest.min(max)).rev() {
            current.push(part);
            go(rest - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `xhom(G, E_2)^6 <= c_6^n` over every disjoint union of cycles on
/// `3..=max_n` vertices (one graph per multiset of cycle lengths). The
/// enumerated count is also compared with the product of the closed forms.
pub fn cycle_extremal_sweep(max_n: usize, limits: &Limits) -> Result<SweepSummary> {
    let mut s = SweepSummary::new("cycle-extremal");
    let mut mismatches = 0u64;
    for n in 3..=max_n {
        for parts in partitions_at_least_three(n) {
            let family = Family::DisjointUnion(parts.iter().map(|&p| Family::Cycle(p)).collect());
            let g = family.build()?;
            let report = cycle_extremal_check(&g, limits)?;
            let mut product = num_bigint::BigUint::from(1u32);
            for &p in &parts {
                product *= cycle_xhom_closed_form(p)?;
            }
            if report.lhs_base != exact_u(product) {
                mismatches += 1;
            }
            s.instances += 1;
            s.record(&g, &report, 1, Some(parts.iter().all(|&p| p == 6)));
        }
    }
    s.violations += mismatches;
    s.detail("max_n", max_n);
    s.detail("closed_form_mismatches", mismatches);
    Ok(s)
}

/// Whether `g` attains the Moon–Moser bound: all components triangles,
/// except one `K_4` or two `K_2` when `n ≡ 1`, and one `K_2` when `n ≡ 2`
/// (mod 3).
pub fn is_moon_moser_extremal(g: &Graph) -> bool {
    let components = g.components();
    let complete = components.iter().all(|c| {
        let k = c.len();
        c.iter().all(|v| g.degree(v) == k - 1)
    });
    if !complete {
        return false;
    }
    let sizes = component_sizes(g);
    let not_triangles: Vec<usize> = sizes.into_iter().filter(|&k| k != 3).collect();
    match g.n() % 3 {
        0 => not_triangles.is_empty(),
        1 => not_triangles == [4] || not_triangles == [2, 2],
        _ => not_triangles == [2],
    }
}

/// Moon–Moser over all labeled graphs on `n` vertices.
pub fn moon_moser_sweep(n: usize, limits: &Limits) -> Result<SweepSummary> {
    let mut s = SweepSummary::new("moon-moser");
    for g in labeled_graphs(n, limits)? {
        let report = moon_moser_bound(&g, limits)?;
        s.instances += 1;
        s.record(&g, &report, 1, Some(is_moon_moser_extremal(&g)));
    }
    s.detail("n", n);
    Ok(s)
}

/// Minimal dominating sets against `1.7159^n` over all labeled graphs.
pub fn fomin_sweep(n: usize, limits: &Limits) -> Result<SweepSummary> {
    let mut s = SweepSummary::new("fomin");
    let mut min_margin = f64::INFINITY;
    let mut max_count = num_rational::BigRational::from_integer(0.into());
    for g in labeled_graphs(n, limits)? {
        let report = fomin_bound(&g, limits)?;
        min_margin = min_margin.min(report.margin.expect("fomin reports a margin"));
        if report.lhs_base > max_count {
            max_count = report.lhs_base.clone();
        }
        s.instances += 1;
        s.record(&g, &report, 1, None);
    }
    s.detail("n", n);
    s.detail("max_count", max_count.to_string());
    s.detail("min_margin", min_margin);
    Ok(s)
}

/// Shearer reports over all labeled `r`-regular graphs; a violation is a
/// slack below `-SHEARER_TOLERANCE`.
pub fn shearer_sweep(n: usize, r: usize, family: &ShearerFamily, mode: Mode, limits: &Limits) -> Result<SweepSummary> {
    let mut s = SweepSummary::new(format!("shearer[{family},{mode}]"));
    let mut min_slack = f64::INFINITY;
    for g in labeled_regular_graphs(n, r, limits)? {
        let report = match shearer_report(&g, family, mode, limits) {
            Err(Error::EmptyFamily) => continue,
            other => other?,
        };
        min_slack = min_slack.min(report.slack);
        s.instances += 1;
        s.comparisons += 1;
        if !report.holds() {
            s.violations += 1;
            if s.witnesses.len() < MAX_WITNESSES {
                let mut w = report.to_json();
                w["graph6"] = json!(g.to_graph6());
                s.witnesses.push(w);
            }
        }
    }
    s.detail("n", n);
    s.detail("r", r);
    if min_slack.is_finite() {
        s.detail("min_slack", min_slack);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn trees_on_four_vertices() {
        let s = tree_extremal_sweep(4, &lim()).unwrap();
        assert_eq!(s.instances, 16);
        assert_eq!(s.equalities, 12);
        assert_eq!(s.details["paths"], 12);
        assert!(s.passed());
        let s = tree_extremal_sweep(2, &lim()).unwrap();
        assert_eq!((s.instances, s.equalities), (1, 1));
    }

    #[test]
    fn ds_sweep_small() {
        let s = ds_bound_sweep(6, 2, &lim()).unwrap();
        assert_eq!(s.instances, 70);
        // 2K_3: ten labeled copies
        assert_eq!(s.equalities, 10);
        assert!(s.passed());
    }

    #[test]
    fn legal_sweep_uses_classes() {
        let conds = [ColoringCondition::dominating(), ColoringCondition::proper(2).unwrap()];
        let s = legal_bound_sweep(7, 2, &conds, &lim()).unwrap();
        // C_7 (360 labelings) and C_3 + C_4 (35 * 1 * 3 = 105)
        assert_eq!(s.instances, 465);
        assert_eq!(s.details["classes"], 2);
        assert_eq!(s.comparisons, 465 * 4);
        assert_eq!(s.violations, 0);
    }

    #[test]
    fn partitions() {
        assert_eq!(partitions_at_least_three(7), vec![vec![7], vec![4, 3]]);
        // 9, 6+3, 5+4, 3+3+3
        assert_eq!(partitions_at_least_three(9).len(), 4);
        assert!(partitions_at_least_three(2).is_empty());
    }

    #[test]
    fn cycle_sweep_small() {
        let s = cycle_extremal_sweep(12, &lim()).unwrap();
        assert!(s.passed());
        // C_6 and 2C_6
        assert_eq!(s.equalities, 2);
    }

    #[test]
    fn moon_moser_extremal_shapes() {
        let f = |spec: &str| crate::graph::parse_family(spec).unwrap().build().unwrap();
        assert!(is_moon_moser_extremal(&f("complete:3+complete:3")));
        assert!(is_moon_moser_extremal(&f("complete:4")));
        assert!(is_moon_moser_extremal(&f("complete:2+complete:2+complete:3")));
        assert!(!is_moon_moser_extremal(&f("cycle:6")));
        let s = moon_moser_sweep(5, &lim()).unwrap();
        assert!(s.passed());
    }

    #[test]
    fn shearer_sweep_small() {
        let s = shearer_sweep(6, 2, &ShearerFamily::Dominating, Mode::Closed, &lim()).unwrap();
        assert_eq!(s.instances, 70);
        assert!(s.passed());
    }
}
