use std::fmt;

use serde_json::{json, Value};

use crate::conditions::ColoringCondition;
use crate::counting::{for_each_dominating_set, for_each_legal_coloring, Mode};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph, VertexSet};
use crate::limits::Limits;

/// Float slack allowed when comparing `H(X)` with the Shearer bound.
pub const SHEARER_TOLERANCE: f64 = 1e-9;

/// The family whose uniformly random member is `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShearerFamily {
    Dominating,
    StrongDominating,
    /// Legal colorings for the condition, under the same mode as the cover.
    Custom(ColoringCondition),
}

impl fmt::Display for ShearerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShearerFamily::Dominating => f.write_str("dominating"),
            ShearerFamily::StrongDominating => f.write_str("strong_dominating"),
            ShearerFamily::Custom(c) => write!(f, "custom[{}]", c.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EntropyReport {
    pub family: String,
    pub mode: Mode,
    pub family_size: u64,
    /// `H(X) = log2 |family|` in bits.
    pub total_entropy: f64,
    /// `N(v)` or `N[v]` for every vertex `v`.
    pub cover: Vec<VertexSet>,
    /// Least number of cover sets containing any single vertex.
    pub k: usize,
    pub projection_entropies: Vec<f64>,
    pub shearer_rhs: f64,
    pub slack: f64,
}

impl EntropyReport {
    pub fn holds(&self) -> bool {
        self.slack >= -SHEARER_TOLERANCE
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": "shearer",
            "family": self.family,
            "mode": self.mode.to_string(),
            "family_size": self.family_size.to_string(),
            "total_entropy": self.total_entropy,
            "cover": self.cover.iter().map(|s| s.iter().collect::<Vec<_>>()).collect::<Vec<_>>(),
            "k": self.k,
            "projection_entropies": self.projection_entropies,
            "shearer_rhs": self.shearer_rhs,
            "slack": self.slack,
            "verdict": if self.holds() { "holds" } else { "fails" },
        })
    }
}

/// Entropy in bits of the distribution with the given positive counts
/// summing to `total`.
fn entropy_of_counts(counts: impl Iterator<Item = u64>, total: u64) -> f64 {
    let t = total as f64;
    let weighted: f64 = counts.filter(|&c| c > 0).map(|c| c as f64 * (c as f64).log2()).sum();
    t.log2() - weighted / t
}

/// `H(X_A)` for a family of vertex masks. Small projections are tallied in
/// an array indexed by the compressed pattern, larger ones by sorting.
fn mask_projection_entropy(members: &[u64], a: u64) -> f64 {
    let total = members.len() as u64;
    let width = a.count_ones();
    if width <= 16 {
        let positions: Vec<usize> = Bits(a).collect();
        let mut tally = vec![0u64; 1 << width];
        for &s in members {
            let mut idx = 0usize;
            for (bit, &v) in positions.iter().enumerate() {
                idx |= ((s >> v & 1) as usize) << bit;
            }
            tally[idx] += 1;
        }
        entropy_of_counts(tally.into_iter(), total)
    } else {
        let mut patterns: Vec<u64> = members.iter().map(|&s| s & a).collect();
        patterns.sort_unstable();
        entropy_of_counts(run_lengths(&patterns), total)
    }
}

fn run_lengths<T: PartialEq>(sorted: &[T]) -> impl Iterator<Item = u64> + '_ {
    sorted.chunk_by(|x, y| x == y).map(|run| run.len() as u64)
}

fn coloring_projection_entropy(members: &[Vec<u8>], a: u64) -> f64 {
    let mut patterns: Vec<Vec<u8>> = members.iter().map(|c| Bits(a).map(|v| c[v]).collect()).collect();
    patterns.sort_unstable();
    entropy_of_counts(run_lengths(&patterns), members.len() as u64)
}

/// Shearer's inequality `H(X) <= (1/k) Σ_A H(X_A)` for `X` uniform on the
/// family and `A` ranging over the neighborhoods of `g`. All pattern counts
/// are exact; only the final logarithms are floating point.
pub fn shearer_report(g: &Graph, family: &ShearerFamily, mode: Mode, limits: &Limits) -> Result<EntropyReport> {
    let n = g.n();
    let cover: Vec<VertexSet> = (0..n)
        .map(|v| {
            VertexSet(if mode.is_closed() {
                g.closed_mask(v)
            } else {
                g.adj_mask(v)
            })
        })
        .collect();
    let k = (0..n)
        .map(|v| cover.iter().filter(|a| a.contains(v)).count())
        .min()
        .unwrap_or(0);
    if k == 0 {
        return Err(Error::invalid("the neighborhood cover misses a vertex (k = 0)"));
    }

    let (family_size, projection_entropies) = match family {
        ShearerFamily::Dominating | ShearerFamily::StrongDominating => {
            let strong = *family == ShearerFamily::StrongDominating;
            let mut members = Vec::new();
            for_each_dominating_set(g, strong, limits, |s| members.push(s))?;
            if members.is_empty() {
                return Err(Error::EmptyFamily);
            }
            let h: Vec<f64> = cover.iter().map(|a| mask_projection_entropy(&members, a.0)).collect();
            (members.len() as u64, h)
        }
        ShearerFamily::Custom(condition) => {
            let mut members = Vec::new();
            for_each_legal_coloring(g, condition, mode, limits, |c| members.push(c.to_vec()))?;
            if members.is_empty() {
                return Err(Error::EmptyFamily);
            }
            let h = cover
                .iter()
                .map(|a| coloring_projection_entropy(&members, a.0))
                .collect();
            (members.len() as u64, h)
        }
    };
    let total_entropy = (family_size as f64).log2();
    let shearer_rhs = projection_entropies.iter().sum::<f64>() / k as f64;
    Ok(EntropyReport {
        family: family.to_string(),
        mode,
        family_size,
        total_entropy,
        cover,
        k,
        projection_entropies,
        shearer_rhs,
        slack: shearer_rhs - total_entropy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_family;

    fn lim() -> Limits {
        Limits::default()
    }

    fn family(spec: &str) -> Graph {
        parse_family(spec).unwrap().build().unwrap()
    }

    #[test]
    fn triangle_has_zero_slack() {
        let r = shearer_report(&family("complete:3"), &ShearerFamily::Dominating, Mode::Closed, &lim()).unwrap();
        let l7 = 7f64.log2();
        assert_eq!(r.family_size, 7);
        assert_eq!(r.k, 3);
        assert!((r.total_entropy - l7).abs() < 1e-12);
        assert!(r.projection_entropies.iter().all(|h| (h - l7).abs() < 1e-12));
        assert!((r.shearer_rhs - l7).abs() < 1e-12);
        assert!(r.slack.abs() < 1e-12);
    }

    #[test]
    fn c4_and_p3() {
        let r = shearer_report(&family("cycle:4"), &ShearerFamily::Dominating, Mode::Closed, &lim()).unwrap();
        assert_eq!(r.family_size, 11);
        assert!((r.total_entropy - 11f64.log2()).abs() < 1e-12);
        assert!(r.holds());
        let r = shearer_report(&family("path:3"), &ShearerFamily::Dominating, Mode::Closed, &lim()).unwrap();
        assert_eq!(r.k, 2);
        assert!(r.holds());
    }

    #[test]
    fn projection_entropy_by_hand() {
        // dominating sets of P_3: {1}, {0,1}, {1,2}, {0,2}, {0,1,2}; on N[0] = {0,1}
        // the patterns are 10, 11, 10, 01, 11 → counts 2, 2, 1
        let r = shearer_report(&family("path:3"), &ShearerFamily::Dominating, Mode::Closed, &lim()).unwrap();
        let expected = 5f64.log2() - (2.0 * 2f64.log2() * 2.0) / 5.0;
        assert!((r.projection_entropies[0] - expected).abs() < 1e-12);
    }

    #[test]
    fn sorting_and_tally_paths_agree() {
        let members: Vec<u64> = (0..200u64)
            .map(|x| x.wrapping_mul(0x9e37_79b9_7f4a_7c15) >> 40)
            .collect();
        let wide = (1u64 << 20) - 1;
        let narrow = 0b1011_0110;
        let mut by_sort: Vec<u64> = members.iter().map(|&s| s & narrow).collect();
        by_sort.sort_unstable();
        let expected = entropy_of_counts(run_lengths(&by_sort), 200);
        assert!((mask_projection_entropy(&members, narrow) - expected).abs() < 1e-12);
        assert!(mask_projection_entropy(&members, wide) <= 200f64.log2() + 1e-12);
    }

    #[test]
    fn custom_family_matches_dominating() {
        let g = family("cycle:5");
        let d = shearer_report(&g, &ShearerFamily::Dominating, Mode::Closed, &lim()).unwrap();
        let c = shearer_report(
            &g,
            &ShearerFamily::Custom(ColoringCondition::dominating()),
            Mode::Closed,
            &lim(),
        )
        .unwrap();
        assert_eq!(d.family_size, c.family_size);
        assert!((d.shearer_rhs - c.shearer_rhs).abs() < 1e-12);
        let s = shearer_report(&g, &ShearerFamily::StrongDominating, Mode::Open, &lim()).unwrap();
        assert_eq!(s.k, 2);
        assert!(s.holds());
    }

    #[test]
    fn degenerate_inputs() {
        let isolated = family("empty:2");
        assert!(shearer_report(&isolated, &ShearerFamily::Dominating, Mode::Open, &lim()).is_err());
        let g = family("complete:3");
        let rainbow = ColoringCondition::rainbow(2).unwrap();
        assert!(matches!(
            shearer_report(&g, &ShearerFamily::Custom(rainbow), Mode::Closed, &lim()),
            Err(Error::EmptyFamily)
        ));
    }
}
