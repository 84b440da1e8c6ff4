use std::fmt;
use std::str::FromStr;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

/// Standard labeled graph families.
///
/// Labelings: paths and cycles are numbered consecutively along the graph;
/// `CompleteBipartite(a, b)` has sides `0..a` and `a..a+b`; a star has its
/// center at 0; disjoint unions shift each later block past the earlier ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    Cycle(usize),
    /// `K_{1,k}`.
    Star(usize),
    Petersen,
    Hypercube(usize),
    /// Edgeless graph on `n` vertices.
    Empty(usize),
    DisjointUnion(Vec<Family>),
    DoubleCover(Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Complete(n) => {
                let mut g = sized(n)?;
                for v in 1..n {
                    for u in 0..v {
                        g.set_edge_unchecked(u, v);
                    }
                }
                Ok(g)
            }
            Family::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(Error::invalid("complete_bipartite needs two nonempty sides"));
                }
                let mut g = sized(a + b)?;
                for u in 0..a {
                    for v in a..a + b {
                        g.set_edge_unchecked(u, v);
                    }
                }
                Ok(g)
            }
            Family::Path(n) => {
                let mut g = sized(n)?;
                for v in 1..n {
                    g.set_edge_unchecked(v - 1, v);
                }
                Ok(g)
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::invalid(format!("cycle needs at least 3 vertices, got {n}")));
                }
                let mut g = Family::Path(n).build()?;
                g.set_edge_unchecked(n - 1, 0);
                Ok(g)
            }
            Family::Star(k) => {
                let mut g = sized(k + 1)?;
                for v in 1..=k {
                    g.set_edge_unchecked(0, v);
                }
                Ok(g)
            }
            Family::Petersen => {
                let mut g = sized(10)?;
                for i in 0..5 {
                    g.set_edge_unchecked(i, (i + 1) % 5);
                    g.set_edge_unchecked(i, i + 5);
                    g.set_edge_unchecked(5 + i, 5 + (i + 2) % 5);
                }
                Ok(g)
            }
            Family::Hypercube(d) => {
                if d > 6 {
                    return Err(Error::TooManyVertices(
                        1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
                    ));
                }
                let n = 1usize << d;
                let mut g = sized(n)?;
                for v in 0..n {
                    for bit in 0..d {
                        let u = v ^ (1 << bit);
                        if u > v {
                            g.set_edge_unchecked(v, u);
                        }
                    }
                }
                Ok(g)
            }
            Family::Empty(n) => sized(n),
            Family::DisjointUnion(ref parts) => {
                let mut iter = parts.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::invalid("disjoint_union needs at least one part"))?;
                iter.try_fold(first.build()?, |acc, part| acc.disjoint_union(&part.build()?))
            }
            Family::DoubleCover(ref base) => base.build()?.bipartite_double_cover(),
        }
    }
}

fn sized(n: usize) -> Result<Graph> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    Graph::empty(n)
}

fn parse_args(name: &str, args: &str, want: usize) -> Result<Vec<usize>> {
    let values: Vec<usize> = args
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("{name}: {a:?} is not a nonnegative integer")))
        })
        .collect::<Result<_>>()?;
    if values.len() != want {
        return Err(Error::invalid(format!(
            "{name} takes {want} argument(s), got {}",
            values.len()
        )));
    }
    Ok(values)
}

/// Parses `name[:args]`, with `+` joining parts into a disjoint union.
///
/// Examples: `cycle:4`, `complete_bipartite:3,3`, `petersen`,
/// `complete:3+complete:3`, `double_cover:complete:3`.
pub fn parse_family(spec: &str) -> Result<Family> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("double_cover:") {
        return Ok(Family::DoubleCover(Box::new(parse_family(rest)?)));
    }
    let parts: Vec<&str> = spec.split('+').collect();
    if parts.len() > 1 {
        return Ok(Family::DisjointUnion(
            parts.iter().map(|p| parse_family(p)).collect::<Result<_>>()?,
        ));
    }
    let (name, args) = match spec.split_once(':') {
        Some((name, args)) => (name.trim(), Some(args)),
        None => (spec, None),
    };
    let need = |k: usize| -> Result<Vec<usize>> {
        match args {
            Some(a) => parse_args(name, a, k),
            None => Err(Error::invalid(format!("{name} needs {k} argument(s), e.g. {name}:4"))),
        }
    };
    Ok(match name {
        "complete" | "K" => Family::Complete(need(1)?[0]),
        "complete_bipartite" | "Kab" => {
            let a = need(2)?;
            Family::CompleteBipartite(a[0], a[1])
        }
        "path" | "P" => Family::Path(need(1)?[0]),
        "cycle" | "C" => Family::Cycle(need(1)?[0]),
        "star" => Family::Star(need(1)?[0]),
        "hypercube" | "Q" => Family::Hypercube(need(1)?[0]),
        "empty" | "e_loopless" => Family::Empty(need(1)?[0]),
        "petersen" => {
            if args.is_some() {
                return Err(Error::invalid("petersen takes no arguments"));
            }
            Family::Petersen
        }
        "disjoint_union" => match args {
            Some(inner) => Family::DisjointUnion(vec![parse_family(inner)?]),
            None => return Err(Error::invalid("disjoint_union needs parts")),
        },
        other => return Err(Error::invalid(format!("unknown graph family {other:?}"))),
    })
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_family(s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Petersen => f.write_str("petersen"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::DisjointUnion(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Family::DoubleCover(base) => write!(f, "double_cover:{base}"),
        }
    }
}
