use num_bigint::BigUint;

use super::{Polynomial, Structure};
use crate::error::Result;
use crate::graph::{full_mask, Bits, Graph};
use crate::limits::Limits;

/// Byte-chunked lookup table for `N(S)`: one 256-entry table per group of
/// eight vertices, so a union costs `ceil(n / 8)` lookups.
pub struct UnionTable {
    chunks: Vec<[u64; 256]>,
}

impl UnionTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let chunks = (0..n.div_ceil(8))
            .map(|c| {
                let mut table = [0u64; 256];
                for byte in 1..256usize {
                    let low = byte.trailing_zeros() as usize;
                    let v = 8 * c + low;
                    let rest = table[byte & (byte - 1)];
                    table[byte] = if v < n { rest | g.adj_mask(v) } else { rest };
                }
                table
            })
            .collect();
        UnionTable { chunks }
    }

    /// `N(S)` as a mask.
    #[inline]
    pub fn open(&self, s: u64) -> u64 {
        let mut out = 0;
        for (c, table) in self.chunks.iter().enumerate() {
            out |= table[(s >> (8 * c)) as usize & 0xff];
        }
        out
    }

    /// `N[S]` as a mask.
    #[inline]
    pub fn closed(&self, s: u64) -> u64 {
        self.open(s) | s
    }
}

fn subset_range(g: &Graph, what: &str, limits: &Limits) -> Result<u64> {
    limits.check_subsets(what, g.n())?;
    Ok(full_mask(g.n()))
}

/// Calls `f` on every vertex mask `0..=full` (requires `n < 64`).
#[inline]
fn for_each_mask(full: u64, mut f: impl FnMut(u64)) {
    let mut s = 0u64;
    loop {
        f(s);
        if s == full {
            break;
        }
        s += 1;
    }
}

/// Calls `f` with the mask of every (strong, when `strong`) dominating set.
pub fn for_each_dominating_set(g: &Graph, strong: bool, limits: &Limits, mut f: impl FnMut(u64)) -> Result<()> {
    let full = subset_range(g, "dominating set enumeration", limits)?;
    let table = UnionTable::new(g);
    for_each_mask(full, |s| {
        let covered = if strong { table.open(s) } else { table.closed(s) };
        if covered == full {
            f(s);
        }
    });
    Ok(())
}

/// `D_G(μ)` (or `D^s_G(μ)` when `strong`): coefficient `k` counts the
/// (strong) dominating sets of size `k`.
pub fn dominating_polynomial(g: &Graph, strong: bool, limits: &Limits) -> Result<Polynomial> {
    let mut by_size = [0u64; 65];
    for_each_dominating_set(g, strong, limits, |s| by_size[s.count_ones() as usize] += 1)?;
    Ok(Polynomial::new(
        by_size[..=g.n()].iter().map(|&c| BigUint::from(c)).collect(),
    ))
}

pub fn count_minimal_dominating_sets(g: &Graph, limits: &Limits) -> Result<BigUint> {
    let full = subset_range(g, "minimal dominating set enumeration", limits)?;
    let table = UnionTable::new(g);
    let mut count = 0u64;
    for_each_mask(full, |s| {
        if table.closed(s) == full && Bits(s).all(|v| table.closed(s & !(1u64 << v)) != full) {
            count += 1;
        }
    });
    Ok(count.into())
}

pub fn count_independent_sets(g: &Graph, limits: &Limits) -> Result<BigUint> {
    let full = subset_range(g, "independent set enumeration", limits)?;
    let table = UnionTable::new(g);
    let mut count = 0u64;
    for_each_mask(full, |s| {
        if table.open(s) & s == 0 {
            count += 1;
        }
    });
    Ok(count.into())
}

pub fn count_maximal_independent_sets(g: &Graph, limits: &Limits) -> Result<BigUint> {
    let full = subset_range(g, "maximal independent set enumeration", limits)?;
    let table = UnionTable::new(g);
    let mut count = 0u64;
    for_each_mask(full, |s| {
        let nb = table.open(s);
        if nb & s == 0 && (nb | s) == full {
            count += 1;
        }
    });
    Ok(count.into())
}

pub fn count_structure(g: &Graph, structure: Structure, limits: &Limits) -> Result<BigUint> {
    match structure {
        Structure::Dominating => Ok(dominating_polynomial(g, false, limits)?.eval_one()),
        Structure::StrongDominating => Ok(dominating_polynomial(g, true, limits)?.eval_one()),
        Structure::MinimalDominating => count_minimal_dominating_sets(g, limits),
        Structure::MaximalIndependent => count_maximal_independent_sets(g, limits),
        Structure::Independent => count_independent_sets(g, limits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Family, VertexSet};

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn union_table_matches_direct_union() {
        let g = Family::Petersen.build().unwrap();
        let table = UnionTable::new(&g);
        for s in 0..1u64 << 10 {
            let direct = g.set_neighborhood(VertexSet(s), false).unwrap().bits();
            assert_eq!(table.open(s), direct);
        }
    }

    #[test]
    fn dominating_polynomials() {
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(
            dominating_polynomial(&k3, false, &lim()).unwrap(),
            Polynomial::from_u64(&[0, 3, 3, 1])
        );

        // 6 pairs + 4 triples + 1 quadruple
        let c4 = Family::Cycle(4).build().unwrap();
        let d = dominating_polynomial(&c4, false, &lim()).unwrap();
        assert_eq!(d, Polynomial::from_u64(&[0, 0, 6, 4, 1]));
        assert_eq!(d.eval_one(), big(11));

        // strongly dominating iff S meets both sides
        let k22 = Family::CompleteBipartite(2, 2).build().unwrap();
        let side = Polynomial::from_u64(&[0, 2, 1]);
        assert_eq!(dominating_polynomial(&k22, true, &lim()).unwrap(), &side * &side);
    }

    #[test]
    fn minimal_and_independent_counts() {
        let k3 = Family::Complete(3).build().unwrap();
        let c4 = Family::Cycle(4).build().unwrap();
        let e2 = Family::Empty(2).build().unwrap();
        assert_eq!(count_minimal_dominating_sets(&k3, &lim()).unwrap(), big(3));
        assert_eq!(count_minimal_dominating_sets(&c4, &lim()).unwrap(), big(6));
        assert_eq!(count_minimal_dominating_sets(&e2, &lim()).unwrap(), big(1));

        assert_eq!(count_maximal_independent_sets(&k3, &lim()).unwrap(), big(3));
        let two_triangles = crate::graph::parse_family("complete:3+complete:3")
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(count_maximal_independent_sets(&two_triangles, &lim()).unwrap(), big(9));
        assert_eq!(count_maximal_independent_sets(&c4, &lim()).unwrap(), big(2));
        let k22 = Family::CompleteBipartite(2, 2).build().unwrap();
        assert_eq!(count_independent_sets(&k22, &lim()).unwrap(), big(7));
    }

    #[test]
    fn caps_apply() {
        let g = Family::Empty(27).build().unwrap();
        assert!(count_independent_sets(&g, &lim()).unwrap_err().is_cap_exceeded());
        assert!(dominating_polynomial(&g, false, &lim()).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn coefficients_vanish_below_domination_number() {
        let g = Family::Path(7).build().unwrap();
        let d = dominating_polynomial(&g, false, &lim()).unwrap();
        // γ(P_7) = 3
        assert_eq!(d.lowest_degree(), Some(3));
        assert!(d.coefficients()[..3].iter().all(|c| *c == big(0)));
    }
}
