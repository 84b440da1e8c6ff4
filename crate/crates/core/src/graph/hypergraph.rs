use super::{full_mask, VertexSet};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A hypergraph with an ordered edge list (repeated edges allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

/// Which vertex colorings of a hypergraph to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperColoring {
    /// No edge is monochromatic.
    Proper,
    /// No edge repeats a color.
    Rainbow,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self> {
        let full = full_mask(n);
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::invalid(format!("hyperedge {i} is empty")));
            }
            if e.0 & !full != 0 {
                return Err(Error::SetOutOfRange { n });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// `Some(k)` when every edge has exactly `k` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Counts `q`-colorings by plain enumeration of all `q^n` maps.
    ///
    /// This walks every coloring with an odometer and tests each edge
    /// directly, independent of the neighborhood-condition machinery.
    pub fn count_colorings(&self, q: usize, kind: HyperColoring, limits: &Limits) -> Result<u128> {
        limits.check_search("hypergraph coloring enumeration", self.n, q)?;
        if q == 0 {
            return Ok(0);
        }
        if q > 64 {
            return Err(Error::invalid("at most 64 colors"));
        }
        let mut colors = vec![0usize; self.n];
        let mut count = 0u128;
        loop {
            let ok = self.edges.iter().all(|e| {
                let mut seen = 0u64;
                let mut repeated = false;
                for v in e.iter() {
                    let bit = 1u64 << colors[v];
                    repeated |= seen & bit != 0;
                    seen |= bit;
                }
                match kind {
                    HyperColoring::Proper => seen.count_ones() >= 2,
                    HyperColoring::Rainbow => !repeated,
                }
            });
            if ok {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == self.n {
                    return Ok(count);
                }
                colors[i] += 1;
                if colors[i] < q {
                    break;
                }
                colors[i] = 0;
                i += 1;
            }
        }
    }
}
