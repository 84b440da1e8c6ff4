//! Exhaustive generators of labeled graphs, trees and regular graphs.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::limits::Limits;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Number of labeled graphs on `n` vertices, `2^(n choose 2)`.
pub fn labeled_graph_count(n: usize) -> u128 {
    1u128 << (n * n.saturating_sub(1) / 2)
}

/// All `2^(n choose 2)` labeled graphs on `n` vertices.
#[derive(Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

pub fn labeled_graphs(n: usize, limits: &Limits) -> Result<LabeledGraphs> {
    limits.check_generator("labeled graph enumeration", n, limits.max_graph_n)?;
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    let pairs = pairs(n);
    if pairs.len() >= 64 {
        return Err(Error::invalid(format!("2^{} graphs cannot be enumerated", pairs.len())));
    }
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let mut g = Graph::empty(self.n).expect("n validated");
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.set_edge_unchecked(u, v);
            }
        }
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Decodes a Prüfer sequence over `0..n` into the labeled tree it encodes.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Graph> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::invalid(format!(
            "a Prüfer sequence for n = {n} has length n - 2 (got {})",
            seq.len()
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut degree = [1u32; MAX_VERTICES];
    for &x in seq {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
        degree[x] += 1;
    }
    let mut g = Graph::empty(n)?;
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        g.set_edge_unchecked(leaf, x);
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (
        last.next().expect("two leaves remain"),
        last.next().expect("two leaves remain"),
    );
    g.set_edge_unchecked(u, v);
    Ok(g)
}

/// All `n^(n-2)` labeled trees on `n` vertices, by Prüfer decoding.
#[derive(Debug)]
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

pub fn labeled_trees(n: usize, limits: &Limits) -> Result<LabeledTrees> {
    limits.check_generator("labeled tree enumeration", n, limits.max_tree_n)?;
    if n == 0 {
        return Err(Error::invalid("n must be positive"));
    }
    Ok(LabeledTrees {
        n,
        seq: vec![0; n.saturating_sub(2)],
        done: false,
    })
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        if self.n == 1 {
            self.done = true;
            return Some(Graph::empty(1).expect("one vertex"));
        }
        let tree = prufer_decode(&self.seq, self.n).expect("odometer yields valid sequences");
        // advance the odometer
        let mut i = 0;
        loop {
            if i == self.seq.len() {
                self.done = true;
                break;
            }
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
            i += 1;
        }
        Some(tree)
    }
}

/// All labeled `r`-regular graphs on `n` vertices, each exactly once.
///
/// Depth-first search over the vertex pairs in lexicographic order, trying
/// "edge" before "no edge". A pair may be skipped only if both endpoints can
/// still reach degree `r` from their remaining pairs, so every leaf of the
/// search is a valid graph.
#[derive(Debug)]
pub struct LabeledRegularGraphs {
    n: usize,
    r: u32,
    pairs: Vec<(usize, usize)>,
    graph: Graph,
    degree: [u32; MAX_VERTICES],
    decisions: Vec<bool>,
    started: bool,
    done: bool,
}

pub fn labeled_regular_graphs(n: usize, r: usize, limits: &Limits) -> Result<LabeledRegularGraphs> {
    limits.check_generator("labeled regular graph enumeration", n, limits.max_regular_n)?;
    let graph = Graph::empty(n)?;
    Ok(LabeledRegularGraphs {
        n,
        r: r as u32,
        pairs: pairs(n),
        graph,
        degree: [0; MAX_VERTICES],
        // no r-regular graph exists when r >= n or n*r is odd
        done: r >= n || (n * r) % 2 == 1,
        decisions: Vec::new(),
        started: false,
    })
}

impl LabeledRegularGraphs {
    fn can_edge(&self, p: usize) -> bool {
        let (i, j) = self.pairs[p];
        self.degree[i] < self.r && self.degree[j] < self.r
    }

    fn can_skip(&self, p: usize) -> bool {
        let (i, j) = self.pairs[p];
        let need_i = (self.r - self.degree[i]) as usize;
        let need_j = (self.r - self.degree[j]) as usize;
        need_i <= self.n - 1 - j && need_j <= self.n - 2 - i
    }

    fn push(&mut self, p: usize, edge: bool) {
        if edge {
            let (i, j) = self.pairs[p];
            self.graph.set_edge_unchecked(i, j);
            self.degree[i] += 1;
            self.degree[j] += 1;
        }
        self.decisions.push(edge);
    }

    /// Extends the decision stack to a full assignment; false on a dead end.
    fn descend(&mut self) -> bool {
        loop {
            let p = self.decisions.len();
            if p == self.pairs.len() {
                return true;
            }
            if self.can_edge(p) {
                self.push(p, true);
            } else if self.can_skip(p) {
                self.push(p, false);
            } else {
                return false;
            }
        }
    }

    /// Flips the deepest flippable "edge" decision to "no edge".
    fn backtrack(&mut self) -> bool {
        while let Some(edge) = self.decisions.pop() {
            let p = self.decisions.len();
            if edge {
                let (i, j) = self.pairs[p];
                self.graph.clear_edge_unchecked(i, j);
                self.degree[i] -= 1;
                self.degree[j] -= 1;
                if self.can_skip(p) {
                    self.push(p, false);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for LabeledRegularGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.descend() {
                return Some(self.graph.clone());
            }
        }
        loop {
            if !self.backtrack() {
                self.done = true;
                return None;
            }
            if self.descend() {
                debug_assert!(self.degree[..self.n].iter().all(|&d| d == self.r));
                return Some(self.graph.clone());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn unbounded() -> Limits {
        Limits::unbounded()
    }

    #[test]
    fn graph_and_tree_counts() {
        assert_eq!(labeled_graphs(3, &Limits::default()).unwrap().count(), 8);
        assert_eq!(labeled_trees(4, &Limits::default()).unwrap().count(), 16);
        assert_eq!(labeled_trees(2, &Limits::default()).unwrap().count(), 1);
        assert_eq!(labeled_trees(1, &Limits::default()).unwrap().count(), 1);
        assert_eq!(labeled_trees(6, &Limits::default()).unwrap().count(), 1296);
    }

    #[test]
    fn trees_are_distinct_trees() {
        let trees: Vec<Graph> = labeled_trees(5, &Limits::default()).unwrap().collect();
        assert_eq!(trees.len(), 125);
        for t in &trees {
            assert_eq!(t.edge_count(), 4);
            assert_eq!(t.components().len(), 1);
        }
        let distinct: HashSet<&Graph> = trees.iter().collect();
        assert_eq!(distinct.len(), 125);
    }

    #[test]
    fn only_k4_is_3_regular_on_4_vertices() {
        let graphs: Vec<Graph> = labeled_regular_graphs(4, 3, &Limits::default()).unwrap().collect();
        assert_eq!(graphs, vec![super::super::Family::Complete(4).build().unwrap()]);
    }

    #[test]
    fn regular_generator_matches_brute_force_filter() {
        // Filter every labeled graph on n <= 6 vertices by regularity.
        for n in 1..=6 {
            let all: Vec<Graph> = labeled_graphs(n, &Limits::default()).unwrap().collect();
            for r in 0..n {
                let want: HashSet<Graph> = all.iter().filter(|g| g.regular_degree() == Some(r)).cloned().collect();
                let got: Vec<Graph> = labeled_regular_graphs(n, r, &unbounded()).unwrap().collect();
                let got_set: HashSet<Graph> = got.iter().cloned().collect();
                assert_eq!(got.len(), got_set.len(), "duplicates for n={n} r={r}");
                assert_eq!(got_set, want, "n={n} r={r}");
            }
        }
        assert_eq!(labeled_regular_graphs(6, 2, &Limits::default()).unwrap().count(), 70);
    }

    #[test]
    fn generator_caps() {
        assert!(labeled_graphs(7, &Limits::default()).unwrap_err().is_cap_exceeded());
        assert!(labeled_trees(10, &Limits::default()).unwrap_err().is_cap_exceeded());
        assert!(labeled_regular_graphs(13, 2, &Limits::default())
            .unwrap_err()
            .is_cap_exceeded());
        assert_eq!(labeled_regular_graphs(5, 3, &Limits::default()).unwrap().count(), 0);
    }

    #[test]
    fn prufer_rejects_bad_sequences() {
        assert!(prufer_decode(&[5], 3).is_err());
        assert!(prufer_decode(&[0, 0], 3).is_err());
        let star = prufer_decode(&[0, 0], 4).unwrap();
        assert_eq!(star.degree(0), 3);
    }
}
