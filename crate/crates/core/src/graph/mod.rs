//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` mask per vertex, so neighborhoods of vertex sets
//! are computed with word-wide ORs.

mod families;
mod generate;
pub mod graph6;
mod hypergraph;

use std::fmt;

pub use families::{parse_family, Family};
pub use generate::{
    labeled_graph_count, labeled_graphs, labeled_regular_graphs, labeled_trees, prufer_decode, LabeledGraphs,
    LabeledRegularGraphs, LabeledTrees,
};
pub use hypergraph::{HyperColoring, Hypergraph};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Mask with bits `0..n` set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        VertexSet(vertices.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Highest member, if any.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// A simple undirected loopless graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency masks, validating every invariant.
    pub fn from_adjacency(adj: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(adj.len())?;
        let full = full_mask(g.n);
        for (v, &mask) in adj.iter().enumerate() {
            if mask & !full != 0 {
                return Err(Error::SetOutOfRange { n: g.n });
            }
            if mask >> v & 1 == 1 {
                return Err(Error::invalid(format!("loop at vertex {v}")));
            }
            g.adj[v] = mask;
        }
        for v in 0..g.n {
            for u in Bits(g.adj[v]) {
                if g.adj[u] >> v & 1 == 0 {
                    return Err(Error::invalid(format!("adjacency not symmetric at {u}{v}")));
                }
            }
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    #[inline]
    pub(crate) fn set_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub(crate) fn clear_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Open-neighborhood mask without bounds checks (hot loops).
    #[inline]
    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn closed_mask(&self, v: usize) -> u64 {
        self.adj[v] | 1u64 << v
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// `N(v)`.
    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v]))
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.closed_mask(v)))
    }

    pub fn neighborhood(&self, v: usize, closed: bool) -> Result<VertexSet> {
        if closed {
            self.closed_neighborhood(v)
        } else {
            self.open_neighborhood(v)
        }
    }

    /// `N(S)` or `N[S]`, the union of member neighborhoods.
    pub fn set_neighborhood(&self, s: VertexSet, closed: bool) -> Result<VertexSet> {
        if !s.is_subset(self.vertices()) {
            return Err(Error::SetOutOfRange { n: self.n });
        }
        let mut out = 0u64;
        for v in s {
            out |= self.adj[v];
        }
        if closed {
            out |= s.0;
        }
        Ok(VertexSet(out))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).map(|v| self.degree(v))
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.degree(0);
        self.degrees().all(|d| d == r).then_some(r)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((0..self.n).filter(|&v| self.adj[v] == 0))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Proper 2-coloring as a mask of the vertices on side 1, if one exists.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut side = 0u64;
        for comp in self.components() {
            let root = comp.iter().next().expect("components are nonempty");
            let mut color: [Option<bool>; MAX_VERTICES] = [None; MAX_VERTICES];
            color[root] = Some(false);
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                let cv = color[v].expect("pushed vertices are colored");
                for u in Bits(self.adj[v]) {
                    match color[u] {
                        None => {
                            color[u] = Some(!cv);
                            stack.push(u);
                        }
                        Some(cu) if cu == cv => return None,
                        _ => {}
                    }
                }
            }
            for v in comp {
                if color[v] == Some(true) {
                    side |= 1u64 << v;
                }
            }
        }
        Some(VertexSet(side))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced on `keep`, relabeled to `0..|keep|` in increasing order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph> {
        if !keep.is_subset(self.vertices()) {
            return Err(Error::SetOutOfRange { n: self.n });
        }
        let index: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(index.len())?;
        for (i, &u) in index.iter().enumerate() {
            for (j, &v) in index.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The graph with the vertex permutation `perm` applied (`v ↦ perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from vertex count"));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::invalid("not a permutation"));
            }
            seen |= 1u64 << p;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set_edge_unchecked(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// `self` on `0..n`, `other` shifted to `n..n+m`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let total = self.n + other.n;
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let mut g = Graph::empty(total)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    /// Vertex `(v, layer)` is numbered `v + layer * n`; `(u,0)(v,1)` is an
    /// edge exactly when `uv` is an edge of `self`.
    pub fn bipartite_double_cover(&self) -> Result<Graph> {
        let total = 2 * self.n;
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices(total));
        }
        let mut g = Graph::empty(total)?;
        for v in 0..self.n {
            g.adj[v] = self.adj[v] << self.n;
            g.adj[v + self.n] = self.adj[v];
        }
        Ok(g)
    }

    /// Hypergraph whose edge `i` is `N(i)` (or `N[i]` when `closed`).
    pub fn neighborhood_hypergraph(&self, closed: bool) -> Result<Hypergraph> {
        if !closed {
            if let Some(v) = self.isolated_vertices().iter().next() {
                return Err(Error::IsolatedVertex(v));
            }
        }
        let edges = (0..self.n)
            .map(|v| VertexSet(if closed { self.closed_mask(v) } else { self.adj[v] }))
            .collect();
        Hypergraph::new(self.n, edges)
    }

    pub fn to_graph6(&self) -> String {
        graph6::write_graph6(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn neighborhoods_of_c4() {
        let g = c4();
        assert_eq!(g.closed_neighborhood(0).unwrap(), VertexSet::from_vertices([3, 0, 1]));
        assert_eq!(g.open_neighborhood(0).unwrap(), VertexSet::from_vertices([1, 3]));
        assert_eq!(g.set_neighborhood(VertexSet::EMPTY, true).unwrap(), VertexSet::EMPTY);
        assert_eq!(
            g.set_neighborhood(VertexSet::from_vertices([0, 2]), true).unwrap(),
            g.vertices()
        );
        assert!(matches!(
            g.closed_neighborhood(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
        assert!(g.set_neighborhood(VertexSet::singleton(5), false).is_err());
    }

    #[test]
    fn rejects_loops_and_oversize() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(matches!(Graph::empty(65), Err(Error::TooManyVertices(65))));
        assert!(Graph::empty(0).is_err());
        assert!(Graph::from_adjacency(&[0b10, 0b00]).is_err());
    }

    #[test]
    fn double_cover_of_k2_is_c4() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let cover = k2.bipartite_double_cover().unwrap();
        assert_eq!(cover.n(), 4);
        assert_eq!(cover.regular_degree(), Some(1));
        // K_2's double cover has edges (0,0)(1,1) and (1,0)(0,1): a perfect
        // matching on four vertices, i.e. two copies of K_2.
        assert_eq!(cover.components().len(), 2);
    }

    #[test]
    fn components_and_bipartition() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(g.components().len(), 3);
        assert!(!g.is_bipartite());
        assert!(c4().is_bipartite());
        assert_eq!(g.isolated_vertices(), VertexSet::singleton(5));
    }

    #[test]
    fn induced_subgraph_drops_isolates() {
        let g = Graph::from_edges(4, [(0, 2)]).unwrap();
        let h = g
            .induced_subgraph(g.vertices().difference(g.isolated_vertices()))
            .unwrap();
        assert_eq!(h.n(), 2);
        assert!(h.has_edge(0, 1));
    }

    #[test]
    fn open_hypergraph_needs_min_degree_one() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            g.neighborhood_hypergraph(false),
            Err(Error::IsolatedVertex(2))
        ));
        assert_eq!(g.neighborhood_hypergraph(true).unwrap().edges().len(), 3);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for v in 1..n {
                    for u in 0..v {
                        if bits[k] {
                            g.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn closed_is_open_plus_self(g in arb_graph()) {
            for v in 0..g.n() {
                let open = g.open_neighborhood(v).unwrap();
                let closed = g.closed_neighborhood(v).unwrap();
                prop_assert_eq!(closed, open.union(VertexSet::singleton(v)));
                prop_assert_eq!(open.len(), g.degree(v));
                prop_assert!(!open.contains(v));
            }
        }

        #[test]
        fn double_cover_layers_are_independent(g in arb_graph()) {
            let cover = g.bipartite_double_cover().unwrap();
            let layer0 = VertexSet::full(g.n());
            for v in 0..cover.n() {
                let same_layer = if v < g.n() { layer0 } else { VertexSet::full(cover.n()).difference(layer0) };
                prop_assert!(VertexSet(cover.adj_mask(v)).intersection(same_layer).is_empty());
            }
            prop_assert!(cover.is_bipartite());
            if let Some(r) = g.regular_degree() {
                prop_assert_eq!(cover.regular_degree(), Some(r));
            }
        }

        #[test]
        fn graph6_round_trip(g in arb_graph()) {
            let text = g.to_graph6();
            prop_assert_eq!(graph6::parse_graph6(&text).unwrap(), g.clone());
            prop_assert_eq!(graph6::parse_graph6(&text).unwrap().to_graph6(), text);
        }
    }
}
