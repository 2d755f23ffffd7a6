//! Simple undirected graphs on at most 64 vertices with one adjacency word
//! per vertex.

use alloc::vec::Vec;
use core::fmt;

use crate::graph6;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    TooManyVertices(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop(usize),
    NotAnEdge(usize, usize),
    AlreadyAnEdge(usize, usize),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the limit of {MAX_VERTICES}")
            }
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "loop at vertex {v}"),
            GraphError::NotAnEdge(u, v) => write!(f, "{u}-{v} is not an edge"),
            GraphError::AlreadyAnEdge(u, v) => write!(f, "{u}-{v} is already an edge"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph. Values are immutable; every edit returns a new
/// graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, rows: alloc::vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency words. Rows are symmetrized and the
    /// diagonal cleared.
    pub(crate) fn from_rows(n: usize, mut rows: Vec<u64>) -> Graph {
        debug_assert!(n <= MAX_VERTICES && rows.len() == n);
        let mask = VertexSet::full(n).bits();
        for (v, row) in rows.iter_mut().enumerate() {
            *row &= mask & !(1u64 << v);
        }
        for u in 0..n {
            for v in VertexSet(rows[u]).iter() {
                rows[v] |= 1u64 << u;
            }
        }
        Graph { n, rows }
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1u64 << v;
        self.rows[v] |= 1u64 << u;
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1u64 << v);
        self.rows[v] &= !(1u64 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    /// Union of the neighbourhoods of `set`, excluding `set` itself.
    pub fn boundary(&self, set: VertexSet) -> VertexSet {
        let mut acc = 0u64;
        for v in set {
            acc |= self.rows[v];
        }
        VertexSet(acc & !set.bits())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The common degree when the graph is regular. The null graph counts as
    /// 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: VertexSet, within: VertexSet) -> VertexSet {
        let mut seen = start.intersection(within);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.boundary(frontier).intersection(within).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether `set` induces a connected subgraph. The empty set is not
    /// connected.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => false,
            Some(v) => self.reach(VertexSet::singleton(v), set) == set,
        }
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut left = self.vertices();
        while let Some(v) = left.first() {
            let comp = self.reach(VertexSet::singleton(v), left);
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Whether removing any fewer than `k` vertices leaves a connected graph
    /// on at least two vertices. Brute force; meant for small `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k || !self.is_connected() {
            return false;
        }
        fn rec(g: &Graph, alive: VertexSet, from: usize, left: usize) -> bool {
            if left == 0 {
                return true;
            }
            for v in from..g.n {
                let rest = alive.difference(VertexSet::singleton(v));
                if !g.is_connected_set(rest) || !rec(g, rest, v + 1, left - 1) {
                    return false;
                }
            }
            true
        }
        rec(self, self.vertices(), 0, k - 1)
    }

    /// Connectivity with the convention that the null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// A proper 2-colouring as (colour-0 class, colour-1 class).
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut side = [VertexSet::EMPTY; 2];
        for comp in self.components() {
            let root = comp.first().unwrap_or(0);
            let mut layer = VertexSet::singleton(root);
            let mut seen = layer;
            let mut parity = 0;
            while !layer.is_empty() {
                side[parity] = side[parity].union(layer);
                layer = self.boundary(layer).difference(seen);
                seen = seen.union(layer);
                parity ^= 1;
            }
        }
        let ok = self.edges().all(|(u, v)| side[0].contains(u) != side[0].contains(v));
        ok.then_some((side[0], side[1]))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = alloc::vec![usize::MAX; self.n];
            let mut parent = alloc::vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = alloc::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::AlreadyAnEdge(u, v));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices().difference(VertexSet::singleton(v))))
    }

    /// Merges the endpoints of the edge `u`-`v` into one vertex, dropping the
    /// loop and any parallel edges. The merged vertex takes the place of
    /// `min(u, v)`; vertices above `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        for w in self.neighbors(gone) {
            if w != keep {
                g.link(keep, w);
            }
        }
        Ok(g.induced(g.vertices().difference(VertexSet::singleton(gone))))
    }

    /// Subgraph induced by `set`, relabelled in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let set = set.intersection(self.vertices());
        let order = set.to_vec();
        self.relabel(&order)
    }

    /// The graph whose vertex `i` is `order[i]` of `self`.
    pub(crate) fn relabel(&self, order: &[usize]) -> Graph {
        let mut rows = alloc::vec![0u64; order.len()];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                if self.rows[a] >> b & 1 == 1 {
                    rows[i] |= 1u64 << j;
                }
            }
        }
        Graph { n: order.len(), rows }
    }

    pub fn complement(&self) -> Graph {
        let mask = VertexSet::full(self.n).bits();
        let rows = (0..self.n).map(|v| !self.rows[v] & mask & !(1u64 << v)).collect();
        Graph { n: self.n, rows }
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Disjoint union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(g.n).bits() & !left;
        for v in 0..g.n {
            g.rows[v] |= if v < self.n { right } else { left };
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> alloc::string::String {
        graph6::encode(self)
    }

    pub fn from_graph6(text: &str) -> Result<Graph, graph6::Graph6Error> {
        graph6::parse(text.as_bytes())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", graph6::encode(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn join_edge_counts() {
        let g = complete(2).join(&path(3)).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(complete(1).join(&empty(4)).unwrap(), star(5));
    }

    #[test]
    fn join_over_limit() {
        let a = empty(40);
        assert_eq!(a.join(&a), Err(GraphError::TooManyVertices(80)));
    }

    #[test]
    fn contraction_examples() {
        for (u, v) in cycle(4).edges() {
            assert!(cycle(4).contract_edge(u, v).unwrap().is_complete());
        }
        let k3 = complete(4).contract_edge(1, 3).unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(path(3).contract_edge(0, 1).unwrap(), path(2));
        assert_eq!(path(3).contract_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(complete(4).delete_vertex(2).unwrap(), complete(3));
        let p = cycle(4).delete_edge(0, 3).unwrap();
        assert_eq!(p, path(4));
        assert_eq!(star(6).delete_vertex(0).unwrap(), empty(5));
        assert!(star(6).delete_vertex(6).is_err());
        assert!(empty(3).delete_edge(0, 1).is_err());
    }

    #[test]
    fn structure_queries() {
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(path(5).girth(), None);
        assert!(complete_bipartite(3, 4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert_eq!(cycle(6).regular_degree(), Some(2));
        assert!(!empty(3).is_connected());
        assert_eq!(empty(3).components().len(), 3);
        assert!(path(4).is_forest() && !cycle(4).is_forest());
    }

    #[test]
    fn from_edges_rejects_loops() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }
}
