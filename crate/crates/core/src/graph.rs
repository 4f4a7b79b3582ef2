//! Small undirected simple graphs stored as one neighbor bitset per vertex.

use std::collections::VecDeque;
use std::fmt;

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of some host graph, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
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
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the set bits of a word.
#[derive(Clone)]
pub struct Bits(pub u64);

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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Length of a shortest cycle. `Acyclic` orders after every finite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    /// True when every cycle has length at least `bound`.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Undirected simple graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 64`; use [`Graph::try_empty`] for untrusted sizes.
    pub fn empty(n: usize) -> Graph {
        Graph::try_empty(n).expect("vertex count above 64")
    }

    pub fn try_empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::try_empty(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor words, checking symmetry and range.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let range = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !range != 0 {
                return Err(GraphError::OutOfRange { vertex: 64 - row.leading_zeros() as usize - 1, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in Bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::OutOfRange { vertex: u.max(v), n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Adds `uv`. Panics in debug builds on loops or out-of-range vertices.
    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw neighbor words, one per vertex.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & above(u)).map(move |v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, r: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == r)
    }

    /// Sorted list of vertex degrees.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Subgraph induced by `keep`, relabeled `0..|keep|` in ascending order
    /// of the kept vertices.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Graph {
        debug_assert!(keep.is_subset(self.vertices()));
        let verts: Vec<usize> = keep.iter().collect();
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            let row = self.adj[v] & keep.0;
            adj[i] = compress(row, keep.0);
        }
        Graph { n: verts.len(), adj }
    }

    /// The card left after deleting `removed`.
    pub fn delete_vertices(&self, removed: VertexSet) -> Graph {
        self.induced_subgraph(self.vertices().difference(removed))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut out = Graph::empty(self.n);
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        out
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = Graph::try_empty(self.n + other.n)?;
        g.adj[..self.n].copy_from_slice(&self.adj);
        for (i, &row) in other.adj.iter().enumerate() {
            g.adj[self.n + i] = row << self.n;
        }
        Ok(g)
    }

    /// BFS shortest-path length, `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = 1u64 << u;
        let mut frontier = 1u64 << u;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for w in Bits(frontier) {
                next |= self.adj[w];
            }
            next &= !seen;
            if next >> v & 1 == 1 {
                return Some(d);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// BFS distances from `root`; `None` for unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in Bits(self.adj[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn girth(&self) -> Girth {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                // no shorter cycle can be closed from this depth on
                if 2 * dist[u] >= best {
                    break;
                }
                for w in Bits(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            if best == 3 {
                break;
            }
        }
        if best == usize::MAX {
            Girth::Acyclic
        } else {
            Girth::Finite(best)
        }
    }

    /// Number of cycle subgraphs of length exactly `len`.
    ///
    /// Each cycle is found once: rooted at its least vertex and traversed in
    /// the direction whose second vertex is smaller than its last.
    pub fn count_cycles(&self, len: usize) -> u64 {
        if len < 3 || len > self.n {
            return 0;
        }
        let mut total = 0;
        for start in 0..self.n {
            let allowed = self.adj_mask_above(start);
            for second in Bits(self.adj[start] & allowed) {
                total += self.extend_cycle(start, second, second, 1u64 << start | 1u64 << second, 2, len, allowed);
            }
        }
        total
    }

    fn adj_mask_above(&self, start: usize) -> u64 {
        VertexSet::full(self.n).0 & above(start)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycle(
        &self,
        start: usize,
        second: usize,
        tail: usize,
        used: u64,
        depth: usize,
        len: usize,
        allowed: u64,
    ) -> u64 {
        if depth == len {
            return u64::from(self.has_edge(tail, start) && second < tail);
        }
        let mut count = 0;
        for w in Bits(self.adj[tail] & allowed & !used) {
            count += self.extend_cycle(start, second, w, used | 1u64 << w, depth + 1, len, allowed);
        }
        count
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices().0;
        let mut out = Vec::new();
        while remaining != 0 {
            let root = remaining.trailing_zeros() as usize;
            let comp = self.component_of(root);
            remaining &= !comp.0;
            out.push(comp);
        }
        out
    }

    pub fn component_of(&self, root: usize) -> VertexSet {
        let mut seen = 1u64 << root;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for w in Bits(frontier) {
                next |= self.adj[w];
            }
            frontier = next & !seen;
            seen |= next;
        }
        VertexSet(seen)
    }

    /// The null graph and `K1` count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0).len() == self.n
    }
}

/// Vertices strictly greater than `v`.
#[inline]
pub(crate) fn above(v: usize) -> u64 {
    u64::MAX.checked_shl(v as u32 + 1).unwrap_or(0)
}

/// Packs the bits of `row` that lie in `mask` into the low bits, in order.
#[inline]
fn compress(row: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (bit, v) in Bits(mask).enumerate() {
        if row >> v & 1 == 1 {
            out |= 1u64 << bit;
        }
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}
