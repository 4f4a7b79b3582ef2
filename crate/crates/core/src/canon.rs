//! Exact canonical form: the lexicographically least row-major
//! upper-triangular adjacency string over all vertex orderings.
//!
//! The search places vertices position by position. Unplaced vertices are
//! kept in an ordered partition whose cells are the position segments still
//! interchangeable under the rows written so far. Placing `v` at the next
//! position writes row `v`, which is least when `v`'s neighbors sit at the
//! end of every cell; so the row is a function of the per-cell neighbor
//! counts and each cell splits into non-neighbors followed by neighbors.
//! Only placements achieving the least row survive, and search states whose
//! remaining partitions coincide are merged since their futures agree.

use std::collections::HashSet;
use std::fmt;

use crate::error::FormatError;
use crate::graph::{Bits, Graph, VertexSet};

/// Canonical byte string of a graph: one byte for `n`, then the row-major
/// upper triangle of the canonically ordered adjacency matrix, packed
/// most-significant bit first and zero padded.
///
/// Byte order on codes is a total order; equal codes mean isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0[0] as usize
    }

    /// Wraps raw bytes after checking length and padding. Does not check
    /// that the string is minimal.
    pub fn from_bytes(bytes: Vec<u8>) -> Result<CanonicalCode, FormatError> {
        let Some(&n) = bytes.first() else {
            return Err(FormatError::new(0, "empty canonical code"));
        };
        let n = n as usize;
        if n > 64 {
            return Err(FormatError::new(0, format!("vertex count {n} above 64")));
        }
        let bits = n * n.saturating_sub(1) / 2;
        let expected = 1 + bits.div_ceil(8);
        if bytes.len() != expected {
            return Err(FormatError::new(
                bytes.len().min(expected),
                format!("code for n={n} needs {expected} bytes, got {}", bytes.len()),
            ));
        }
        if !bits.is_multiple_of(8) {
            let last = bytes[expected - 1];
            if last & (0xffu8 >> (bits % 8)) != 0 {
                return Err(FormatError::new(expected - 1, "nonzero padding bits"));
            }
        }
        Ok(CanonicalCode(bytes))
    }

    /// The graph whose identity ordering spells this code.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        let mut idx = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.0[1 + idx / 8] >> (7 - idx % 8) & 1 == 1 {
                    g.add_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

struct CodeWriter {
    bytes: Vec<u8>,
    bit: usize,
}

impl CodeWriter {
    fn new(n: usize) -> CodeWriter {
        let bits = n * n.saturating_sub(1) / 2;
        let mut bytes = vec![0u8; 1 + bits.div_ceil(8)];
        bytes[0] = n as u8;
        CodeWriter { bytes, bit: 0 }
    }

    /// Appends the low `width` bits of `row`, most significant first.
    fn push_row(&mut self, row: u64, width: usize) {
        for k in (0..width).rev() {
            if row >> k & 1 == 1 {
                self.bytes[1 + self.bit / 8] |= 0x80 >> (self.bit % 8);
            }
            self.bit += 1;
        }
    }

    fn finish(self) -> CanonicalCode {
        CanonicalCode(self.bytes)
    }
}

/// Adjacency string of `g` read in the order `order[0], order[1], ..`.
pub fn code_for_order(g: &Graph, order: &[usize]) -> CanonicalCode {
    let n = g.n();
    assert_eq!(order.len(), n);
    let mut w = CodeWriter::new(n);
    for i in 0..n {
        let mut row = 0u64;
        for &v in &order[i + 1..] {
            row = row << 1 | u64::from(g.has_edge(order[i], v));
        }
        w.push_row(row, n - 1 - i);
    }
    w.finish()
}

/// Adjacency string of `g` under its own labeling.
pub fn identity_code(g: &Graph) -> CanonicalCode {
    let n = g.n();
    let mut w = CodeWriter::new(n);
    for i in 0..n {
        w.push_row(identity_row(g.adjacency(), n, i), n - 1 - i);
    }
    w.finish()
}

/// Row `pos` of the identity ordering as an integer, column `pos+1` highest.
#[inline]
fn identity_row(adj: &[u64], n: usize, pos: usize) -> u64 {
    let width = n - 1 - pos;
    if width == 0 {
        return 0;
    }
    (adj[pos] >> (pos + 1)).reverse_bits() >> (64 - width)
}

/// Row value written when a vertex with neighbor word `nbrs` is placed in
/// front of `cells` (the first entry already excludes the vertex itself).
#[inline]
fn least_row(nbrs: u64, first: u64, rest: &[u64]) -> u64 {
    let mut row = 0u64;
    for &cell in std::iter::once(&first).chain(rest) {
        let size = cell.count_ones();
        let ones = (nbrs & cell).count_ones();
        // size <= 63 and the total row width is at most 63
        row = (row << size) | ((1u64 << ones) - 1);
    }
    row
}

#[inline]
fn split_cells(nbrs: u64, first: u64, rest: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(rest.len() + 2);
    for &cell in std::iter::once(&first).chain(rest) {
        let far = cell & !nbrs;
        let near = cell & nbrs;
        if far != 0 {
            out.push(far);
        }
        if near != 0 {
            out.push(near);
        }
    }
    out
}

#[inline]
fn are_twins(adj: &[u64], u: usize, v: usize) -> bool {
    let pair = 1u64 << u | 1u64 << v;
    adj[u] & !pair == adj[v] & !pair
}

struct Node {
    cells: Vec<u64>,
    order: Vec<u8>,
}

/// Canonical code together with a canonical ordering: `order[i]` is the
/// vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalCode, Vec<usize>) {
    let n = g.n();
    let adj = g.adjacency();
    let mut writer = CodeWriter::new(n);
    let mut nodes = vec![Node { cells: vec![g.vertices().0], order: Vec::with_capacity(n) }];
    nodes.retain(|node| node.cells[0] != 0);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();

    for pos in 0..n {
        let mut best: Option<u64> = None;
        let mut next: Vec<Node> = Vec::new();
        seen.clear();
        for node in &nodes {
            let first = node.cells[0];
            let rest = &node.cells[1..];
            let mut tried = 0u64;
            for v in Bits(first) {
                // swapping twins fixes the node, so their branches agree
                if Bits(tried).any(|u| are_twins(adj, u, v)) {
                    continue;
                }
                tried |= 1u64 << v;
                let first_rest = first & !(1u64 << v);
                let row = least_row(adj[v], first_rest, rest);
                match best {
                    Some(b) if row > b => continue,
                    Some(b) if row < b => {
                        next.clear();
                        seen.clear();
                        best = Some(row);
                    }
                    None => best = Some(row),
                    _ => {}
                }
                let cells = split_cells(adj[v], first_rest, rest);
                if !seen.insert(cells.clone()) {
                    continue;
                }
                let mut order = node.order.clone();
                order.push(v as u8);
                next.push(Node { cells, order });
            }
        }
        writer.push_row(best.expect("a vertex is always placeable"), n - 1 - pos);
        nodes = next;
    }
    let order = nodes
        .first()
        .map(|nd| nd.order.iter().map(|&v| v as usize).collect())
        .unwrap_or_default();
    (writer.finish(), order)
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    canonical_labeling(g).0
}

/// The canonical representative: relabeled so its identity code is canonical.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_code(g).to_graph()
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    g1.n() == g2.n()
        && g1.edge_count() == g2.edge_count()
        && g1.degree_multiset() == g2.degree_multiset()
        && canonical_code(g1) == canonical_code(g2)
}

/// True when no ordering that begins with vertices of `0..fixed` writes rows
/// `0..fixed` smaller than the identity ordering does.
///
/// Only edges incident to `0..fixed` are read, so the answer is final for
/// every way of adding edges among the remaining vertices. With
/// `fixed == n` this holds exactly when the identity code is canonical.
pub fn prefix_is_minimal(g: &Graph, fixed: usize) -> bool {
    let n = g.n();
    let adj = g.adjacency();
    let fixed_mask = VertexSet::full(fixed).0;
    let mut nodes: Vec<Vec<u64>> = vec![vec![g.vertices().0]];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    for pos in 0..fixed {
        let target = identity_row(adj, n, pos);
        let mut next = Vec::new();
        seen.clear();
        for cells in &nodes {
            let first = cells[0];
            let rest = &cells[1..];
            for v in Bits(first & fixed_mask) {
                let first_rest = first & !(1u64 << v);
                let row = least_row(adj[v], first_rest, rest);
                if row < target {
                    return false;
                }
                if row == target {
                    let child = split_cells(adj[v], first_rest, rest);
                    if seen.insert(child.clone()) {
                        next.push(child);
                    }
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        nodes = next;
    }
    true
}
