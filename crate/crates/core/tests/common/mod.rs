//! Brute-force oracles. Each one is written from the definition, with no
//! pruning. Beyond the `Graph` type, only `regular_classes` calls into the
//! library, using `canonical_code` to merge isomorphic results.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use recon_core::{canonical_code, CanonicalCode, Graph};

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Row-major upper triangle of `g` read in the vertex order `p`, as a bit
/// string packed into an integer with the first bit most significant.
fn upper_triangle(g: &Graph, p: &[usize]) -> u128 {
    let n = g.n();
    let mut word = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            word = word << 1 | u128::from(g.has_edge(p[i], p[j]));
        }
    }
    word
}

fn encode(n: usize, word: u128) -> Vec<u8> {
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![n as u8];
    let mut byte = 0u8;
    for k in 0..bits {
        let bit = (word >> (bits - 1 - k)) & 1 == 1;
        byte = byte << 1 | u8::from(bit);
        if k % 8 == 7 {
            out.push(byte);
            byte = 0;
        }
    }
    if bits % 8 != 0 {
        out.push(byte << (8 - bits % 8));
    }
    out
}

/// The least upper-triangle string over all `n!` orderings.
pub fn min_over_permutations(g: &Graph) -> Vec<u8> {
    assert!(g.n() <= 16);
    let mut best = u128::MAX;
    for_each_permutation(g.n(), |p| best = best.min(upper_triangle(g, p)));
    encode(g.n(), best)
}

/// Upper-triangle string for the identity ordering.
pub fn identity_string(g: &Graph) -> Vec<u8> {
    let id: Vec<usize> = (0..g.n()).collect();
    encode(g.n(), upper_triangle(g, &id))
}

/// The graph on `n` vertices whose column-major upper triangle is `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

/// Like `graph_from_mask`, for any number of vertices.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Number of injective maps `V(f) -> V(g)` sending edges to edges.
pub fn injective_homomorphisms(f: &Graph, g: &Graph) -> u64 {
    fn go(f: &Graph, g: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let i = image.len();
        if i == f.n() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.n() {
            if used[v] || !(0..i).all(|j| !f.has_edge(j, i) || g.has_edge(image[j], v)) {
                continue;
            }
            used[v] = true;
            image.push(v);
            total += go(f, g, image, used);
            image.pop();
            used[v] = false;
        }
        total
    }
    go(f, g, &mut Vec::new(), &mut vec![false; g.n()])
}

/// Subgraph copies of `f` in `g` (not necessarily induced).
pub fn copies(f: &Graph, g: &Graph) -> u64 {
    injective_homomorphisms(f, g) / injective_homomorphisms(f, f)
}

/// All-pairs distances by Floyd-Warshall; `None` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = Some(1);
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if let (Some(a), Some(b)) = (d[u][w], d[w][v]) {
                    if d[u][v].is_none_or(|c| a + b < c) {
                        d[u][v] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Cycles of length `len` counted as vertex sequences, divided by the `2 len`
/// rotations and reflections of each cycle.
pub fn cycles_by_sequences(g: &Graph, len: usize) -> u64 {
    fn go(g: &Graph, len: usize, seq: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let last = *seq.last().unwrap();
        if seq.len() == len {
            return u64::from(g.has_edge(last, seq[0]));
        }
        let mut total = 0;
        for v in 0..g.n() {
            if !used[v] && g.has_edge(last, v) {
                used[v] = true;
                seq.push(v);
                total += go(g, len, seq, used);
                seq.pop();
                used[v] = false;
            }
        }
        total
    }
    if len < 3 || len > g.n() {
        return 0;
    }
    let mut total = 0;
    for s in 0..g.n() {
        let mut used = vec![false; g.n()];
        used[s] = true;
        total += go(g, len, &mut vec![s], &mut used);
    }
    total / (2 * len as u64)
}

/// Every isomorphism class of `r`-regular graphs on `n` vertices, found by
/// labeled backtracking: the lowest vertex still short of degree `r` takes
/// its neighbors among higher vertices in ascending order. Vertices with no
/// edges yet are interchangeable, so only the first eligible one is tried.
pub fn regular_classes(n: usize, r: usize, connected_only: bool) -> BTreeSet<CanonicalCode> {
    fn go(g: &mut Graph, r: usize, connected_only: bool, out: &mut BTreeSet<CanonicalCode>) {
        let n = g.n();
        let Some(v) = (0..n).find(|&v| g.degree(v) < r) else {
            if !connected_only || g.is_connected() {
                out.insert(canonical_code(g));
            }
            return;
        };
        let above = (v + 1..n).filter(|&w| g.has_edge(v, w)).max().unwrap_or(v);
        let mut tried_untouched = false;
        for w in above + 1..n {
            if g.degree(w) >= r {
                continue;
            }
            if g.degree(w) == 0 {
                if tried_untouched {
                    continue;
                }
                tried_untouched = true;
            }
            g.add_edge(v, w);
            go(g, r, connected_only, out);
            g.remove_edge(v, w);
        }
    }
    let mut out = BTreeSet::new();
    if n * r % 2 == 0 && r < n {
        go(&mut Graph::empty(n), r, connected_only, &mut out);
    }
    out
}
