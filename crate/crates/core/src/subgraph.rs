//! Counting copies of a small pattern graph inside a host graph.
//!
//! A copy is a set of vertices together with a set of edges forming a graph
//! isomorphic to the pattern; copies need not be induced. The count is the
//! number of labeled embeddings divided by the pattern's automorphism count.

use crate::graph::{Bits, Graph};

/// Pattern vertex order for the embedding search: each vertex after the
/// first has as many earlier neighbors as possible.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((pattern.adjacency()[v] & placed).count_ones(), pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed |= 1u64 << v;
        order.push(v);
    }
    order
}

/// Number of injective maps `V(pattern) -> V(host)` sending edges to edges.
pub fn count_embeddings(pattern: &Graph, host: &Graph) -> u64 {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return 0;
    }
    if pattern.n() == 0 {
        return 1;
    }
    let order = search_order(pattern);
    // for each position, the earlier positions it must be adjacent to
    let back: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| (0..i).filter(|&j| pattern.has_edge(v, order[j])).collect())
        .collect();
    let min_deg: Vec<usize> = order.iter().map(|&v| pattern.degree(v)).collect();
    let mut image = vec![0usize; order.len()];
    extend(host, &back, &min_deg, &mut image, 0, 0)
}

fn extend(host: &Graph, back: &[Vec<usize>], min_deg: &[usize], image: &mut [usize], depth: usize, used: u64) -> u64 {
    if depth == back.len() {
        return 1;
    }
    let mut candidates = host.vertices().0 & !used;
    for &j in &back[depth] {
        candidates &= host.adjacency()[image[j]];
    }
    let mut total = 0;
    for w in Bits(candidates) {
        if host.degree(w) < min_deg[depth] {
            continue;
        }
        image[depth] = w;
        total += extend(host, back, min_deg, image, depth + 1, used | 1u64 << w);
    }
    total
}

pub fn automorphism_count(g: &Graph) -> u64 {
    count_embeddings(g, g)
}

/// Number of (not necessarily induced) subgraphs of `host` isomorphic to
/// `pattern`.
pub fn count_copies(pattern: &Graph, host: &Graph) -> u64 {
    let aut = automorphism_count(pattern);
    count_embeddings(pattern, host) / aut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphism_count(&named::complete(4)), 24);
        assert_eq!(automorphism_count(&named::cycle(5)), 10);
        assert_eq!(automorphism_count(&named::petersen()), 120);
        assert_eq!(automorphism_count(&named::star(3)), 6);
        assert_eq!(automorphism_count(&Graph::empty(0)), 1);
    }

    #[test]
    fn copy_counts() {
        let k2 = named::complete(2);
        assert_eq!(count_copies(&k2, &named::petersen()), 15);
        assert_eq!(count_copies(&named::cycle(3), &named::complete(5)), 10);
        assert_eq!(count_copies(&named::cycle(4), &named::complete(4)), 3);
        assert_eq!(count_copies(&named::path(3), &named::complete(4)), 12);
        assert_eq!(count_copies(&named::star(3), &named::petersen()), 10);
        assert_eq!(count_copies(&named::cycle(5), &named::petersen()), 12);
        assert_eq!(count_copies(&Graph::empty(1), &named::cycle(7)), 7);
        assert_eq!(count_copies(&named::complete(4), &named::cycle(7)), 0);
    }
}
