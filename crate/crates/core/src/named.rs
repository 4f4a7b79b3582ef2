//! Named small graphs.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `C_n` with vertices in cycle order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

/// `P_n`: `n` vertices in path order.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// `K_{1,leaves}` with the center at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

/// Heawood graph, LCF notation `[5,-5]^7`.
pub fn heawood() -> Graph {
    let mut g = cycle(14);
    for i in (0..14).step_by(2) {
        g.add_edge(i, (i + 5) % 14);
    }
    g
}

/// Triangular prism.
pub fn prism() -> Graph {
    let mut g = cycle(3).disjoint_union(&cycle(3)).unwrap();
    for i in 0..3 {
        g.add_edge(i, i + 3);
    }
    g
}

/// `C_4 + K_1`.
pub fn c4_plus_k1() -> Graph {
    cycle(4).disjoint_union(&Graph::empty(1)).unwrap()
}

/// `K_{1,3}` with one edge subdivided: center 0, leaves 1 and 2, path `0-3-4`.
pub fn subdivided_claw() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap()
}

/// `C_{m} + P_{p}` with the cycle on the low labels.
pub fn cycle_plus_path(m: usize, p: usize) -> Graph {
    cycle(m).disjoint_union(&path(p)).unwrap()
}
