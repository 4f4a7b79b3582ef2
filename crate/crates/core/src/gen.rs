//! Isomorph-free generation of small graphs and of cubic graphs.
//!
//! Connected cubic graphs and all graphs come from an orderly search: the
//! adjacency matrix is filled row by row and a partial matrix survives only
//! while its finished rows are the least possible under every relabeling
//! that starts with finished vertices ([`prefix_is_minimal`]). A complete
//! matrix that survives is its own canonical form, so each class is emitted
//! exactly once. Disconnected cubic graphs are assembled from the connected
//! catalog by partitioning `n` into component sizes.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, identity_code, prefix_is_minimal, CanonicalCode};
use crate::error::GenError;
use crate::graph::{above, Bits, Graph};

pub const MAX_CUBIC_N: usize = 16;
pub const MAX_ALL_GRAPHS_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    AllGraphs,
    CubicConnected,
    CubicAll,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub family: Family,
    pub min_girth: Option<usize>,
}

impl GenSpec {
    pub fn new(n: usize, family: Family) -> GenSpec {
        GenSpec { n, family, min_girth: None }
    }

    pub fn with_min_girth(mut self, girth: usize) -> GenSpec {
        self.min_girth = Some(girth);
        self
    }

    pub fn validate(&self) -> Result<(), GenError> {
        match self.family {
            Family::AllGraphs if self.n > MAX_ALL_GRAPHS_N => Err(GenError::Range(format!(
                "all-graphs generation supports n <= {MAX_ALL_GRAPHS_N}, got {}",
                self.n
            ))),
            Family::CubicConnected | Family::CubicAll
                if self.n < 4 || !self.n.is_multiple_of(2) || self.n > MAX_CUBIC_N =>
            {
                Err(GenError::Range(format!(
                    "cubic generation needs even 4 <= n <= {MAX_CUBIC_N}, got {}",
                    self.n
                )))
            }
            _ => Ok(()),
        }
    }
}

/// One representative per isomorphism class, in ascending canonical-code
/// order. Each emitted graph is labeled canonically.
pub fn enumerate(spec: &GenSpec) -> Result<Vec<Graph>, GenError> {
    spec.validate()?;
    match spec.family {
        Family::AllGraphs => Ok(orderly(spec.n, None, spec.min_girth, false)),
        Family::CubicConnected => Ok(orderly(spec.n, Some(3), spec.min_girth, true)),
        Family::CubicAll => cubic_all_with_girth(spec.n, spec.min_girth),
    }
}

pub fn all_graphs(n: usize) -> Result<Vec<Graph>, GenError> {
    enumerate(&GenSpec::new(n, Family::AllGraphs))
}

pub fn cubic_connected(n: usize) -> Result<Vec<Graph>, GenError> {
    enumerate(&GenSpec::new(n, Family::CubicConnected))
}

/// Every 3-regular graph on `n` vertices, connected or not.
pub fn cubic_all(n: usize) -> Result<Vec<Graph>, GenError> {
    enumerate(&GenSpec::new(n, Family::CubicAll))
}

fn cubic_all_with_girth(n: usize, min_girth: Option<usize>) -> Result<Vec<Graph>, GenError> {
    GenSpec::new(n, Family::CubicAll).validate()?;
    let mut catalog: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for size in (4..=n).step_by(2) {
        let spec = GenSpec { n: size, family: Family::CubicConnected, min_girth };
        catalog.insert(size, enumerate(&spec)?);
    }
    let mut out: Vec<(CanonicalCode, Graph)> = Vec::new();
    for parts in even_partitions(n, 4) {
        // components of equal size are taken as non-decreasing index tuples
        let mut chosen: Vec<usize> = Vec::with_capacity(parts.len());
        compose(&parts, &catalog, &mut chosen, &mut out);
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.dedup_by(|a, b| a.0 == b.0);
    Ok(out.into_iter().map(|(code, _)| code.to_graph()).collect())
}

fn compose(
    parts: &[usize],
    catalog: &BTreeMap<usize, Vec<Graph>>,
    chosen: &mut Vec<usize>,
    out: &mut Vec<(CanonicalCode, Graph)>,
) {
    let depth = chosen.len();
    if depth == parts.len() {
        let mut g = Graph::empty(0);
        for (size, &idx) in parts.iter().zip(chosen.iter()) {
            g = g.disjoint_union(&catalog[size][idx]).expect("at most 16 vertices");
        }
        out.push((canonical_code(&g), g));
        return;
    }
    let start = if depth > 0 && parts[depth - 1] == parts[depth] { chosen[depth - 1] } else { 0 };
    for idx in start..catalog[&parts[depth]].len() {
        chosen.push(idx);
        compose(parts, catalog, chosen, out);
        chosen.pop();
    }
}

/// Partitions of `n` into even parts `>= min_part`, parts non-increasing.
pub fn even_partitions(n: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, min_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        let mut p = max.min(rest);
        if p % 2 == 1 {
            p -= 1;
        }
        while p >= min_part {
            cur.push(p);
            rec(rest - p, p, min_part, cur, out);
            cur.pop();
            p -= 2;
        }
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        rec(n, n, min_part, &mut Vec::new(), &mut out);
    }
    out
}

/// Row-by-row search state shared by the sequential and parallel phases.
#[derive(Clone)]
struct Orderly {
    n: usize,
    degree: Option<usize>,
    min_girth: Option<usize>,
    connected: bool,
}

impl Orderly {
    /// Vertices that row `i` may join to.
    fn targets(&self, g: &Graph, i: usize) -> u64 {
        let later = g.vertices().0 & above(i);
        match self.degree {
            Some(r) => later & !Bits(later).filter(|&j| g.degree(j) >= r).fold(0, |acc, j| acc | 1u64 << j),
            None => later,
        }
    }

    /// Pruning tests that hold for every extension of rows `0..=i`.
    fn viable(&self, g: &Graph, i: usize) -> bool {
        if let Some(gamma) = self.min_girth {
            if !g.girth().at_least(gamma) {
                return false;
            }
        }
        if let Some(r) = self.degree {
            let later = g.vertices().0 & above(i);
            let open: u64 = Bits(later).filter(|&j| g.degree(j) < r).fold(0, |acc, j| acc | 1u64 << j);
            for j in Bits(open) {
                let room = (open & !(1u64 << j) & !g.adjacency()[j]).count_ones() as usize;
                if r - g.degree(j) > room {
                    return false;
                }
            }
            if self.connected {
                // a saturated component short of n can never grow
                let mut rest = g.vertices().0;
                while rest != 0 {
                    let comp = g.component_of(rest.trailing_zeros() as usize);
                    rest &= !comp.0;
                    if comp.len() < self.n && comp.iter().all(|v| g.degree(v) == r) {
                        return false;
                    }
                }
            }
        }
        prefix_is_minimal(g, i + 1)
    }

    fn accept(&self, g: &Graph) -> bool {
        if let Some(r) = self.degree {
            if !g.is_regular(r) {
                return false;
            }
        }
        if self.connected && !g.is_connected() {
            return false;
        }
        self.min_girth.is_none_or(|gamma| g.girth().at_least(gamma))
    }

    /// All ways to fill row `i`, as neighbor sets among later vertices.
    fn row_choices(&self, g: &Graph, i: usize) -> Vec<u64> {
        let targets = self.targets(g, i);
        match self.degree {
            Some(r) => {
                let have = g.degree(i);
                if have > r {
                    return Vec::new();
                }
                let mut out = Vec::new();
                choose(targets, r - have, 0, &mut out);
                out
            }
            None => {
                // every subset of the later vertices
                let mut out = Vec::with_capacity(1 << targets.count_ones());
                let mut sub = 0u64;
                loop {
                    out.push(sub);
                    sub = sub.wrapping_sub(targets) & targets;
                    if sub == 0 {
                        break;
                    }
                }
                out
            }
        }
    }

    fn children(&self, g: &Graph, i: usize) -> Vec<Graph> {
        let mut out = Vec::new();
        for row in self.row_choices(g, i) {
            let mut child = g.clone();
            for j in Bits(row) {
                child.add_edge(i, j);
            }
            if self.viable(&child, i) {
                out.push(child);
            }
        }
        out
    }

    fn search(&self, g: &mut Graph, i: usize, out: &mut Vec<Graph>) {
        if i == self.n {
            if self.accept(g) {
                out.push(g.clone());
            }
            return;
        }
        for row in self.row_choices(g, i) {
            for j in Bits(row) {
                g.add_edge(i, j);
            }
            if self.viable(g, i) {
                self.search(g, i + 1, out);
            }
            for j in Bits(row) {
                g.remove_edge(i, j);
            }
        }
    }
}

/// Subsets of `pool` with exactly `k` elements, each joined onto `acc`.
fn choose(pool: u64, k: usize, acc: u64, out: &mut Vec<u64>) {
    if k == 0 {
        out.push(acc);
        return;
    }
    if (pool.count_ones() as usize) < k {
        return;
    }
    let v = pool.trailing_zeros();
    let rest = pool & !(1u64 << v);
    choose(rest, k - 1, acc | 1u64 << v, out);
    choose(rest, k, acc, out);
}

/// Rows filled sequentially before the search fans out across threads.
const SPLIT_DEPTH: usize = 3;

fn orderly(n: usize, degree: Option<usize>, min_girth: Option<usize>, connected: bool) -> Vec<Graph> {
    let search = Orderly { n, degree, min_girth, connected };
    let mut frontier = vec![Graph::empty(n)];
    let split = SPLIT_DEPTH.min(n);
    for i in 0..split {
        frontier = frontier.iter().flat_map(|g| search.children(g, i)).collect();
    }
    let mut found: Vec<Graph> = if split == n {
        frontier.into_iter().filter(|g| search.accept(g)).collect()
    } else {
        frontier
            .into_par_iter()
            .flat_map_iter(|mut g| {
                let mut out = Vec::new();
                search.search(&mut g, split, &mut out);
                out
            })
            .collect()
    };
    found.sort_by_cached_key(identity_code);
    found
}

/// Checks that `graphs` are canonically labeled and pairwise non-isomorphic.
pub fn check_isomorph_free(graphs: &[Graph]) -> Result<(), String> {
    let mut codes: Vec<CanonicalCode> = graphs.iter().map(canonical_code).collect();
    for (g, c) in graphs.iter().zip(&codes) {
        if identity_code(g) != *c {
            return Err(format!("{g:?} is not canonically labeled"));
        }
    }
    codes.sort();
    if let Some(w) = codes.windows(2).find(|w| w[0] == w[1]) {
        return Err(format!("duplicate class {:?}", w[0]));
    }
    Ok(())
}
