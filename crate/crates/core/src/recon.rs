//! Completing cards back to regular graphs, reconstructing cubic graphs
//! from their (n-2)-decks, and checking whole ranges for ambiguous decks.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{are_isomorphic, canonical_code, CanonicalCode};
use crate::deck::{
    classify_card, cubic_consistency, deck_equal, deletion_deck, girth_from_deck, CardClass, Deck, Fingerprint,
};
use crate::error::{GenError, ReconError};
use crate::gen;
use crate::graph::{Bits, Graph, VertexSet};
use crate::graph6::emit_graph6;

/// A card with two new vertices `x'` and `y'` (labels `n` and `n+1` of the
/// host, where `n` is the card size) attached so that the host is regular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub host: Graph,
    pub attach_x: VertexSet,
    pub attach_y: VertexSet,
    pub xy_edge: bool,
}

impl Completion {
    pub fn x_vertex(&self) -> usize {
        self.host.n() - 2
    }

    pub fn y_vertex(&self) -> usize {
        self.host.n() - 1
    }

    /// The two attachment sets as an unordered pair.
    pub fn pairing(&self) -> [VertexSet; 2] {
        let mut p = [self.attach_x, self.attach_y];
        p.sort();
        p
    }
}

/// Every way to add two vertices to `card` making it `r`-regular, up to
/// swapping the two new vertices. With `min_girth`, hosts with a shorter
/// cycle are dropped. Isomorphic hosts are kept apart.
pub fn complete_card(card: &Graph, r: usize, min_girth: Option<usize>) -> Result<Vec<Completion>, ReconError> {
    let m = card.n();
    let infeasible = |reason: String| ReconError::InfeasibleCard { r, reason };
    if m + 2 > crate::graph::MAX_VERTICES {
        return Err(infeasible(format!("card with {m} vertices is too large")));
    }
    let mut both = VertexSet::EMPTY;
    let mut single = VertexSet::EMPTY;
    for v in 0..m {
        match r.checked_sub(card.degree(v)) {
            Some(0) => {}
            Some(1) => single.insert(v),
            Some(2) => both.insert(v),
            _ => return Err(infeasible(format!("vertex {v} has degree {}", card.degree(v)))),
        }
    }
    let deficiency = 2 * both.len() + single.len();
    let xy_edge = if r >= 1 && deficiency == 2 * r - 2 {
        true
    } else if deficiency == 2 * r {
        false
    } else {
        return Err(infeasible(format!("total deficiency {deficiency} is neither {} nor {}", 2 * r.max(1) - 2, 2 * r)));
    };
    let per_new = r - usize::from(xy_edge);
    let Some(share) = per_new.checked_sub(both.len()) else {
        return Err(infeasible(format!("{} vertices need both new neighbors", both.len())));
    };
    if 2 * share != single.len() {
        return Err(infeasible("deficient vertices cannot be split evenly".into()));
    }

    let singles: Vec<usize> = single.iter().collect();
    let mut out = Vec::new();
    for_each_half(&singles, share, |to_x| {
        let attach_x = both.union(to_x);
        let attach_y = both.union(single.difference(to_x));
        let mut host = Graph::empty(m + 2);
        for (u, v) in card.edges() {
            host.add_edge(u, v);
        }
        for v in attach_x.iter() {
            host.add_edge(m, v);
        }
        for v in attach_y.iter() {
            host.add_edge(m + 1, v);
        }
        if xy_edge {
            host.add_edge(m, m + 1);
        }
        if min_girth.is_none_or(|gamma| host.girth().at_least(gamma)) {
            out.push(Completion { host, attach_x, attach_y, xy_edge });
        }
    });
    Ok(out)
}

/// Subsets of size `share` of `items`, skipping mirror images: when both
/// halves have the same size, the first item always goes to the first half.
fn for_each_half(items: &[usize], share: usize, mut f: impl FnMut(VertexSet)) {
    fn rec(items: &[usize], start: usize, left: usize, acc: VertexSet, f: &mut impl FnMut(VertexSet)) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < left {
                break;
            }
            let mut next = acc;
            next.insert(items[i]);
            rec(items, i + 1, left - 1, next, f);
        }
    }
    if share == 0 || items.is_empty() {
        f(VertexSet::EMPTY);
        return;
    }
    let mut first = VertexSet::EMPTY;
    first.insert(items[0]);
    rec(items, 1, share - 1, first, &mut f);
}

/// Rank of a card for completion: adjacent deletions constrain the most.
fn card_rank(card: &Graph, n: usize) -> usize {
    match classify_card(card, n) {
        Ok(CardClass::Adjacent) => 0,
        Ok(CardClass::DistanceTwo) => 1,
        Ok(CardClass::Far) => 2,
        Err(_) => 3,
    }
}

/// All 3-regular graphs (up to isomorphism) whose (n-2)-deck is `d`, in
/// ascending canonical-code order.
pub fn find_all_reconstructions(d: &Deck) -> Result<Vec<Graph>, ReconError> {
    if d.cards().is_empty() {
        return Err(ReconError::EmptyDeck);
    }
    if !cubic_consistency(d) {
        return Err(ReconError::NotCubic);
    }
    let girth = girth_from_deck(d)?;
    let card = d
        .cards()
        .iter()
        .map(|(code, _)| code.to_graph())
        .min_by_key(|card| card_rank(card, d.n()))
        .ok_or(ReconError::EmptyDeck)?;
    let mut hosts: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
    for c in complete_card(&card, 3, Some(girth))? {
        hosts.entry(canonical_code(&c.host)).or_insert(c.host);
    }
    let mut out = Vec::new();
    for (code, host) in hosts {
        if deck_equal(&deletion_deck(&host, 2)?, d) {
            out.push(code.to_graph());
        }
    }
    Ok(out)
}

/// Two graphs that landed in the same fingerprint group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PairReport {
    pub n: usize,
    pub first: String,
    pub second: String,
    pub fingerprint: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NReport {
    pub n: usize,
    pub classes: usize,
    pub connected: usize,
    pub disconnected: usize,
    pub distinct_fingerprints: usize,
    pub counterexamples: usize,
    pub duplicates: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// Outcome of checking that (n-2)-decks separate every class in a range.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub n_values: Vec<usize>,
    pub per_n: Vec<NReport>,
    /// Deck-equal, non-isomorphic pairs.
    pub counterexamples: Vec<PairReport>,
    /// Isomorphic graphs listed twice in the input.
    pub duplicates: Vec<PairReport>,
    /// Equal fingerprints whose decks nonetheless differ.
    pub fingerprint_collisions: Vec<PairReport>,
}

impl VerifyReport {
    /// No counterexample and no duplicate input.
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty() && self.duplicates.is_empty()
    }

    pub fn total_classes(&self) -> usize {
        self.per_n.iter().map(|r| r.classes).sum()
    }

    pub fn without_timings(mut self) -> VerifyReport {
        for r in &mut self.per_n {
            r.wall_time_ms = None;
        }
        self
    }
}

struct GroupOutcome {
    distinct: usize,
    counterexamples: Vec<PairReport>,
    duplicates: Vec<PairReport>,
    collisions: Vec<PairReport>,
}

/// Groups `graphs` (all on `n` vertices) by deck fingerprint and compares
/// every pair inside a group exactly.
fn check_decks(n: usize, graphs: &[Graph]) -> Result<GroupOutcome, ReconError> {
    let decks: Vec<(Fingerprint, Deck)> = graphs
        .par_iter()
        .map(|g| {
            let d = deletion_deck(g, 2)?;
            Ok((d.fingerprint(), d))
        })
        .collect::<Result<_, ReconError>>()?;
    let mut groups: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
    for (i, (fp, _)) in decks.iter().enumerate() {
        groups.entry(*fp).or_default().push(i);
    }
    let distinct = groups.len();
    let crowded: Vec<(Fingerprint, Vec<usize>)> = groups.into_iter().filter(|(_, v)| v.len() > 1).collect();
    let verdicts: Vec<(u8, PairReport)> = crowded
        .par_iter()
        .flat_map_iter(|(fp, members)| {
            let mut found = Vec::new();
            for (a, &i) in members.iter().enumerate() {
                for &j in &members[a + 1..] {
                    let pair = PairReport {
                        n,
                        first: emit_graph6(&graphs[i]),
                        second: emit_graph6(&graphs[j]),
                        fingerprint: fp.to_string(),
                    };
                    let kind = if !deck_equal(&decks[i].1, &decks[j].1) {
                        2
                    } else if are_isomorphic(&graphs[i], &graphs[j]) {
                        1
                    } else {
                        0
                    };
                    found.push((kind, pair));
                }
            }
            found
        })
        .collect();
    let mut outcome = GroupOutcome { distinct, counterexamples: vec![], duplicates: vec![], collisions: vec![] };
    for (kind, pair) in verdicts {
        match kind {
            0 => outcome.counterexamples.push(pair),
            1 => outcome.duplicates.push(pair),
            _ => outcome.collisions.push(pair),
        }
    }
    Ok(outcome)
}

fn assemble(sets: Vec<(usize, Vec<Graph>)>) -> Result<VerifyReport, ReconError> {
    let mut report = VerifyReport {
        n_values: Vec::new(),
        per_n: Vec::new(),
        counterexamples: Vec::new(),
        duplicates: Vec::new(),
        fingerprint_collisions: Vec::new(),
    };
    for (n, graphs) in sets {
        let start = Instant::now();
        let outcome = check_decks(n, &graphs)?;
        let connected = graphs.iter().filter(|g| g.is_connected()).count();
        report.n_values.push(n);
        report.per_n.push(NReport {
            n,
            classes: graphs.len(),
            connected,
            disconnected: graphs.len() - connected,
            distinct_fingerprints: outcome.distinct,
            counterexamples: outcome.counterexamples.len(),
            duplicates: outcome.duplicates.len(),
            wall_time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
        });
        report.counterexamples.extend(outcome.counterexamples);
        report.duplicates.extend(outcome.duplicates);
        report.fingerprint_collisions.extend(outcome.collisions);
    }
    report.counterexamples.sort();
    report.duplicates.sort();
    report.fingerprint_collisions.sort();
    Ok(report)
}

/// Checks every 3-regular graph with `4 <= n <= n_max` (connected only
/// unless `include_disconnected`) for a deck shared with another class.
pub fn verify_range(n_max: usize, include_disconnected: bool) -> Result<VerifyReport, ReconError> {
    if n_max < 4 || !n_max.is_multiple_of(2) || n_max > gen::MAX_CUBIC_N {
        return Err(GenError::Range(format!("n_max must be even with 4 <= n_max <= {}, got {n_max}", gen::MAX_CUBIC_N)).into());
    }
    let mut sets = Vec::new();
    for n in (4..=n_max).step_by(2) {
        let graphs = if include_disconnected { gen::cubic_all(n)? } else { gen::cubic_connected(n)? };
        sets.push((n, graphs));
    }
    assemble(sets)
}

/// Like [`verify_range`] over a caller-supplied list of 3-regular graphs,
/// kept as given (duplicates included).
pub fn verify_catalog(graphs: Vec<Graph>) -> Result<VerifyReport, ReconError> {
    let mut by_n: BTreeMap<usize, Vec<Graph>> = BTreeMap::new();
    for g in graphs {
        if g.n() < 4 || !g.is_regular(3) {
            return Err(ReconError::NotCubic);
        }
        by_n.entry(g.n()).or_default().push(g);
    }
    assemble(by_n.into_iter().collect())
}

/// Neighbors of `v` other than those in `skip`, ascending.
pub(crate) fn other_neighbors(g: &Graph, v: usize, skip: &[usize]) -> Vec<usize> {
    Bits(g.adjacency()[v]).filter(|w| !skip.contains(w)).collect()
}
