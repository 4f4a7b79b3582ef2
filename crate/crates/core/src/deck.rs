//! k-decks and the invariants that can be read off a deck alone.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::DeckError;
use crate::graph::{Graph, VertexSet};
use crate::named;
use crate::subgraph;

/// Largest pattern accepted by [`count_subgraphs_from_deck`].
pub const MAX_PATTERN_VERTICES: usize = 6;

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// The multiset of `k`-vertex induced subgraphs of an `n`-vertex graph,
/// stored as canonical codes sorted by byte order with multiplicities.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Deck {
    n: usize,
    k: usize,
    cards: Vec<(CanonicalCode, u64)>,
}

/// 128-bit digest of a deck, used for grouping before exact comparison.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint(pub [u8; 16]);

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fingerprint({self})")
    }
}

/// Where two decks first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeckDifference {
    Shape { left: (usize, usize), right: (usize, usize) },
    Card { code: CanonicalCode, left: u64, right: u64 },
}

impl Deck {
    /// Builds a deck from card codes, merging repeated codes. Checks card
    /// sizes and that multiplicities sum to `C(n, k)`.
    pub fn new(n: usize, k: usize, cards: Vec<(CanonicalCode, u64)>) -> Result<Deck, DeckError> {
        if k > n {
            return Err(DeckError::CardTooLarge { n, k });
        }
        let mut merged: HashMap<CanonicalCode, u64> = HashMap::new();
        for (code, m) in cards {
            if code.n() != k {
                return Err(DeckError::CardSize { expected: k, got: code.n() });
            }
            if m == 0 {
                return Err(DeckError::Invalid("card multiplicity 0".into()));
            }
            *merged.entry(code).or_default() += m;
        }
        let deck = Deck::from_counts(n, k, merged);
        let expected = binomial(n, k);
        if deck.total() != expected {
            return Err(DeckError::Multiplicity { n, k, got: deck.total(), expected });
        }
        Ok(deck)
    }

    fn from_counts(n: usize, k: usize, counts: HashMap<CanonicalCode, u64>) -> Deck {
        let mut cards: Vec<_> = counts.into_iter().collect();
        cards.sort_unstable();
        Deck { n, k, cards }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of deleted vertices, `n - k`.
    pub fn deleted(&self) -> usize {
        self.n - self.k
    }

    pub fn cards(&self) -> &[(CanonicalCode, u64)] {
        &self.cards
    }

    pub fn total(&self) -> u64 {
        self.cards.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, code: &CanonicalCode) -> u64 {
        self.cards
            .binary_search_by(|(c, _)| c.cmp(code))
            .map(|i| self.cards[i].1)
            .unwrap_or(0)
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut h = Sha256::new();
        h.update((self.n as u64).to_le_bytes());
        h.update((self.k as u64).to_le_bytes());
        for (code, m) in &self.cards {
            h.update(code.as_bytes());
            h.update(m.to_le_bytes());
        }
        let digest = h.finalize();
        let mut out = [0u8; 16];
        out.copy_from_slice(&digest[..16]);
        Fingerprint(out)
    }

    /// First point of disagreement in card order, `None` when equal.
    pub fn first_difference(&self, other: &Deck) -> Option<DeckDifference> {
        if (self.n, self.k) != (other.n, other.k) {
            return Some(DeckDifference::Shape { left: (self.n, self.k), right: (other.n, other.k) });
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.cards.get(i), other.cards.get(j)) {
                (None, None) => return None,
                (Some((c, m)), None) => return Some(DeckDifference::Card { code: c.clone(), left: *m, right: 0 }),
                (None, Some((c, m))) => return Some(DeckDifference::Card { code: c.clone(), left: 0, right: *m }),
                (Some((a, ma)), Some((b, mb))) => match a.cmp(b) {
                    std::cmp::Ordering::Less => {
                        return Some(DeckDifference::Card { code: a.clone(), left: *ma, right: 0 })
                    }
                    std::cmp::Ordering::Greater => {
                        return Some(DeckDifference::Card { code: b.clone(), left: 0, right: *mb })
                    }
                    std::cmp::Ordering::Equal if ma != mb => {
                        return Some(DeckDifference::Card { code: a.clone(), left: *ma, right: *mb })
                    }
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl fmt::Debug for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Deck(n={}, k={}, {} distinct cards)", self.n, self.k, self.cards.len())
    }
}

/// Calls `f` with every `k`-subset of `0..n`, in increasing bit order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(VertexSet)) {
    if k > n {
        return;
    }
    if k == 0 {
        f(VertexSet::EMPTY);
        return;
    }
    let limit: u128 = 1u128 << n;
    let mut s: u128 = (1u128 << k) - 1;
    while s < limit {
        f(VertexSet(s as u64));
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

pub fn k_deck(g: &Graph, k: usize) -> Result<Deck, DeckError> {
    let n = g.n();
    if k > n {
        return Err(DeckError::CardTooLarge { n, k });
    }
    let mut counts: HashMap<CanonicalCode, u64> = HashMap::new();
    for_each_subset(n, k, |keep| {
        *counts.entry(canonical_code(&g.induced_subgraph(keep))).or_default() += 1;
    });
    Ok(Deck::from_counts(n, k, counts))
}

/// The deck obtained by deleting `deleted` vertices.
pub fn deletion_deck(g: &Graph, deleted: usize) -> Result<Deck, DeckError> {
    let k = g.n().checked_sub(deleted).ok_or(DeckError::CardTooLarge { n: g.n(), k: 0 })?;
    k_deck(g, k)
}

pub fn deck_equal(d1: &Deck, d2: &Deck) -> bool {
    d1 == d2
}

/// The `(k-1)`-deck, computed from the cards alone: every `(k-1)`-card
/// lies in exactly `n-k+1` of the `k`-cards.
pub fn subdeck(d: &Deck) -> Result<Deck, DeckError> {
    if d.k == 0 {
        return Err(DeckError::Invalid("the 0-deck has no subdeck".into()));
    }
    let mut counts: HashMap<CanonicalCode, u64> = HashMap::new();
    for (code, m) in &d.cards {
        let inner = k_deck(&code.to_graph(), d.k - 1)?;
        for (c, im) in inner.cards {
            *counts.entry(c).or_default() += m * im;
        }
    }
    let divisor = (d.n - d.k + 1) as u64;
    for total in counts.values_mut() {
        if *total % divisor != 0 {
            return Err(DeckError::Divisibility { total: *total, divisor });
        }
        *total /= divisor;
    }
    Ok(Deck::from_counts(d.n, d.k - 1, counts))
}

/// Divides a card sum by the number of cards containing each copy.
fn kelly_quotient(d: &Deck, total: u64, pattern_vertices: usize) -> Result<u64, DeckError> {
    let divisor = binomial(d.n - pattern_vertices, d.deleted());
    if !total.is_multiple_of(divisor) {
        return Err(DeckError::Divisibility { total, divisor });
    }
    Ok(total / divisor)
}

/// Number of subgraphs of the underlying graph isomorphic to `f`: each copy
/// survives in exactly `C(n - |V(f)|, n - k)` cards.
pub fn count_subgraphs_from_deck(d: &Deck, f: &Graph) -> Result<u64, DeckError> {
    if f.n() > MAX_PATTERN_VERTICES {
        return Err(DeckError::PatternUnsupported(f.n()));
    }
    if f.n() > d.k {
        return Err(DeckError::PatternTooLarge { pattern: f.n(), k: d.k });
    }
    let aut = subgraph::automorphism_count(f);
    let total: u64 = d
        .cards
        .iter()
        .map(|(code, m)| m * subgraph::count_embeddings(f, &code.to_graph()) / aut)
        .sum();
    kelly_quotient(d, total, f.n())
}

/// Number of `len`-cycles of the underlying graph, for `3 <= len <= k`.
pub fn count_cycles_from_deck(d: &Deck, len: usize) -> Result<u64, DeckError> {
    if len > d.k {
        return Err(DeckError::PatternTooLarge { pattern: len, k: d.k });
    }
    let total: u64 = d.cards.iter().map(|(code, m)| m * code.to_graph().count_cycles(len)).sum();
    kelly_quotient(d, total, len)
}

pub fn edge_count_from_deck(d: &Deck) -> Result<u64, DeckError> {
    count_subgraphs_from_deck(d, &named::complete(2))
}

/// Girth of every graph with this deck, provided that graph has at least
/// `n+1` edges, which forces a cycle of length at most `ceil(2n/3)`.
pub fn girth_from_deck(d: &Deck) -> Result<usize, DeckError> {
    let n = d.n;
    if d.k < 2 {
        return Err(DeckError::Precondition("cards must have at least 2 vertices".into()));
    }
    let edges = edge_count_from_deck(d)?;
    if edges < n as u64 + 1 {
        return Err(DeckError::Precondition(format!(
            "deck shows {edges} edges; at least n+1 = {} are needed to bound the girth",
            n + 1
        )));
    }
    let bound = (2 * n).div_ceil(3);
    for len in 3..=bound.min(d.k) {
        if count_cycles_from_deck(d, len)? > 0 {
            return Ok(len);
        }
    }
    if bound == d.k + 1 {
        // no cycle fits in a card, but the bound leaves a single length
        return Ok(bound);
    }
    Err(DeckError::Precondition(format!(
        "no cycle of length at most {} is visible in {}-cards",
        bound.min(d.k),
        d.k
    )))
}

/// True when the deck is consistent with being the `(n-2)`-deck of a
/// 3-regular graph: `n` even, `3n/2` edges, and every card's degree
/// deficiency can be filled by two deleted vertices of degree 3.
pub fn cubic_consistency(d: &Deck) -> bool {
    let n = d.n;
    if n < 4 || !n.is_multiple_of(2) || d.k + 2 != n {
        return false;
    }
    match edge_count_from_deck(d) {
        Ok(e) if e == 3 * n as u64 / 2 => {}
        _ => return false,
    }
    d.cards.iter().all(|(code, _)| {
        let card = code.to_graph();
        if card.max_degree() > 3 {
            return false;
        }
        let deficiency: usize = (0..card.n()).map(|v| 3 - card.degree(v)).sum();
        // each deficient vertex can reach at most both deleted vertices;
        // the deleted pair sends 4 edges into the card if adjacent, else 6
        (0..card.n()).all(|v| card.degree(v) >= 1) && (deficiency == 4 || deficiency == 6)
    })
}

/// Distance class of the deleted pair of an `(n-2)`-card of a 3-regular
/// graph with girth at least 5.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CardClass {
    Adjacent,
    DistanceTwo,
    Far,
}

impl CardClass {
    /// The class a true distance falls in.
    pub fn from_distance(d: Option<usize>) -> CardClass {
        match d {
            Some(1) => CardClass::Adjacent,
            Some(2) => CardClass::DistanceTwo,
            _ => CardClass::Far,
        }
    }
}

impl fmt::Display for CardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CardClass::Adjacent => "adjacent",
            CardClass::DistanceTwo => "distance-two",
            CardClass::Far => "far",
        })
    }
}

/// Reads the deleted pair's distance class off the card's degrees: four
/// 2-vertices when adjacent, one 1-vertex and four 2-vertices at distance
/// two, six 2-vertices otherwise.
pub fn classify_card(card: &Graph, n: usize) -> Result<CardClass, DeckError> {
    if card.n() + 2 != n {
        return Err(DeckError::CardSize { expected: n.saturating_sub(2), got: card.n() });
    }
    let degrees = card.degree_multiset();
    let mut by_degree = [0usize; 4];
    for &d in &degrees {
        if d == 0 || d > 3 {
            return Err(DeckError::Class(degrees));
        }
        by_degree[d] += 1;
    }
    match (by_degree[1], by_degree[2]) {
        (0, 4) => Ok(CardClass::Adjacent),
        (1, 4) => Ok(CardClass::DistanceTwo),
        (0, 6) => Ok(CardClass::Far),
        _ => Err(DeckError::Class(degrees)),
    }
}
