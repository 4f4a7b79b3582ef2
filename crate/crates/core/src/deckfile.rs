//! JSON-lines deck files. Each line holds one deck, with every card written
//! as the graph6 string of its canonical form.

use serde::{Deserialize, Serialize};

use crate::canon::canonical_code;
use crate::deck::Deck;
use crate::error::DeckError;
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeckFileRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub n: usize,
    pub k: usize,
    pub cards: Vec<(String, u64)>,
}

impl DeckFileRecord {
    pub fn from_deck(deck: &Deck, source: Option<&Graph>) -> DeckFileRecord {
        DeckFileRecord {
            source: source.map(emit_graph6),
            n: deck.n(),
            k: deck.k(),
            cards: deck.cards().iter().map(|(code, m)| (emit_graph6(&code.to_graph()), *m)).collect(),
        }
    }

    /// Rebuilds the deck. Cards are re-canonicalized, so a record written by
    /// hand with any labeling of each card is accepted.
    pub fn to_deck(&self) -> Result<Deck, DeckError> {
        let cards = self
            .cards
            .iter()
            .map(|(s, m)| {
                let card = parse_graph6(s).map_err(|e| DeckError::Invalid(format!("card {s:?}: {e}")))?;
                Ok((canonical_code(&card), *m))
            })
            .collect::<Result<Vec<_>, DeckError>>()?;
        Deck::new(self.n, self.k, cards)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<DeckFileRecord, DeckError> {
        serde_json::from_str(line).map_err(|e| DeckError::Invalid(e.to_string()))
    }
}

/// Reads every non-empty line; errors carry the 1-based line number.
pub fn read_deck_file(text: &str) -> Result<Vec<Deck>, (usize, DeckError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| DeckFileRecord::from_json_line(l).and_then(|r| r.to_deck()).map_err(|e| (i + 1, e)))
        .collect()
}
