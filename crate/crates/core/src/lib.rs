//! Reconstruction of small graphs from their k-decks, with an exhaustive
//! verifier for 3-regular graphs and their (n-2)-decks.
//!
//! The pieces, bottom up:
//!
//! * [`graph`]: bitset graphs with induced subgraphs, distances, girth and
//!   cycle counts.
//! * [`canon`]: exact canonical codes (least adjacency string).
//! * [`deck`]: k-decks, subdecks, subgraph counts and girth read off a deck,
//!   and card classification.
//! * [`gen`]: isomorph-free generation of all graphs and of cubic graphs.
//! * [`recon`]: card completion, reconstruction search and range
//!   verification.
//! * [`audit`]: exhaustive checks of card-level structural claims.
//! * [`graph6`] and [`deckfile`]: interchange formats.

pub mod audit;
pub mod canon;
pub mod deck;
pub mod deckfile;
pub mod error;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod named;
pub mod recon;
pub mod subgraph;

pub use canon::{are_isomorphic, canonical_code, CanonicalCode};
pub use deck::{CardClass, Deck};
pub use error::{DeckError, FormatError, GenError, GraphError, ReconError};
pub use graph::{Girth, Graph, VertexSet};
