//! Corpus input and output: graph6, edge lists, generated families.

pub mod corpus;
pub mod families;
pub mod graph6;

pub use corpus::{load_corpus, read_corpus, CorpusReader, CorpusRecord, Format};
pub use families::{generate, hat_arm, hat_construction, Family};
pub use graph6::{graph6_string, parse_graph6, write_graph6};
