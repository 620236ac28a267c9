//! Corpus generation, the theorem suite, separations and reports.

pub mod corpus;
pub mod report;
pub mod separate;
pub mod theorems;

pub use corpus::{generate_corpus, Corpus, CorpusEntry, CorpusSpec, Skip};
pub use report::{Observation, Report, TheoremResult, Timing, Violation};
pub use separate::{find_separation, Separation};
pub use theorems::{run_theorem_suite, TheoremId};
