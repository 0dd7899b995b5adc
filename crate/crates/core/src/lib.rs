//! Author evaluation from citation corpora: H-index, Hirsch core, aH-index,
//! and the community-corrected score `x·h`.
//!
//! The aH-index of an author is the largest `a` such that `a` of the
//! researchers citing their work each cite at least `a` distinct publications
//! of theirs. Comparing it with the normal value `n = h / r`, where `r` is the
//! population mean of `h / a`, yields the xA-ratio `x` in `(0, 1]`; `x·h`
//! penalises an H-index reached through unusual citer behavior.
//!
//! Typical flow:
//!
//! ```
//! use ahindex::ingest::{parse_arnet, ArnetOptions};
//! use ahindex::population::{evaluate_population, PopulationConfig};
//!
//! let text = "#*A\n#@Ann\n#index1\n\n#*B\n#@Bo\n#index2\n#%1\n";
//! let (corpus, _report) = parse_arnet(text.as_bytes(), ArnetOptions::default()).unwrap();
//! let config = PopulationConfig { h_threshold: 1, ..PopulationConfig::default() };
//! let population = evaluate_population(&corpus, &config).unwrap();
//! assert_eq!(population.reports[0].h, 1);
//! ```

pub mod analytics;
pub mod cli;
pub mod error;
pub mod graph;
pub mod indices;
pub mod ingest;
pub mod model;
pub mod population;
pub mod synth;

pub use error::{AnalyticsError, IndexError, IngestError, ModelError};
pub use model::{
    AuthorKey, AuthorProfile, BombPolicy, Corpus, CorrectionContext, IndexReport, Paper, PaperId, ProfilePolicy,
    SelfCitationPolicy,
};
