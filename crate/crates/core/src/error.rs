use thiserror::Error;

use crate::model::{AuthorKey, PaperId};

/// Violations of domain-type invariants.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("paper id must not be empty")]
    EmptyPaperId,
    #[error("author key must not be empty")]
    EmptyAuthorKey,
    #[error("paper {0} references itself")]
    SelfReference(PaperId),
    #[error("correction coefficient must be positive and finite, got {0}")]
    InvalidCoefficient(f64),
    #[error("bomb threshold must be positive, got {0}")]
    InvalidBombThreshold(u32),
    #[error("citer {citer} has count {count}, outside 1..={publications}")]
    CiterCountOutOfRange {
        citer: AuthorKey,
        count: u32,
        publications: usize,
    },
}

/// Fatal ingestion failures. Malformed records are not errors; they are
/// tallied in the ingest report.
#[derive(Debug, Error)]
pub enum IngestError {
    #[error("read failed at line {line}: {source}")]
    Io {
        line: usize,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("no author with h >= {h_threshold} and a >= 1; correction coefficient undefined")]
    PopulationEmpty { h_threshold: u32 },
    #[error("xA-ratio undefined for h = {h}, a = {a}")]
    UndefinedRatio { h: u32, a: u32 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalyticsError {
    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(&'static str),
    #[error("bomb threshold k must be at least 2, got {0}")]
    BombThresholdTooSmall(u32),
    #[error("anomaly thresholds must satisfy 0 < low <= high, got low = {low}, high = {high}")]
    InvalidAnomalyThresholds { low: f64, high: f64 },
    #[error("policy comparison needs an exclude bomb policy in the second context")]
    ExcludePolicyRequired,
}
