//! Correlation between the corrected score `x·h` and `h` as the population
//! is restricted to ever higher H-indices.
//!
//! ```bash
//! cargo run --release -p ahindex --example correlation_trend -- [seed]
//! ```

use ahindex::analytics::{correlation_by_threshold, CorrelationMethod};
use ahindex::population::{evaluate_population, PopulationConfig};
use ahindex::synth::{generate, SynthConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7u64);
    let synth = SynthConfig {
        papers: 40_000,
        authors: 2_000,
        citations: 500_000,
        seed,
        ..SynthConfig::default()
    };
    let corpus = generate(&synth).into_corpus();
    println!(
        "corpus: {} papers, {} authors, {} edges",
        corpus.paper_count(),
        corpus.author_count(),
        corpus.edge_count()
    );

    let config = PopulationConfig::default();
    let population = evaluate_population(&corpus, &config).expect("population with h >= 8");
    let coefficient = population.coefficient.expect("estimated");
    println!(
        "r = {:.4} over {} authors with h >= {}",
        coefficient.r, coefficient.population, config.h_threshold
    );

    let thresholds = [8, 20, 30];
    for row in correlation_by_threshold(&population.reports, &thresholds, CorrelationMethod::Pearson) {
        match row.value {
            Some(v) => println!(
                "h >= {:>3}: {:>6} authors, corr(x·h, h) = {v:.4}",
                row.h_threshold, row.population
            ),
            None => println!(
                "h >= {:>3}: {:>6} authors, corr undefined",
                row.h_threshold, row.population
            ),
        }
    }
}
