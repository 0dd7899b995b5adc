//! Evaluates a synthetic population and compares the top ten by h with the
//! top ten by corrected score.
//!
//! ```bash
//! cargo run --release -p ahindex --example population_report
//! ```

use ahindex::analytics::{rank_authors, RankMetric};
use ahindex::population::{evaluate_population, PopulationConfig};
use ahindex::synth::{generate, SynthConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = generate(&SynthConfig {
        papers: 20_000,
        authors: 3_000,
        citations: 150_000,
        seed: 11,
        ..SynthConfig::default()
    })
    .into_corpus();
    let population = evaluate_population(&corpus, &PopulationConfig::default())?;
    println!("r = {:.4}", population.context.r());

    for metric in [RankMetric::H, RankMetric::Corrected] {
        println!("\ntop 10 by {metric:?}");
        println!(
            "{:>4}  {:<12} {:>4} {:>4} {:>8} {:>8}",
            "rank", "author", "h", "a", "x", "x·h"
        );
        for (i, r) in rank_authors(&population.reports, metric, 10).iter().enumerate() {
            let fmt = |v: Option<f64>| v.map_or("-".to_string(), |v| format!("{v:.3}"));
            println!(
                "{:>4}  {:<12} {:>4} {:>4} {:>8} {:>8}",
                i + 1,
                r.author,
                r.h,
                r.a,
                fmt(r.x),
                fmt(r.corrected)
            );
        }
    }
    Ok(())
}
