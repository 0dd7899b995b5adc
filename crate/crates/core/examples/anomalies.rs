//! Flags authors whose aH-index sits far from the normal value n = h/r.
//!
//! ```bash
//! cargo run --release -p ahindex --example anomalies -- [low] [high]
//! ```

use ahindex::analytics::anomaly_flags;
use ahindex::population::{evaluate_population, PopulationConfig};
use ahindex::synth::{generate, SynthConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<f64>());
    let low = args.next().transpose()?.unwrap_or(0.6);
    let high = args.next().transpose()?.unwrap_or(0.6);

    let corpus = generate(&SynthConfig {
        papers: 10_000,
        authors: 1_500,
        citations: 80_000,
        bombs: 3,
        seed: 13,
        ..SynthConfig::default()
    })
    .into_corpus();
    let population = evaluate_population(&corpus, &PopulationConfig::default())?;
    let ctx = &population.context;
    println!("r = {:.4}, low = {low}, high = {high}", ctx.r());
    let mut flagged = 0;
    for report in population.reports.iter().filter(|r| r.h >= ctx.h_threshold) {
        let flags = anomaly_flags(report, ctx, low, high)?;
        if !flags.is_empty() {
            flagged += 1;
            println!(
                "{:<12} h = {:>3} a = {:>3} n = {:>6.2} {flags:?}",
                report.author, report.h, report.a, report.n
            );
        }
    }
    println!("{flagged} flagged");
    Ok(())
}
