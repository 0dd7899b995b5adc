//! Rank-ordered h and a series, printed as a coarse text histogram of the
//! top of each distribution. The full series is what `ahindex plotdata`
//! writes to CSV.
//!
//! ```bash
//! cargo run --release -p ahindex --example plot_distribution
//! ```

use ahindex::analytics::{distribution_series, OrderBy};
use ahindex::population::{evaluate_population, PopulationConfig};
use ahindex::synth::{generate, SynthConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let corpus = generate(&SynthConfig {
        papers: 10_000,
        authors: 1_500,
        citations: 80_000,
        seed: 5,
        ..SynthConfig::default()
    })
    .into_corpus();
    let population = evaluate_population(&corpus, &PopulationConfig::default())?;

    for order in [OrderBy::H, OrderBy::A] {
        let series = distribution_series(&population.reports, order);
        println!("\nordered by {order:?} ({} authors)", series.len());
        for p in series.iter().take(15) {
            let v = match order {
                OrderBy::H => p.h,
                OrderBy::A => p.a,
            };
            println!("{:>4} {:<12} {:>3} {}", p.rank, p.author, v, "#".repeat(v as usize));
        }
    }
    Ok(())
}
