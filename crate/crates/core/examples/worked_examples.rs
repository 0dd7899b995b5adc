//! Corrected scores for three hand-picked (h, a) pairs at r = 1.848, and the
//! correction coefficient estimated from the two extreme pairs.
//!
//! ```bash
//! cargo run -p ahindex --example worked_examples
//! ```

use ahindex::indices::{corrected_score, correction_coefficient, normal_value, xa_ratio, RatioDefinition};

const R: f64 = 1.848;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>4} {:>4} {:>8} {:>8} {:>8}", "h", "a", "n", "x", "x·h");
    for (h, a) in [(36, 11), (16, 34), (18, 4)] {
        println!(
            "{h:>4} {a:>4} {:>8.4} {:>8.4} {:>8.4}",
            normal_value(h, R),
            xa_ratio(h, a, R)?,
            corrected_score(h, a, R)?
        );
    }

    let pairs = [(16, 34), (18, 4)];
    for definition in [RatioDefinition::MeanOfRatios, RatioDefinition::RatioOfMeans] {
        let c = correction_coefficient(&pairs, 8, definition)?;
        println!("{definition:?}: r = {:.6} over {} authors", c.r, c.population);
    }
    Ok(())
}
