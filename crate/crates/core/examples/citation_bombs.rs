//! Plants citation bombs in a synthetic corpus, detects them, and shows how
//! much h and a move when they are excluded.
//!
//! ```bash
//! cargo run --release -p ahindex --example citation_bombs
//! ```

use ahindex::analytics::{compare_policies, detect_citation_bombs};
use ahindex::synth::{generate, SynthConfig};
use ahindex::{BombPolicy, CorrectionContext, ProfilePolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let synthetic = generate(&SynthConfig {
        papers: 5_000,
        authors: 800,
        citations: 30_000,
        bombs: 5,
        bomb_size: 15,
        seed: 3,
        ..SynthConfig::default()
    });
    for (paper, author) in &synthetic.bombs {
        println!("planted {paper} -> {author}");
    }
    let corpus = synthetic.into_corpus();

    let k = 10;
    println!();
    for f in detect_citation_bombs(&corpus, k)? {
        println!(
            "{} cites {} works of {} ({} co-authors)",
            f.citing_paper, f.distinct_targets_cited, f.target_author, f.citing_author_count
        );
    }

    let include = CorrectionContext::new(1.0, 8, ProfilePolicy::default())?;
    let exclude = CorrectionContext::new(
        1.0,
        8,
        ProfilePolicy {
            bombs: BombPolicy::exclude(k)?,
            ..ProfilePolicy::default()
        },
    )?;
    let mut moved: Vec<_> = compare_policies(&corpus, &include, &exclude)?
        .into_iter()
        .filter(|d| d.delta_h() != 0 || d.delta_a() != 0)
        .collect();
    moved.sort_by_key(|d| d.delta_a());
    println!("\n{} authors change under exclude(k={k})", moved.len());
    for d in moved.iter().take(10) {
        println!(
            "{}: h {} -> {}, a {} -> {}",
            d.author, d.h_include, d.h_exclude, d.a_include, d.a_exclude
        );
    }
    Ok(())
}
