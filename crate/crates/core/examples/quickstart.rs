//! One paper with twenty co-authors cites all twenty works of a single
//! author. The H-index barely notices; the aH-index jumps to 20 and falls back
//! to 0 once such citation bombs are filtered out.
//!
//! ```bash
//! cargo run -p ahindex --example quickstart
//! ```

use ahindex::graph::profile;
use ahindex::indices::{ah_index, h_index};
use ahindex::{AuthorKey, BombPolicy, Corpus, Paper, PaperId, ProfilePolicy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let target = AuthorKey::new("target")?;
    let mut papers = Vec::new();
    for i in 0..20 {
        papers.push(Paper::new(
            PaperId::new(format!("t{i:02}"))?,
            "",
            vec![target.clone()],
            None,
            None,
            [],
        )?);
    }
    let citers = (0..20)
        .map(|i| AuthorKey::new(format!("citer {i:02}")))
        .collect::<Result<Vec<_>, _>>()?;
    let cited = (0..20)
        .map(|i| PaperId::new(format!("t{i:02}")))
        .collect::<Result<Vec<_>, _>>()?;
    papers.push(Paper::new(
        PaperId::new("bomb")?,
        "Survey",
        citers,
        Some(2010),
        None,
        cited,
    )?);
    let (corpus, _) = Corpus::assemble(papers);

    for (label, bombs) in [
        ("include", BombPolicy::Include),
        ("exclude(k=10)", BombPolicy::exclude(10)?),
    ] {
        let policy = ProfilePolicy {
            bombs,
            ..ProfilePolicy::default()
        };
        let p = profile(&corpus, &target, policy).expect("target has publications");
        let counts: Vec<u32> = p.publication_citations.values().copied().collect();
        println!(
            "{label:>14}: h = {}, a = {}, citers = {}",
            h_index(&counts),
            ah_index(&p.citer_response),
            p.citer_count()
        );
    }
    Ok(())
}
