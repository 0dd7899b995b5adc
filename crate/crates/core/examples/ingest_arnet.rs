//! Parses an ArnetMiner-style dump and prints the ingest ledger, then the
//! first few canonical records.
//!
//! ```bash
//! cargo run -p ahindex --example ingest_arnet -- [path]
//! ```

use std::fs::File;
use std::io::{self, BufReader, Write};

use ahindex::ingest::{parse_arnet, write_canonical, ArnetOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/small.arnet").to_string());
    let (corpus, report) = parse_arnet(BufReader::new(File::open(&path)?), ArnetOptions::default())?;

    println!("read {}, kept {}", report.papers_read, report.papers_kept);
    println!(
        "malformed {}, duplicate ids {}",
        report.malformed_records, report.duplicate_paper_ids
    );
    println!(
        "references: {} dangling, {} duplicates, {} self",
        report.dangling_refs_dropped, report.duplicate_refs_collapsed, report.self_refs_dropped
    );
    for w in &report.parse_warnings {
        println!("  line {}: {}", w.line, w.message);
    }
    println!(
        "{} papers, {} authors, {} edges",
        corpus.paper_count(),
        corpus.author_count(),
        corpus.edge_count()
    );

    let mut canonical = Vec::new();
    write_canonical(&corpus, &mut canonical)?;
    let mut stdout = io::stdout().lock();
    for line in canonical.split(|&b| b == b'\n').take(3) {
        stdout.write_all(line)?;
        writeln!(stdout)?;
    }
    Ok(())
}
