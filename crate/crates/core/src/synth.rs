//! Seeded synthetic citation corpora.
//!
//! Papers are created in order and only cite earlier papers, so every
//! reference resolves. Citation targets are chosen by preferential attachment,
//! except that some authors have a fixed circle of followers who keep citing
//! many of their papers. The mix gives a population with heterogeneous citer
//! behavior: followed authors collect a high aH-index relative to their
//! H-index, broadly cited ones a low one.

use std::collections::BTreeSet;

use rand::distributions::WeightedIndex;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::model::{AuthorKey, Corpus, Paper, PaperId};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SynthConfig {
    pub papers: usize,
    pub authors: usize,
    /// Total number of distinct citation edges; clamped to what the paper
    /// ordering allows.
    pub citations: usize,
    pub max_authors_per_paper: usize,
    /// Fraction of authors with a circle of loyal followers.
    pub followed_share: f64,
    /// Probability that a reference from a follower goes to the followed
    /// author's work.
    pub follow_strength: f64,
    /// Number of injected citation bombs.
    pub bombs: usize,
    /// Publications of the target cited by each bomb.
    pub bomb_size: usize,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            papers: 1_000,
            authors: 300,
            citations: 5_000,
            max_authors_per_paper: 4,
            followed_share: 0.15,
            follow_strength: 0.6,
            bombs: 0,
            bomb_size: 20,
            seed: 1,
        }
    }
}

/// Generated records plus the generator's own accounting.
#[derive(Clone, Debug)]
pub struct SyntheticCorpus {
    pub papers: Vec<Paper>,
    /// Number of distinct references emitted.
    pub edge_ledger: usize,
    /// Injected bombs: (citing paper, target author).
    pub bombs: Vec<(PaperId, AuthorKey)>,
}

impl SyntheticCorpus {
    pub fn into_corpus(self) -> Corpus {
        Corpus::assemble(self.papers).0
    }
}

pub fn author_name(i: usize) -> String {
    format!("author {i:05}")
}

/// Splits `total` edges over papers, paper `i` taking at most `i`.
fn plan_reference_counts(rng: &mut ChaCha8Rng, papers: usize, total: usize) -> Vec<usize> {
    let capacity = papers * papers.saturating_sub(1) / 2;
    let total = total.min(capacity);
    if papers == 0 {
        return Vec::new();
    }
    let mean = total as f64 / papers as f64;
    let mut plan: Vec<usize> = (0..papers)
        .map(|i| {
            let draw = rng.gen_range(0.0..=2.0 * mean).round() as usize;
            draw.min(i)
        })
        .collect();
    let mut sum: usize = plan.iter().sum();
    while sum < total {
        let i = rng.gen_range(1..papers);
        if plan[i] < i {
            plan[i] += 1;
            sum += 1;
        }
    }
    while sum > total {
        let i = rng.gen_range(0..papers);
        if plan[i] > 0 {
            plan[i] -= 1;
            sum -= 1;
        }
    }
    plan
}

pub fn generate(config: &SynthConfig) -> SyntheticCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n_authors = config.authors.max(1);
    let keys: Vec<AuthorKey> = (0..n_authors)
        .map(|i| AuthorKey::new(author_name(i)).expect("non-empty"))
        .collect();

    // Heavy-tailed productivity.
    let weights: Vec<f64> = (0..n_authors)
        .map(|_| {
            let u: f64 = rng.gen_range(0.01..1.0);
            u.powf(-1.0 / 1.3).min(60.0)
        })
        .collect();
    let pick_author = WeightedIndex::new(&weights).expect("positive weights");

    // followers[c] = authors that c follows.
    let mut follows: Vec<Vec<usize>> = vec![Vec::new(); n_authors];
    for leader in 0..n_authors {
        if rng.gen_bool(config.followed_share.clamp(0.0, 1.0)) {
            let circle = rng.gen_range(3..=15).min(n_authors.saturating_sub(1));
            for _ in 0..circle {
                let f = rng.gen_range(0..n_authors);
                if f != leader && !follows[f].contains(&leader) {
                    follows[f].push(leader);
                }
            }
        }
    }

    let plan = plan_reference_counts(&mut rng, config.papers, config.citations);
    let mut pubs_of: Vec<Vec<usize>> = vec![Vec::new(); n_authors];
    // One token per paper plus one per citation received.
    let mut attachment: Vec<usize> = Vec::with_capacity(config.papers + config.citations);
    let mut papers = Vec::with_capacity(config.papers + config.bombs);
    let mut edge_ledger = 0usize;

    for (i, &wanted) in plan.iter().enumerate() {
        let team_size = rng.gen_range(1..=config.max_authors_per_paper.max(1));
        let mut team: Vec<usize> = Vec::with_capacity(team_size);
        while team.len() < team_size.min(n_authors) {
            let a = pick_author.sample(&mut rng);
            if !team.contains(&a) {
                team.push(a);
            }
        }

        let leaders: Vec<usize> = team
            .iter()
            .flat_map(|a| follows[*a].iter().copied())
            .filter(|l| !pubs_of[*l].is_empty())
            .collect();
        let mut refs: BTreeSet<usize> = BTreeSet::new();
        let mut attempts = 0;
        while refs.len() < wanted && attempts < wanted * 20 + 20 {
            attempts += 1;
            let target = if !leaders.is_empty() && rng.gen_bool(config.follow_strength.clamp(0.0, 1.0)) {
                let leader = leaders[rng.gen_range(0..leaders.len())];
                pubs_of[leader][rng.gen_range(0..pubs_of[leader].len())]
            } else {
                attachment[rng.gen_range(0..attachment.len())]
            };
            refs.insert(target);
        }
        // Fill any shortfall deterministically from the most recent papers.
        let mut back = i;
        while refs.len() < wanted && back > 0 {
            back -= 1;
            refs.insert(back);
        }
        for &r in &refs {
            attachment.push(r);
        }
        attachment.push(i);
        edge_ledger += refs.len();

        for &a in &team {
            pubs_of[a].push(i);
        }
        papers.push(
            Paper::new(
                PaperId::new(i.to_string()).expect("non-empty"),
                format!("Synthetic paper {i}"),
                team.iter().map(|&a| keys[a].clone()).collect(),
                Some(1990 + (i * 30 / config.papers.max(1)) as i32),
                Some(format!("Venue {}", i % 17)),
                refs.iter().map(|r| PaperId::new(r.to_string()).expect("non-empty")),
            )
            .expect("references point backwards"),
        );
    }

    let mut bombs = Vec::new();
    let bomb_size = config.bomb_size.max(2);
    let candidates: Vec<usize> = (0..n_authors).filter(|&a| pubs_of[a].len() >= bomb_size).collect();
    for b in 0..config.bombs {
        if candidates.is_empty() {
            break;
        }
        let target = candidates[rng.gen_range(0..candidates.len())];
        let mut cited = pubs_of[target].clone();
        cited.shuffle(&mut rng);
        cited.truncate(bomb_size);
        let crew_size = rng.gen_range(bomb_size / 2..=bomb_size).max(1);
        let mut crew: Vec<usize> = Vec::new();
        while crew.len() < crew_size.min(n_authors - 1) {
            let a = rng.gen_range(0..n_authors);
            if a != target && !crew.contains(&a) {
                crew.push(a);
            }
        }
        let id = PaperId::new(format!("bomb{b}")).expect("non-empty");
        edge_ledger += cited.len();
        bombs.push((id.clone(), keys[target].clone()));
        papers.push(
            Paper::new(
                id,
                format!("Survey {b}"),
                crew.iter().map(|&a| keys[a].clone()).collect(),
                Some(2020),
                None,
                cited.iter().map(|r| PaperId::new(r.to_string()).expect("non-empty")),
            )
            .expect("bomb id is not numeric"),
        );
    }

    SyntheticCorpus {
        papers,
        edge_ledger,
        bombs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ledger_matches_corpus() {
        let synthetic = generate(&SynthConfig::default());
        assert_eq!(synthetic.edge_ledger, 5_000);
        let ledger = synthetic.edge_ledger;
        let corpus = synthetic.into_corpus();
        assert_eq!(corpus.paper_count(), 1_000);
        assert_eq!(corpus.edge_count(), ledger);
    }

    #[test]
    fn same_seed_same_corpus() {
        let config = SynthConfig {
            bombs: 2,
            bomb_size: 5,
            ..SynthConfig::default()
        };
        let a = generate(&config).into_corpus();
        let b = generate(&config).into_corpus();
        assert_eq!(a, b);
        let c = generate(&SynthConfig { seed: 2, ..config }).into_corpus();
        assert_ne!(a, c);
    }

    #[test]
    fn plan_respects_capacity() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let plan = plan_reference_counts(&mut rng, 5, 1_000);
        assert_eq!(plan.iter().sum::<usize>(), 10);
        assert!(plan.iter().enumerate().all(|(i, &c)| c <= i));
        assert!(plan_reference_counts(&mut rng, 0, 10).is_empty());
    }
}
