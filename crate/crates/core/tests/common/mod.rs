//! Brute-force oracles and random corpus strategies shared by the integration
//! tests. Nothing here uses the corpus reverse indexes or the library's
//! counting code; everything is recomputed from raw paper records.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use ahindex::{AuthorKey, BombPolicy, Corpus, Paper, PaperId, ProfilePolicy, SelfCitationPolicy};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn pid(s: &str) -> PaperId {
    PaperId::new(s).unwrap()
}

pub fn key(s: &str) -> AuthorKey {
    AuthorKey::new(s).unwrap()
}

/// Max k in 0..=N with at least k values >= k, by exhaustive scan.
pub fn scan_index(values: &[u32]) -> u32 {
    (0..=values.len() as u32)
        .filter(|&k| values.iter().filter(|&&v| v >= k).count() as u32 >= k)
        .max()
        .unwrap()
}

fn is_author(corpus: &Corpus, paper: &PaperId, author: &AuthorKey) -> bool {
    corpus.papers()[paper].authors.contains(author)
}

/// Citing papers (by scanning every reference list) that survive `policy`
/// for `author`.
fn surviving_citers_of<'c>(corpus: &'c Corpus, author: &AuthorKey, policy: ProfilePolicy) -> Vec<&'c Paper> {
    corpus
        .papers()
        .values()
        .filter(|citing| {
            let hits = citing
                .references
                .iter()
                .filter(|q| is_author(corpus, q, author))
                .count();
            if hits == 0 {
                return false;
            }
            if policy.self_citations == SelfCitationPolicy::Exclude && citing.authors.contains(author) {
                return false;
            }
            match policy.bombs {
                BombPolicy::Include => true,
                BombPolicy::Exclude(k) => hits < k as usize,
            }
        })
        .collect()
}

/// Per-publication in-degree by a double loop over all reference lists.
pub fn brute_publication_citations(
    corpus: &Corpus,
    author: &AuthorKey,
    policy: ProfilePolicy,
) -> BTreeMap<PaperId, u32> {
    count_in_degree(corpus, author, &surviving_citers_of(corpus, author, policy))
}

fn count_in_degree(corpus: &Corpus, author: &AuthorKey, citers: &[&Paper]) -> BTreeMap<PaperId, u32> {
    let mut counts = BTreeMap::new();
    for p in corpus.papers().values().filter(|p| p.authors.contains(author)) {
        let n = citers.iter().filter(|c| c.references.contains(&p.id)).count();
        counts.insert(p.id.clone(), n as u32);
    }
    counts
}

/// Citer -> distinct publications of `author` cited across all of the
/// citer's papers.
pub fn brute_citer_response(corpus: &Corpus, author: &AuthorKey, policy: ProfilePolicy) -> BTreeMap<AuthorKey, u32> {
    count_citers(corpus, author, &surviving_citers_of(corpus, author, policy))
}

/// Both brute-force aggregates from one scan for citing papers.
pub fn brute_profile(
    corpus: &Corpus,
    author: &AuthorKey,
    policy: ProfilePolicy,
) -> (BTreeMap<PaperId, u32>, BTreeMap<AuthorKey, u32>) {
    let citers = surviving_citers_of(corpus, author, policy);
    (
        count_in_degree(corpus, author, &citers),
        count_citers(corpus, author, &citers),
    )
}

fn count_citers(corpus: &Corpus, author: &AuthorKey, citers: &[&Paper]) -> BTreeMap<AuthorKey, u32> {
    let mut cited: BTreeMap<AuthorKey, BTreeSet<PaperId>> = BTreeMap::new();
    for citing in citers {
        for citer in &citing.authors {
            for q in &citing.references {
                if is_author(corpus, q, author) {
                    cited.entry(citer.clone()).or_default().insert(q.clone());
                }
            }
        }
    }
    cited.into_iter().map(|(c, s)| (c, s.len() as u32)).collect()
}

pub fn brute_hirsch_core(counts: &BTreeMap<PaperId, u32>) -> BTreeSet<PaperId> {
    let values: Vec<u32> = counts.values().copied().collect();
    let h = scan_index(&values);
    if h == 0 {
        return BTreeSet::new();
    }
    counts.iter().filter(|(_, &c)| c >= h).map(|(p, _)| p.clone()).collect()
}

/// Raw layout of a random corpus: per paper, author indices and reference
/// indices. Out-of-range references become dangling ids.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub papers: Vec<(Vec<usize>, Vec<usize>)>,
}

impl CorpusSpec {
    pub fn build(&self) -> Corpus {
        let n = self.papers.len();
        let records = self.papers.iter().enumerate().map(|(i, (authors, refs))| {
            let mut seen = BTreeSet::new();
            let authors: Vec<AuthorKey> = authors
                .iter()
                .filter(|a| seen.insert(**a))
                .map(|a| key(&format!("a{a:02}")))
                .collect();
            let refs = refs.iter().filter(|&&r| r != i).map(|&r| {
                if r < n {
                    pid(&format!("p{r:03}"))
                } else {
                    pid(&format!("x{r}"))
                }
            });
            Paper::new(pid(&format!("p{i:03}")), "", authors, None, None, refs).unwrap()
        });
        Corpus::assemble(records).0
    }
}

pub fn corpus_strategy(max_papers: usize, max_authors: usize) -> impl Strategy<Value = CorpusSpec> {
    (1..=max_papers, 1..=max_authors).prop_flat_map(|(papers, authors)| {
        prop::collection::vec(
            (
                prop::collection::vec(0..authors, 0..=4),
                prop::collection::vec(0..papers + 3, 0..=8),
            ),
            papers,
        )
        .prop_map(|papers| CorpusSpec { papers })
    })
}

/// Seeded random corpus with up to `max_papers` papers and `max_authors`
/// authors. About a third of corpora get one paper citing everything a single
/// author wrote, and a few references dangle.
pub fn random_spec(rng: &mut ChaCha8Rng, max_papers: usize, max_authors: usize) -> CorpusSpec {
    let papers = rng.gen_range(1..=max_papers);
    let authors = rng.gen_range(1..=max_authors);
    let mut specs: Vec<(Vec<usize>, Vec<usize>)> = (0..papers)
        .map(|_| {
            let team = (0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..authors)).collect();
            let refs = (0..rng.gen_range(0..=8))
                .map(|_| rng.gen_range(0..papers + 2))
                .collect();
            (team, refs)
        })
        .collect();
    if papers > 4 && rng.gen_bool(0.3) {
        let target = specs[0].0.first().copied().unwrap_or(0);
        let owned: Vec<usize> = specs
            .iter()
            .enumerate()
            .filter(|(_, (a, _))| a.contains(&target))
            .map(|(i, _)| i)
            .collect();
        let burst = rng.gen_range(0..papers);
        specs[burst].1.extend(owned);
    }
    CorpusSpec { papers: specs }
}
