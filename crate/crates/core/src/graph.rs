//! Per-author aggregation of the citation graph.
//!
//! For an author A, every paper citing at least one of A's publications is a
//! *citing event*. Policies remove whole citing events before anything is
//! counted, so both the per-publication counts and the citer response are
//! always computed from the same set of citing papers.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::model::{AuthorKey, AuthorProfile, BombPolicy, Corpus, PaperId, ProfilePolicy, SelfCitationPolicy};

/// Citing paper -> the distinct publications of one author it cites.
type CitingEvents<'c> = BTreeMap<&'c PaperId, Vec<&'c PaperId>>;

fn citing_events<'c>(
    corpus: &'c Corpus,
    pubs: &'c BTreeSet<PaperId>,
    author: &AuthorKey,
    policy: ProfilePolicy,
) -> CitingEvents<'c> {
    let mut events: CitingEvents<'c> = BTreeMap::new();
    for publication in pubs {
        if let Some(citing) = corpus.citing_papers(publication) {
            for paper in citing {
                events.entry(paper).or_default().push(publication);
            }
        }
    }

    if policy.self_citations == SelfCitationPolicy::Exclude {
        events.retain(|paper, _| corpus.paper(paper).is_some_and(|p| !p.authors.contains(author)));
    }
    if let BombPolicy::Exclude(k) = policy.bombs {
        events.retain(|_, targets| targets.len() < k as usize);
    }
    events
}

fn count_publications(pubs: &BTreeSet<PaperId>, events: &CitingEvents<'_>) -> BTreeMap<PaperId, u32> {
    let mut counts: BTreeMap<PaperId, u32> = pubs.iter().map(|p| (p.clone(), 0)).collect();
    for targets in events.values() {
        for target in targets {
            *counts.get_mut(*target).expect("target is a publication") += 1;
        }
    }
    counts
}

fn count_citers(corpus: &Corpus, events: &CitingEvents<'_>) -> BTreeMap<AuthorKey, u32> {
    let mut cited: BTreeMap<&AuthorKey, Vec<&PaperId>> = BTreeMap::new();
    for (paper, targets) in events {
        let Some(paper) = corpus.paper(paper) else {
            continue;
        };
        for citer in paper.distinct_authors() {
            cited.entry(citer).or_default().extend(targets.iter().copied());
        }
    }
    cited
        .into_iter()
        .map(|(citer, mut targets)| {
            targets.sort_unstable();
            targets.dedup();
            (citer.clone(), targets.len() as u32)
        })
        .collect()
}

/// Citation count of each of `author`'s publications. Unknown authors yield
/// an empty map.
pub fn publication_citations(corpus: &Corpus, author: &AuthorKey, policy: ProfilePolicy) -> BTreeMap<PaperId, u32> {
    match corpus.publications_of(author) {
        Some(pubs) => count_publications(pubs, &citing_events(corpus, pubs, author, policy)),
        None => BTreeMap::new(),
    }
}

/// For every researcher who co-authored a paper citing `author`, the number of
/// distinct publications of `author` they cite across all their papers.
pub fn citer_response(corpus: &Corpus, author: &AuthorKey, policy: ProfilePolicy) -> BTreeMap<AuthorKey, u32> {
    match corpus.publications_of(author) {
        Some(pubs) => count_citers(corpus, &citing_events(corpus, pubs, author, policy)),
        None => BTreeMap::new(),
    }
}

/// Both aggregates for one author, sharing a single pass over citing papers.
pub fn profile(corpus: &Corpus, author: &AuthorKey, policy: ProfilePolicy) -> Option<AuthorProfile> {
    let pubs = corpus.publications_of(author)?;
    let events = citing_events(corpus, pubs, author, policy);
    Some(AuthorProfile {
        author: author.clone(),
        publication_citations: count_publications(pubs, &events),
        citer_response: count_citers(corpus, &events),
    })
}

/// Profiles for every author with at least one publication.
///
/// Authors are processed in parallel; the result does not depend on the
/// schedule.
pub fn build_profiles(corpus: &Corpus, policy: ProfilePolicy) -> BTreeMap<AuthorKey, AuthorProfile> {
    let authors: Vec<&AuthorKey> = corpus.authors().collect();
    authors
        .par_iter()
        .map(|author| {
            let p = profile(corpus, author, policy).expect("author is indexed");
            ((*author).clone(), p)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}
