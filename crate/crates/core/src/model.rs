//! Domain types shared by every stage of the pipeline.
//!
//! A [`Corpus`] is built once and never mutated afterwards. All indexes it
//! carries (`citations_in`, `author_pubs`) are derived at construction and are
//! kept consistent with the paper records.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ModelError;

/// Opaque, non-empty paper identifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PaperId(String);

impl PaperId {
    pub fn new(value: impl Into<String>) -> Result<Self, ModelError> {
        let value = value.into();
        if value.is_empty() {
            return Err(ModelError::EmptyPaperId);
        }
        Ok(PaperId(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PaperId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Author identity: a normalized, non-empty name.
///
/// Two authors are the same person exactly when their keys are equal. Use
/// [`crate::ingest::normalize_author`] to derive a key from a raw name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AuthorKey(String);

impl AuthorKey {
    /// Wraps an already-normalized name. No normalization is applied here.
    pub fn new(normalized_name: impl Into<String>) -> Result<Self, ModelError> {
        let name = normalized_name.into();
        if name.is_empty() {
            return Err(ModelError::EmptyAuthorKey);
        }
        Ok(AuthorKey(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AuthorKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One publication record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Paper {
    pub id: PaperId,
    pub title: String,
    /// May be empty: some dataset records lose their author line.
    pub authors: Vec<AuthorKey>,
    pub year: Option<i32>,
    pub venue: Option<String>,
    pub references: BTreeSet<PaperId>,
}

impl Paper {
    /// Builds a paper, rejecting a reference to itself.
    ///
    /// Duplicate references collapse because `references` is a set.
    pub fn new(
        id: PaperId,
        title: impl Into<String>,
        authors: Vec<AuthorKey>,
        year: Option<i32>,
        venue: Option<String>,
        references: impl IntoIterator<Item = PaperId>,
    ) -> Result<Self, ModelError> {
        let references: BTreeSet<PaperId> = references.into_iter().collect();
        if references.contains(&id) {
            return Err(ModelError::SelfReference(id));
        }
        Ok(Paper {
            id,
            title: title.into(),
            authors,
            year,
            venue,
            references,
        })
    }

    /// Distinct authors in first-occurrence order.
    pub fn distinct_authors(&self) -> impl Iterator<Item = &AuthorKey> {
        let mut seen = BTreeSet::new();
        self.authors.iter().filter(move |a| seen.insert(*a))
    }
}

/// Counts of data dropped while assembling a [`Corpus`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AssemblyStats {
    pub duplicate_paper_ids: usize,
    pub dangling_refs_dropped: usize,
}

/// Immutable, deduplicated collection of papers with reverse indexes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Corpus {
    papers: BTreeMap<PaperId, Paper>,
    citations_in: BTreeMap<PaperId, BTreeSet<PaperId>>,
    author_pubs: BTreeMap<AuthorKey, BTreeSet<PaperId>>,
}

impl Corpus {
    /// Assembles a corpus from paper records.
    ///
    /// The first occurrence of a paper id wins. References to ids that are not
    /// in the final paper set are removed from the citing paper and counted.
    pub fn assemble(records: impl IntoIterator<Item = Paper>) -> (Corpus, AssemblyStats) {
        let mut stats = AssemblyStats::default();
        let mut papers: BTreeMap<PaperId, Paper> = BTreeMap::new();
        for paper in records {
            if papers.contains_key(&paper.id) {
                stats.duplicate_paper_ids += 1;
                continue;
            }
            papers.insert(paper.id.clone(), paper);
        }

        let known: BTreeSet<PaperId> = papers.keys().cloned().collect();
        let mut citations_in: BTreeMap<PaperId, BTreeSet<PaperId>> = BTreeMap::new();
        let mut author_pubs: BTreeMap<AuthorKey, BTreeSet<PaperId>> = BTreeMap::new();
        for paper in papers.values_mut() {
            let before = paper.references.len();
            paper.references.retain(|r| known.contains(r));
            stats.dangling_refs_dropped += before - paper.references.len();

            for target in &paper.references {
                citations_in.entry(target.clone()).or_default().insert(paper.id.clone());
            }
            for author in &paper.authors {
                author_pubs.entry(author.clone()).or_default().insert(paper.id.clone());
            }
        }

        (
            Corpus {
                papers,
                citations_in,
                author_pubs,
            },
            stats,
        )
    }

    pub fn papers(&self) -> &BTreeMap<PaperId, Paper> {
        &self.papers
    }

    pub fn paper(&self, id: &PaperId) -> Option<&Paper> {
        self.papers.get(id)
    }

    /// Reverse index: who cites each paper. Papers never cited have no entry.
    pub fn citations_in(&self) -> &BTreeMap<PaperId, BTreeSet<PaperId>> {
        &self.citations_in
    }

    pub fn citing_papers(&self, id: &PaperId) -> Option<&BTreeSet<PaperId>> {
        self.citations_in.get(id)
    }

    pub fn author_pubs(&self) -> &BTreeMap<AuthorKey, BTreeSet<PaperId>> {
        &self.author_pubs
    }

    pub fn publications_of(&self, author: &AuthorKey) -> Option<&BTreeSet<PaperId>> {
        self.author_pubs.get(author)
    }

    pub fn authors(&self) -> impl Iterator<Item = &AuthorKey> {
        self.author_pubs.keys()
    }

    pub fn paper_count(&self) -> usize {
        self.papers.len()
    }

    pub fn author_count(&self) -> usize {
        self.author_pubs.len()
    }

    /// Number of resolved citation edges.
    pub fn edge_count(&self) -> usize {
        self.papers.values().map(|p| p.references.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.papers.is_empty()
    }
}

/// Whether citing papers that cite many works of one target are kept.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "mode", content = "k")]
pub enum BombPolicy {
    #[default]
    Include,
    /// Drop, per target author, any citing paper that cites at least `k`
    /// distinct publications of that author.
    Exclude(u32),
}

impl BombPolicy {
    pub fn exclude(k: u32) -> Result<Self, ModelError> {
        if k == 0 {
            return Err(ModelError::InvalidBombThreshold(k));
        }
        Ok(BombPolicy::Exclude(k))
    }
}

/// Whether an author's own papers count as citations of their work.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SelfCitationPolicy {
    #[default]
    Include,
    /// Citing papers co-authored by the evaluated author are ignored, which
    /// also removes the author from their own citer set.
    Exclude,
}

/// Filters applied to citing papers while building an [`AuthorProfile`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProfilePolicy {
    pub bombs: BombPolicy,
    pub self_citations: SelfCitationPolicy,
}

/// One author's publications and the citation response they received.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuthorProfile {
    pub author: AuthorKey,
    /// Citation count per publication. Its length is N_p.
    pub publication_citations: BTreeMap<PaperId, u32>,
    /// Distinct publications of `author` cited by each citer. Its length is N_c.
    pub citer_response: BTreeMap<AuthorKey, u32>,
}

impl AuthorProfile {
    pub fn publication_count(&self) -> usize {
        self.publication_citations.len()
    }

    pub fn citer_count(&self) -> usize {
        self.citer_response.len()
    }

    pub fn total_citations(&self) -> u64 {
        self.publication_citations.values().map(|&c| u64::from(c)).sum()
    }

    /// Checks that every citer count lies in `1..=N_p`.
    pub fn validate(&self) -> Result<(), ModelError> {
        let n_p = self.publication_count() as u64;
        for (citer, &count) in &self.citer_response {
            if count == 0 || u64::from(count) > n_p {
                return Err(ModelError::CiterCountOutOfRange {
                    citer: citer.clone(),
                    count,
                    publications: n_p as usize,
                });
            }
        }
        Ok(())
    }
}

/// Population parameters under which index reports are comparable.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrectionContext {
    r: f64,
    pub h_threshold: u32,
    pub policy: ProfilePolicy,
}

impl CorrectionContext {
    pub fn new(r: f64, h_threshold: u32, policy: ProfilePolicy) -> Result<Self, ModelError> {
        if !(r.is_finite() && r > 0.0) {
            return Err(ModelError::InvalidCoefficient(r));
        }
        Ok(CorrectionContext { r, h_threshold, policy })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn bomb_policy(&self) -> BombPolicy {
        self.policy.bombs
    }
}

/// Indicators computed for one author under one [`CorrectionContext`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexReport {
    pub author: AuthorKey,
    pub h: u32,
    pub a: u32,
    /// Normal aH value, `h / r`. Never rounded.
    pub n: f64,
    /// xA-ratio; `None` when `a == 0` or `h == 0`.
    pub x: Option<f64>,
    /// `x * h`; `None` exactly when `x` is.
    pub corrected: Option<f64>,
    pub publication_count: usize,
    pub citer_count: usize,
    pub total_citations: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pid(s: &str) -> PaperId {
        PaperId::new(s).unwrap()
    }

    fn key(s: &str) -> AuthorKey {
        AuthorKey::new(s).unwrap()
    }

    fn paper(id: &str, authors: &[&str], refs: &[&str]) -> Paper {
        Paper::new(
            pid(id),
            id,
            authors.iter().map(|a| key(a)).collect(),
            None,
            None,
            refs.iter().map(|r| pid(r)),
        )
        .unwrap()
    }

    #[test]
    fn empty_ids_are_rejected() {
        assert_eq!(PaperId::new(""), Err(ModelError::EmptyPaperId));
        assert_eq!(AuthorKey::new(""), Err(ModelError::EmptyAuthorKey));
    }

    #[test]
    fn self_reference_is_rejected() {
        let err = Paper::new(pid("p"), "t", vec![], None, None, [pid("p")]).unwrap_err();
        assert_eq!(err, ModelError::SelfReference(pid("p")));
    }

    #[test]
    fn duplicate_references_collapse() {
        let p = Paper::new(pid("p"), "t", vec![], None, None, [pid("q"), pid("q")]).unwrap();
        assert_eq!(p.references.len(), 1);
    }

    #[test]
    fn assembly_drops_dangling_and_duplicates() {
        let (corpus, stats) = Corpus::assemble([
            paper("p1", &["a"], &[]),
            paper("p2", &["b"], &["p1", "missing"]),
            paper("p1", &["z"], &["p2"]),
        ]);
        assert_eq!(stats.duplicate_paper_ids, 1);
        assert_eq!(stats.dangling_refs_dropped, 1);
        assert_eq!(corpus.paper_count(), 2);
        assert_eq!(corpus.edge_count(), 1);
        assert_eq!(corpus.paper(&pid("p1")).unwrap().authors, vec![key("a")]);
        let citing: Vec<_> = corpus.citing_papers(&pid("p1")).unwrap().iter().collect();
        assert_eq!(citing, vec![&pid("p2")]);
        assert!(corpus.publications_of(&key("z")).is_none());
    }

    #[test]
    fn empty_author_list_is_representable() {
        let (corpus, _) = Corpus::assemble([paper("p1", &[], &[]), paper("p2", &[], &["p1"])]);
        assert_eq!(corpus.author_count(), 0);
        assert_eq!(corpus.edge_count(), 1);
    }

    #[test]
    fn context_rejects_non_positive_r() {
        assert!(CorrectionContext::new(0.0, 8, ProfilePolicy::default()).is_err());
        assert!(CorrectionContext::new(f64::NAN, 8, ProfilePolicy::default()).is_err());
        assert!(CorrectionContext::new(1.848, 8, ProfilePolicy::default()).is_ok());
    }

    #[test]
    fn bomb_threshold_must_be_positive() {
        assert!(BombPolicy::exclude(0).is_err());
        assert_eq!(BombPolicy::exclude(10).unwrap(), BombPolicy::Exclude(10));
    }

    #[test]
    fn profile_validation_checks_citer_range() {
        let mut profile = AuthorProfile {
            author: key("a"),
            publication_citations: [(pid("p"), 1)].into_iter().collect(),
            citer_response: [(key("c"), 1)].into_iter().collect(),
        };
        assert!(profile.validate().is_ok());
        profile.citer_response.insert(key("d"), 2);
        assert!(profile.validate().is_err());
    }
}
