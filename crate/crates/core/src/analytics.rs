//! Population analyses over evaluated authors: distributions, correlation,
//! rankings and citer-anomaly detection.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::AnalyticsError;
use crate::graph::build_profiles;
use crate::indices::{ah_index, h_index, normal_value, xa_ratio};
use crate::model::{AuthorKey, BombPolicy, Corpus, CorrectionContext, IndexReport, PaperId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderBy {
    H,
    A,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistributionPoint {
    pub rank: usize,
    pub h: u32,
    pub a: u32,
    pub author: AuthorKey,
}

/// Reports sorted descending by `order_by` (ties by ascending author), with
/// 1-based ranks.
pub fn distribution_series(reports: &[IndexReport], order_by: OrderBy) -> Vec<DistributionPoint> {
    let mut sorted: Vec<&IndexReport> = reports.iter().collect();
    sorted.sort_by(|x, y| {
        let (kx, ky) = match order_by {
            OrderBy::H => (x.h, y.h),
            OrderBy::A => (x.a, y.a),
        };
        ky.cmp(&kx).then_with(|| x.author.cmp(&y.author))
    });
    sorted
        .into_iter()
        .enumerate()
        .map(|(i, r)| DistributionPoint {
            rank: i + 1,
            h: r.h,
            a: r.a,
            author: r.author.clone(),
        })
        .collect()
}

/// Pearson product-moment correlation.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64, AnalyticsError> {
    if xs.len() != ys.len() {
        return Err(AnalyticsError::UndefinedCorrelation("length mismatch"));
    }
    if xs.len() < 2 {
        return Err(AnalyticsError::UndefinedCorrelation("fewer than two points"));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let dx = x - mx;
        let dy = y - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(AnalyticsError::UndefinedCorrelation("zero variance"));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// 1-based ranks; tied values share the mean of their positions.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let mean = (start + end + 1) as f64 / 2.0;
        for &idx in &order[start..end] {
            ranks[idx] = mean;
        }
        start = end;
    }
    ranks
}

/// Spearman rank correlation: Pearson over average ranks.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Result<f64, AnalyticsError> {
    if xs.len() != ys.len() {
        return Err(AnalyticsError::UndefinedCorrelation("length mismatch"));
    }
    pearson(&average_ranks(xs), &average_ranks(ys))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrelationMethod {
    #[default]
    Pearson,
    Spearman,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrelationRow {
    pub h_threshold: u32,
    pub population: usize,
    /// Correlation of `x·h` with `h`; `None` when undefined.
    pub value: Option<f64>,
}

/// Correlation of corrected score with h among authors with `h >= t`, for
/// each threshold `t`. Authors with undefined `x` are left out.
pub fn correlation_by_threshold(
    reports: &[IndexReport],
    thresholds: &[u32],
    method: CorrelationMethod,
) -> Vec<CorrelationRow> {
    thresholds
        .iter()
        .map(|&t| {
            let (hs, corrected): (Vec<f64>, Vec<f64>) = reports
                .iter()
                .filter(|r| r.h >= t)
                .filter_map(|r| r.corrected.map(|c| (f64::from(r.h), c)))
                .unzip();
            let value = match method {
                CorrelationMethod::Pearson => pearson(&corrected, &hs),
                CorrelationMethod::Spearman => spearman(&corrected, &hs),
            };
            CorrelationRow {
                h_threshold: t,
                population: hs.len(),
                value: value.ok(),
            }
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMetric {
    H,
    Corrected,
}

fn metric_value(report: &IndexReport, metric: RankMetric) -> f64 {
    match metric {
        RankMetric::H => f64::from(report.h),
        RankMetric::Corrected => report.corrected.unwrap_or(f64::NEG_INFINITY),
    }
}

/// Top `top_k` reports by `metric`, descending, ties by ascending author.
/// Undefined corrected scores rank below every defined one.
pub fn rank_authors(reports: &[IndexReport], metric: RankMetric, top_k: usize) -> Vec<IndexReport> {
    let mut sorted: Vec<&IndexReport> = reports.iter().collect();
    sorted.sort_by(|x, y| {
        metric_value(y, metric)
            .total_cmp(&metric_value(x, metric))
            .then_with(|| x.author.cmp(&y.author))
    });
    sorted.into_iter().take(top_k).cloned().collect()
}

/// A single paper citing many distinct works of one author.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BombFinding {
    pub citing_paper: PaperId,
    pub target_author: AuthorKey,
    pub distinct_targets_cited: u32,
    pub citing_author_count: usize,
}

/// Every (citing paper, author) pair where the paper cites at least `k`
/// distinct publications of the author. Sorted by count descending, then by
/// citing paper and author.
pub fn detect_citation_bombs(corpus: &Corpus, k: u32) -> Result<Vec<BombFinding>, AnalyticsError> {
    if k < 2 {
        return Err(AnalyticsError::BombThresholdTooSmall(k));
    }
    let mut findings = Vec::new();
    for paper in corpus.papers().values() {
        if paper.references.len() < k as usize {
            continue;
        }
        let mut per_author: BTreeMap<&AuthorKey, u32> = BTreeMap::new();
        for target in &paper.references {
            if let Some(cited) = corpus.paper(target) {
                for author in cited.distinct_authors() {
                    *per_author.entry(author).or_default() += 1;
                }
            }
        }
        let citing_author_count = paper.distinct_authors().count();
        findings.extend(
            per_author
                .into_iter()
                .filter(|(_, n)| *n >= k)
                .map(|(author, n)| BombFinding {
                    citing_paper: paper.id.clone(),
                    target_author: author.clone(),
                    distinct_targets_cited: n,
                    citing_author_count,
                }),
        );
    }
    findings.sort_by(|x, y| {
        y.distinct_targets_cited
            .cmp(&x.distinct_targets_cited)
            .then_with(|| x.citing_paper.cmp(&y.citing_paper))
            .then_with(|| x.target_author.cmp(&y.target_author))
    });
    Ok(findings)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AnomalyFlag {
    /// Citers respond to more of the author's work than the community norm.
    CitersAboveNormal,
    /// Citers respond to less of the author's work than the community norm.
    CitersBelowNormal,
}

/// Flags an author whose aH-index is far from the normal value.
///
/// Above normal is flagged when `x <= high`, below normal when `x <= low`.
/// Authors with undefined `x` are never flagged.
pub fn anomaly_flags(
    report: &IndexReport,
    ctx: &CorrectionContext,
    low: f64,
    high: f64,
) -> Result<BTreeSet<AnomalyFlag>, AnalyticsError> {
    if !(low > 0.0 && low <= high) {
        return Err(AnalyticsError::InvalidAnomalyThresholds { low, high });
    }
    let mut flags = BTreeSet::new();
    let Ok(x) = xa_ratio(report.h, report.a, ctx.r()) else {
        return Ok(flags);
    };
    let n = normal_value(report.h, ctx.r());
    let a = f64::from(report.a);
    match a.partial_cmp(&n) {
        Some(Ordering::Greater) if x <= high => {
            flags.insert(AnomalyFlag::CitersAboveNormal);
        }
        Some(Ordering::Less) if x <= low => {
            flags.insert(AnomalyFlag::CitersBelowNormal);
        }
        _ => {}
    }
    Ok(flags)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolicyDelta {
    pub author: AuthorKey,
    pub h_include: u32,
    pub h_exclude: u32,
    pub a_include: u32,
    pub a_exclude: u32,
}

impl PolicyDelta {
    pub fn delta_h(&self) -> i64 {
        i64::from(self.h_exclude) - i64::from(self.h_include)
    }

    pub fn delta_a(&self) -> i64 {
        i64::from(self.a_exclude) - i64::from(self.a_include)
    }
}

/// Recomputes h and a with and without citation-bomb filtering.
pub fn compare_policies(
    corpus: &Corpus,
    ctx_include: &CorrectionContext,
    ctx_exclude: &CorrectionContext,
) -> Result<Vec<PolicyDelta>, AnalyticsError> {
    if !matches!(ctx_exclude.bomb_policy(), BombPolicy::Exclude(_)) {
        return Err(AnalyticsError::ExcludePolicyRequired);
    }
    let indicators = |ctx: &CorrectionContext| -> BTreeMap<AuthorKey, (u32, u32)> {
        build_profiles(corpus, ctx.policy)
            .into_iter()
            .map(|(author, p)| {
                let counts: Vec<u32> = p.publication_citations.values().copied().collect();
                (author, (h_index(&counts), ah_index(&p.citer_response)))
            })
            .collect()
    };
    let before = indicators(ctx_include);
    let after = indicators(ctx_exclude);
    Ok(before
        .into_iter()
        .map(|(author, (h_include, a_include))| {
            let (h_exclude, a_exclude) = after[&author];
            PolicyDelta {
                author,
                h_include,
                h_exclude,
                a_include,
                a_exclude,
            }
        })
        .collect())
}
