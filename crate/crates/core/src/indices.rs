//! Hirsch-style indicators and the community correction built on them.
//!
//! Computation is two-phase: the correction coefficient `r` is a fold over a
//! whole population, and only after it is known can per-author xA-ratios be
//! evaluated.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::IndexError;
use crate::model::{AuthorKey, AuthorProfile, CorrectionContext, IndexReport, PaperId};

/// Largest `k` such that at least `k` of `counts` are `>= k`.
fn hirsch_number(mut counts: Vec<u32>) -> u32 {
    counts.sort_unstable_by(|a, b| b.cmp(a));
    counts.iter().enumerate().take_while(|(i, &c)| c as usize > *i).count() as u32
}

/// H-index of a multiset of citation counts. Zero for empty input.
pub fn h_index(citation_counts: &[u32]) -> u32 {
    hirsch_number(citation_counts.to_vec())
}

/// Publications with at least `h` citations, or nothing when `h == 0`.
pub fn hirsch_core(publication_citations: &BTreeMap<PaperId, u32>) -> BTreeSet<PaperId> {
    let h = hirsch_number(publication_citations.values().copied().collect());
    if h == 0 {
        return BTreeSet::new();
    }
    publication_citations
        .iter()
        .filter(|(_, &c)| c >= h)
        .map(|(p, _)| p.clone())
        .collect()
}

/// aH-index: largest `a` such that `a` citers each cite at least `a` distinct
/// publications.
pub fn ah_index(citer_response: &BTreeMap<AuthorKey, u32>) -> u32 {
    hirsch_number(citer_response.values().copied().collect())
}

/// How the population ratio between h and a is averaged.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioDefinition {
    /// Arithmetic mean of per-author `h / a`.
    #[default]
    MeanOfRatios,
    /// `mean(h) / mean(a)` over the same population.
    RatioOfMeans,
}

/// Estimated correction coefficient and the population it came from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Coefficient {
    pub r: f64,
    pub population: usize,
}

/// Averages `h / a` over pairs with `h >= h_threshold` and `a >= 1`.
pub fn correction_coefficient(
    pairs: &[(u32, u32)],
    h_threshold: u32,
    definition: RatioDefinition,
) -> Result<Coefficient, IndexError> {
    let eligible: Vec<(f64, f64)> = pairs
        .iter()
        .filter(|(h, a)| *h >= h_threshold && *a >= 1)
        .map(|&(h, a)| (f64::from(h), f64::from(a)))
        .collect();
    if eligible.is_empty() {
        return Err(IndexError::PopulationEmpty { h_threshold });
    }
    let n = eligible.len() as f64;
    let r = match definition {
        RatioDefinition::MeanOfRatios => eligible.iter().map(|(h, a)| h / a).sum::<f64>() / n,
        RatioDefinition::RatioOfMeans => {
            let hs: f64 = eligible.iter().map(|(h, _)| h).sum();
            let as_: f64 = eligible.iter().map(|(_, a)| a).sum();
            hs / as_
        }
    };
    Ok(Coefficient {
        r,
        population: eligible.len(),
    })
}

/// Normal aH value `h / r`.
pub fn normal_value(h: u32, r: f64) -> f64 {
    f64::from(h) / r
}

/// Proximity of `a` to the normal value `n = h / r`: `a/n` below it, `n/a`
/// above it. Always in `(0, 1]`.
pub fn xa_ratio(h: u32, a: u32, r: f64) -> Result<f64, IndexError> {
    if !(r.is_finite() && r > 0.0) {
        return Err(crate::error::ModelError::InvalidCoefficient(r).into());
    }
    if h == 0 || a == 0 {
        return Err(IndexError::UndefinedRatio { h, a });
    }
    let n = normal_value(h, r);
    let a = f64::from(a);
    Ok(if a <= n { a / n } else { n / a })
}

/// `xa_ratio(h, a, r) * h`; never exceeds `h`.
pub fn corrected_score(h: u32, a: u32, r: f64) -> Result<f64, IndexError> {
    Ok(xa_ratio(h, a, r)? * f64::from(h))
}

/// All indicators for one profile under `ctx`.
pub fn evaluate_author(profile: &AuthorProfile, ctx: &CorrectionContext) -> IndexReport {
    let counts: Vec<u32> = profile.publication_citations.values().copied().collect();
    let h = h_index(&counts);
    let a = ah_index(&profile.citer_response);
    let x = xa_ratio(h, a, ctx.r()).ok();
    IndexReport {
        author: profile.author.clone(),
        h,
        a,
        n: normal_value(h, ctx.r()),
        x,
        corrected: x.map(|x| x * f64::from(h)),
        publication_count: profile.publication_count(),
        citer_count: profile.citer_count(),
        total_citations: profile.total_citations(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ProfilePolicy;
    use proptest::prelude::*;

    /// Exhaustive scan: max k in 0..=N with at least k entries >= k.
    fn scan_oracle(values: &[u32]) -> u32 {
        (0..=values.len() as u32)
            .filter(|&k| values.iter().filter(|&&c| c >= k).count() as u32 >= k)
            .max()
            .unwrap()
    }

    fn pid(s: &str) -> PaperId {
        PaperId::new(s).unwrap()
    }

    fn key(s: &str) -> AuthorKey {
        AuthorKey::new(s).unwrap()
    }

    const R_REFERENCE: f64 = 1.848;

    #[test]
    fn h_index_examples() {
        assert_eq!(h_index(&[]), 0);
        assert_eq!(h_index(&[10, 10, 10]), scan_oracle(&[10, 10, 10]));
        assert_eq!(h_index(&[10, 10, 10]), 3);
        assert_eq!(h_index(&[5, 3, 3, 1]), 3);
        assert_eq!(h_index(&[0, 0]), 0);
        assert_eq!(h_index(&[1]), 1);
    }

    #[test]
    fn hirsch_core_examples() {
        assert!(hirsch_core(&BTreeMap::new()).is_empty());
        let counts: BTreeMap<PaperId, u32> = [(pid("p1"), 5), (pid("p2"), 3), (pid("p3"), 3), (pid("p4"), 1)]
            .into_iter()
            .collect();
        let core: Vec<_> = hirsch_core(&counts).into_iter().collect();
        assert_eq!(core, vec![pid("p1"), pid("p2"), pid("p3")]);
        let equal: BTreeMap<PaperId, u32> = [(pid("a"), 2), (pid("b"), 2)].into_iter().collect();
        assert_eq!(hirsch_core(&equal).len(), 2);
        let uncited: BTreeMap<PaperId, u32> = [(pid("a"), 0)].into_iter().collect();
        assert!(hirsch_core(&uncited).is_empty());
    }

    #[test]
    fn ah_index_examples() {
        assert_eq!(ah_index(&BTreeMap::new()), 0);
        let bomb: BTreeMap<AuthorKey, u32> = (0..20).map(|i| (key(&format!("c{i}")), 20)).collect();
        assert_eq!(ah_index(&bomb), 20);
        let mixed: BTreeMap<AuthorKey, u32> = [(key("c1"), 3), (key("c2"), 2), (key("c3"), 2), (key("c4"), 1)]
            .into_iter()
            .collect();
        assert_eq!(ah_index(&mixed), scan_oracle(&[3, 2, 2, 1]));
        assert_eq!(ah_index(&mixed), 2);
    }

    #[test]
    fn correction_coefficient_examples() {
        let d = RatioDefinition::MeanOfRatios;
        assert_eq!(correction_coefficient(&[(10, 10)], 8, d).unwrap().r, 1.0);
        let both = correction_coefficient(&[(16, 34), (18, 4)], 8, d).unwrap();
        assert!((both.r - 2.485294117647059).abs() < 1e-12);
        assert_eq!(both.population, 2);
        assert!((correction_coefficient(&[(16, 34)], 8, d).unwrap().r - 16.0 / 34.0).abs() < 1e-15);
        assert_eq!(correction_coefficient(&[(18, 4)], 8, d).unwrap().r, 4.5);
    }

    #[test]
    fn correction_coefficient_filters_population() {
        let d = RatioDefinition::MeanOfRatios;
        let r = correction_coefficient(&[(10, 5), (7, 1), (12, 0)], 8, d).unwrap();
        assert_eq!(r.population, 1);
        assert_eq!(r.r, 2.0);
        assert_eq!(
            correction_coefficient(&[(7, 1), (12, 0)], 8, d),
            Err(IndexError::PopulationEmpty { h_threshold: 8 })
        );
        assert!(correction_coefficient(&[], 0, d).is_err());
    }

    #[test]
    fn ratio_of_means_alternative() {
        let r = correction_coefficient(&[(16, 34), (18, 4)], 8, RatioDefinition::RatioOfMeans).unwrap();
        assert!((r.r - 34.0 / 38.0).abs() < 1e-15);
    }

    #[test]
    fn xa_ratio_examples() {
        assert_eq!(xa_ratio(10, 5, 2.0).unwrap(), 1.0);
        // Karger: n = 19.48051948..., x = 0.56466666...
        assert!((normal_value(36, R_REFERENCE) - 19.48051948051948).abs() < 1e-12);
        assert!((xa_ratio(36, 11, R_REFERENCE).unwrap() - 0.5646666666666667).abs() < 1e-12);
        // Garcia: n = 8.65800865..., x = 0.25464731...
        assert!((normal_value(16, R_REFERENCE) - 8.658008658008658).abs() < 1e-12);
        assert!((xa_ratio(16, 34, R_REFERENCE).unwrap() - 0.2546473134708429).abs() < 1e-12);
    }

    #[test]
    fn xa_ratio_undefined() {
        assert_eq!(xa_ratio(0, 3, 2.0), Err(IndexError::UndefinedRatio { h: 0, a: 3 }));
        assert_eq!(xa_ratio(3, 0, 2.0), Err(IndexError::UndefinedRatio { h: 3, a: 0 }));
        assert!(xa_ratio(3, 3, 0.0).is_err());
        assert!(corrected_score(0, 0, 1.0).is_err());
    }

    #[test]
    fn corrected_score_examples() {
        assert!((corrected_score(36, 11, R_REFERENCE).unwrap() - 20.328).abs() < 1e-9);
        assert!((normal_value(18, R_REFERENCE) - 9.74025974025974).abs() < 1e-12);
        assert!((xa_ratio(18, 4, R_REFERENCE).unwrap() - 0.4106666666666667).abs() < 1e-12);
        assert!((corrected_score(18, 4, R_REFERENCE).unwrap() - 7.392).abs() < 1e-9);
        assert_eq!(corrected_score(10, 5, 2.0).unwrap(), 10.0);
    }

    #[test]
    fn evaluate_uncited_author() {
        let profile = AuthorProfile {
            author: key("a"),
            publication_citations: [(pid("p"), 0)].into_iter().collect(),
            citer_response: BTreeMap::new(),
        };
        let ctx = CorrectionContext::new(R_REFERENCE, 8, ProfilePolicy::default()).unwrap();
        let report = evaluate_author(&profile, &ctx);
        assert_eq!((report.h, report.a), (0, 0));
        assert_eq!(report.x, None);
        assert_eq!(report.corrected, None);
        assert_eq!(report.n, 0.0);
    }

    #[test]
    fn evaluate_chain_author() {
        let profile = AuthorProfile {
            author: key("a"),
            publication_citations: [(pid("p"), 1)].into_iter().collect(),
            citer_response: [(key("b"), 1)].into_iter().collect(),
        };
        let ctx = CorrectionContext::new(1.0, 0, ProfilePolicy::default()).unwrap();
        let report = evaluate_author(&profile, &ctx);
        assert_eq!((report.h, report.a), (1, 1));
        assert_eq!(report.x, Some(1.0));
        assert_eq!(report.corrected, Some(1.0));
        assert_eq!(report.total_citations, 1);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2_000))]

        #[test]
        fn h_matches_scan(values in prop::collection::vec(0u32..60, 0..50)) {
            prop_assert_eq!(h_index(&values), scan_oracle(&values));
        }

        #[test]
        fn h_is_monotone(values in prop::collection::vec(0u32..40, 1..50), idx in any::<prop::sample::Index>(), by in 1u32..5) {
            let before = h_index(&values);
            let mut bumped = values.clone();
            let i = idx.index(bumped.len());
            bumped[i] += by;
            prop_assert!(h_index(&bumped) >= before);
        }

        #[test]
        fn h_bounds(values in prop::collection::vec(0u32..100, 0..50)) {
            let h = h_index(&values);
            let total: u64 = values.iter().map(|&v| u64::from(v)).sum();
            prop_assert!(h as usize <= values.len());
            prop_assert!(u64::from(h) * u64::from(h) <= total);
        }

        #[test]
        fn xa_in_unit_interval(h in 1u32..200, a in 1u32..200, r in 0.05f64..20.0) {
            let x = xa_ratio(h, a, r).unwrap();
            prop_assert!(x > 0.0 && x <= 1.0);
            prop_assert!(corrected_score(h, a, r).unwrap() <= f64::from(h) + 1e-12);
        }
    }
}
