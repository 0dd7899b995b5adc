//! Whole-corpus evaluation: estimate `r`, then evaluate every author.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::IndexError;
use crate::graph::build_profiles;
use crate::indices::{ah_index, correction_coefficient, evaluate_author, h_index, Coefficient, RatioDefinition};
use crate::model::{Corpus, CorrectionContext, IndexReport, ProfilePolicy};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PopulationConfig {
    /// Authors with `h` below this are left out of the `r` estimate.
    pub h_threshold: u32,
    /// Use this `r` instead of estimating it.
    pub r_override: Option<f64>,
    pub policy: ProfilePolicy,
    pub ratio: RatioDefinition,
}

impl Default for PopulationConfig {
    fn default() -> Self {
        PopulationConfig {
            h_threshold: 8,
            r_override: None,
            policy: ProfilePolicy::default(),
            ratio: RatioDefinition::MeanOfRatios,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Population {
    pub context: CorrectionContext,
    /// `None` when `r` was overridden.
    pub coefficient: Option<Coefficient>,
    /// One report per author, ordered by author key.
    pub reports: Vec<IndexReport>,
}

/// Builds every profile, fixes `r`, then evaluates all authors.
pub fn evaluate_population(corpus: &Corpus, config: &PopulationConfig) -> Result<Population, IndexError> {
    let profiles: Vec<_> = build_profiles(corpus, config.policy).into_values().collect();

    let (r, coefficient) = match config.r_override {
        Some(r) => (r, None),
        None => {
            let pairs: Vec<(u32, u32)> = profiles
                .par_iter()
                .map(|p| {
                    let counts: Vec<u32> = p.publication_citations.values().copied().collect();
                    (h_index(&counts), ah_index(&p.citer_response))
                })
                .collect();
            let c = correction_coefficient(&pairs, config.h_threshold, config.ratio)?;
            (c.r, Some(c))
        }
    };
    let context = CorrectionContext::new(r, config.h_threshold, config.policy)?;

    let reports = profiles.par_iter().map(|p| evaluate_author(p, &context)).collect();
    Ok(Population {
        context,
        coefficient,
        reports,
    })
}
