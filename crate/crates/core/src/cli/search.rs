//! Randomized search for pairs violating `delta(x, y) <= deg h(x, y) - 1`.
//!
//! Every trial draws its instance from its own ChaCha stream (seed, trial
//! index), so the output does not depend on the thread count.

use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::apery::AperyData;
use crate::lattice::{LatticePoint, Semigroup, SemigroupPresentation};
use crate::star::{check_conjecture, PairOutcome, Scope, SearchCaps};

const MAX_RESAMPLES: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub seed: u64,
    pub trials: usize,
    pub alpha_range: (i64, i64),
    pub d_range: (usize, usize),
    pub c_range: (usize, usize),
    pub scope: Scope,
    pub caps: SearchCaps,
}

impl SearchConfig {
    pub fn check(&self) -> Result<(), String> {
        let ordered = |name: &str, lo: i64, hi: i64| {
            if lo > hi {
                Err(format!("{name} range is empty ({lo} > {hi})"))
            } else {
                Ok(())
            }
        };
        ordered("alpha", self.alpha_range.0, self.alpha_range.1)?;
        ordered("d", self.d_range.0 as i64, self.d_range.1 as i64)?;
        ordered("c", self.c_range.0 as i64, self.c_range.1 as i64)?;
        if self.alpha_range.0 < 2 {
            return Err("alpha must be at least 2".into());
        }
        if self.d_range.0 < 2 {
            return Err("d must be at least 2".into());
        }
        if self.c_range.0 < 1 {
            return Err("c must be at least 1".into());
        }
        Ok(())
    }
}

/// `M_{d,alpha}` without the scaled unit vectors, in lexicographic order.
pub fn degree_one_points(d: usize, alpha: i64) -> Vec<LatticePoint> {
    fn fill(prefix: &mut Vec<i64>, left: i64, slots: usize, out: &mut Vec<LatticePoint>) {
        if slots == 1 {
            prefix.push(left);
            out.push(LatticePoint::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for v in 0..=left {
            prefix.push(v);
            fill(prefix, left - v, slots - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(&mut Vec::with_capacity(d), alpha, d, &mut out);
    out.retain(|p| p.coords().iter().filter(|&&c| c != 0).count() > 1);
    out
}

/// Draws one normalized presentation; returns it with the number of draws
/// rejected by the gcd condition.
pub fn sample_presentation(rng: &mut impl Rng, config: &SearchConfig) -> Option<(SemigroupPresentation, u32)> {
    for rejected in 0..MAX_RESAMPLES {
        let d = rng.gen_range(config.d_range.0..=config.d_range.1);
        let alpha = rng.gen_range(config.alpha_range.0..=config.alpha_range.1);
        let pool = degree_one_points(d, alpha);
        let c_max = config.c_range.1.min(pool.len());
        if pool.is_empty() || config.c_range.0 > c_max {
            continue;
        }
        let c = rng.gen_range(config.c_range.0..=c_max);
        let mut picked: Vec<usize> = sample(rng, pool.len(), c).into_vec();
        picked.sort_unstable();
        let extras = picked.into_iter().map(|i| pool[i].clone()).collect();
        let p = SemigroupPresentation::new(d, alpha, extras);
        let report = p.validate();
        if report.is_valid() && report.gcd_warning.is_none() {
            return Some((p, rejected));
        }
    }
    None
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub instances: usize,
    pub failed_instances: usize,
    pub resamples: u64,
    pub pairs_checked: usize,
    pub holds: usize,
    pub violations: usize,
    pub indeterminate: usize,
}

pub struct SearchOutput {
    /// One record per trial, in trial order.
    pub records: Vec<Value>,
    pub summary: SearchSummary,
}

pub fn run_search(config: &SearchConfig) -> SearchOutput {
    let results: Vec<(Value, SearchSummary)> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(config, trial))
        .collect();
    let mut summary = SearchSummary::default();
    let mut records = Vec::with_capacity(results.len());
    for (record, part) in results {
        summary.instances += part.instances;
        summary.failed_instances += part.failed_instances;
        summary.resamples += part.resamples;
        summary.pairs_checked += part.pairs_checked;
        summary.holds += part.holds;
        summary.violations += part.violations;
        summary.indeterminate += part.indeterminate;
        records.push(record);
    }
    SearchOutput { records, summary }
}

fn run_trial(config: &SearchConfig, trial: usize) -> (Value, SearchSummary) {
    let mut rng = trial_rng(config.seed, trial);
    let mut part = SearchSummary::default();
    let Some((presentation, rejected)) = sample_presentation(&mut rng, config) else {
        part.failed_instances = 1;
        return (json!({ "trial": trial, "error": "no normalized instance found" }), part);
    };
    part.resamples = rejected as u64;

    let analysis = Semigroup::new(presentation.clone()).and_then(|sg| {
        let apery = AperyData::compute(&sg)?;
        Ok((sg.class_count(), check_conjecture(&sg, &apery, config.scope, config.caps)))
    });
    let (f, report) = match analysis {
        Ok(v) => v,
        Err(e) => {
            part.failed_instances = 1;
            return (
                json!({ "trial": trial, "presentation": presentation, "error": e.to_string() }),
                part,
            );
        }
    };
    part.instances = 1;
    part.pairs_checked = report.pairs_checked;
    part.holds = report.holds;
    part.violations = report.violations;
    part.indeterminate = report.indeterminate;

    let mut counterexamples = Vec::new();
    let mut indeterminate = Vec::new();
    for v in &report.verdicts {
        match &v.outcome {
            PairOutcome::Violation { .. } => counterexamples.push(v),
            PairOutcome::Indeterminate { .. } => indeterminate.push(v),
            PairOutcome::Holds { .. } => {}
        }
    }
    let record = json!({
        "trial": trial,
        "presentation": presentation,
        "resamples": rejected,
        "f": f,
        "adjacency_defined": report.adjacency_defined,
        "pairs_checked": report.pairs_checked,
        "holds": report.holds,
        "violations": report.violations,
        "indeterminate": report.indeterminate,
        "counterexamples": counterexamples,
        "indeterminate_pairs": indeterminate,
    });
    (record, part)
}
