//! The experiment harness: repeated pipeline runs with fresh random
//! generators, summarized per group.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{PGroup, SelectionMethod};
use crate::pipeline::run_pipeline;
use crate::words::OrderingKind;

/// Basis-size statistics over repeated attempts on one group.
#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub group: String,
    pub ordering: String,
    pub selection: String,
    pub attempts: usize,
    pub seed: u64,
    pub sizes: Vec<usize>,
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    /// Sample standard deviation (divisor attempts - 1); 0 for one attempt.
    pub stddev: f64,
}

impl ExperimentReport {
    pub fn text_line(&self) -> String {
        format!(
            "group={} ordering={} selection={} attempts={} seed={} min={} max={} mean={:.2} stddev={:.2}",
            self.group,
            self.ordering,
            self.selection,
            self.attempts,
            self.seed,
            self.min,
            self.max,
            self.mean,
            self.stddev
        )
    }
}

/// Runs the pipeline `attempts` times, each attempt on an independent RNG
/// stream derived from (seed, attempt index), and aggregates the basis
/// sizes.
///
/// Under the Jennings ordering every attempt must produce the same size;
/// the harness asserts this.
pub fn run_experiment(
    group: &PGroup,
    label: &str,
    kind: OrderingKind,
    selection: SelectionMethod,
    attempts: usize,
    seed: u64,
) -> Result<ExperimentReport> {
    if attempts < 1 {
        return Err(Error::InvalidInput("attempts must be at least 1".into()));
    }
    let mut sizes = Vec::with_capacity(attempts);
    for attempt in 0..attempts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        let run = run_pipeline(group, kind, selection, &mut rng, false)?;
        sizes.push(run.basis.len());
    }
    if kind == OrderingKind::Jennings && sizes.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Internal(format!(
            "jennings basis size varied across attempts: {sizes:?}"
        )));
    }

    let min = *sizes.iter().min().expect("attempts >= 1");
    let max = *sizes.iter().max().expect("attempts >= 1");
    let mean = sizes.iter().sum::<usize>() as f64 / attempts as f64;
    let stddev = if attempts < 2 {
        0.0
    } else {
        let var = sizes
            .iter()
            .map(|&s| (s as f64 - mean).powi(2))
            .sum::<f64>()
            / (attempts - 1) as f64;
        var.sqrt()
    };
    // Jennings generator picks are uniform inside each layer, so the
    // effective method there is always "arbitrary".
    let selection_tag = match kind {
        OrderingKind::Jennings => SelectionMethod::Arbitrary.tag(),
        _ => selection.tag(),
    };
    Ok(ExperimentReport {
        group: label.to_string(),
        ordering: kind.tag().to_string(),
        selection: selection_tag.to_string(),
        attempts,
        seed,
        sizes,
        min,
        max,
        mean,
        stddev,
    })
}
