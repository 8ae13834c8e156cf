// Copyright 2026 The grover2d Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Quantum-vs-classical scaling table: Grover oracle calls against linear-scan
//! comparisons over registers of 2..=12 qubits.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::{linear_search, QueryOrder};
use crate::database::{generate_records, Degree, Gender};
use crate::error::{Error, Result};
use crate::grover::{run_grover, IterationSchedule, MarkedSet};
use crate::rng::{derive_seed, seeded_rng};

pub const MIN_BENCH_QUBITS: usize = 2;
pub const MAX_BENCH_QUBITS: usize = 12;

pub const BENCH_CSV_HEADER: &str =
    "n_qubits,N,grover_oracle_calls,predicted_success,empirical_success,classical_comparisons_mean";

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n_qubits: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub grover_oracle_calls: usize,
    pub predicted_success: f64,
    pub empirical_success: f64,
    pub classical_comparisons_mean: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub min_qubits: usize,
    pub max_qubits: usize,
    pub trials: usize,
    pub seed: u64,
    /// Shots used to estimate the empirical Grover success rate.
    pub shots: usize,
}

impl BenchConfig {
    pub fn new(min_qubits: usize, max_qubits: usize, trials: usize, seed: u64) -> Self {
        Self {
            min_qubits,
            max_qubits,
            trials,
            seed,
            shots: 10_000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(MIN_BENCH_QUBITS <= self.min_qubits
            && self.min_qubits <= self.max_qubits
            && self.max_qubits <= MAX_BENCH_QUBITS)
        {
            return Err(Error::Argument(format!(
                "need {MIN_BENCH_QUBITS} ≤ min-qubits ≤ max-qubits ≤ {MAX_BENCH_QUBITS}, got {}..={}",
                self.min_qubits, self.max_qubits
            )));
        }
        if self.trials == 0 || self.shots == 0 {
            return Err(Error::Argument(
                "trials and shots must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

fn bench_row(config: &BenchConfig, n_qubits: usize) -> Result<BenchRow> {
    let dim = 1usize << n_qubits;
    let row_seed = derive_seed(config.seed, n_qubits as u64);
    let mut rng = seeded_rng(row_seed);

    let target = rng.gen_range(0..dim);
    let marked = MarkedSet::single(n_qubits, target)?;
    let grover = run_grover(
        n_qubits,
        &marked,
        IterationSchedule::Auto,
        config.shots,
        rng.gen(),
    )?;
    let samples = grover.samples.as_deref().unwrap_or_default();
    let hits = samples.iter().filter(|&&s| s == target).count();

    let mut total_comparisons = 0usize;
    for trial in 0..config.trials {
        let records = generate_records(derive_seed(row_seed, trial as u64), dim, 0.5, [0.25; 4])?;
        let gender = Gender::ALL[rng.gen_range(0..2)];
        let degree = Degree::ALL[rng.gen_range(0..4)];
        let order = QueryOrder::ALL[rng.gen_range(0..2)];
        total_comparisons += linear_search(&records, gender, degree, order).comparisons;
    }

    Ok(BenchRow {
        n_qubits,
        n: dim,
        grover_oracle_calls: grover.oracle_calls,
        predicted_success: grover.predicted_success,
        empirical_success: hits as f64 / samples.len() as f64,
        classical_comparisons_mean: total_comparisons as f64 / config.trials as f64,
    })
}

/// One row per register width, computed in parallel; rows come back ordered by
/// `n_qubits` and are identical for equal configs.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    config.validate()?;
    (config.min_qubits..=config.max_qubits)
        .into_par_iter()
        .map(|n| bench_row(config, n))
        .collect()
}

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(BENCH_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{:.12},{:.6},{:.3}\n",
            r.n_qubits,
            r.n,
            r.grover_oracle_calls,
            r.predicted_success,
            r.empirical_success,
            r.classical_comparisons_mean
        ));
    }
    out
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = logs.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let var: f64 = logs.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    cov / var
}
