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

//! Grover amplitude amplification: phase-flip oracle, inversion about the mean,
//! iteration scheduling and the closed-form success probability.

use std::collections::BTreeSet;
use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::statevector::{sample_measurements, uniform_state, StateVector, MAX_QUBITS};

/// Nonempty set of marked basis indices `τ` in an `n_qubits` register.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkedSet {
    n_qubits: usize,
    indices: BTreeSet<usize>,
}

impl MarkedSet {
    pub fn new(n_qubits: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&n_qubits) {
            return Err(Error::Size {
                n_qubits,
                max: MAX_QUBITS,
            });
        }
        let dim = 1usize << n_qubits;
        let mut set = BTreeSet::new();
        for index in indices {
            if index >= dim {
                return Err(Error::Validation(format!(
                    "marked index {index} out of range for {dim} basis states"
                )));
            }
            if !set.insert(index) {
                return Err(Error::Validation(format!("marked index {index} repeated")));
            }
        }
        if set.is_empty() {
            return Err(Error::Validation("marked set is empty".into()));
        }
        if set.len() >= dim {
            return Err(Error::Validation(format!(
                "all {dim} basis states marked; nothing to search for"
            )));
        }
        Ok(Self {
            n_qubits,
            indices: set,
        })
    }

    pub fn single(n_qubits: usize, index: usize) -> Result<Self> {
        Self::new(n_qubits, [index])
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// `M`, the number of marked states.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    /// Always false; kept for the `len`/`is_empty` pair convention.
    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.indices.contains(&index)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    /// Total Born probability on the marked indices.
    pub fn mass(&self, state: &StateVector) -> f64 {
        self.iter().map(|i| state.amplitudes()[i].norm_sqr()).sum()
    }
}

/// How many Grover iterations to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IterationSchedule {
    /// `floor((π/4)·√(N/M))`; refused when `M ≥ N/2`.
    Auto,
    Fixed(usize),
}

impl IterationSchedule {
    pub fn resolve(self, dim: usize, marked: usize) -> Result<usize> {
        match self {
            IterationSchedule::Fixed(k) => {
                check_counts(dim, marked)?;
                Ok(k)
            }
            IterationSchedule::Auto => {
                check_counts(dim, marked)?;
                if 2 * marked >= dim {
                    return Err(Error::Argument(format!(
                        "{marked} of {dim} states marked (M ≥ N/2): amplification cannot \
                         improve on a classical scan; use a fixed schedule or a linear search"
                    )));
                }
                optimal_iterations(dim, marked)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GroverResult {
    pub final_state: StateVector,
    pub iterations_used: usize,
    /// One phase-flip oracle per iteration.
    pub oracle_calls: usize,
    pub predicted_success: f64,
    pub samples: Option<Vec<usize>>,
}

fn check_counts(dim: usize, marked: usize) -> Result<()> {
    if !dim.is_power_of_two() || dim < 2 {
        return Err(Error::Argument(format!(
            "N = {dim} is not a power of two ≥ 2"
        )));
    }
    if marked == 0 || marked >= dim {
        return Err(Error::Argument(format!(
            "need 1 ≤ M < N, got M = {marked}, N = {dim}"
        )));
    }
    Ok(())
}

/// Negates the amplitude of every marked index: `I − 2Σ|τ⟩⟨τ|`.
pub fn phase_flip(mut state: StateVector, marked: &MarkedSet) -> Result<StateVector> {
    if marked.n_qubits() != state.n_qubits() {
        return Err(Error::Shape {
            expected: state.n_qubits(),
            found: marked.n_qubits(),
        });
    }
    let amps = state.amplitudes_mut();
    for i in marked.iter() {
        amps[i] = -amps[i];
    }
    Ok(state)
}

/// Inversion about the mean, `2|Ψ⟩⟨Ψ| − I`: each `aᵢ` becomes `2·mean − aᵢ`.
pub fn diffusion(mut state: StateVector) -> StateVector {
    invert_about_mean(state.amplitudes_mut());
    state
}

pub(crate) fn invert_about_mean(amps: &mut [Complex64]) {
    let mean = amps.iter().sum::<Complex64>() / amps.len() as f64;
    let twice = mean * 2.0;
    for a in amps.iter_mut() {
        *a = twice - *a;
    }
}

/// `floor((π/4)·√(N/M))`.
pub fn optimal_iterations(dim: usize, marked: usize) -> Result<usize> {
    check_counts(dim, marked)?;
    Ok((FRAC_PI_4 * (dim as f64 / marked as f64).sqrt()).floor() as usize)
}

/// `sin²((2k+1)·θ)` with `θ = arcsin(√(M/N))`.
pub fn success_probability(dim: usize, marked: usize, k: usize) -> Result<f64> {
    check_counts(dim, marked)?;
    let theta = (marked as f64 / dim as f64).sqrt().asin();
    Ok(((2 * k + 1) as f64 * theta).sin().powi(2))
}

/// Prepares the uniform state, runs the scheduled iterations of phase flip then
/// diffusion, and samples `shots` outcomes when `shots > 0`.
pub fn run_grover(
    n_qubits: usize,
    marked: &MarkedSet,
    schedule: IterationSchedule,
    shots: usize,
    seed: u64,
) -> Result<GroverResult> {
    if marked.n_qubits() != n_qubits {
        return Err(Error::Shape {
            expected: n_qubits,
            found: marked.n_qubits(),
        });
    }
    let mut state = uniform_state(n_qubits)?;
    let dim = state.dim();
    let k = schedule.resolve(dim, marked.len())?;
    for _ in 0..k {
        state = diffusion(phase_flip(state, marked)?);
    }
    let samples = match shots {
        0 => None,
        s => Some(sample_measurements(&state, s, seed)?),
    };
    Ok(GroverResult {
        predicted_success: success_probability(dim, marked.len(), k)?,
        final_state: state,
        iterations_used: k,
        oracle_calls: k,
        samples,
    })
}
