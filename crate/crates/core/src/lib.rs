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

//! Statevector simulation of Grover search and of a two-dimensional search that
//! encodes one query field in atomic energy levels and the other in nuclear
//! spins, with a classical linear-scan baseline for comparison.
//!
//! ```
//! use grover2d_core::{run_grover, IterationSchedule, MarkedSet};
//!
//! let marked = MarkedSet::single(2, 2).unwrap();
//! let result = run_grover(2, &marked, IterationSchedule::Auto, 0, 0).unwrap();
//! assert_eq!(result.iterations_used, 1);
//! assert!((marked.mass(&result.final_state) - 1.0).abs() < 1e-9);
//! ```

pub mod benchmark;
pub mod classical;
pub mod composite;
pub mod database;
pub mod error;
pub mod grover;
pub mod rng;
pub mod statevector;

#[cfg(test)]
#[path = "../tests/common/dense.rs"]
mod dense;

pub use benchmark::{bench_csv, loglog_slope, run_bench, BenchConfig, BenchRow};
pub use classical::{linear_search, ClassicalResult, QueryOrder};
pub use composite::{
    apply_photon_mode, build_composite, joint_measure, search_two_dimensional,
    search_two_dimensional_weighted, spin_grover, Atom, CompositeState, EnergyLevel, JointOutcome,
    PhotonMode, SearchOutcome,
};
pub use database::{
    brute_force_filter, build_index, generate_records, parse_records, serialize_records,
    CensusRecord, Degree, Gender, RecordIndex,
};
pub use error::{Error, Result};
pub use grover::{
    diffusion, optimal_iterations, phase_flip, run_grover, success_probability, GroverResult,
    IterationSchedule, MarkedSet,
};
pub use statevector::{
    apply_single_qubit_gate, born_probabilities, sample_measurements, uniform_state, Gate2x2,
    StateVector,
};
