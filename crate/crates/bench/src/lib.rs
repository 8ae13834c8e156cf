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

//! Workload fixtures shared by the criterion benches.

use grover2d_core::{generate_records, CensusRecord, MarkedSet, RecordIndex};

/// Single marked state in the middle of an `n_qubits` register.
pub fn middle_target(n_qubits: usize) -> MarkedSet {
    MarkedSet::single(n_qubits, (1 << n_qubits) / 2 + 1).expect("n_qubits within simulator range")
}

/// Uniform census of `count` records.
pub fn census(count: usize) -> Vec<CensusRecord> {
    generate_records(11, count, 0.5, [0.25; 4]).expect("valid generator parameters")
}

pub fn census_index(count: usize) -> RecordIndex {
    grover2d_core::build_index(&census(count))
}
