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

//! JSON report shapes. Every report carries `schema_version`.

use std::collections::BTreeMap;

use grover2d_core::{Degree, Gender, PhotonMode, QueryOrder};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GroverReport {
    pub schema_version: u32,
    pub n_qubits: usize,
    pub marked: Vec<usize>,
    pub iterations_used: usize,
    pub oracle_calls: usize,
    pub predicted_success: f64,
    pub shots: usize,
    pub seed: u64,
    /// Observed outcome frequencies keyed by basis index; outcomes never seen are omitted.
    pub frequencies: BTreeMap<usize, f64>,
    pub marked_frequency: f64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Bucket {
    pub gender: Gender,
    pub degree: Degree,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct Search2dReport {
    pub schema_version: u32,
    pub gender: Gender,
    pub degree: Degree,
    pub photon_mode: PhotonMode,
    pub oracle_calls: usize,
    pub photon_operations: usize,
    pub shots_used: usize,
    pub post_selected: usize,
    pub post_selection_rate: f64,
    pub decoded_bucket: Bucket,
    pub names: Vec<String>,
    pub brute_force_names: Vec<String>,
    #[serde(rename = "match")]
    pub matches: bool,
    pub seed: u64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ClassicalReport {
    pub schema_version: u32,
    pub gender: Gender,
    pub degree: Degree,
    pub order: QueryOrder,
    pub records: usize,
    pub comparisons: usize,
    pub names: Vec<String>,
}
