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

//! Classical linear-scan baselines with explicit comparison counting.

use serde::{Deserialize, Serialize};

use crate::database::{CensusRecord, Degree, Gender};

/// Which predicate the scan tests first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QueryOrder {
    GenderFirst,
    EducationFirst,
}

impl QueryOrder {
    pub const ALL: [QueryOrder; 2] = [QueryOrder::GenderFirst, QueryOrder::EducationFirst];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalResult {
    pub names: Vec<String>,
    /// Field tests performed: one per record plus one per first-test survivor.
    pub comparisons: usize,
    pub order: QueryOrder,
}

/// Full scan (no early exit) testing the first field on every record and the
/// second field on survivors of the first.
pub fn linear_search(
    records: &[CensusRecord],
    gender: Gender,
    degree: Degree,
    order: QueryOrder,
) -> ClassicalResult {
    let mut comparisons = 0;
    let mut names = Vec::new();
    for r in records {
        let (first, second) = match order {
            QueryOrder::GenderFirst => (r.gender == gender, r.degree == degree),
            QueryOrder::EducationFirst => (r.degree == degree, r.gender == gender),
        };
        comparisons += 1;
        if !first {
            continue;
        }
        comparisons += 1;
        if second {
            names.push(r.name.clone());
        }
    }
    ClassicalResult {
        names,
        comparisons,
        order,
    }
}
