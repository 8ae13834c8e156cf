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

//! Census records: CSV ingestion, synthetic generation, the `(gender, degree)`
//! bucket index and the brute-force reference filter.
//!
//! CSV layout is `name,gender,degree` with lowercase enum tokens, LF line endings
//! and no quoting, so names may not contain commas.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::distributions::{Bernoulli, Distribution, WeightedIndex};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::composite::{Atom, PhotonMode};
use crate::error::{Error, Result};
use crate::rng::seeded_rng;

pub const CSV_HEADER: &str = "name,gender,degree";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gender {
    Female,
    Male,
}

impl Gender {
    pub const ALL: [Gender; 2] = [Gender::Female, Gender::Male];

    /// Atom whose ground state carries this gender label.
    pub fn atom(self) -> Atom {
        match self {
            Gender::Female => Atom::A1,
            Gender::Male => Atom::A2,
        }
    }

    /// Photon mode that queries this gender.
    pub fn photon_mode(self) -> PhotonMode {
        match self {
            Gender::Female => PhotonMode::ModeA,
            Gender::Male => PhotonMode::ModeB,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Gender::Female => "female",
            Gender::Male => "male",
        }
    }
}

impl fmt::Display for Gender {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Gender {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "female" => Ok(Gender::Female),
            "male" => Ok(Gender::Male),
            other => Err(format!(
                "unknown gender `{other}` (expected female or male)"
            )),
        }
    }
}

/// Educational degree, one per spin basis state of the two-atom register.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Degree {
    HighSchool,
    Bachelor,
    Master,
    Doctorate,
}

impl Degree {
    pub const ALL: [Degree; 4] = [
        Degree::HighSchool,
        Degree::Bachelor,
        Degree::Master,
        Degree::Doctorate,
    ];

    /// Spin basis index `(s₁ s₂)`: `|0₁0₂⟩`=0 high school, `|0₁1₂⟩`=1 bachelor,
    /// `|1₁0₂⟩`=2 master, `|1₁1₂⟩`=3 doctorate.
    pub fn spin_index(self) -> usize {
        match self {
            Degree::HighSchool => 0,
            Degree::Bachelor => 1,
            Degree::Master => 2,
            Degree::Doctorate => 3,
        }
    }

    pub fn from_spin_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn token(self) -> &'static str {
        match self {
            Degree::HighSchool => "highschool",
            Degree::Bachelor => "bachelor",
            Degree::Master => "master",
            Degree::Doctorate => "doctorate",
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Degree {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let token = s.trim().to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|d| d.token() == token)
            .ok_or_else(|| {
                format!(
                    "unknown degree `{token}` (expected highschool, bachelor, master or doctorate)"
                )
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub name: String,
    pub gender: Gender,
    pub degree: Degree,
}

impl CensusRecord {
    pub fn new(name: impl Into<String>, gender: Gender, degree: Degree) -> Self {
        Self {
            name: name.into(),
            gender,
            degree,
        }
    }
}

/// Parses CSV text with the `name,gender,degree` header. Blank lines are skipped;
/// errors carry the 1-based line number.
pub fn parse_records(text: &str) -> Result<Vec<CensusRecord>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')));
    let header = lines.by_ref().find(|(_, l)| !l.trim().is_empty());
    match header {
        Some((_, h)) if h.trim().eq_ignore_ascii_case(CSV_HEADER) => {}
        Some((line, h)) => {
            return Err(Error::Parse {
                line,
                message: format!("expected header `{CSV_HEADER}`, found `{h}`"),
            })
        }
        None => {
            return Err(Error::Parse {
                line: 1,
                message: format!("missing header `{CSV_HEADER}`"),
            })
        }
    }

    let mut records = Vec::new();
    for (line, row) in lines {
        if row.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = row.split(',').collect();
        let [name, gender, degree] = fields.as_slice() else {
            return Err(Error::Parse {
                line,
                message: format!("expected 3 fields, found {}", fields.len()),
            });
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::Parse {
                line,
                message: "empty name".into(),
            });
        }
        let gender = gender
            .parse()
            .map_err(|message| Error::Parse { line, message })?;
        let degree = degree
            .parse()
            .map_err(|message| Error::Parse { line, message })?;
        records.push(CensusRecord::new(name, gender, degree));
    }
    Ok(records)
}

/// Renders records in the ingestion format, header first, one LF-terminated row each.
pub fn serialize_records(records: &[CensusRecord]) -> Result<String> {
    let mut out = String::with_capacity(24 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        if r.name.is_empty() || r.name.contains([',', '\n', '\r']) {
            return Err(Error::Validation(format!(
                "name `{}` cannot be written as CSV",
                r.name
            )));
        }
        out.push_str(&r.name);
        out.push(',');
        out.push_str(r.gender.token());
        out.push(',');
        out.push_str(r.degree.token());
        out.push('\n');
    }
    Ok(out)
}

const GIVEN: [&str; 32] = [
    "Ada", "Alan", "Beatriz", "Bo", "Carmen", "Cy", "Dana", "Dmitri", "Elena", "Emil", "Farah",
    "Felix", "Grace", "Hugo", "Ines", "Ivan", "Jun", "Kavya", "Lars", "Leila", "Marta", "Milo",
    "Nadia", "Omar", "Priya", "Quinn", "Rosa", "Sami", "Tomas", "Uma", "Vera", "Yusuf",
];

const SYLLABLES: [&str; 24] = [
    "ba", "ber", "ca", "den", "do", "fa", "gar", "hol", "ka", "len", "lo", "mar", "mi", "nov",
    "ra", "ren", "sa", "sen", "ta", "ter", "vi", "wal", "ya", "zo",
];

fn random_name(rng: &mut impl Rng) -> String {
    let given = GIVEN[rng.gen_range(0..GIVEN.len())];
    let parts = rng.gen_range(2..=3);
    let mut surname = String::new();
    for _ in 0..parts {
        surname.push_str(SYLLABLES[rng.gen_range(0..SYLLABLES.len())]);
    }
    let mut chars = surname.chars();
    let surname: String = match chars.next() {
        Some(first) => first.to_ascii_uppercase().to_string() + chars.as_str(),
        None => surname,
    };
    format!("{given} {surname}")
}

fn check_distribution(weights: &[f64], what: &str) -> Result<()> {
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::Validation(format!(
            "{what} must be finite and nonnegative: {weights:?}"
        )));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::Validation(format!(
            "{what} must sum to 1, got {total}"
        )));
    }
    Ok(())
}

/// Deterministic synthetic census.
///
/// `gender_split` is the probability a record is female; `degree_weights` follow
/// [`Degree::ALL`] order. Names are unique and the output is sorted by name.
pub fn generate_records(
    seed: u64,
    count: usize,
    gender_split: f64,
    degree_weights: [f64; 4],
) -> Result<Vec<CensusRecord>> {
    if count == 0 {
        return Err(Error::Argument("record count must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&gender_split) {
        return Err(Error::Validation(format!(
            "gender split {gender_split} outside [0, 1]"
        )));
    }
    check_distribution(&degree_weights, "degree weights")?;

    let mut rng = seeded_rng(seed);
    let mut names = BTreeSet::new();
    while names.len() < count {
        let base = random_name(&mut rng);
        let mut name = base.clone();
        let mut suffix = 2;
        while names.contains(&name) {
            name = format!("{base} {suffix}");
            suffix += 1;
        }
        names.insert(name);
    }

    let female = Bernoulli::new(gender_split)
        .map_err(|e| Error::Validation(format!("gender split: {e}")))?;
    let degree = WeightedIndex::new(degree_weights)
        .map_err(|e| Error::Validation(format!("degree weights: {e}")))?;
    Ok(names
        .into_iter()
        .map(|name| {
            let gender = if female.sample(&mut rng) {
                Gender::Female
            } else {
                Gender::Male
            };
            CensusRecord::new(name, gender, Degree::ALL[degree.sample(&mut rng)])
        })
        .collect())
}

/// Classical associative layer mapping each `(gender, degree)` bucket to names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordIndex {
    buckets: BTreeMap<(Gender, Degree), Vec<String>>,
    total: usize,
}

impl RecordIndex {
    /// Names in the bucket, alphabetically ordered.
    pub fn bucket(&self, gender: Gender, degree: Degree) -> &[String] {
        self.buckets
            .get(&(gender, degree))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn buckets(&self) -> impl Iterator<Item = ((Gender, Degree), &[String])> {
        self.buckets.iter().map(|(k, v)| (*k, v.as_slice()))
    }
}

pub fn build_index(records: &[CensusRecord]) -> RecordIndex {
    let mut buckets: BTreeMap<(Gender, Degree), Vec<String>> = Gender::ALL
        .iter()
        .flat_map(|&g| Degree::ALL.iter().map(move |&d| ((g, d), Vec::new())))
        .collect();
    for r in records {
        buckets
            .entry((r.gender, r.degree))
            .or_default()
            .push(r.name.clone());
    }
    for names in buckets.values_mut() {
        names.sort();
    }
    RecordIndex {
        buckets,
        total: records.len(),
    }
}

/// Names matching both predicates, in input order.
pub fn brute_force_filter(records: &[CensusRecord], gender: Gender, degree: Degree) -> Vec<String> {
    records
        .iter()
        .filter(|r| r.gender == gender && r.degree == degree)
        .map(|r| r.name.clone())
        .collect()
}
