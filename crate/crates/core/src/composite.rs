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

//! Two-dimensional search over a composite two-atom register.
//!
//! The four-qubit register is laid out as `(branch, energy, spin₁, spin₂)`:
//!
//! * `branch` labels which atom's ground/excited pair a term belongs to
//!   (`0` = A₁, encoded female; `1` = A₂, encoded male),
//! * `energy` is that atom's level (`0` = ground `|G⟩`, `1` = excited `|E⟩`),
//! * `spin₁ spin₂` are the two nuclear spins, carrying the degree.
//!
//! So `|G₁,a⟩` sits at index `a`, `|E₁,a⟩` at `4 + a`, `|G₂,a⟩` at `8 + a` and
//! `|E₂,a⟩` at `12 + a`. A photon mode is an energy flip controlled on its
//! branch, and the spin Grover step acts on the two low qubits of every block,
//! so the two query dimensions are carried by commuting operators.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::database::{Degree, Gender, RecordIndex};
use crate::error::{Error, Result};
use crate::grover::{invert_about_mean, optimal_iterations};
use crate::statevector::{sample_measurements, Gate2x2, StateVector};

pub const COMPOSITE_QUBITS: usize = 4;
pub const BRANCH_QUBIT: usize = 0;
pub const ENERGY_QUBIT: usize = 1;
pub const SPIN_STATES: usize = 4;

pub const DEFAULT_GENDER_WEIGHTS: [f64; 2] = [0.5, 0.5];
pub const DEFAULT_SPIN_DISTRIBUTION: [f64; 4] = [0.25; 4];

/// Probability below which a component counts as absent.
const PRESENCE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Atom {
    A1,
    A2,
}

impl Atom {
    pub fn gender(self) -> Gender {
        match self {
            Atom::A1 => Gender::Female,
            Atom::A2 => Gender::Male,
        }
    }

    fn branch_bit(self) -> bool {
        matches!(self, Atom::A2)
    }

    fn from_branch_bit(bit: bool) -> Self {
        if bit {
            Atom::A2
        } else {
            Atom::A1
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Atom::A1 => "A1",
            Atom::A2 => "A2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnergyLevel {
    Ground,
    Excited,
}

impl EnergyLevel {
    fn bit(self) -> usize {
        match self {
            EnergyLevel::Ground => 0,
            EnergyLevel::Excited => 1,
        }
    }
}

/// A field mode resonant with exactly one atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhotonMode {
    /// Absorbed only by A₁.
    ModeA,
    /// Absorbed only by A₂.
    ModeB,
}

impl PhotonMode {
    pub fn atom(self) -> Atom {
        match self {
            PhotonMode::ModeA => Atom::A1,
            PhotonMode::ModeB => Atom::A2,
        }
    }
}

/// Basis index of `|atom branch, level, spin⟩`.
pub fn composite_index(atom: Atom, level: EnergyLevel, spin: usize) -> usize {
    debug_assert!(spin < SPIN_STATES);
    (usize::from(atom.branch_bit()) << 3) | (level.bit() << 2) | spin
}

#[derive(Clone, Debug, PartialEq)]
pub struct CompositeState {
    state: StateVector,
}

impl CompositeState {
    /// Wraps a normalized 4-qubit statevector.
    pub fn from_state(state: StateVector) -> Result<Self> {
        if state.n_qubits() != COMPOSITE_QUBITS {
            return Err(Error::Shape {
                expected: COMPOSITE_QUBITS,
                found: state.n_qubits(),
            });
        }
        let deviation = (state.norm_sqr() - 1.0).abs();
        if deviation > 1e-10 {
            return Err(Error::Normalization { deviation });
        }
        Ok(Self { state })
    }

    pub fn state(&self) -> &StateVector {
        &self.state
    }

    pub fn into_state(self) -> StateVector {
        self.state
    }

    pub fn amplitude(&self, atom: Atom, level: EnergyLevel, spin: usize) -> Complex64 {
        self.state.amplitudes()[composite_index(atom, level, spin)]
    }

    /// `(Σₐ|ψ₁(a)|², Σₐ|ψ₂(a)|²)` over both energy levels of each branch.
    pub fn branch_weights(&self) -> (f64, f64) {
        let (a1, a2) = self.state.amplitudes().split_at(8);
        let mass = |s: &[Complex64]| s.iter().map(Complex64::norm_sqr).sum::<f64>();
        (mass(a1), mass(a2))
    }

    /// Probability of each spin basis state, summed over branch and energy.
    pub fn spin_marginal(&self) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, a) in self.state.amplitudes().iter().enumerate() {
            out[i % SPIN_STATES] += a.norm_sqr();
        }
        out
    }

    /// Probability that `atom`'s branch is in `level`.
    pub fn level_mass(&self, atom: Atom, level: EnergyLevel) -> f64 {
        (0..SPIN_STATES)
            .map(|s| self.amplitude(atom, level, s).norm_sqr())
            .sum()
    }
}

fn check_weights(weights: &[f64], what: &str) -> Result<()> {
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::Validation(format!(
            "{what} must be nonnegative: {weights:?}"
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

/// Product state `Σₐ (√w₁·√pₐ |G₁,a⟩ + √w₂·√pₐ |G₂,a⟩)` with both atoms in the
/// ground level.
pub fn build_composite(
    gender_weights: [f64; 2],
    spin_distribution: [f64; 4],
) -> Result<CompositeState> {
    check_weights(&gender_weights, "gender weights")?;
    check_weights(&spin_distribution, "spin distribution")?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << COMPOSITE_QUBITS];
    for (atom, w) in [(Atom::A1, gender_weights[0]), (Atom::A2, gender_weights[1])] {
        for (spin, p) in spin_distribution.iter().enumerate() {
            amps[composite_index(atom, EnergyLevel::Ground, spin)] =
                Complex64::new((w * p).sqrt(), 0.0);
        }
    }
    // Renormalize away the ≤1e-9 slack allowed in the weight sums.
    let norm = amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    CompositeState::from_state(StateVector::from_amplitudes(amps)?)
}

/// Raw branch-controlled energy flip `|G⟩ ↔ |E⟩` on `atom`'s branch, with no
/// absorption bookkeeping. Self-inverse.
pub fn flip_energy(mut state: StateVector, atom: Atom) -> Result<StateVector> {
    state.apply_controlled_gate(
        BRANCH_QUBIT,
        atom.branch_bit(),
        ENERGY_QUBIT,
        &Gate2x2::pauli_x(),
    )?;
    Ok(state)
}

/// Absorbs one photon in `mode`: its atom's branch jumps from ground to excited,
/// the other branch and the spins are untouched.
pub fn apply_photon_mode(state: CompositeState, mode: PhotonMode) -> Result<CompositeState> {
    let atom = mode.atom();
    if state.level_mass(atom, EnergyLevel::Excited) > PRESENCE_TOLERANCE {
        return Err(Error::DoubleAbsorption(atom));
    }
    Ok(CompositeState {
        state: flip_energy(state.state, atom)?,
    })
}

/// Spin Grover iterations for the 4-state register with one marked degree.
pub fn spin_grover_iterations() -> usize {
    optimal_iterations(SPIN_STATES, 1).expect("4 states, 1 marked is a valid Grover instance")
}

/// Runs the 2-qubit Grover search for `target` on the spin register, identically
/// in every (branch, energy) block.
pub fn spin_grover(mut state: CompositeState, target: Degree) -> CompositeState {
    let marginal = state.spin_marginal();
    if marginal.iter().any(|p| (p - 0.25).abs() > 1e-9) {
        log::warn!(
            "spin marginal {marginal:?} is not uniform; one Grover iteration will not reach certainty"
        );
    }
    let marked = target.spin_index();
    for _ in 0..spin_grover_iterations() {
        for block in state.state.amplitudes_mut().chunks_exact_mut(SPIN_STATES) {
            block[marked] = -block[marked];
            invert_about_mean(block);
        }
    }
    state
}

/// One decoded shot of the joint energy + spin measurement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JointOutcome {
    pub excited_atom: Option<Atom>,
    pub spin_index: usize,
    pub decoded: (Gender, Degree),
}

impl JointOutcome {
    pub fn from_basis_index(index: usize) -> Self {
        let atom = Atom::from_branch_bit(index & 0b1000 != 0);
        let excited = index & 0b0100 != 0;
        let spin_index = index % SPIN_STATES;
        let degree = Degree::from_spin_index(spin_index).expect("spin index is below 4");
        Self {
            excited_atom: excited.then_some(atom),
            spin_index,
            decoded: (atom.gender(), degree),
        }
    }
}

pub fn joint_measure(state: &CompositeState, shots: usize, seed: u64) -> Result<Vec<JointOutcome>> {
    Ok(sample_measurements(&state.state, shots, seed)?
        .into_iter()
        .map(JointOutcome::from_basis_index)
        .collect())
}

/// Result of a two-dimensional query, with the retrieved bucket and counters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub gender: Gender,
    pub degree: Degree,
    pub photon_mode: PhotonMode,
    /// Most frequent `(gender, degree)` among post-selected shots.
    pub decoded_bucket: (Gender, Degree),
    pub names: Vec<String>,
    pub oracle_calls: usize,
    pub photon_operations: usize,
    pub shots_used: usize,
    pub post_selected: usize,
    pub post_selection_rate: f64,
}

/// [`search_two_dimensional_weighted`] with equal gender branches.
pub fn search_two_dimensional(
    db: &RecordIndex,
    gender: Gender,
    degree: Degree,
    shots: usize,
    seed: u64,
) -> Result<SearchOutcome> {
    search_two_dimensional_weighted(db, gender, degree, DEFAULT_GENDER_WEIGHTS, shots, seed)
}

/// Full pipeline: build the composite state, absorb the gender's photon mode,
/// run the spin Grover step for `degree`, measure jointly, keep the shots whose
/// excited atom matches `gender`, and look up the modal bucket in `db`.
pub fn search_two_dimensional_weighted(
    db: &RecordIndex,
    gender: Gender,
    degree: Degree,
    gender_weights: [f64; 2],
    shots: usize,
    seed: u64,
) -> Result<SearchOutcome> {
    if db.is_empty() {
        return Err(Error::Argument("record database is empty".into()));
    }
    if shots == 0 {
        return Err(Error::Argument("shots must be at least 1".into()));
    }
    let mode = gender.photon_mode();
    let state = build_composite(gender_weights, DEFAULT_SPIN_DISTRIBUTION)?;
    let state = apply_photon_mode(state, mode)?;
    let state = spin_grover(state, degree);
    let outcomes = joint_measure(&state, shots, seed)?;

    let mut counts: BTreeMap<(Gender, Degree), usize> = BTreeMap::new();
    let mut post_selected = 0;
    for o in outcomes
        .iter()
        .filter(|o| o.excited_atom == Some(gender.atom()))
    {
        post_selected += 1;
        *counts.entry(o.decoded).or_default() += 1;
    }
    // Ties resolve to the smallest bucket key.
    let decoded_bucket = counts
        .iter()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
        .map(|(bucket, _)| *bucket)
        .ok_or(Error::PostSelectionExhausted { shots })?;

    Ok(SearchOutcome {
        gender,
        degree,
        photon_mode: mode,
        decoded_bucket,
        names: db.bucket(decoded_bucket.0, decoded_bucket.1).to_vec(),
        oracle_calls: spin_grover_iterations(),
        photon_operations: 1,
        shots_used: shots,
        post_selected,
        post_selection_rate: post_selected as f64 / shots as f64,
    })
}
