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

//! End-to-end two-dimensional search against the classical reference filter.

use std::collections::BTreeSet;

use grover2d_core::composite::{flip_energy, DEFAULT_SPIN_DISTRIBUTION};
use grover2d_core::{
    apply_photon_mode, brute_force_filter, build_composite, build_index, generate_records,
    linear_search, run_grover, search_two_dimensional, spin_grover, Atom, CensusRecord, Degree,
    Gender, IterationSchedule, MarkedSet, PhotonMode, QueryOrder,
};
use proptest::prelude::*;

fn as_set(names: &[String]) -> BTreeSet<&str> {
    names.iter().map(String::as_str).collect()
}

#[test]
fn female_master_on_generated_db() {
    let records = generate_records(11, 64, 0.5, [0.25; 4]).unwrap();
    let index = build_index(&records);
    let out = search_two_dimensional(&index, Gender::Female, Degree::Master, 1000, 7).unwrap();
    let oracle = brute_force_filter(&records, Gender::Female, Degree::Master);
    assert_eq!(as_set(&out.names), as_set(&oracle));
    assert!((out.post_selection_rate - 0.5).abs() <= 0.06);
    assert_eq!(out.photon_mode, PhotonMode::ModeA);
    assert_eq!(out.decoded_bucket, (Gender::Female, Degree::Master));
}

#[test]
fn male_doctorate_on_symmetric_db() {
    let records = generate_records(3, 256, 0.5, [0.25; 4]).unwrap();
    let index = build_index(&records);
    let out = search_two_dimensional(&index, Gender::Male, Degree::Doctorate, 1000, 2).unwrap();
    assert_eq!(out.photon_mode, PhotonMode::ModeB);
    assert_eq!(
        as_set(&out.names),
        as_set(&brute_force_filter(
            &records,
            Gender::Male,
            Degree::Doctorate
        ))
    );
}

#[test]
fn quantum_and_classical_retrieve_the_same_names() {
    let records = generate_records(8, 500, 0.4, [0.1, 0.4, 0.3, 0.2]).unwrap();
    let index = build_index(&records);
    for g in Gender::ALL {
        for d in Degree::ALL {
            let quantum = search_two_dimensional(&index, g, d, 400, 1).unwrap();
            for order in QueryOrder::ALL {
                let classical = linear_search(&records, g, d, order);
                assert_eq!(as_set(&quantum.names), as_set(&classical.names));
            }
        }
    }
}

#[test]
fn dimensional_cost_matches_plain_two_qubit_grover() {
    let index = build_index(&[CensusRecord::new("Ada", Gender::Female, Degree::Master)]);
    let plain = run_grover(
        2,
        &MarkedSet::single(2, Degree::Master.spin_index()).unwrap(),
        IterationSchedule::Auto,
        0,
        0,
    )
    .unwrap();
    for g in Gender::ALL {
        for d in Degree::ALL {
            let out = search_two_dimensional(&index, g, d, 200, 5).unwrap();
            assert_eq!(out.oracle_calls, plain.oracle_calls);
            assert_eq!(out.photon_operations, 1);
        }
    }
}

#[test]
fn raw_flip_squared_is_identity_for_both_atoms() {
    let s = build_composite([0.3, 0.7], [0.1, 0.2, 0.3, 0.4])
        .unwrap()
        .into_state();
    for atom in [Atom::A1, Atom::A2] {
        let back = flip_energy(flip_energy(s.clone(), atom).unwrap(), atom).unwrap();
        assert_eq!(back, s);
    }
}

fn normalized<const N: usize>(raw: [f64; N]) -> [f64; N] {
    let total: f64 = raw.iter().sum();
    raw.map(|x| x / total)
}

proptest! {
    #[test]
    fn excitation_and_spin_grover_commute(
        w in 0.0..=1.0f64,
        spins in proptest::array::uniform4(0.01..1.0f64),
        mode in prop_oneof![Just(PhotonMode::ModeA), Just(PhotonMode::ModeB)],
        d in 0usize..4,
    ) {
        let state = build_composite([w, 1.0 - w], normalized(spins)).unwrap();
        let degree = Degree::ALL[d];
        let a = spin_grover(apply_photon_mode(state.clone(), mode).unwrap(), degree);
        let b = apply_photon_mode(spin_grover(state, degree), mode).unwrap();
        for (x, y) in a.state().amplitudes().iter().zip(b.state().amplitudes()) {
            prop_assert!((x - y).norm() < 1e-12);
        }
        prop_assert!((a.state().norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn spin_certainty_after_default_pipeline(w in 0.0..=1.0f64, d in 0usize..4, g in 0usize..2) {
        let degree = Degree::ALL[d];
        let gender = Gender::ALL[g];
        let state = build_composite([w, 1.0 - w], DEFAULT_SPIN_DISTRIBUTION).unwrap();
        let state = spin_grover(apply_photon_mode(state, gender.photon_mode()).unwrap(), degree);
        let off_target: f64 = state
            .spin_marginal()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != degree.spin_index())
            .map(|(_, p)| p)
            .sum();
        prop_assert!(off_target < 1e-9);
    }
}
