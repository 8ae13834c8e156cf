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

//! Complex-amplitude state vectors, single-qubit gates and Born-rule sampling.
//!
//! Basis index `a` runs over `0..2^n` with qubit 0 as the most significant bit, so
//! for a 3-qubit register the index `0b110` means qubits 0 and 1 are `|1⟩`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::distributions::{Distribution, WeightedIndex};

use crate::error::{Error, Result};
use crate::rng::seeded_rng;

/// Largest register the simulator will allocate (2^24 amplitudes, 256 MiB).
pub const MAX_QUBITS: usize = 24;

/// Tolerance for unitarity and norm-preservation checks.
pub const UNITARY_TOLERANCE: f64 = 1e-10;

/// Maximum deviation of the squared norm from 1 accepted as input to measurement.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-6;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2×2 unitary stored row-major as `[g00, g01, g10, g11]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Gate2x2 {
    entries: [Complex64; 4],
}

impl Gate2x2 {
    /// Builds a gate, rejecting entries that are not finite or not unitary within
    /// [`UNITARY_TOLERANCE`].
    pub fn new(entries: [Complex64; 4]) -> Result<Self> {
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Validation("gate entries must be finite".into()));
        }
        let gate = Self { entries };
        if !gate.is_unitary() {
            return Err(Error::Validation(format!(
                "gate {entries:?} is not unitary within {UNITARY_TOLERANCE:e}"
            )));
        }
        Ok(gate)
    }

    pub fn hadamard() -> Self {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Self {
            entries: [h, h, h, -h],
        }
    }

    /// Bit flip. Used as the excitation operator `|G⟩ ↔ |E⟩`.
    pub fn pauli_x() -> Self {
        Self {
            entries: [ZERO, ONE, ONE, ZERO],
        }
    }

    pub fn pauli_z() -> Self {
        Self {
            entries: [ONE, ZERO, ZERO, -ONE],
        }
    }

    pub fn identity() -> Self {
        Self {
            entries: [ONE, ZERO, ZERO, ONE],
        }
    }

    /// Diagonal phase gate `diag(1, e^{iφ})`.
    pub fn phase(phi: f64) -> Self {
        Self {
            entries: [ONE, ZERO, ZERO, Complex64::from_polar(1.0, phi)],
        }
    }

    pub fn entries(&self) -> [Complex64; 4] {
        self.entries
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let [a, b, c, d] = self.entries;
        Self {
            entries: [a.conj(), c.conj(), b.conj(), d.conj()],
        }
    }

    /// Checks `G†G = I` elementwise within [`UNITARY_TOLERANCE`].
    pub fn is_unitary(&self) -> bool {
        let [a, b, c, d] = self.entries;
        let product = [
            a.conj() * a + c.conj() * c,
            a.conj() * b + c.conj() * d,
            b.conj() * a + d.conj() * c,
            b.conj() * b + d.conj() * d,
        ];
        let identity = [ONE, ZERO, ZERO, ONE];
        product
            .iter()
            .zip(identity.iter())
            .all(|(p, i)| (p - i).norm() <= UNITARY_TOLERANCE)
    }
}

/// Full statevector over `2^n_qubits` computational basis states.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

fn check_width(n_qubits: usize) -> Result<()> {
    if (1..=MAX_QUBITS).contains(&n_qubits) {
        Ok(())
    } else {
        Err(Error::Size {
            n_qubits,
            max: MAX_QUBITS,
        })
    }
}

impl StateVector {
    /// The computational basis state `|index⟩`.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        check_width(n_qubits)?;
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::Argument(format!(
                "basis index {index} out of range for {dim} states"
            )));
        }
        let mut amplitudes = vec![ZERO; dim];
        amplitudes[index] = ONE;
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    /// `|0…0⟩`.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    /// Wraps raw amplitudes. The length must be a power of two `2^n` with
    /// `1 ≤ n ≤ MAX_QUBITS` and every entry finite. Normalization is not enforced
    /// here; measurement rejects unnormalized states.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Validation(format!(
                "amplitude count {len} is not a power of two ≥ 2"
            )));
        }
        let n_qubits = len.trailing_zeros() as usize;
        check_width(n_qubits)?;
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Validation("amplitudes must be finite".into()));
        }
        Ok(Self {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    /// Number of basis states, `2^n_qubits`.
    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    /// `Σ |aᵢ|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(Complex64::norm_sqr).sum()
    }

    /// Bit mask selecting `qubit` inside a basis index (qubit 0 is the MSB).
    pub fn qubit_mask(&self, qubit: usize) -> Result<usize> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitIndex {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(1usize << (self.n_qubits - 1 - qubit))
    }

    /// Applies `gate` to `qubit` in place by updating each amplitude pair that
    /// differs only in that qubit.
    pub fn apply_gate(&mut self, qubit: usize, gate: &Gate2x2) -> Result<()> {
        let mask = self.qubit_mask(qubit)?;
        let [g00, g01, g10, g11] = gate.entries;
        for i in 0..self.amplitudes.len() {
            if i & mask == 0 {
                let j = i | mask;
                let a = self.amplitudes[i];
                let b = self.amplitudes[j];
                self.amplitudes[i] = g00 * a + g01 * b;
                self.amplitudes[j] = g10 * a + g11 * b;
            }
        }
        Ok(())
    }

    /// Applies `gate` to `target` only on basis states where `control` reads
    /// `control_value`.
    pub fn apply_controlled_gate(
        &mut self,
        control: usize,
        control_value: bool,
        target: usize,
        gate: &Gate2x2,
    ) -> Result<()> {
        let control_mask = self.qubit_mask(control)?;
        let target_mask = self.qubit_mask(target)?;
        if control == target {
            return Err(Error::Argument(format!(
                "control and target are both qubit {control}"
            )));
        }
        let want = if control_value { control_mask } else { 0 };
        let [g00, g01, g10, g11] = gate.entries;
        for i in 0..self.amplitudes.len() {
            if i & target_mask == 0 && i & control_mask == want {
                let j = i | target_mask;
                let a = self.amplitudes[i];
                let b = self.amplitudes[j];
                self.amplitudes[i] = g00 * a + g01 * b;
                self.amplitudes[j] = g10 * a + g11 * b;
            }
        }
        Ok(())
    }

    fn check_normalized(&self) -> Result<()> {
        let deviation = (self.norm_sqr() - 1.0).abs();
        if deviation > NORMALIZATION_TOLERANCE || !deviation.is_finite() {
            return Err(Error::Normalization { deviation });
        }
        Ok(())
    }
}

/// `H^{⊗n} |0…0⟩`: every amplitude equals `1/√(2^n)`.
pub fn uniform_state(n_qubits: usize) -> Result<StateVector> {
    check_width(n_qubits)?;
    let dim = 1usize << n_qubits;
    let amp = Complex64::new(1.0 / (dim as f64).sqrt(), 0.0);
    Ok(StateVector {
        n_qubits,
        amplitudes: vec![amp; dim],
    })
}

/// Value-returning wrapper over [`StateVector::apply_gate`].
pub fn apply_single_qubit_gate(
    mut state: StateVector,
    qubit: usize,
    gate: &Gate2x2,
) -> Result<StateVector> {
    if !gate.is_unitary() {
        return Err(Error::Validation("gate is not unitary".into()));
    }
    state.apply_gate(qubit, gate)?;
    Ok(state)
}

/// Outcome probabilities `|aᵢ|²`.
pub fn born_probabilities(state: &StateVector) -> Result<Vec<f64>> {
    state.check_normalized()?;
    Ok(state.amplitudes.iter().map(Complex64::norm_sqr).collect())
}

/// Draws `shots` independent basis outcomes from the Born distribution of `state`.
///
/// The generator is ChaCha8 seeded from `seed` (see [`crate::rng::seeded_rng`]), so equal
/// `(state, shots, seed)` always produce the same sequence.
pub fn sample_measurements(state: &StateVector, shots: usize, seed: u64) -> Result<Vec<usize>> {
    if shots == 0 {
        return Err(Error::Argument("shots must be at least 1".into()));
    }
    let probabilities = born_probabilities(state)?;
    let dist = WeightedIndex::new(&probabilities)
        .map_err(|e| Error::Validation(format!("invalid outcome distribution: {e}")))?;
    let mut rng = seeded_rng(seed);
    Ok((0..shots).map(|_| dist.sample(&mut rng)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn assert_close(a: &[Complex64], b: &[Complex64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (i, (x, y)) in a.iter().zip(b).enumerate() {
            assert!((x - y).norm() <= tol, "index {i}: {x} vs {y}");
        }
    }

    #[test]
    fn uniform_small_registers() {
        let s1 = uniform_state(1).unwrap();
        assert_close(
            s1.amplitudes(),
            &[c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)],
            1e-15,
        );
        let s2 = uniform_state(2).unwrap();
        assert_close(s2.amplitudes(), &[c(0.5); 4], 1e-15);
    }

    #[test]
    fn uniform_ten_qubits_matches_dense_hadamard_product() {
        let state = uniform_state(10).unwrap();
        assert!(state
            .amplitudes()
            .iter()
            .all(|a| (a - c(0.03125)).norm() < 1e-15));

        let h_all = dense::hadamard_all(10);
        let expected = dense::matvec(&h_all, &dense::basis(1024, 0));
        assert_close(state.amplitudes(), &expected, 1e-12);
    }

    #[test]
    fn uniform_rejects_out_of_range_width() {
        assert!(matches!(uniform_state(0), Err(Error::Size { .. })));
        assert!(matches!(uniform_state(25), Err(Error::Size { .. })));
    }

    #[test]
    fn single_qubit_gate_examples() {
        let s = apply_single_qubit_gate(StateVector::zero(1).unwrap(), 0, &Gate2x2::hadamard())
            .unwrap();
        assert_close(s.amplitudes(), &[c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)], 1e-15);

        let x = apply_single_qubit_gate(s.clone(), 0, &Gate2x2::pauli_x()).unwrap();
        assert_close(x.amplitudes(), s.amplitudes(), 1e-15);

        let mut two = StateVector::zero(2).unwrap();
        two.apply_gate(1, &Gate2x2::hadamard()).unwrap();
        two.apply_gate(0, &Gate2x2::hadamard()).unwrap();
        let dense_h = dense::kron(&dense::hadamard(), &dense::hadamard());
        let expected = dense::matvec(&dense_h, &dense::basis(4, 0));
        assert_close(two.amplitudes(), &expected, 1e-12);
        assert_close(
            two.amplitudes(),
            uniform_state(2).unwrap().amplitudes(),
            1e-12,
        );
    }

    #[test]
    fn gate_errors() {
        let s = StateVector::zero(2).unwrap();
        assert!(matches!(
            apply_single_qubit_gate(s.clone(), 2, &Gate2x2::hadamard()),
            Err(Error::QubitIndex {
                qubit: 2,
                n_qubits: 2
            })
        ));
        assert!(matches!(
            Gate2x2::new([c(1.0), c(1.0), c(0.0), c(1.0)]),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn qubit_zero_is_most_significant() {
        let mut s = StateVector::zero(3).unwrap();
        s.apply_gate(0, &Gate2x2::pauli_x()).unwrap();
        assert_eq!(s.amplitudes()[0b100], c(1.0));
    }

    #[test]
    fn born_examples() {
        let basis = StateVector::from_amplitudes(vec![c(1.0), c(0.0)]).unwrap();
        assert_eq!(born_probabilities(&basis).unwrap(), vec![1.0, 0.0]);
        let p = born_probabilities(&uniform_state(2).unwrap()).unwrap();
        for x in p {
            assert!((x - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn born_rejects_unnormalized() {
        let s = StateVector::from_amplitudes(vec![c(1.0), c(1.0)]).unwrap();
        assert!(matches!(
            born_probabilities(&s),
            Err(Error::Normalization { .. })
        ));
    }

    #[test]
    fn sampling_basis_state_is_deterministic() {
        let s = StateVector::basis(2, 3).unwrap();
        for seed in [0, 1, 99] {
            assert_eq!(sample_measurements(&s, 100, seed).unwrap(), vec![3; 100]);
        }
    }

    #[test]
    fn sampling_uniform_within_four_sigma() {
        let s = uniform_state(2).unwrap();
        let shots = 40_000;
        let samples = sample_measurements(&s, shots, 7).unwrap();
        let sigma = (shots as f64 * 0.25 * 0.75).sqrt();
        let mut counts = [0usize; 4];
        for x in &samples {
            counts[*x] += 1;
        }
        for count in counts {
            assert!(
                (count as f64 - 10_000.0).abs() < 4.0 * sigma,
                "count {count}"
            );
        }
        assert_eq!(samples, sample_measurements(&s, shots, 7).unwrap());
    }

    #[test]
    fn sampling_rejects_zero_shots() {
        let s = uniform_state(1).unwrap();
        assert!(matches!(
            sample_measurements(&s, 0, 1),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn controlled_gate_only_touches_control_branch() {
        let mut s = uniform_state(2).unwrap();
        s.apply_controlled_gate(0, true, 1, &Gate2x2::pauli_z())
            .unwrap();
        assert_close(s.amplitudes(), &[c(0.5), c(0.5), c(0.5), c(-0.5)], 1e-15);
        assert!(s
            .apply_controlled_gate(1, true, 1, &Gate2x2::pauli_x())
            .is_err());
    }

    fn arb_gate() -> impl Strategy<Value = Gate2x2> {
        // U = e^{iα} [[e^{iβ}cosθ, e^{iγ}sinθ], [-e^{-iγ}sinθ, e^{-iβ}cosθ]]
        (0.0..6.3f64, 0.0..6.3f64, 0.0..6.3f64, 0.0..1.6f64).prop_map(
            |(alpha, beta, gamma, theta)| {
                let g = Complex64::from_polar(1.0, alpha);
                let (s, co) = theta.sin_cos();
                Gate2x2::new([
                    g * Complex64::from_polar(co, beta),
                    g * Complex64::from_polar(s, gamma),
                    -g * Complex64::from_polar(s, -gamma),
                    g * Complex64::from_polar(co, -beta),
                ])
                .unwrap()
            },
        )
    }

    fn arb_state(n: usize) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1 << n).prop_filter_map(
            "nonzero",
            move |raw| {
                let amps: Vec<Complex64> =
                    raw.into_iter().map(|(r, i)| Complex64::new(r, i)).collect();
                let norm = amps.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
                (norm > 1e-3).then(|| {
                    StateVector::from_amplitudes(amps.into_iter().map(|a| a / norm).collect())
                        .unwrap()
                })
            },
        )
    }

    proptest! {
        #[test]
        fn gates_preserve_norm_and_match_dense(
            (n, state) in (1usize..=4).prop_flat_map(|n| (Just(n), arb_state(n))),
            ops in proptest::collection::vec((0usize..4, arb_gate()), 1..20),
        ) {
            let mut s = state.clone();
            let mut reference: Vec<Complex64> = state.amplitudes().to_vec();
            for (q, g) in &ops {
                let q = q % n;
                s.apply_gate(q, g).unwrap();
                reference = dense::matvec(&dense::embed_single(n, q, &g.entries()), &reference);
                prop_assert!((s.norm_sqr() - 1.0).abs() < UNITARY_TOLERANCE);
            }
            for (x, y) in s.amplitudes().iter().zip(&reference) {
                prop_assert!((x - y).norm() < UNITARY_TOLERANCE);
            }
        }

        #[test]
        fn gate_then_dagger_restores(
            (n, state) in (1usize..=6).prop_flat_map(|n| (Just(n), arb_state(n))),
            q in 0usize..6,
            g in arb_gate(),
        ) {
            let q = q % n;
            let mut s = state.clone();
            s.apply_gate(q, &g).unwrap();
            s.apply_gate(q, &g.dagger()).unwrap();
            for (x, y) in s.amplitudes().iter().zip(state.amplitudes()) {
                prop_assert!((x - y).norm() < UNITARY_TOLERANCE);
            }
        }

        #[test]
        fn hadamard_is_an_involution(
            (n, state) in (1usize..=6).prop_flat_map(|n| (Just(n), arb_state(n))),
            q in 0usize..6,
        ) {
            let q = q % n;
            let mut s = state.clone();
            s.apply_gate(q, &Gate2x2::hadamard()).unwrap();
            s.apply_gate(q, &Gate2x2::hadamard()).unwrap();
            for (x, y) in s.amplitudes().iter().zip(state.amplitudes()) {
                prop_assert!((x - y).norm() < UNITARY_TOLERANCE);
            }
        }
    }
}
