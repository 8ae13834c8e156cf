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

//! Dense-matrix reference operators. Test-only: builds explicit 2^n × 2^n
//! matrices from Kronecker products and outer products and multiplies them out,
//! sharing no code with the strided simulator.

#![allow(dead_code)]

use num_complex::Complex64;

pub type Matrix = Vec<Vec<Complex64>>;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| if i == j { c(1.0) } else { c(0.0) })
                .collect()
        })
        .collect()
}

pub fn hadamard() -> Matrix {
    let h = 1.0 / 2f64.sqrt();
    vec![vec![c(h), c(h)], vec![c(h), c(-h)]]
}

pub fn pauli_x() -> Matrix {
    vec![vec![c(0.0), c(1.0)], vec![c(1.0), c(0.0)]]
}

pub fn from_row_major(e: &[Complex64; 4]) -> Matrix {
    vec![vec![e[0], e[1]], vec![e[2], e[3]]]
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let (ca, cb) = (a[0].len(), b[0].len());
    let mut out = vec![vec![c(0.0); ca * cb]; ra * rb];
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let inner = b.len();
    let mut out = vec![vec![c(0.0); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = c(0.0);
            for k in 0..inner {
                acc += a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn matvec(a: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn basis(dim: usize, index: usize) -> Vec<Complex64> {
    let mut v = vec![c(0.0); dim];
    v[index] = c(1.0);
    v
}

/// `I ⊗ … ⊗ G ⊗ … ⊗ I` with `G` at position `qubit`, leftmost factor = qubit 0.
pub fn embed_single(n_qubits: usize, qubit: usize, gate: &[Complex64; 4]) -> Matrix {
    let mut m = vec![vec![c(1.0)]];
    for q in 0..n_qubits {
        let factor = if q == qubit {
            from_row_major(gate)
        } else {
            identity(2)
        };
        m = kron(&m, &factor);
    }
    m
}

pub fn hadamard_all(n_qubits: usize) -> Matrix {
    let mut m = vec![vec![c(1.0)]];
    for _ in 0..n_qubits {
        m = kron(&m, &hadamard());
    }
    m
}

/// `I − 2 Σ |τ⟩⟨τ|`.
pub fn phase_flip(dim: usize, marked: &[usize]) -> Matrix {
    let mut m = identity(dim);
    for &t in marked {
        let tau = basis(dim, t);
        for i in 0..dim {
            for j in 0..dim {
                m[i][j] -= c(2.0) * tau[i] * tau[j].conj();
            }
        }
    }
    m
}

/// `2|Ψ⟩⟨Ψ| − I` with `|Ψ⟩ = H^{⊗n}|0⟩`.
pub fn diffusion(n_qubits: usize) -> Matrix {
    let dim = 1 << n_qubits;
    let psi = matvec(&hadamard_all(n_qubits), &basis(dim, 0));
    let mut m = identity(dim);
    for i in 0..dim {
        for j in 0..dim {
            m[i][j] = c(2.0) * psi[i] * psi[j].conj() - m[i][j];
        }
    }
    m
}

/// `((2|Ψ⟩⟨Ψ|−I)(I−2Σ|τ⟩⟨τ|))^k |Ψ⟩`.
pub fn grover_state(n_qubits: usize, marked: &[usize], k: usize) -> Vec<Complex64> {
    let dim = 1 << n_qubits;
    let iteration = matmul(&diffusion(n_qubits), &phase_flip(dim, marked));
    let mut v = matvec(&hadamard_all(n_qubits), &basis(dim, 0));
    for _ in 0..k {
        v = matvec(&iteration, &v);
    }
    v
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}
