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

use thiserror::Error;

use crate::composite::Atom;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Register width outside the supported `1..=MAX_QUBITS` range.
    #[error("register size error: {n_qubits} qubits requested, supported range is 1..={max}")]
    Size { n_qubits: usize, max: usize },

    #[error("qubit index {qubit} out of range for a {n_qubits}-qubit register")]
    QubitIndex { qubit: usize, n_qubits: usize },

    #[error("validation error: {0}")]
    Validation(String),

    /// Input state is not normalized to within the accepted tolerance.
    #[error("normalization error: squared norm deviates from 1 by {deviation:e}")]
    Normalization { deviation: f64 },

    #[error("argument error: {0}")]
    Argument(String),

    #[error("shape error: expected {expected} qubits, found {found}")]
    Shape { expected: usize, found: usize },

    #[error("double absorption: atom {0} is already excited")]
    DoubleAbsorption(Atom),

    #[error("post-selection exhausted: none of {shots} shots matched the queried gender branch")]
    PostSelectionExhausted { shots: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
