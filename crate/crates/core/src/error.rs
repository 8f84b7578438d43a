// Copyright 2026 The szx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not invertible over F2")]
    NotInvertible,

    #[error("type mismatch in sequential composition at {node}: {first} then {then}")]
    TypeMismatch {
        node: String,
        first: String,
        then: String,
    },

    #[error("size limit exceeded at {node}: {detail}")]
    SizeLimit { node: String, detail: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("unknown rule `{0}`")]
    UnknownRule(String),

    #[error("invalid rational `{0}`")]
    BadRational(String),
}
