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

//! Executable semantics for scalable ZX/ZH diagrams and exact tooling for
//! diagonal quantum gates.
//!
//! The crate is split the same way the computations are layered:
//!
//! * [`bits`], [`f2`], [`boolmat`] and [`rational`] hold the exact discrete
//!   algebra (bit strings, F2 linear algebra, Boolean-semiring matrices,
//!   big rationals and binomials).
//! * [`tensor`] is the diagram IR, its well-tempered evaluator and a registry
//!   of rewrite equations checked as matrix identities.
//! * [`phase`] has exact Walsh/Möbius butterflies and the symmetric
//!   (binomial/Kravchuk) calculus.
//! * [`gates`] builds and compares diagonal gates (graphs, hypergraphs,
//!   gadget lists) and checks graph-state theorems.
//! * [`nest`] certifies spider-nest identities.

pub mod bits;
pub mod error;
pub mod f2;
pub mod boolmat;
pub mod gates;
pub mod nest;
pub mod phase;
pub mod rational;
pub mod suite;
pub mod tensor;

pub use bits::BitVec;
pub use boolmat::BoolMatrix;
pub use error::{Error, Result};
pub use f2::F2Matrix;
pub use rational::Rational;
