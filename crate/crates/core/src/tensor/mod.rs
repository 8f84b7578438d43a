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

//! Scalable ZX/ZH diagrams: the IR, a well-tempered evaluator, diagram
//! constructions for diagonal gates, and the registry of rewrite equations
//! checked as matrix identities.

pub mod build;
pub mod diagram;
pub mod eval;
pub mod json;
pub mod matrix;
pub mod rules;

pub use build::{diag_diagram, gadget_diagram, graph_operator_diagram, hyperedge_diagram};
pub use diagram::{Diagram, FunctionTable, Generator, Node, Spider, WireType};
pub use eval::{eval_diagram, eval_diagram_with, eval_generator, EvalConfig};
pub use json::{diagram_to_json, parse_diagram};
pub use matrix::{equal_up_to_phase, matrices_equal, ComplexMatrix, PhaseMatch};
pub use rules::{verify_rule, RuleOutcome, RuleParams, RULES};
