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

//! Named randomized suites over the rule registry and the gate theorems.
//!
//! Every item draws from its own generator seeded by the suite seed and the
//! item name, so a report does not depend on which other items ran.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gates::{fourier_decompose, moebius_decompose, pauli_push_check, verify_local_comp, Graph};
use crate::tensor::eval_diagram;
use crate::tensor::rules::{diagonal_reference, random_phase_fn, sample_params, verify_rule};

pub const SUITES: &[&str] = &["arrows", "spiders", "diagonal", "graph", "localcomp", "all"];

const ARROWS: &[&str] = &[
    "farrow-apply",
    "farrow-erase",
    "farrow-copy",
    "farrow-dagger",
    "red-arrow-erase",
    "red-arrow-copy",
    "red-arrow-row",
    "red-arrow-column",
    "red-arrow-cnot",
    "yellow-arrow-erase",
    "yellow-arrow-copy",
    "yellow-arrow-row",
    "yellow-arrow-column",
    "and-gate",
    "divider-gatherer",
];
const SPIDERS: &[&str] = &["green-fusion", "red-fusion", "hadamard-involution", "phase-form", "diag-unitary"];
const DIAGONAL: &[&str] = &["diag-semantics", "diag-product", "fourier-compile", "moebius-compile"];
const GRAPH: &[&str] = &["graph-cz", "graph-compose", "graph-tensor", "graph-zero", "graph-pauli", "pauli-push"];
const LOCALCOMP: &[&str] = &["local-complementation"];

/// Random instances per register size.
pub const TRIALS: usize = 3;
/// Exhaustive local complementation up to this many vertices.
pub const EXHAUSTIVE_LC: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteItem {
    pub id: String,
    pub trials: usize,
    pub holds: bool,
    pub max_delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub sizes: usize,
    pub seed: u64,
    pub tol: f64,
    pub all_hold: bool,
    pub items: Vec<SuiteItem>,
}

fn item_ids(suite: &str) -> Result<Vec<&'static str>> {
    Ok(match suite {
        "arrows" => ARROWS.to_vec(),
        "spiders" => SPIDERS.to_vec(),
        "diagonal" => DIAGONAL.to_vec(),
        "graph" => GRAPH.to_vec(),
        "localcomp" => LOCALCOMP.to_vec(),
        "all" => [ARROWS, SPIDERS, DIAGONAL, GRAPH, LOCALCOMP].concat(),
        _ => return Err(Error::Malformed(format!("unknown suite `{suite}`"))),
    })
}

fn item_rng(seed: u64, id: &str) -> ChaCha8Rng {
    // FNV-1a over the name, mixed with the seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(h ^ seed)
}

pub fn run_suite(suite: &str, sizes: usize, seed: u64, tol: f64) -> Result<SuiteReport> {
    let ids = item_ids(suite)?;
    let mut seen = std::collections::BTreeSet::new();
    let mut items = Vec::new();
    for id in ids {
        if seen.insert(id) {
            items.push(run_item(id, sizes, seed, tol)?);
        }
    }
    Ok(SuiteReport {
        suite: suite.to_string(),
        sizes,
        seed,
        tol,
        all_hold: items.iter().all(|i| i.holds),
        items,
    })
}

fn run_item(id: &str, sizes: usize, seed: u64, tol: f64) -> Result<SuiteItem> {
    let mut rng = item_rng(seed, id);
    let mut trials = 0;
    let mut max_delta: f64 = 0.0;
    let mut record = |delta: f64| {
        trials += 1;
        max_delta = max_delta.max(delta);
    };
    match id {
        "fourier-compile" | "moebius-compile" => {
            for n in 1..=sizes {
                for _ in 0..TRIALS {
                    let f = random_phase_fn(&mut rng, n);
                    let d = if id == "fourier-compile" {
                        fourier_decompose(&f)
                    } else {
                        moebius_decompose(&f)
                    };
                    let exact = if d.phasefn() == f { 0.0 } else { f64::INFINITY };
                    let m = eval_diagram(&d.diagram()?)?;
                    record(exact.max(m.max_abs_diff(&diagonal_reference(&f))?));
                }
            }
        }
        "pauli-push" => {
            for n in 1..=sizes + 1 {
                for _ in 0..TRIALS {
                    let g = Graph::random(&mut rng, n);
                    for i in 1..=n {
                        record(if pauli_push_check(&g, i)? { 0.0 } else { 1.0 });
                    }
                }
            }
        }
        "local-complementation" => {
            let exhaustive = sizes.min(EXHAUSTIVE_LC);
            for n in 1..=exhaustive {
                for code in 0..1u64 << (n * (n - 1) / 2) {
                    let g = Graph::from_code(n, code);
                    for u in 1..=n {
                        record(1.0 - verify_local_comp(&g, u, tol)?.fidelity);
                    }
                }
            }
            for n in exhaustive + 1..=sizes {
                for _ in 0..TRIALS {
                    let g = Graph::random(&mut rng, n);
                    for u in 1..=n {
                        record(1.0 - verify_local_comp(&g, u, tol)?.fidelity);
                    }
                }
            }
        }
        _ => {
            for size in 1..=sizes.max(1) {
                for _ in 0..TRIALS {
                    let p = sample_params(id, size, &mut rng)?;
                    record(verify_rule(id, &p, tol)?.max_delta);
                }
            }
        }
    }
    Ok(SuiteItem {
        id: id.to_string(),
        trials,
        holds: max_delta <= tol,
        max_delta,
    })
}
