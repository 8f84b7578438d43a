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

//! Registry of rewrite equations, each checked by evaluating both sides.
//!
//! No rule is allowed a normalization fudge: with well-tempered scalars the
//! two sides agree entrywise.

use num::complex::Complex64;
use rand::Rng;

use super::build::{
    and_gate, cnot_circuit_diagram, diag_diagram, graph_operator_diagram, pauli_x, pauli_z,
    red_basis_state,
};
use super::diagram::{Diagram, FunctionTable, Generator};
use super::eval::{eval_diagram, phase_unit};
use super::matrix::ComplexMatrix;
use crate::bits::BitVec;
use crate::boolmat::BoolMatrix;
use crate::error::{Error, Result};
use crate::f2::{cnot_synthesize, F2Matrix};
use crate::phase::PhaseFunction;
use crate::rational::{ratio, Rational};

pub struct RuleInfo {
    pub id: &'static str,
    pub summary: &'static str,
}

pub const RULES: &[RuleInfo] = &[
    RuleInfo { id: "farrow-apply", summary: "f applied to the red basis state x is the red state f(x)" },
    RuleInfo { id: "farrow-erase", summary: "green effect after f is the green effect" },
    RuleInfo { id: "farrow-copy", summary: "green copy after f is f⊗f after green copy" },
    RuleInfo { id: "farrow-dagger", summary: "reversed arrow is the adjoint of f" },
    RuleInfo { id: "red-arrow-erase", summary: "A applied to the red unit is the red unit" },
    RuleInfo { id: "red-arrow-copy", summary: "A after a red merge is a red merge after A⊗A" },
    RuleInfo { id: "red-arrow-row", summary: "divider after (A;B) is A⊗B after a green copy" },
    RuleInfo { id: "red-arrow-column", summary: "(A B) after a gatherer is a red merge after A⊗B" },
    RuleInfo { id: "red-arrow-cnot", summary: "invertible A equals its synthesized CNOT circuit" },
    RuleInfo { id: "yellow-arrow-erase", summary: "A applied to all-ones is all-ones" },
    RuleInfo { id: "yellow-arrow-copy", summary: "A after AND is AND after A⊗A" },
    RuleInfo { id: "yellow-arrow-row", summary: "divider after (A;B) is A⊗B after a green copy" },
    RuleInfo { id: "yellow-arrow-column", summary: "(A B) after a gatherer is AND after A⊗B" },
    RuleInfo { id: "and-gate", summary: "Hadamard box then Hadamard edge is the AND arrow" },
    RuleInfo { id: "divider-gatherer", summary: "dividers and gatherers are mutually inverse" },
    RuleInfo { id: "green-fusion", summary: "adjacent green spiders fuse, phases add" },
    RuleInfo { id: "red-fusion", summary: "adjacent red spiders fuse, phases add" },
    RuleInfo { id: "hadamard-involution", summary: "two Hadamard boxes cancel" },
    RuleInfo { id: "phase-form", summary: "a diagonal gate commutes through a green copy" },
    RuleInfo { id: "diag-unitary", summary: "the diagonal-gate diagram is unitary" },
    RuleInfo { id: "diag-semantics", summary: "the diagonal-gate diagram is diag(e^{iπf})" },
    RuleInfo { id: "diag-product", summary: "e^{iπf} then e^{iπg} is e^{iπ(f+g)}" },
    RuleInfo { id: "graph-cz", summary: "single-edge graph operator is C-Z" },
    RuleInfo { id: "graph-compose", summary: "graph operators compose by adding half adjacencies" },
    RuleInfo { id: "graph-tensor", summary: "parallel graph operators form a block-diagonal graph" },
    RuleInfo { id: "graph-zero", summary: "graph operators fix |0…0⟩" },
    RuleInfo { id: "graph-pauli", summary: "G X_i = X_i Z_{N(i)} G" },
];

/// Concrete instance data; each rule reads the fields it needs.
#[derive(Debug, Clone, Default)]
pub struct RuleParams {
    pub k: Option<usize>,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub function: Option<FunctionTable>,
    pub input: Option<u64>,
    pub matrix: Option<F2Matrix>,
    pub matrix2: Option<F2Matrix>,
    pub phases: Option<Vec<Rational>>,
    pub phases2: Option<Vec<Rational>>,
    pub phase_fn: Option<PhaseFunction>,
    pub phase_fn2: Option<PhaseFunction>,
    pub vertex: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleOutcome {
    pub holds: bool,
    pub max_delta: f64,
}

fn need<'a, T>(v: &'a Option<T>, what: &str, id: &str) -> Result<&'a T> {
    v.as_ref()
        .ok_or_else(|| Error::Malformed(format!("rule `{id}` needs parameter `{what}`")))
}

fn delta(lhs: &ComplexMatrix, rhs: &ComplexMatrix) -> Result<f64> {
    lhs.max_abs_diff(rhs)
}

fn diagrams(lhs: &Diagram, rhs: &Diagram) -> Result<f64> {
    delta(&eval_diagram(lhs)?, &eval_diagram(rhs)?)
}

fn and_table(k: usize) -> FunctionTable {
    FunctionTable::from_fn(2 * k, k, |x| (x >> k) & x)
}

fn block_diagonal(a: &F2Matrix, b: &F2Matrix) -> Result<F2Matrix> {
    let top = a.hstack(&F2Matrix::zeros(a.rows(), b.cols()))?;
    let bottom = F2Matrix::zeros(b.rows(), a.cols()).hstack(b)?;
    top.vstack(&bottom)
}

pub fn verify_rule(id: &str, p: &RuleParams, tol: f64) -> Result<RuleOutcome> {
    let max_delta = rule_delta(id, p)?;
    Ok(RuleOutcome {
        holds: max_delta <= tol,
        max_delta,
    })
}

fn rule_delta(id: &str, p: &RuleParams) -> Result<f64> {
    let zero = || Rational::from_integer(0.into());
    match id {
        "farrow-apply" => {
            let f = need(&p.function, "function", id)?;
            let x = *need(&p.input, "input", id)?;
            let lhs = red_basis_state(&BitVec::from_index(f.n, x))?
                .then(Diagram::function_arrow(f.clone()))?;
            let rhs = red_basis_state(&BitVec::from_index(f.m, f.apply(x)))?;
            diagrams(&lhs, &rhs)
        }
        "farrow-erase" => {
            let f = need(&p.function, "function", id)?;
            let lhs = Diagram::function_arrow(f.clone()).then(Diagram::green_plain(f.m, 1, 0))?;
            diagrams(&lhs, &Diagram::green_plain(f.n, 1, 0))
        }
        "farrow-copy" => {
            let f = need(&p.function, "function", id)?;
            let arrow = Diagram::function_arrow(f.clone());
            let lhs = arrow.clone().then(Diagram::green_plain(f.m, 1, 2))?;
            let rhs = Diagram::green_plain(f.n, 1, 2).then(arrow.clone().par(arrow))?;
            diagrams(&lhs, &rhs)
        }
        "farrow-dagger" => {
            let f = need(&p.function, "function", id)?;
            let arrow = Diagram::function_arrow(f.clone());
            delta(&eval_diagram(&arrow.dagger())?, &eval_diagram(&arrow)?.adjoint())
        }
        "red-arrow-erase" => {
            let a = need(&p.matrix, "matrix", id)?;
            let lhs = Diagram::red_plain(a.cols(), 0, 1).then(Diagram::red_arrow(a))?;
            diagrams(&lhs, &Diagram::red_plain(a.rows(), 0, 1))
        }
        "red-arrow-copy" => {
            let a = need(&p.matrix, "matrix", id)?;
            let arrow = Diagram::red_arrow(a);
            let lhs = Diagram::red_plain(a.cols(), 2, 1).then(arrow.clone())?;
            let rhs = arrow.clone().par(arrow).then(Diagram::red_plain(a.rows(), 2, 1))?;
            diagrams(&lhs, &rhs)
        }
        "red-arrow-row" | "yellow-arrow-row" => {
            let a = need(&p.matrix, "matrix", id)?;
            let b = need(&p.matrix2, "matrix2", id)?;
            let arrow = |m: &F2Matrix| {
                if id.starts_with("red") {
                    Diagram::red_arrow(m)
                } else {
                    Diagram::yellow_arrow(&BoolMatrix::from(m.clone()))
                }
            };
            let lhs = arrow(&a.vstack(b)?).then(Diagram::gen(Generator::Divider(a.rows(), b.rows())))?;
            let rhs = Diagram::green_plain(a.cols(), 1, 2).then(arrow(a).par(arrow(b)))?;
            diagrams(&lhs, &rhs)
        }
        "red-arrow-column" => {
            let a = need(&p.matrix, "matrix", id)?;
            let b = need(&p.matrix2, "matrix2", id)?;
            let lhs = Diagram::gen(Generator::Gatherer(a.cols(), b.cols()))
                .then(Diagram::red_arrow(&a.hstack(b)?))?;
            let rhs = Diagram::red_arrow(a)
                .par(Diagram::red_arrow(b))
                .then(Diagram::red_plain(a.rows(), 2, 1))?;
            diagrams(&lhs, &rhs)
        }
        "red-arrow-cnot" => {
            let a = need(&p.matrix, "matrix", id)?;
            let steps = cnot_synthesize(a)?;
            diagrams(&Diagram::red_arrow(a), &cnot_circuit_diagram(a.rows(), &steps)?)
        }
        "yellow-arrow-erase" => {
            let a = BoolMatrix::from(need(&p.matrix, "matrix", id)?.clone());
            let ones = |n| red_basis_state(&BitVec::ones(n));
            let lhs = ones(a.cols())?.then(Diagram::yellow_arrow(&a))?;
            diagrams(&lhs, &ones(a.rows())?)
        }
        "yellow-arrow-copy" => {
            let a = BoolMatrix::from(need(&p.matrix, "matrix", id)?.clone());
            let arrow = Diagram::yellow_arrow(&a);
            let lhs = Diagram::gen(Generator::Gatherer(a.cols(), a.cols()))
                .then(Diagram::gen(Generator::Divider(a.cols(), a.cols())))?
                .then(and_gate(a.cols())?)?
                .then(arrow.clone())?;
            let rhs = arrow.clone().par(arrow).then(and_gate(a.rows())?)?;
            diagrams(&lhs, &rhs)
        }
        "yellow-arrow-column" => {
            let a = BoolMatrix::from(need(&p.matrix, "matrix", id)?.clone());
            let b = BoolMatrix::from(need(&p.matrix2, "matrix2", id)?.clone());
            let lhs = Diagram::gen(Generator::Gatherer(a.cols(), b.cols()))
                .then(Diagram::yellow_arrow(&a.hstack(&b)?))?;
            let rhs = Diagram::yellow_arrow(&a)
                .par(Diagram::yellow_arrow(&b))
                .then(and_gate(a.rows())?)?;
            diagrams(&lhs, &rhs)
        }
        "and-gate" => {
            let k = *need(&p.k, "k", id)?;
            let rhs = Diagram::gen(Generator::Gatherer(k, k))
                .then(Diagram::function_arrow(and_table(k)))?;
            diagrams(&and_gate(k)?, &rhs)
        }
        "divider-gatherer" => {
            let n = *need(&p.n, "n", id)?;
            let m = *need(&p.m, "m", id)?;
            let div = Diagram::gen(Generator::Divider(n, m));
            let gat = Diagram::gen(Generator::Gatherer(n, m));
            let a = diagrams(&div.clone().then(gat.clone())?, &Diagram::wire(n + m))?;
            let b = diagrams(&gat.then(div)?, &Diagram::wire(n).par(Diagram::wire(m)))?;
            Ok(a.max(b))
        }
        "green-fusion" | "red-fusion" => {
            let a = need(&p.phases, "phases", id)?.clone();
            let b = need(&p.phases2, "phases2", id)?.clone();
            let k = a.len();
            let sum: Vec<Rational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            let spider = if id == "green-fusion" {
                Diagram::green
            } else {
                Diagram::red
            };
            let lhs = spider(k, 1, 2, a)?.then(Diagram::wire(k).par(spider(k, 1, 2, b)?))?;
            diagrams(&lhs, &spider(k, 1, 3, sum)?)
        }
        "hadamard-involution" => {
            let k = *need(&p.k, "k", id)?;
            let h = Diagram::harvestman_plain(k, 1, 1);
            diagrams(&h.clone().then(h)?, &Diagram::wire(k))
        }
        "phase-form" => {
            let f = need(&p.phase_fn, "phase_fn", id)?;
            let n = f.qubits();
            let d = diag_diagram(f)?;
            let lhs = d.clone().then(Diagram::green_plain(n, 1, 2))?;
            let rhs = Diagram::green_plain(n, 1, 2).then(d.par(Diagram::wire(n)))?;
            diagrams(&lhs, &rhs)
        }
        "diag-unitary" => {
            let f = need(&p.phase_fn, "phase_fn", id)?;
            let d = diag_diagram(f)?;
            let id_n = Diagram::wire(f.qubits());
            let a = diagrams(&d.clone().then(d.dagger())?, &id_n)?;
            let b = diagrams(&d.dagger().then(d)?, &id_n)?;
            Ok(a.max(b))
        }
        "diag-semantics" => {
            let f = need(&p.phase_fn, "phase_fn", id)?;
            delta(&eval_diagram(&diag_diagram(f)?)?, &diagonal_reference(f))
        }
        "diag-product" => {
            let f = need(&p.phase_fn, "phase_fn", id)?;
            let g = need(&p.phase_fn2, "phase_fn2", id)?;
            let lhs = diag_diagram(f)?.then(diag_diagram(g)?)?;
            diagrams(&lhs, &diag_diagram(&f.add(g)?)?)
        }
        "graph-cz" => {
            let gamma = F2Matrix::from_rows(&[[0u8, 1], [0, 0]])?;
            let printed = ComplexMatrix::from_diagonal(
                &[1.0, 1.0, 1.0, -1.0].map(|x| Complex64::new(x, 0.0)),
            );
            delta(&eval_diagram(&graph_operator_diagram(&gamma)?)?, &printed)
        }
        "graph-compose" => {
            let a = need(&p.matrix, "matrix", id)?;
            let b = need(&p.matrix2, "matrix2", id)?;
            let lhs = graph_operator_diagram(a)?.then(graph_operator_diagram(b)?)?;
            diagrams(&lhs, &graph_operator_diagram(&a.add(b)?)?)
        }
        "graph-tensor" => {
            let a = need(&p.matrix, "matrix", id)?;
            let b = need(&p.matrix2, "matrix2", id)?;
            let lhs = graph_operator_diagram(a)?.par(graph_operator_diagram(b)?);
            let rhs = Diagram::chain(vec![
                Diagram::gen(Generator::Gatherer(a.rows(), b.rows())),
                graph_operator_diagram(&block_diagonal(a, b)?)?,
                Diagram::gen(Generator::Divider(a.rows(), b.rows())),
            ])?;
            diagrams(&lhs, &rhs)
        }
        "graph-zero" => {
            let gamma = need(&p.matrix, "matrix", id)?;
            let zero_state = Diagram::red_plain(gamma.rows(), 0, 1);
            let lhs = zero_state.clone().then(graph_operator_diagram(gamma)?)?;
            diagrams(&lhs, &zero_state)
        }
        "graph-pauli" => {
            let gamma = need(&p.matrix, "matrix", id)?;
            let i = *need(&p.vertex, "vertex", id)?;
            let n = gamma.rows();
            if i == 0 || i > n {
                return Err(Error::OutOfRange(format!("vertex {i} of {n}")));
            }
            let adjacency = gamma.add(&gamma.transpose())?;
            let g = graph_operator_diagram(gamma)?;
            let lhs = pauli_x(n, i)?.then(g.clone())?;
            let rhs = Diagram::chain(vec![g, pauli_z(&adjacency.row(i - 1))?, pauli_x(n, i)?])?;
            diagrams(&lhs, &rhs)
        }
        _ => {
            let _ = zero;
            Err(Error::UnknownRule(id.to_string()))
        }
    }
}

/// `diag(e^{iπ f(x)})` built directly from the values.
pub fn diagonal_reference(f: &PhaseFunction) -> ComplexMatrix {
    let d: Vec<Complex64> = f.values().iter().map(phase_unit).collect();
    ComplexMatrix::from_diagonal(&d)
}

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> F2Matrix {
    let mut m = F2Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, rng.random());
        }
    }
    m
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> F2Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn random_half_adjacency<R: Rng>(rng: &mut R, n: usize) -> F2Matrix {
    let mut m = F2Matrix::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            m.set(r, c, rng.random());
        }
    }
    m
}

/// Random phase with denominator in {1, 2, 4, 8, 3}, in `[0, 2)`.
pub fn random_phase<R: Rng>(rng: &mut R) -> Rational {
    let den = [1i64, 2, 4, 8, 3][rng.random_range(0..5)];
    ratio(rng.random_range(0..2 * den), den)
}

pub fn random_phase_fn<R: Rng>(rng: &mut R, n: usize) -> PhaseFunction {
    PhaseFunction::from_fn(n, |_| random_phase(rng))
}

fn random_function<R: Rng>(rng: &mut R, n: usize, m: usize) -> FunctionTable {
    FunctionTable::from_fn(n, m, |_| rng.random_range(0..1u64 << m))
}

/// Random parameters for `id` with registers of at most `size` qubits.
pub fn sample_params<R: Rng>(id: &str, size: usize, rng: &mut R) -> Result<RuleParams> {
    let size = size.max(1);
    let mut dim = |lo: usize| rng.random_range(lo..=size.max(lo));
    let (n, m, n2, m2) = (dim(1), dim(1), dim(1), dim(1));
    let mut p = RuleParams::default();
    match id {
        "farrow-apply" | "farrow-erase" | "farrow-copy" | "farrow-dagger" => {
            p.function = Some(random_function(rng, n, m));
            p.input = Some(rng.random_range(0..1u64 << n));
        }
        "red-arrow-erase" | "red-arrow-copy" | "yellow-arrow-erase" | "yellow-arrow-copy" => {
            p.matrix = Some(random_matrix(rng, m, n));
        }
        "red-arrow-row" | "yellow-arrow-row" => {
            p.matrix = Some(random_matrix(rng, m, n));
            p.matrix2 = Some(random_matrix(rng, m2, n));
        }
        "red-arrow-column" | "yellow-arrow-column" => {
            p.matrix = Some(random_matrix(rng, m, n));
            p.matrix2 = Some(random_matrix(rng, m, n2));
        }
        "red-arrow-cnot" => p.matrix = Some(random_invertible(rng, n)),
        "and-gate" | "hadamard-involution" => p.k = Some(n),
        "divider-gatherer" => {
            p.n = Some(n);
            p.m = Some(m);
        }
        "green-fusion" | "red-fusion" => {
            p.phases = Some((0..n).map(|_| random_phase(rng)).collect());
            p.phases2 = Some((0..n).map(|_| random_phase(rng)).collect());
        }
        "phase-form" | "diag-unitary" | "diag-semantics" | "diag-product" => {
            p.phase_fn = Some(random_phase_fn(rng, n));
            p.phase_fn2 = Some(random_phase_fn(rng, n));
        }
        "graph-cz" => {}
        "graph-compose" | "graph-zero" | "graph-pauli" => {
            let n = n + 1;
            p.matrix = Some(random_half_adjacency(rng, n));
            p.matrix2 = Some(random_half_adjacency(rng, n));
            p.vertex = Some(rng.random_range(1..=n));
        }
        "graph-tensor" => {
            p.matrix = Some(random_half_adjacency(rng, n));
            p.matrix2 = Some(random_half_adjacency(rng, n2));
        }
        _ => return Err(Error::UnknownRule(id.to_string())),
    }
    Ok(p)
}
