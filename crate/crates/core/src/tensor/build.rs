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

//! Diagram constructions for diagonal gates, phase gadgets, hyperedges,
//! graph operators and CNOT circuits.

use super::diagram::{Diagram, FunctionTable, Generator};
use super::eval::MAX_WIRE_QUBITS;
use crate::bits::BitVec;
use crate::boolmat::BoolMatrix;
use crate::error::{Error, Result};
use crate::f2::{F2Matrix, TransvectionStep};
use crate::phase::PhaseFunction;
use crate::rational::{int, Rational};

/// The set-function arrow `h_n : [n] → [2^n]`.
pub fn set_function_arrow(n: usize) -> Result<Diagram> {
    if n + (1 << n.min(62)) > MAX_WIRE_QUBITS {
        return Err(Error::SizeLimit {
            node: format!("h_{n}"),
            detail: format!("set function on {n} qubits needs a {}-qubit wire", 1u128 << n),
        });
    }
    let width = 1usize << n;
    Ok(Diagram::function_arrow(FunctionTable::from_fn(n, width, |x| {
        1u64 << (width - 1 - x as usize)
    })))
}

/// Copies the `[n]` input, feeds one copy through `arrow : [n] → [w]` and
/// closes it with a green effect carrying `phases`. The spider scalars
/// `2^{n/4}` and `2^{-w/4}` cancel the arrow's `2^{(w-n)/4}`.
fn phase_through(n: usize, arrow: Diagram, phases: Vec<Rational>) -> Result<Diagram> {
    let w = phases.len();
    Diagram::chain(vec![
        Diagram::green_plain(n, 1, 2),
        Diagram::wire(n).par(arrow),
        Diagram::wire(n).par(Diagram::green(w, 1, 0, phases)?),
    ])
}

/// `e^{iπf}` as a green spider fed through `h_n` into the phase vector `f`.
pub fn diag_diagram(f: &PhaseFunction) -> Result<Diagram> {
    let n = f.qubits();
    phase_through(n, set_function_arrow(n)?, f.values().to_vec())
}

/// Phase gadget `e^{iπ a (s·x mod 2)}` through the parity red arrow of `s`.
pub fn gadget_diagram(s: &BitVec, a: &Rational) -> Result<Diagram> {
    if s.is_zero() {
        return Err(Error::Malformed("phase gadget needs a nonzero support".into()));
    }
    phase_through(s.len(), Diagram::red_arrow(&F2Matrix::row_vector(s)), vec![a.clone()])
}

/// Generalized hyperedge `e^{iπ b δ_{s≤x}}` through the AND yellow arrow of
/// `s`. The empty support gives the global phase `e^{iπ b}`.
pub fn hyperedge_diagram(s: &BitVec, b: &Rational) -> Result<Diagram> {
    let row = BoolMatrix::from(F2Matrix::row_vector(s));
    phase_through(s.len(), Diagram::yellow_arrow(&row), vec![b.clone()])
}

/// Graph operator `(-1)^{x·Γx}`: the input is copied three times, one copy
/// goes through the red arrow `Γ`, and a two-legged Hadamard box pairs it
/// with another copy.
pub fn graph_operator_diagram(gamma: &F2Matrix) -> Result<Diagram> {
    if !gamma.is_strictly_upper() {
        return Err(Error::Malformed(
            "half adjacency matrix must be square and strictly upper triangular".into(),
        ));
    }
    let n = gamma.rows();
    Diagram::chain(vec![
        Diagram::green_plain(n, 1, 3),
        Diagram::tensor(vec![Diagram::wire(n), Diagram::red_arrow(gamma), Diagram::wire(n)])?,
        Diagram::wire(n).par(Diagram::harvestman_plain(n, 2, 0)),
    ])
}

/// Basis state `|x⟩` as a red state with phase vector `x`, scalar `2^{n/4}`.
pub fn red_basis_state(x: &BitVec) -> Result<Diagram> {
    Diagram::red(x.len(), 0, 1, x.bits().iter().map(|&b| int(b as i64)).collect())
}

/// Pauli X on qubit `i` of `[n]`.
pub fn pauli_x(n: usize, i: usize) -> Result<Diagram> {
    Diagram::red(n, 1, 1, (1..=n).map(|j| int((j == i) as i64)).collect())
}

/// Pauli Z on every qubit of the support.
pub fn pauli_z(support: &BitVec) -> Result<Diagram> {
    Diagram::green(
        support.len(),
        1,
        1,
        support.bits().iter().map(|&b| int(b as i64)).collect(),
    )
}

/// AND of two `[k]` registers from a three-legged Hadamard box followed by
/// a Hadamard edge.
pub fn and_gate(k: usize) -> Result<Diagram> {
    Diagram::harvestman_plain(k, 2, 1).then(Diagram::harvestman_plain(k, 1, 1))
}

/// CNOT on `[n]` with control `source` and target `target`, built from a
/// green copy on the control and a red merge on the target.
pub fn cnot_diagram(n: usize, step: TransvectionStep) -> Result<Diagram> {
    let TransvectionStep { source, target } = step;
    if source == target || source == 0 || target == 0 || source > n || target > n {
        return Err(Error::OutOfRange(format!("CNOT {source} -> {target} on {n} qubits")));
    }
    let (lo, hi) = (source.min(target), source.max(target));
    let (before, between, after) = (lo - 1, hi - lo - 1, n - hi);
    let split = Diagram::chain(vec![
        Diagram::gen(Generator::Divider(before, n - before)),
        Diagram::wire(before).par(Diagram::gen(Generator::Divider(1, n - lo))),
        Diagram::tensor(vec![
            Diagram::wire(before),
            Diagram::wire(1),
            Diagram::gen(Generator::Divider(between, 1 + after)),
        ])?,
        Diagram::tensor(vec![
            Diagram::wire(before),
            Diagram::wire(1),
            Diagram::wire(between),
            Diagram::gen(Generator::Divider(1, after)),
        ])?,
    ])?;
    // Registers are now [before][lo][between][hi][after].
    let copy = Diagram::green_plain(1, 1, 2);
    let merge = Diagram::red_plain(1, 2, 1);
    let (upper, lower) = if source < target {
        (copy, merge)
    } else {
        (merge, copy)
    };
    let core = if source < target {
        // [lo] → [lo][c]; carry c past [between]; merge into [hi].
        Diagram::chain(vec![
            Diagram::tensor(vec![
                Diagram::wire(before),
                upper,
                Diagram::wire(between),
                Diagram::wire(1),
                Diagram::wire(after),
            ])?,
            Diagram::tensor(vec![
                Diagram::wire(before),
                Diagram::wire(1),
                Diagram::gen(Generator::Swap(1, between)),
                Diagram::wire(1),
                Diagram::wire(after),
            ])?,
            Diagram::tensor(vec![
                Diagram::wire(before),
                Diagram::wire(1),
                Diagram::wire(between),
                lower,
                Diagram::wire(after),
            ])?,
        ])?
    } else {
        // [hi] → [c][hi]; carry c up past [between]; merge into [lo].
        Diagram::chain(vec![
            Diagram::tensor(vec![
                Diagram::wire(before),
                Diagram::wire(1),
                Diagram::wire(between),
                lower,
                Diagram::wire(after),
            ])?,
            Diagram::tensor(vec![
                Diagram::wire(before),
                Diagram::wire(1),
                Diagram::gen(Generator::Swap(between, 1)),
                Diagram::wire(1),
                Diagram::wire(after),
            ])?,
            Diagram::tensor(vec![
                Diagram::wire(before),
                upper,
                Diagram::wire(between),
                Diagram::wire(1),
                Diagram::wire(after),
            ])?,
        ])?
    };
    split.clone().then(core)?.then(split.dagger())
}

/// The CNOT steps in order, as one diagram on `[n]`.
pub fn cnot_circuit_diagram(n: usize, steps: &[TransvectionStep]) -> Result<Diagram> {
    let mut parts = vec![Diagram::wire(n)];
    for &s in steps {
        parts.push(cnot_diagram(n, s)?);
    }
    Diagram::chain(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::tensor::{eval_diagram, matrices_equal, ComplexMatrix};
    use num::complex::Complex64;

    fn real_diag(v: &[f64]) -> ComplexMatrix {
        ComplexMatrix::from_diagonal(&v.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>())
    }

    #[test]
    fn diag_diagram_single_qubit() {
        let f = PhaseFunction::new(1, vec![int(0), int(1)]).unwrap();
        let m = eval_diagram(&diag_diagram(&f).unwrap()).unwrap();
        assert!(matrices_equal(&m, &real_diag(&[1.0, -1.0]), 1e-12).unwrap());
        let cz = PhaseFunction::new(2, vec![int(0), int(0), int(0), int(1)]).unwrap();
        let m = eval_diagram(&diag_diagram(&cz).unwrap()).unwrap();
        assert!(matrices_equal(&m, &real_diag(&[1.0, 1.0, 1.0, -1.0]), 1e-12).unwrap());
        let zero = PhaseFunction::zeros(3);
        let m = eval_diagram(&diag_diagram(&zero).unwrap()).unwrap();
        assert!(matrices_equal(&m, &ComplexMatrix::identity(8), 1e-12).unwrap());
    }

    #[test]
    fn diag_diagram_size_limit() {
        assert!(matches!(
            diag_diagram(&PhaseFunction::zeros(6)),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn gadget_examples() {
        let s: BitVec = "11".parse().unwrap();
        let m = eval_diagram(&gadget_diagram(&s, &int(1)).unwrap()).unwrap();
        assert!(matrices_equal(&m, &real_diag(&[1.0, -1.0, -1.0, 1.0]), 1e-12).unwrap());
        let m = eval_diagram(&gadget_diagram(&"101".parse().unwrap(), &int(0)).unwrap()).unwrap();
        assert!(matrices_equal(&m, &ComplexMatrix::identity(8), 1e-12).unwrap());
        assert!(gadget_diagram(&BitVec::zeros(2), &int(1)).is_err());
    }

    #[test]
    fn hyperedge_examples() {
        let ccz = eval_diagram(&hyperedge_diagram(&BitVec::ones(3), &int(1)).unwrap()).unwrap();
        let mut d = vec![1.0; 8];
        d[7] = -1.0;
        assert!(matrices_equal(&ccz, &real_diag(&d), 1e-12).unwrap());
        let global = eval_diagram(&hyperedge_diagram(&BitVec::zeros(2), &ratio(1, 2)).unwrap()).unwrap();
        let expect = ComplexMatrix::identity(4).scale(Complex64::new(0.0, 1.0));
        assert!(matrices_equal(&global, &expect, 1e-12).unwrap());
    }

    #[test]
    fn graph_operator_cz() {
        let gamma = F2Matrix::from_rows(&[[0u8, 1], [0, 0]]).unwrap();
        let m = eval_diagram(&graph_operator_diagram(&gamma).unwrap()).unwrap();
        assert!(matrices_equal(&m, &real_diag(&[1.0, 1.0, 1.0, -1.0]), 1e-12).unwrap());
        let bad = F2Matrix::from_rows(&[[0u8, 0], [1, 0]]).unwrap();
        assert!(graph_operator_diagram(&bad).is_err());
    }

    #[test]
    fn cnot_matches_permutation() {
        for n in 2..=4 {
            for source in 1..=n {
                for target in (1..=n).filter(|&t| t != source) {
                    let step = TransvectionStep { source, target };
                    let m = eval_diagram(&cnot_diagram(n, step).unwrap()).unwrap();
                    let a = step.matrix(n);
                    let mut expect = ComplexMatrix::zeros(1 << n, 1 << n);
                    for x in 0..1u64 << n {
                        expect.set(a.apply_index(x) as usize, x as usize, Complex64::new(1.0, 0.0));
                    }
                    assert!(
                        matrices_equal(&m, &expect, 1e-12).unwrap(),
                        "n={n} {source}->{target}"
                    );
                }
            }
        }
    }
}
