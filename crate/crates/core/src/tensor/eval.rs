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

//! Well-tempered evaluation of diagrams.
//!
//! Diagrams are evaluated one input basis state at a time, pushing a sparse
//! vector through the composition tree. Intermediate wires may therefore be
//! much wider than the dense result (the set-function arrow of an `n`-qubit
//! diagonal gate produces a `2^n`-qubit wire) as long as the number of
//! nonzero amplitudes stays within [`EvalConfig::max_terms`].
//!
//! Every map entry `(row, value)` is accumulated in ascending row order, so
//! results are bit-for-bit reproducible.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num::complex::Complex64;
use num::{ToPrimitive, Zero};

use super::diagram::{Diagram, FunctionTable, Generator, Node, Spider};
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Indices are `u64`, so no wire may carry more qubits than this.
pub const MAX_WIRE_QUBITS: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    /// Cap on the domain and on the codomain of a densely evaluated diagram.
    pub max_qubits: usize,
    /// Cap on nonzero amplitudes carried by any intermediate wire.
    pub max_terms: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            max_qubits: 14,
            max_terms: 1 << 22,
        }
    }
}

type SparseVec = BTreeMap<u64, Complex64>;

/// `e^{iπ a}`, exact when `a` is a multiple of 1/2.
pub fn phase_unit(a: &Rational) -> Complex64 {
    let r = rational::mod2(a);
    let twice = &r * Rational::from_integer(2.into());
    if twice.is_integer() {
        return match twice.to_integer().to_u8() {
            Some(0) => Complex64::new(1.0, 0.0),
            Some(1) => Complex64::new(0.0, 1.0),
            Some(2) => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let t = PI * rational::to_f64(&r);
    Complex64::new(t.cos(), t.sin())
}

/// `2^{p/4}`.
pub fn quarter_power(p: i64) -> f64 {
    2f64.powf(p as f64 / 4.0)
}

pub fn eval_generator(g: &Generator) -> Result<ComplexMatrix> {
    eval_diagram(&Diagram::gen(g.clone()))
}

pub fn eval_diagram(d: &Diagram) -> Result<ComplexMatrix> {
    eval_diagram_with(d, &EvalConfig::default())
}

pub fn eval_diagram_with(d: &Diagram, cfg: &EvalConfig) -> Result<ComplexMatrix> {
    check_wires(d, "root")?;
    let (dom, cod) = (d.domain().qubits(), d.codomain().qubits());
    if dom > cfg.max_qubits || cod > cfg.max_qubits {
        return Err(Error::SizeLimit {
            node: "root".into(),
            detail: format!(
                "dense result {} -> {} exceeds {} qubits",
                d.domain(),
                d.codomain(),
                cfg.max_qubits
            ),
        });
    }
    let mut m = ComplexMatrix::zeros(1 << cod, 1 << dom);
    for col in 0..1u64 << dom {
        for (row, z) in apply_basis(d, col, cfg)? {
            m.set(row as usize, col as usize, z);
        }
    }
    Ok(m)
}

fn check_wires(d: &Diagram, path: &str) -> Result<()> {
    for t in [d.domain(), d.codomain()] {
        if t.qubits() > MAX_WIRE_QUBITS {
            return Err(Error::SizeLimit {
                node: path.to_string(),
                detail: format!("wire {t} exceeds {MAX_WIRE_QUBITS} qubits"),
            });
        }
    }
    match d.node() {
        Node::Gen(_) => Ok(()),
        Node::Seq(a, b) => {
            check_wires(a, &format!("{path}.seq[0]"))?;
            check_wires(b, &format!("{path}.seq[1]"))
        }
        Node::Par(a, b) => {
            check_wires(a, &format!("{path}.par[0]"))?;
            check_wires(b, &format!("{path}.par[1]"))
        }
    }
}

fn budget(len: usize, what: &dyn Fn() -> String, cfg: &EvalConfig) -> Result<()> {
    if len > cfg.max_terms {
        return Err(Error::SizeLimit {
            node: what(),
            detail: format!("more than {} nonzero amplitudes", cfg.max_terms),
        });
    }
    Ok(())
}

fn low_mask(bits: usize) -> u64 {
    if bits == 0 {
        0
    } else {
        (1u64 << bits) - 1
    }
}

/// Image of the basis state `idx` of `d`'s domain.
fn apply_basis(d: &Diagram, idx: u64, cfg: &EvalConfig) -> Result<SparseVec> {
    match d.node() {
        Node::Gen(g) => apply_generator(g, idx, cfg),
        Node::Seq(first, then) => {
            let mid = apply_basis(first, idx, cfg)?;
            let mut out = SparseVec::new();
            for (j, c) in mid {
                for (i, z) in apply_basis(then, j, cfg)? {
                    *out.entry(i).or_insert_with(Complex64::zero) += c * z;
                }
                budget(out.len(), &|| format!("seq ending in {}", then.codomain()), cfg)?;
            }
            out.retain(|_, z| !z.is_zero());
            Ok(out)
        }
        Node::Par(left, right) => {
            let rin = right.domain().qubits();
            let rout = right.codomain().qubits();
            let lv = apply_basis(left, idx >> rin, cfg)?;
            let rv = apply_basis(right, idx & low_mask(rin), cfg)?;
            budget(lv.len() * rv.len(), &|| format!("par {}", d.codomain()), cfg)?;
            let mut out = SparseVec::new();
            for (i, a) in &lv {
                for (j, b) in &rv {
                    out.insert((i << rout) | j, a * b);
                }
            }
            Ok(out)
        }
    }
}

fn single(idx: u64, z: Complex64) -> SparseVec {
    SparseVec::from([(idx, z)])
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn apply_generator(g: &Generator, idx: u64, cfg: &EvalConfig) -> Result<SparseVec> {
    Ok(match g {
        Generator::Wire(_) | Generator::Divider(..) | Generator::Gatherer(..) => single(idx, one()),
        Generator::Swap(n, m) => {
            let (x, y) = (idx >> m, idx & low_mask(*m));
            single((y << n) | x, one())
        }
        Generator::Cup(n) => {
            budget(1 << n, &|| format!("cup [{n}]"), cfg)?;
            (0..1u64 << n).map(|x| ((x << n) | x, one())).collect()
        }
        Generator::Cap(n) => {
            if idx >> n == idx & low_mask(*n) {
                single(0, one())
            } else {
                SparseVec::new()
            }
        }
        Generator::GreenSpider(s) => apply_green(s, idx, cfg)?,
        Generator::RedSpider(s) => apply_red(s, idx, cfg)?,
        Generator::Harvestman(s) => apply_harvestman(s, idx, cfg)?,
        Generator::FunctionArrow(t) => single(t.apply(idx), arrow_scale(t)),
        Generator::FunctionArrowDagger(t) => {
            let z = arrow_scale(t);
            (0..1u64 << t.n)
                .filter(|&x| t.apply(x) == idx)
                .map(|x| (x, z))
                .collect()
        }
    })
}

fn arrow_scale(t: &FunctionTable) -> Complex64 {
    Complex64::new(quarter_power(t.m as i64 - t.n as i64), 0.0)
}

/// The `count` registers of `k` bits packed in `idx`, most significant first.
fn registers(idx: u64, k: usize, count: usize) -> Vec<u64> {
    (0..count)
        .map(|i| (idx >> ((count - 1 - i) * k)) & low_mask(k))
        .collect()
}

fn repeat_register(x: u64, k: usize, count: usize) -> u64 {
    (0..count).fold(0u64, |acc, _| (acc << k) | x)
}

/// Bit `j` (0-based from the left) of a `k`-bit register.
fn column_bit(x: u64, k: usize, j: usize) -> bool {
    (x >> (k - 1 - j)) & 1 == 1
}

fn apply_green(s: &Spider, idx: u64, cfg: &EvalConfig) -> Result<SparseVec> {
    let k = s.k;
    let scale = quarter_power(k as i64 * (s.inputs as i64 + s.outputs as i64 - 2));
    let amplitude = |x: u64| {
        let mut total = Rational::zero();
        for (j, a) in s.phases.iter().enumerate() {
            if column_bit(x, k, j) {
                total += a;
            }
        }
        phase_unit(&total) * scale
    };
    if s.inputs == 0 {
        budget(1 << k, &|| format!("green state on [{k}]"), cfg)?;
        return Ok((0..1u64 << k)
            .map(|x| (repeat_register(x, k, s.outputs), amplitude(x)))
            .collect());
    }
    let regs = registers(idx, k, s.inputs);
    let x = regs[0];
    if regs.iter().any(|&r| r != x) {
        return Ok(SparseVec::new());
    }
    Ok(single(repeat_register(x, k, s.outputs), amplitude(x)))
}

/// Enumerates output assignments column by column, keeping only nonzero
/// products; `factor(j, pattern)` is the weight of column `j` when the
/// output registers carry the bits of `pattern` there.
fn expand_columns(
    s: &Spider,
    scale: f64,
    cfg: &EvalConfig,
    factor: impl Fn(usize, u64) -> Complex64,
) -> Result<SparseVec> {
    let (k, outs) = (s.k, s.outputs);
    let mut partial: Vec<(u64, Complex64)> = vec![(0, Complex64::new(scale, 0.0))];
    for j in 0..k {
        let mut next = Vec::with_capacity(partial.len());
        for pattern in 0..1u64 << outs {
            let f = factor(j, pattern);
            if f.is_zero() {
                continue;
            }
            let mut bits = 0u64;
            for o in 0..outs {
                if (pattern >> (outs - 1 - o)) & 1 == 1 {
                    bits |= 1u64 << ((outs - 1 - o) * k + (k - 1 - j));
                }
            }
            next.extend(partial.iter().map(|&(i, z)| (i | bits, z * f)));
        }
        budget(next.len(), &|| format!("spider on [{k}]"), cfg)?;
        partial = next;
    }
    Ok(partial.into_iter().filter(|(_, z)| !z.is_zero()).collect())
}

fn apply_red(s: &Spider, idx: u64, cfg: &EvalConfig) -> Result<SparseVec> {
    let k = s.k;
    let legs = s.inputs as i64 + s.outputs as i64;
    let scale = quarter_power(k as i64 * (2 - legs));
    let regs = registers(idx, k, s.inputs);
    let units: Vec<Complex64> = s.phases.iter().map(phase_unit).collect();
    let in_parity: Vec<bool> = (0..k)
        .map(|j| regs.iter().filter(|&&r| column_bit(r, k, j)).count() % 2 == 1)
        .collect();
    expand_columns(s, scale, cfg, |j, pattern| {
        let odd = in_parity[j] ^ (pattern.count_ones() % 2 == 1);
        let sign = if odd { -1.0 } else { 1.0 };
        (one() + units[j] * sign) / 2.0
    })
}

fn apply_harvestman(s: &Spider, idx: u64, cfg: &EvalConfig) -> Result<SparseVec> {
    let k = s.k;
    let legs = s.inputs as i64 + s.outputs as i64;
    let scale = quarter_power(-(k as i64) * legs);
    let regs = registers(idx, k, s.inputs);
    let weights: Vec<Complex64> = s
        .phases
        .iter()
        .map(|a| one() - phase_unit(a) * 2.0)
        .collect();
    let all_outputs = low_mask(s.outputs);
    let in_all: Vec<bool> = (0..k)
        .map(|j| regs.iter().all(|&r| column_bit(r, k, j)))
        .collect();
    expand_columns(s, scale, cfg, |j, pattern| {
        if in_all[j] && pattern == all_outputs {
            weights[j]
        } else {
            one()
        }
    })
}
