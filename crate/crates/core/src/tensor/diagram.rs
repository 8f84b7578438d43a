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

//! Diagram IR: scalable generators composed in sequence and in parallel.

use std::fmt;

use crate::boolmat::BoolMatrix;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::rational::{self, Rational};

/// Register sizes of a wire bundle. Empty registers are the tensor unit and
/// are dropped, so `[]` stands for `[0]` and `[n]⊗[0]` is `[n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WireType(Vec<usize>);

impl WireType {
    pub fn new(mut registers: Vec<usize>) -> Self {
        registers.retain(|&n| n > 0);
        Self(registers)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn single(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// `[k]^count`.
    pub fn repeated(k: usize, count: usize) -> Self {
        Self::new(vec![k; count])
    }

    pub fn registers(&self) -> &[usize] {
        &self.0
    }

    pub fn qubits(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut regs = self.0.clone();
        regs.extend_from_slice(&other.0);
        Self::new(regs)
    }
}

impl fmt::Display for WireType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[0]");
        }
        let parts: Vec<String> = self.0.iter().map(|n| format!("[{n}]")).collect();
        f.write_str(&parts.join("⊗"))
    }
}

/// Arity and phase vector shared by the three spider families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spider {
    pub k: usize,
    pub inputs: usize,
    pub outputs: usize,
    /// One phase per qubit of the register, kept in `[0, 2)`.
    pub phases: Vec<Rational>,
}

impl Spider {
    pub fn new(k: usize, inputs: usize, outputs: usize, phases: Vec<Rational>) -> Result<Self> {
        if phases.len() != k {
            return Err(Error::Malformed(format!(
                "phase vector of length {} for a [{k}] spider",
                phases.len()
            )));
        }
        Ok(Self {
            k,
            inputs,
            outputs,
            phases: phases.iter().map(rational::mod2).collect(),
        })
    }

    /// All-zero phase vector.
    pub fn plain(k: usize, inputs: usize, outputs: usize) -> Self {
        Self {
            k,
            inputs,
            outputs,
            phases: vec![Rational::from_integer(0.into()); k],
        }
    }

    fn flipped(&self) -> Self {
        Self {
            k: self.k,
            inputs: self.outputs,
            outputs: self.inputs,
            phases: self.phases.iter().map(|a| rational::mod2(&-a)).collect(),
        }
    }
}

/// Lookup table of a boolean function `2^n → 2^m` on big-endian indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FunctionTable {
    pub n: usize,
    pub m: usize,
    pub table: Vec<u64>,
}

impl FunctionTable {
    pub fn new(n: usize, m: usize, table: Vec<u64>) -> Result<Self> {
        if n >= 63 || m >= 63 {
            return Err(Error::Malformed(format!("function arrow {n} -> {m} too wide")));
        }
        if table.len() != 1usize << n {
            return Err(Error::Malformed(format!(
                "function table has {} entries, expected {}",
                table.len(),
                1u64 << n
            )));
        }
        if let Some(bad) = table.iter().find(|&&y| y >> m != 0) {
            return Err(Error::Malformed(format!("table value {bad} exceeds {m} bits")));
        }
        Ok(Self { n, m, table })
    }

    pub fn from_fn(n: usize, m: usize, f: impl FnMut(u64) -> u64) -> Self {
        let table = (0..1u64 << n).map(f).collect();
        Self::new(n, m, table).expect("table built over the full domain")
    }

    /// Red arrow: `x ↦ A x` over F2.
    pub fn red(a: &F2Matrix) -> Self {
        Self::from_fn(a.cols(), a.rows(), |x| a.apply_index(x))
    }

    /// Yellow arrow: AND over each row's support.
    pub fn yellow(a: &BoolMatrix) -> Self {
        Self::from_fn(a.cols(), a.rows(), |x| a.apply_index(x))
    }

    pub fn apply(&self, x: u64) -> u64 {
        self.table[x as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    Wire(usize),
    Swap(usize, usize),
    Cup(usize),
    Cap(usize),
    Divider(usize, usize),
    Gatherer(usize, usize),
    GreenSpider(Spider),
    RedSpider(Spider),
    Harvestman(Spider),
    FunctionArrow(FunctionTable),
    /// Adjoint of a function arrow, `[m] → [n]`.
    FunctionArrowDagger(FunctionTable),
}

impl Generator {
    pub fn domain(&self) -> WireType {
        match self {
            Generator::Wire(n) => WireType::single(*n),
            Generator::Swap(n, m) => WireType::new(vec![*n, *m]),
            Generator::Cup(_) => WireType::empty(),
            Generator::Cap(n) => WireType::new(vec![*n, *n]),
            Generator::Divider(n, m) => WireType::single(n + m),
            Generator::Gatherer(n, m) => WireType::new(vec![*n, *m]),
            Generator::GreenSpider(s) | Generator::RedSpider(s) | Generator::Harvestman(s) => {
                WireType::repeated(s.k, s.inputs)
            }
            Generator::FunctionArrow(t) => WireType::single(t.n),
            Generator::FunctionArrowDagger(t) => WireType::single(t.m),
        }
    }

    pub fn codomain(&self) -> WireType {
        match self {
            Generator::Wire(n) => WireType::single(*n),
            Generator::Swap(n, m) => WireType::new(vec![*m, *n]),
            Generator::Cup(n) => WireType::new(vec![*n, *n]),
            Generator::Cap(_) => WireType::empty(),
            Generator::Divider(n, m) => WireType::new(vec![*n, *m]),
            Generator::Gatherer(n, m) => WireType::single(n + m),
            Generator::GreenSpider(s) | Generator::RedSpider(s) | Generator::Harvestman(s) => {
                WireType::repeated(s.k, s.outputs)
            }
            Generator::FunctionArrow(t) => WireType::single(t.m),
            Generator::FunctionArrowDagger(t) => WireType::single(t.n),
        }
    }

    pub fn dagger(&self) -> Generator {
        match self {
            Generator::Wire(n) => Generator::Wire(*n),
            Generator::Swap(n, m) => Generator::Swap(*m, *n),
            Generator::Cup(n) => Generator::Cap(*n),
            Generator::Cap(n) => Generator::Cup(*n),
            Generator::Divider(n, m) => Generator::Gatherer(*n, *m),
            Generator::Gatherer(n, m) => Generator::Divider(*n, *m),
            Generator::GreenSpider(s) => Generator::GreenSpider(s.flipped()),
            Generator::RedSpider(s) => Generator::RedSpider(s.flipped()),
            Generator::Harvestman(s) => Generator::Harvestman(s.flipped()),
            Generator::FunctionArrow(t) => Generator::FunctionArrowDagger(t.clone()),
            Generator::FunctionArrowDagger(t) => Generator::FunctionArrow(t.clone()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Generator::Wire(_) => "wire",
            Generator::Swap(..) => "swap",
            Generator::Cup(_) => "cup",
            Generator::Cap(_) => "cap",
            Generator::Divider(..) => "divider",
            Generator::Gatherer(..) => "gatherer",
            Generator::GreenSpider(_) => "green",
            Generator::RedSpider(_) => "red",
            Generator::Harvestman(_) => "h",
            Generator::FunctionArrow(_) => "farrow",
            Generator::FunctionArrowDagger(_) => "farrow_dag",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Gen(Generator),
    /// `first` then `then`.
    Seq(Box<Diagram>, Box<Diagram>),
    /// `left` on the most significant registers.
    Par(Box<Diagram>, Box<Diagram>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    node: Node,
    domain: WireType,
    codomain: WireType,
}

impl From<Generator> for Diagram {
    fn from(g: Generator) -> Self {
        Diagram::gen(g)
    }
}

impl Diagram {
    pub fn gen(g: Generator) -> Self {
        Self {
            domain: g.domain(),
            codomain: g.codomain(),
            node: Node::Gen(g),
        }
    }

    pub fn wire(n: usize) -> Self {
        Self::gen(Generator::Wire(n))
    }

    pub fn green(k: usize, inputs: usize, outputs: usize, phases: Vec<Rational>) -> Result<Self> {
        Spider::new(k, inputs, outputs, phases).map(|s| Self::gen(Generator::GreenSpider(s)))
    }

    pub fn red(k: usize, inputs: usize, outputs: usize, phases: Vec<Rational>) -> Result<Self> {
        Spider::new(k, inputs, outputs, phases).map(|s| Self::gen(Generator::RedSpider(s)))
    }

    pub fn harvestman(
        k: usize,
        inputs: usize,
        outputs: usize,
        phases: Vec<Rational>,
    ) -> Result<Self> {
        Spider::new(k, inputs, outputs, phases).map(|s| Self::gen(Generator::Harvestman(s)))
    }

    pub fn green_plain(k: usize, inputs: usize, outputs: usize) -> Self {
        Self::gen(Generator::GreenSpider(Spider::plain(k, inputs, outputs)))
    }

    pub fn red_plain(k: usize, inputs: usize, outputs: usize) -> Self {
        Self::gen(Generator::RedSpider(Spider::plain(k, inputs, outputs)))
    }

    pub fn harvestman_plain(k: usize, inputs: usize, outputs: usize) -> Self {
        Self::gen(Generator::Harvestman(Spider::plain(k, inputs, outputs)))
    }

    pub fn function_arrow(t: FunctionTable) -> Self {
        Self::gen(Generator::FunctionArrow(t))
    }

    pub fn red_arrow(a: &F2Matrix) -> Self {
        Self::function_arrow(FunctionTable::red(a))
    }

    pub fn yellow_arrow(a: &BoolMatrix) -> Self {
        Self::function_arrow(FunctionTable::yellow(a))
    }

    /// `self` followed by `then`.
    pub fn then(self, then: Diagram) -> Result<Self> {
        if self.codomain != then.domain {
            return Err(Error::TypeMismatch {
                node: "seq".into(),
                first: self.codomain.to_string(),
                then: then.domain.to_string(),
            });
        }
        Ok(Self {
            domain: self.domain.clone(),
            codomain: then.codomain.clone(),
            node: Node::Seq(Box::new(self), Box::new(then)),
        })
    }

    pub fn par(self, right: Diagram) -> Self {
        Self {
            domain: self.domain.tensor(&right.domain),
            codomain: self.codomain.tensor(&right.codomain),
            node: Node::Par(Box::new(self), Box::new(right)),
        }
    }

    /// Left-to-right sequential composite of a non-empty list.
    pub fn chain(parts: Vec<Diagram>) -> Result<Self> {
        let mut it = parts.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Malformed("empty sequential composite".into()))?;
        it.enumerate().try_fold(first, |acc, (i, d)| {
            acc.then(d).map_err(|e| match e {
                Error::TypeMismatch { first, then, .. } => Error::TypeMismatch {
                    node: format!("seq[{}]", i + 1),
                    first,
                    then,
                },
                other => other,
            })
        })
    }

    /// Parallel composite of a non-empty list, first element on top.
    pub fn tensor(parts: Vec<Diagram>) -> Result<Self> {
        let mut it = parts.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Malformed("empty parallel composite".into()))?;
        Ok(it.fold(first, Diagram::par))
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    pub fn domain(&self) -> &WireType {
        &self.domain
    }

    pub fn codomain(&self) -> &WireType {
        &self.codomain
    }

    pub fn dagger(&self) -> Diagram {
        match &self.node {
            Node::Gen(g) => Diagram::gen(g.dagger()),
            Node::Seq(a, b) => Diagram {
                domain: self.codomain.clone(),
                codomain: self.domain.clone(),
                node: Node::Seq(Box::new(b.dagger()), Box::new(a.dagger())),
            },
            Node::Par(l, r) => l.dagger().par(r.dagger()),
        }
    }

    pub fn generator_count(&self) -> usize {
        match &self.node {
            Node::Gen(_) => 1,
            Node::Seq(a, b) | Node::Par(a, b) => a.generator_count() + b.generator_count(),
        }
    }
}
