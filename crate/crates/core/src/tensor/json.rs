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

//! JSON schema for diagrams.
//!
//! ```json
//! {"seq": [
//!   {"node": "green", "k": 2, "in": 1, "out": 3},
//!   {"par": [{"node": "wire", "n": 2},
//!            {"node": "rarrow", "matrix": [[0, 1], [0, 0]]},
//!            {"node": "wire", "n": 2}]},
//!   {"par": [{"node": "wire", "n": 2},
//!            {"node": "h", "k": 2, "in": 2, "out": 0}]}
//! ]}
//! ```
//!
//! Spiders take optional `"phases"` (rational strings, default all zero).
//! Function arrows take a `"table"` of output bit strings listed by input
//! in big-endian order; `rarrow`/`yarrow` take a 0/1 `"matrix"`.

use serde::{Deserialize, Serialize};

use super::diagram::{Diagram, FunctionTable, Generator, Node, Spider};
use crate::bits::BitVec;
use crate::boolmat::BoolMatrix;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DiagramJson {
    Seq { seq: Vec<DiagramJson> },
    Par { par: Vec<DiagramJson> },
    Gen(GeneratorJson),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum GeneratorJson {
    Wire { n: usize },
    Swap { n: usize, m: usize },
    Cup { n: usize },
    Cap { n: usize },
    Divider { n: usize, m: usize },
    Gatherer { n: usize, m: usize },
    Green(SpiderJson),
    Red(SpiderJson),
    H(SpiderJson),
    Farrow(ArrowJson),
    FarrowDag(ArrowJson),
    Rarrow { matrix: F2Matrix },
    Yarrow { matrix: BoolMatrix },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpiderJson {
    pub k: usize,
    #[serde(rename = "in")]
    pub inputs: usize,
    #[serde(rename = "out")]
    pub outputs: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phases: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowJson {
    pub n: usize,
    pub m: usize,
    pub table: Vec<String>,
}

impl SpiderJson {
    fn to_spider(&self) -> Result<Spider> {
        let phases = match &self.phases {
            None => vec![Rational::from_integer(0.into()); self.k],
            Some(p) => p.iter().map(|s| rational::parse(s)).collect::<Result<_>>()?,
        };
        Spider::new(self.k, self.inputs, self.outputs, phases)
    }

    fn from_spider(s: &Spider) -> Self {
        Self {
            k: s.k,
            inputs: s.inputs,
            outputs: s.outputs,
            phases: Some(s.phases.iter().map(rational::format).collect()),
        }
    }
}

impl ArrowJson {
    fn to_table(&self) -> Result<FunctionTable> {
        let table = self
            .table
            .iter()
            .map(|s| {
                let v: BitVec = s.parse()?;
                if v.len() != self.m {
                    return Err(Error::Malformed(format!(
                        "table entry `{s}` is not {} bits",
                        self.m
                    )));
                }
                Ok(v.to_index())
            })
            .collect::<Result<Vec<_>>>()?;
        FunctionTable::new(self.n, self.m, table)
    }

    fn from_table(t: &FunctionTable) -> Self {
        Self {
            n: t.n,
            m: t.m,
            table: t
                .table
                .iter()
                .map(|&y| BitVec::from_index(t.m, y).to_string())
                .collect(),
        }
    }
}

impl GeneratorJson {
    fn to_generator(&self) -> Result<Generator> {
        Ok(match self {
            GeneratorJson::Wire { n } => Generator::Wire(*n),
            GeneratorJson::Swap { n, m } => Generator::Swap(*n, *m),
            GeneratorJson::Cup { n } => Generator::Cup(*n),
            GeneratorJson::Cap { n } => Generator::Cap(*n),
            GeneratorJson::Divider { n, m } => Generator::Divider(*n, *m),
            GeneratorJson::Gatherer { n, m } => Generator::Gatherer(*n, *m),
            GeneratorJson::Green(s) => Generator::GreenSpider(s.to_spider()?),
            GeneratorJson::Red(s) => Generator::RedSpider(s.to_spider()?),
            GeneratorJson::H(s) => Generator::Harvestman(s.to_spider()?),
            GeneratorJson::Farrow(a) => Generator::FunctionArrow(a.to_table()?),
            GeneratorJson::FarrowDag(a) => Generator::FunctionArrowDagger(a.to_table()?),
            GeneratorJson::Rarrow { matrix } => Generator::FunctionArrow(FunctionTable::red(matrix)),
            GeneratorJson::Yarrow { matrix } => {
                Generator::FunctionArrow(FunctionTable::yellow(matrix))
            }
        })
    }

    fn from_generator(g: &Generator) -> Self {
        match g {
            Generator::Wire(n) => GeneratorJson::Wire { n: *n },
            Generator::Swap(n, m) => GeneratorJson::Swap { n: *n, m: *m },
            Generator::Cup(n) => GeneratorJson::Cup { n: *n },
            Generator::Cap(n) => GeneratorJson::Cap { n: *n },
            Generator::Divider(n, m) => GeneratorJson::Divider { n: *n, m: *m },
            Generator::Gatherer(n, m) => GeneratorJson::Gatherer { n: *n, m: *m },
            Generator::GreenSpider(s) => GeneratorJson::Green(SpiderJson::from_spider(s)),
            Generator::RedSpider(s) => GeneratorJson::Red(SpiderJson::from_spider(s)),
            Generator::Harvestman(s) => GeneratorJson::H(SpiderJson::from_spider(s)),
            Generator::FunctionArrow(t) => GeneratorJson::Farrow(ArrowJson::from_table(t)),
            Generator::FunctionArrowDagger(t) => GeneratorJson::FarrowDag(ArrowJson::from_table(t)),
        }
    }
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<Diagram> {
        self.build("root")
    }

    fn build(&self, path: &str) -> Result<Diagram> {
        let parts = |items: &[DiagramJson], tag: &str| {
            items
                .iter()
                .enumerate()
                .map(|(i, d)| d.build(&format!("{path}.{tag}[{i}]")))
                .collect::<Result<Vec<_>>>()
        };
        match self {
            DiagramJson::Gen(g) => g
                .to_generator()
                .map(Diagram::gen)
                .map_err(|e| Error::Malformed(format!("{path}: {e}"))),
            DiagramJson::Par { par } => Diagram::tensor(parts(par, "par")?)
                .map_err(|e| Error::Malformed(format!("{path}: {e}"))),
            DiagramJson::Seq { seq } => {
                Diagram::chain(parts(seq, "seq")?).map_err(|e| match e {
                    Error::TypeMismatch { node, first, then } => Error::TypeMismatch {
                        node: format!("{path}.{node}"),
                        first,
                        then,
                    },
                    other => Error::Malformed(format!("{path}: {other}")),
                })
            }
        }
    }

    /// Nested binary form of `d`.
    pub fn from_diagram(d: &Diagram) -> Self {
        match d.node() {
            Node::Gen(g) => DiagramJson::Gen(GeneratorJson::from_generator(g)),
            Node::Seq(a, b) => DiagramJson::Seq {
                seq: vec![Self::from_diagram(a), Self::from_diagram(b)],
            },
            Node::Par(a, b) => DiagramJson::Par {
                par: vec![Self::from_diagram(a), Self::from_diagram(b)],
            },
        }
    }
}

pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let json: DiagramJson =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    json.to_diagram()
}

pub fn diagram_to_json(d: &Diagram) -> String {
    serde_json::to_string(&DiagramJson::from_diagram(d)).expect("diagram serializes")
}
