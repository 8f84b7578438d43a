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

//! Exact transforms on phase functions.
//!
//! All butterflies split on the most significant bit first, so the two
//! halves of a level are the `x₁ = 0` and `x₁ = 1` blocks.

use num::{BigInt, One, Zero};
use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::rational::{ratio, BinomialTable, Rational};

/// Real-valued function on n-bit strings, indexed big-endian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PhaseFunctionJson", into = "PhaseFunctionJson")]
pub struct PhaseFunction {
    n: usize,
    values: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PhaseFunctionJson {
    n: usize,
    #[serde(with = "crate::rational::serde_str::vec")]
    values: Vec<Rational>,
}

impl TryFrom<PhaseFunctionJson> for PhaseFunction {
    type Error = Error;
    fn try_from(j: PhaseFunctionJson) -> Result<Self> {
        PhaseFunction::new(j.n, j.values)
    }
}

impl From<PhaseFunction> for PhaseFunctionJson {
    fn from(f: PhaseFunction) -> Self {
        PhaseFunctionJson {
            n: f.n,
            values: f.values,
        }
    }
}

/// Largest register accepted for dense phase functions.
pub const MAX_PHASE_QUBITS: usize = 24;

impl PhaseFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        if n > MAX_PHASE_QUBITS {
            return Err(Error::OutOfRange(format!("{n} qubits")));
        }
        if values.len() != 1 << n {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {n} qubits, expected {}",
                values.len(),
                1u64 << n
            )));
        }
        Ok(PhaseFunction { n, values })
    }

    pub fn zeros(n: usize) -> Self {
        PhaseFunction {
            n,
            values: vec![Rational::zero(); 1 << n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(u64) -> Rational) -> Self {
        PhaseFunction {
            n,
            values: (0..1u64 << n).map(&mut f).collect(),
        }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, x: u64) -> &Rational {
        &self.values[x as usize]
    }

    pub fn at(&self, x: &BitVec) -> &Rational {
        self.get(x.to_index())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!(
                "phase functions on {} and {} qubits",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(PhaseFunction { n: self.n, values })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect();
        Ok(PhaseFunction { n: self.n, values })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PhaseFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Some `F` with `f(x) = F(|x|)`, if there is one.
    pub fn as_symmetric(&self) -> Option<SymmetricPhaseFunction> {
        let mut by_weight: Vec<Option<&Rational>> = vec![None; self.n + 1];
        for (x, v) in self.values.iter().enumerate() {
            let w = x.count_ones() as usize;
            match by_weight[w] {
                None => by_weight[w] = Some(v),
                Some(u) if u != v => return None,
                _ => {}
            }
        }
        Some(SymmetricPhaseFunction {
            n: self.n,
            by_weight: by_weight.into_iter().map(|v| v.unwrap().clone()).collect(),
        })
    }
}

/// Function of the Hamming weight only: `by_weight[k] = F(k)` for `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SymmetricJson", into = "SymmetricJson")]
pub struct SymmetricPhaseFunction {
    n: usize,
    by_weight: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct SymmetricJson {
    n: usize,
    #[serde(with = "crate::rational::serde_str::vec")]
    by_weight: Vec<Rational>,
}

impl TryFrom<SymmetricJson> for SymmetricPhaseFunction {
    type Error = Error;
    fn try_from(j: SymmetricJson) -> Result<Self> {
        SymmetricPhaseFunction::new(j.n, j.by_weight)
    }
}

impl From<SymmetricPhaseFunction> for SymmetricJson {
    fn from(f: SymmetricPhaseFunction) -> Self {
        SymmetricJson {
            n: f.n,
            by_weight: f.by_weight,
        }
    }
}

impl SymmetricPhaseFunction {
    pub fn new(n: usize, by_weight: Vec<Rational>) -> Result<Self> {
        if by_weight.len() != n + 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for {n} qubits, expected {}",
                by_weight.len(),
                n + 1
            )));
        }
        Ok(SymmetricPhaseFunction { n, by_weight })
    }

    pub fn from_fn(n: usize, f: impl FnMut(usize) -> Rational) -> Self {
        SymmetricPhaseFunction {
            n,
            by_weight: (0..=n).map(f).collect(),
        }
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn by_weight(&self) -> &[Rational] {
        &self.by_weight
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.by_weight[k]
    }
}

// W = ½[[1,1],[1,−1]] per level when `half` is set, the bare ±1 butterfly otherwise.
fn hadamard_butterfly(values: &mut [Rational], half: bool) {
    let len = values.len();
    let two = ratio(2, 1);
    let mut h = len / 2;
    while h >= 1 {
        for block in (0..len).step_by(2 * h) {
            for i in block..block + h {
                let a = values[i].clone();
                let b = values[i + h].clone();
                let (mut s, mut d) = (&a + &b, a - b);
                if half {
                    s /= &two;
                    d /= &two;
                }
                values[i] = s;
                values[i + h] = d;
            }
        }
        h /= 2;
    }
}

fn moebius_butterfly(values: &mut [Rational], inverse: bool) {
    let len = values.len();
    let mut h = len / 2;
    while h >= 1 {
        for block in (0..len).step_by(2 * h) {
            for i in block..block + h {
                let low = values[i].clone();
                if inverse {
                    values[i + h] += low;
                } else {
                    values[i + h] -= low;
                }
            }
        }
        h /= 2;
    }
}

/// `f̂ = W^{⊗n} f`, so `f̂(s) = 2^{-n} Σ_x (-1)^{s·x} f(x)`.
pub fn walsh(f: &PhaseFunction) -> PhaseFunction {
    let mut values = f.values.clone();
    hadamard_butterfly(&mut values, true);
    PhaseFunction { n: f.n, values }
}

pub fn walsh_inverse(f: &PhaseFunction) -> PhaseFunction {
    let mut values = f.values.clone();
    hadamard_butterfly(&mut values, false);
    PhaseFunction { n: f.n, values }
}

/// `f̃ = M^{⊗n} f` with `M = [[1,0],[-1,1]]`.
pub fn moebius(f: &PhaseFunction) -> PhaseFunction {
    let mut values = f.values.clone();
    moebius_butterfly(&mut values, false);
    PhaseFunction { n: f.n, values }
}

pub fn moebius_inverse(f: &PhaseFunction) -> PhaseFunction {
    let mut values = f.values.clone();
    moebius_butterfly(&mut values, true);
    PhaseFunction { n: f.n, values }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Chi,
    Omega,
    Xi,
}

impl std::str::FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi" => Ok(BasisKind::Chi),
            "omega" => Ok(BasisKind::Omega),
            "xi" => Ok(BasisKind::Xi),
            _ => Err(Error::Malformed(format!("unknown basis `{s}`"))),
        }
    }
}

pub fn basis_eval(kind: BasisKind, s: &BitVec, x: &BitVec) -> Result<Rational> {
    if s.len() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "s has {} bits, x has {}",
            s.len(),
            x.len()
        )));
    }
    let omega = || if s.dot(x) { Rational::one() } else { Rational::zero() };
    Ok(match kind {
        BasisKind::Omega => omega(),
        BasisKind::Chi => Rational::one() - omega() * ratio(2, 1),
        BasisKind::Xi => {
            if s.is_below(x) {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
    })
}

pub fn expand_symmetric(f: &SymmetricPhaseFunction) -> PhaseFunction {
    PhaseFunction::from_fn(f.n, |x| f.by_weight[x.count_ones() as usize].clone())
}

fn signed(v: Rational, negative: bool) -> Rational {
    if negative {
        -v
    } else {
        v
    }
}

/// `F̃(m) = Σ_k C(m,k) (-1)^{m-k} F(k)`.
pub fn binomial_transform(f: &SymmetricPhaseFunction) -> SymmetricPhaseFunction {
    let c = BinomialTable::new(f.n);
    SymmetricPhaseFunction::from_fn(f.n, |m| {
        (0..=m)
            .map(|k| signed(&f.by_weight[k] * Rational::from_integer(c.get(m, k)), (m - k) % 2 == 1))
            .sum()
    })
}

/// `F(m) = Σ_k C(m,k) F̃(k)`.
pub fn binomial_inverse(f: &SymmetricPhaseFunction) -> SymmetricPhaseFunction {
    let c = BinomialTable::new(f.n);
    SymmetricPhaseFunction::from_fn(f.n, |m| {
        (0..=m)
            .map(|k| &f.by_weight[k] * Rational::from_integer(c.get(m, k)))
            .sum()
    })
}

fn kravchuk_with(c: &BinomialTable, n: usize, k: usize, m: usize) -> Rational {
    let mut acc = Rational::zero();
    for j in 0..=k.min(m) {
        if k - j > n - m {
            continue;
        }
        let term = Rational::from_integer(c.get(m, j) * c.get(n - m, k - j));
        acc += signed(term, j % 2 == 1);
    }
    acc
}

/// `K^n_k(m) = Σ_j C(m,j) C(n-m,k-j) (-1)^j`.
pub fn kravchuk(n: usize, k: usize, m: usize) -> Result<Rational> {
    if k > n || m > n {
        return Err(Error::OutOfRange(format!("K^{n}_{k}({m})")));
    }
    Ok(kravchuk_with(&BinomialTable::new(n), n, k, m))
}

// Rows from `(k+1) K_{k+1}(m) = (n-2m) K_k(m) - (n-k+1) K_{k-1}(m)`.
fn kravchuk_table(n: usize) -> Vec<Vec<Rational>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one(); n + 1]];
    if n >= 1 {
        rows.push((0..=n).map(|m| BigInt::from(n as i64 - 2 * m as i64)).collect());
    }
    for k in 1..n {
        let next = (0..=n)
            .map(|m| {
                let a = &rows[k][m] * BigInt::from(n as i64 - 2 * m as i64);
                let b = &rows[k - 1][m] * BigInt::from((n - k + 1) as i64);
                (a - b) / BigInt::from(k as i64 + 1)
            })
            .collect();
        rows.push(next);
    }
    rows.into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect()
}

/// `F̂(m) = 2^{-n} Σ_k F(k) K^n_k(m)`; matches `walsh` on the expansion.
pub fn kravchuk_transform(f: &SymmetricPhaseFunction) -> SymmetricPhaseFunction {
    let n = f.n;
    let k = kravchuk_table(n);
    let scale = crate::rational::pow2(-(n as i64));
    SymmetricPhaseFunction::from_fn(n, |m| {
        let s: Rational = (0..=n).map(|j| &f.by_weight[j] * &k[j][m]).sum();
        s * &scale
    })
}

/// `F(m) = Σ_k F̂(k) K^n_k(m)`.
pub fn kravchuk_inverse(f: &SymmetricPhaseFunction) -> SymmetricPhaseFunction {
    let n = f.n;
    let k = kravchuk_table(n);
    SymmetricPhaseFunction::from_fn(n, |m| (0..=n).map(|j| &f.by_weight[j] * &k[j][m]).sum())
}
