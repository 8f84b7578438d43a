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

//! Bit strings indexed like qubits: position 1 is the leftmost, most
//! significant bit of the integer encoding.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitVec {
    bits: Vec<bool>,
}

impl BitVec {
    pub fn zeros(n: usize) -> Self {
        Self {
            bits: vec![false; n],
        }
    }

    pub fn ones(n: usize) -> Self {
        Self { bits: vec![true; n] }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The `n`-bit string whose big-endian value is `index`.
    pub fn from_index(n: usize, index: u64) -> Self {
        debug_assert!(n >= 64 || index >> n == 0);
        let bits = (0..n)
            .map(|i| {
                let shift = n - 1 - i;
                shift < 64 && (index >> shift) & 1 == 1
            })
            .collect();
        Self { bits }
    }

    /// Unit vector with a single 1 at qubit `i` (1-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.bits[i - 1] = true;
        v
    }

    /// Big-endian integer encoding. Panics past 64 bits.
    pub fn to_index(&self) -> u64 {
        assert!(self.bits.len() <= 64, "bit string too long for u64 index");
        self.bits
            .iter()
            .fold(0u64, |acc, &b| (acc << 1) | u64::from(b))
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Qubit `i`, 1-based.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i - 1] = value;
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    /// Parity of the overlap, i.e. the F2 inner product.
    pub fn dot(&self, other: &Self) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(&a, &b)| a && b)
            .count()
            % 2
            == 1
    }

    /// Bitwise `self ≤ other`.
    pub fn is_below(&self, other: &Self) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn and(&self, other: &Self) -> Self {
        Self::from_bits(self.bits.iter().zip(&other.bits).map(|(&a, &b)| a && b).collect())
    }

    pub fn xor(&self, other: &Self) -> Self {
        Self::from_bits(self.bits.iter().zip(&other.bits).map(|(&a, &b)| a ^ b).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Self { bits }
    }

    /// All `n`-bit strings in lexicographic (big-endian) order.
    pub fn all(n: usize) -> impl Iterator<Item = BitVec> {
        assert!(n < 64);
        (0..1u64 << n).map(move |i| BitVec::from_index(n, i))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Malformed(format!("bad bit string `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bits)
    }
}

impl From<Vec<bool>> for BitVec {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl Serialize for BitVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Big-endian helpers on plain `u64` indices, used by the hot loops.
pub mod index {
    /// Qubit `i` (1-based) of the `n`-bit index `x`.
    #[inline]
    pub fn bit(n: usize, x: u64, i: usize) -> bool {
        (x >> (n - i)) & 1 == 1
    }

    /// Mask selecting qubit `i` (1-based) among `n`.
    #[inline]
    pub fn mask(n: usize, i: usize) -> u64 {
        1u64 << (n - i)
    }

    #[inline]
    pub fn parity(x: u64) -> bool {
        x.count_ones() % 2 == 1
    }
}
