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

//! {0,1}-matrices acting over the Boolean semiring, the set function and
//! the stack matrix listing every subset.

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::f2::F2Matrix;

/// Same storage as [`F2Matrix`]; the action is AND over each row's support.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoolMatrix(F2Matrix);

impl BoolMatrix {
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        F2Matrix::from_rows(rows).map(Self)
    }

    pub fn rows(&self) -> usize {
        self.0.rows()
    }

    pub fn cols(&self) -> usize {
        self.0.cols()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.0.get(r, c)
    }

    pub fn as_f2(&self) -> &F2Matrix {
        &self.0
    }

    /// Row `r` as the support mask over the big-endian input index.
    pub fn row_mask(&self, r: usize) -> u64 {
        (0..self.cols()).fold(0u64, |acc, c| (acc << 1) | u64::from(self.get(r, c)))
    }

    /// Same as [`yellow_apply`] on big-endian integer encodings.
    pub fn apply_index(&self, x: u64) -> u64 {
        (0..self.rows()).fold(0u64, |y, r| {
            let mask = self.row_mask(r);
            (y << 1) | u64::from(x & mask == mask)
        })
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.0.hstack(&other.0).map(Self)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.0.vstack(&other.0).map(Self)
    }
}

impl From<F2Matrix> for BoolMatrix {
    fn from(m: F2Matrix) -> Self {
        Self(m)
    }
}

impl From<BoolMatrix> for F2Matrix {
    fn from(m: BoolMatrix) -> Self {
        m.0
    }
}

/// `y[i]` is the AND of `x[j]` over the support of row `i`; an empty row gives 1.
pub fn yellow_apply(a: &BoolMatrix, x: &BitVec) -> Result<BitVec> {
    if a.cols() != x.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix applied to {}-bit vector",
            a.rows(),
            a.cols(),
            x.len()
        )));
    }
    Ok(BitVec::from_bits(
        (0..a.rows())
            .map(|r| (0..a.cols()).all(|c| !a.get(r, c) || x.get(c + 1)))
            .collect(),
    ))
}

/// Indicator of `x` among all `2^n` strings: `h(x)_s = δ_{x=s}`.
pub fn set_function(n: usize, x: &BitVec) -> Result<BitVec> {
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "set function on {n} bits given {} bits",
            x.len()
        )));
    }
    let mut out = BitVec::zeros(1 << n);
    out.set(x.to_index() as usize + 1, true);
    Ok(out)
}

/// The `2^n × n` matrix whose row `s` spells `s` in binary.
pub fn stack_matrix(n: usize) -> BoolMatrix {
    let rows: Vec<Vec<u8>> = BitVec::all(n)
        .map(|s| s.bits().iter().map(|&b| u8::from(b)).collect())
        .collect();
    if n == 0 {
        return BoolMatrix(F2Matrix::zeros(1, 0));
    }
    BoolMatrix::from_rows(&rows).expect("rows are rectangular")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVec {
        s.parse().unwrap()
    }

    #[test]
    fn yellow_examples() {
        let a = BoolMatrix::from_rows(&[[1u8, 1]]).unwrap();
        assert_eq!(yellow_apply(&a, &bv("11")).unwrap(), bv("1"));
        let empty = BoolMatrix::from_rows(&[[0u8, 0]]).unwrap();
        for x in BitVec::all(2) {
            assert_eq!(yellow_apply(&empty, &x).unwrap(), bv("1"));
        }
        assert!(yellow_apply(&a, &bv("1")).is_err());
    }

    #[test]
    fn yellow_on_stack_is_xi() {
        let h2 = stack_matrix(2);
        assert_eq!(yellow_apply(&h2, &bv("10")).unwrap(), bv("1010"));
        for n in 1..5 {
            let h = stack_matrix(n);
            for x in BitVec::all(n) {
                let y = yellow_apply(&h, &x).unwrap();
                for s in BitVec::all(n) {
                    assert_eq!(y.get(s.to_index() as usize + 1), s.is_below(&x));
                }
                assert_eq!(y.to_index(), h.apply_index(x.to_index()));
            }
        }
    }

    #[test]
    fn set_function_examples() {
        assert_eq!(set_function(0, &BitVec::zeros(0)).unwrap(), bv("1"));
        assert_eq!(set_function(2, &bv("10")).unwrap(), bv("0010"));
        for x in BitVec::all(3) {
            assert_eq!(set_function(3, &x).unwrap().weight(), 1);
        }
    }

    /// Unfolds `h_{n+1}(x_0 x') = h_n(x') 0..0` or `0..0 h_n(x')`.
    fn set_function_inductive(x: &[bool]) -> Vec<bool> {
        match x.split_first() {
            None => vec![true],
            Some((&x0, rest)) => {
                let inner = set_function_inductive(rest);
                let zeros = vec![false; inner.len()];
                if x0 {
                    [zeros, inner].concat()
                } else {
                    [inner, zeros].concat()
                }
            }
        }
    }

    #[test]
    fn set_function_agrees_with_induction() {
        for n in 0..6 {
            for x in BitVec::all(n) {
                assert_eq!(
                    set_function(n, &x).unwrap().bits(),
                    set_function_inductive(x.bits()).as_slice()
                );
            }
        }
    }

    /// `H_1 = (0;1)`, `H_{n+1} = (0 H_n ; 1 H_n)`.
    fn stack_inductive(n: usize) -> Vec<Vec<u8>> {
        if n == 1 {
            return vec![vec![0], vec![1]];
        }
        let inner = stack_inductive(n - 1);
        let mut out = Vec::new();
        for lead in [0u8, 1] {
            for row in &inner {
                let mut r = vec![lead];
                r.extend(row);
                out.push(r);
            }
        }
        out
    }

    #[test]
    fn stack_matrix_examples() {
        assert_eq!(stack_matrix(1).as_f2().to_rows(), vec![vec![0], vec![1]]);
        assert_eq!(
            stack_matrix(2).as_f2().to_rows(),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let h0 = stack_matrix(0);
        assert_eq!((h0.rows(), h0.cols()), (1, 0));
        for n in 1..=8 {
            let h = stack_matrix(n);
            assert_eq!(h.rows(), 1 << n);
            assert_eq!(h.as_f2().to_rows(), stack_inductive(n));
            for r in 0..h.rows() {
                assert_eq!(h.row_mask(r), r as u64);
            }
        }
    }
}
