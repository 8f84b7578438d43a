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

//! Dense matrices over F2 and the linear algebra the red arrows need:
//! products, kernels and images, the span condition between two block
//! matrices, and CNOT synthesis of invertible matrices.
//!
//! Matrix entries are addressed 0-based `(row, col)`; qubits in a
//! [`TransvectionStep`] are 1-based like everywhere else.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::BitVec;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<bool>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![false; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from 0/1 rows; every row must have the same length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &v in row {
                match v {
                    0 => data.push(false),
                    1 => data.push(true),
                    _ => return Err(Error::Malformed(format!("entry {v} is not 0/1"))),
                }
            }
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// A single-row matrix from a bit string.
    pub fn row_vector(s: &BitVec) -> Self {
        Self {
            rows: 1,
            cols: s.len(),
            data: s.bits().to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_bits(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> BitVec {
        BitVec::from_bits((0..self.rows).map(|r| self.get(r, c)).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| u8::from(self.get(r, c))).collect())
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Entrywise XOR.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// `y = A x` over F2.
    pub fn apply(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to {}-bit vector",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok(BitVec::from_bits(
            (0..self.rows).map(|r| self.row(r).dot(x)).collect(),
        ))
    }

    /// Same as [`apply`](Self::apply) on big-endian integer encodings.
    pub fn apply_index(&self, x: u64) -> u64 {
        let mut y = 0u64;
        for r in 0..self.rows {
            let mut acc = false;
            for c in 0..self.cols {
                if self.get(r, c) && (x >> (self.cols - 1 - c)) & 1 == 1 {
                    acc = !acc;
                }
            }
            y = (y << 1) | u64::from(acc);
        }
        y
    }

    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "horizontal block with {} and {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut m = Self::zeros(self.rows, cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        Ok(m)
    }

    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vertical block with {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..=r).all(|c| !self.get(r, c)))
    }

    /// Row-reduced echelon form and the pivot column of each nonzero row.
    fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(row, p);
            for r in 0..m.rows {
                if r != row && m.get(r, col) {
                    m.add_row(row, r);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[target] ^= row[source]`.
    fn add_row(&mut self, source: usize, target: usize) {
        for c in 0..self.cols {
            if self.get(source, c) {
                let i = target * self.cols + c;
                self.data[i] = !self.data[i];
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// `C = A B` over F2.
pub fn f2_matmul(a: &F2Matrix, b: &F2Matrix) -> Result<F2Matrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let mut c = F2Matrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let v = (0..a.cols).filter(|&k| a.get(i, k) && b.get(k, j)).count() % 2 == 1;
            c.set(i, j, v);
        }
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspaces {
    pub rank: usize,
    /// Basis of `{v : A v = 0}`, vectors of length `cols`.
    pub kernel_basis: Vec<BitVec>,
    /// Basis of the column space, vectors of length `rows`.
    pub image_basis: Vec<BitVec>,
}

pub fn f2_subspaces(a: &F2Matrix) -> Subspaces {
    let (r, pivots) = a.rref();
    let mut kernel_basis = Vec::new();
    for free in (0..a.cols).filter(|c| !pivots.contains(c)) {
        let mut v = BitVec::zeros(a.cols);
        v.set(free + 1, true);
        for (row, &p) in pivots.iter().enumerate() {
            if r.get(row, free) {
                v.set(p + 1, true);
            }
        }
        kernel_basis.push(v);
    }
    let (rt, tpivots) = a.transpose().rref();
    let image_basis = (0..tpivots.len()).map(|row| rt.row(row)).collect();
    Subspaces {
        rank: pivots.len(),
        kernel_basis,
        image_basis,
    }
}

/// Whether the column space of `(C; D)` equals the kernel of `(A B)`.
pub fn f2_meta_condition(
    a: &F2Matrix,
    b: &F2Matrix,
    c: &F2Matrix,
    d: &F2Matrix,
) -> Result<bool> {
    if a.cols != c.rows || b.cols != d.rows {
        return Err(Error::DimensionMismatch(format!(
            "inner dimensions ({}, {}) vs ({}, {})",
            a.cols, b.cols, c.rows, d.rows
        )));
    }
    let horizontal = a.hstack(b)?;
    let vertical = c.vstack(d)?;
    let contained = f2_matmul(&horizontal, &vertical)?.data.iter().all(|&v| !v);
    let dim_kernel = horizontal.cols - horizontal.rank();
    Ok(contained && vertical.rank() == dim_kernel)
}

/// A CNOT: adds qubit `source` into qubit `target` (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransvectionStep {
    pub source: usize,
    pub target: usize,
}

impl TransvectionStep {
    pub fn matrix(&self, n: usize) -> F2Matrix {
        let mut m = F2Matrix::identity(n);
        m.set(self.target - 1, self.source - 1, true);
        m
    }
}

/// CNOT circuit realizing the invertible matrix `a`, first gate first.
pub fn cnot_synthesize(a: &F2Matrix) -> Result<Vec<TransvectionStep>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} is not square",
            a.rows, a.cols
        )));
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut ops = Vec::new();
    for col in 0..n {
        if !m.get(col, col) {
            let p = (col + 1..n)
                .find(|&r| m.get(r, col))
                .ok_or(Error::NotInvertible)?;
            m.add_row(p, col);
            ops.push(TransvectionStep {
                source: p + 1,
                target: col + 1,
            });
        }
        for r in 0..n {
            if r != col && m.get(r, col) {
                m.add_row(col, r);
                ops.push(TransvectionStep {
                    source: col + 1,
                    target: r + 1,
                });
            }
        }
    }
    // E_k ... E_1 A = I, so A = E_1 ... E_k and E_k acts first.
    ops.reverse();
    Ok(ops)
}

/// Applies each step, in order, to the rows of the identity.
pub fn replay(n: usize, steps: &[TransvectionStep]) -> Result<F2Matrix> {
    let mut m = F2Matrix::identity(n);
    for s in steps {
        if s.source == s.target || s.source == 0 || s.target == 0 || s.source > n || s.target > n {
            return Err(Error::OutOfRange(format!(
                "CNOT {} -> {} on {n} qubits",
                s.source, s.target
            )));
        }
        m.add_row(s.source - 1, s.target - 1);
    }
    Ok(m)
}

impl Serialize for F2Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for F2Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u8>>::deserialize(d)?;
        F2Matrix::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> F2Matrix {
        F2Matrix::from_rows(rows).unwrap()
    }

    #[test]
    fn matmul_examples() {
        let a = m(&[&[1, 1], &[0, 1]]);
        let b = m(&[&[1, 0], &[1, 1]]);
        assert_eq!(f2_matmul(&a, &b).unwrap(), m(&[&[0, 1], &[1, 1]]));
        assert_eq!(f2_matmul(&F2Matrix::identity(2), &a).unwrap(), a);
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(f2_matmul(&swap, &swap).unwrap(), F2Matrix::identity(2));
        assert!(matches!(
            f2_matmul(&a, &F2Matrix::identity(3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn subspace_examples() {
        let parity = m(&[&[1, 1]]);
        let s = f2_subspaces(&parity);
        assert_eq!(s.rank, 1);
        assert_eq!(s.kernel_basis, vec!["11".parse().unwrap()]);
        let s = f2_subspaces(&F2Matrix::identity(3));
        assert_eq!(s.rank, 3);
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn meta_condition_examples() {
        let one = m(&[&[1]]);
        let zero = m(&[&[0]]);
        assert!(f2_meta_condition(&one, &one, &one, &one).unwrap());
        assert!(!f2_meta_condition(&one, &one, &one, &zero).unwrap());
        let i2 = F2Matrix::identity(2);
        assert!(f2_meta_condition(&i2, &i2, &i2, &i2).unwrap());
        assert!(f2_meta_condition(&i2, &i2, &one, &one).is_err());
    }

    #[test]
    fn synthesis_examples() {
        assert!(cnot_synthesize(&F2Matrix::identity(4)).unwrap().is_empty());
        let upper = m(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            cnot_synthesize(&upper).unwrap(),
            vec![TransvectionStep {
                source: 2,
                target: 1
            }]
        );
        let singular = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(cnot_synthesize(&singular), Err(Error::NotInvertible));
        let swap = m(&[&[0, 1], &[1, 0]]);
        let steps = cnot_synthesize(&swap).unwrap();
        assert_eq!(replay(2, &steps).unwrap(), swap);
    }

    #[test]
    fn apply_index_matches_apply() {
        let a = m(&[&[1, 0, 1], &[0, 1, 1]]);
        for x in BitVec::all(3) {
            assert_eq!(a.apply(&x).unwrap().to_index(), a.apply_index(x.to_index()));
        }
    }

    #[test]
    fn serde_rows() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[[1,0],[0,1]]");
        let b: F2Matrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<F2Matrix>("[[1,2]]").is_err());
        assert!(serde_json::from_str::<F2Matrix>("[[1],[0,1]]").is_err());
    }
}
