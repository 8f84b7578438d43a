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

use std::fmt;

use num::complex::Complex64;
use num::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Dense complex matrix over the computational basis, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| {
                    let z = self.get(r, c);
                    format!("{:+.4}{:+.4}i", z.re, z.im)
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_diagonal(diag: &[Complex64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &z) in diag.iter().enumerate() {
            m.set(i, i, z);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed("ragged matrix rows".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Column vector.
    pub fn column(entries: &[Complex64]) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, z: Complex64) {
        self.data[r * self.cols + c] = z;
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| v * z).collect(),
        }
    }

    /// `self · other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, `self` on the most significant bits.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).conj());
            }
        }
        out
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).norm() <= tol))
    }

    pub fn diagonal(&self) -> Vec<Complex64> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).collect()
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Entrywise comparison: `max |a - b| <= tol`.
pub fn matrices_equal(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<bool> {
    Ok(a.max_abs_diff(b)? <= tol)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseMatch {
    pub equal: bool,
    /// Unit scalar with `b ≈ phase · a`.
    pub phase: Complex64,
}

/// Compares `b` with `phase · a`, where the phase is read off the largest
/// entry of `a`.
pub fn equal_up_to_phase(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<PhaseMatch> {
    a.same_shape(b)?;
    let one = Complex64::new(1.0, 0.0);
    let Some((idx, _)) = a
        .data
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
    else {
        return Ok(PhaseMatch {
            equal: true,
            phase: one,
        });
    };
    let (pa, pb) = (a.data[idx], b.data[idx]);
    if pa.norm() <= tol {
        // `a` is numerically zero.
        let equal = b.data.iter().all(|z| z.norm() <= tol);
        return Ok(PhaseMatch { equal, phase: one });
    }
    if pb.norm() <= tol {
        return Ok(PhaseMatch {
            equal: false,
            phase: one,
        });
    }
    let ratio = pb / pa;
    let phase = ratio / ratio.norm();
    let equal = a
        .data
        .iter()
        .zip(&b.data)
        .all(|(x, y)| (x * phase - y).norm() <= tol);
    Ok(PhaseMatch { equal, phase })
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let z = self.get(r, c);
                        // Normalize -0.0 so reports are byte-stable.
                        [z.re + 0.0, z.im + 0.0]
                    })
                    .collect()
            })
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<[f64; 2]>>::deserialize(d)?;
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
            .collect();
        ComplexMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
