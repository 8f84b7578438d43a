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

//! Spider-nest certification.
//!
//! A symmetric family of phase gadgets, with phase `-2 Ŝ(|s|)` on every
//! support `s`, multiplies to the diagonal gate of `T(x) = S(x) - S(0)`
//! where `S` is the inverse Kravchuk transform of `Ŝ`. The family is an
//! identity exactly when `S` is constant mod 2.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gates::{gate_equal, Term, TermKind, TermList};
use crate::phase::{
    binomial_transform, expand_symmetric, kravchuk_inverse, moebius_inverse, PhaseFunction,
    SymmetricPhaseFunction,
};
use crate::rational::{int, mod2, neg_one_pow, ratio, Rational};

pub const MAX_NEST_QUBITS: usize = 64;
pub const MAX_NUMERIC_QUBITS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestReport {
    pub n: usize,
    pub is_identity: bool,
    #[serde(rename = "S", with = "crate::rational::serde_str::vec")]
    pub s_values: Vec<Rational>,
    /// `S(m) mod 2`, in `[0, 2)`.
    #[serde(with = "crate::rational::serde_str::vec")]
    pub residues: Vec<Rational>,
    /// `S(0) mod 2`.
    #[serde(with = "crate::rational::serde_str")]
    pub global_phase_exponent: Rational,
}

pub fn nest_check(s_hat: &SymmetricPhaseFunction) -> Result<NestReport> {
    let n = s_hat.qubits();
    if n > MAX_NEST_QUBITS {
        return Err(Error::SizeLimit {
            node: "nest".into(),
            detail: format!("{n} qubits, limit {MAX_NEST_QUBITS}"),
        });
    }
    let s = kravchuk_inverse(s_hat);
    let residues: Vec<Rational> = s.by_weight().iter().map(mod2).collect();
    Ok(NestReport {
        n,
        is_identity: residues.iter().all(|r| *r == residues[0]),
        global_phase_exponent: residues[0].clone(),
        s_values: s.by_weight().to_vec(),
        residues,
    })
}

/// `Ŝ(k) = -a(k)/2` for gadget phases `a(k)` on weight-`k` supports.
pub fn s_hat_from_gadget_phases(a: &SymmetricPhaseFunction) -> SymmetricPhaseFunction {
    SymmetricPhaseFunction::from_fn(a.qubits(), |k| -a.get(k) / int(2))
}

/// One gadget per nonzero support, with phase `-2 Ŝ(|s|)`; zero phases are dropped.
pub fn nest_gadgets(s_hat: &SymmetricPhaseFunction) -> Result<TermList> {
    let n = s_hat.qubits();
    if n > MAX_NUMERIC_QUBITS {
        return Err(Error::SizeLimit {
            node: "nest gadgets".into(),
            detail: format!("{n} qubits, limit {MAX_NUMERIC_QUBITS}"),
        });
    }
    let terms = (1..1u64 << n)
        .filter_map(|s| {
            let phase = s_hat.get(s.count_ones() as usize) * int(-2);
            (!phase.is_zero()).then(|| Term {
                support: BitVec::from_index(n, s),
                phase,
            })
        })
        .collect();
    TermList::new(TermKind::Gadget, n, terms)
}

pub fn family_de2020fast(n: usize) -> Result<SymmetricPhaseFunction> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "de2020fast needs n >= 4, got {n}"
        )));
    }
    let ni = n as i64;
    Ok(SymmetricPhaseFunction::from_fn(n, |k| match k {
        1 => ratio((ni - 2) * (ni - 3), 16),
        2 => ratio(-(ni - 3), 8),
        3 => ratio(1, 8),
        k if k == n => ratio(-1, 8),
        _ => Rational::zero(),
    }))
}

/// The `m`-dependent part `-m³/6 + 3m²/4 - 5m/6 - (-1)^m/8`.
pub fn s_prime(m: usize) -> Rational {
    let m3 = int(m as i64).pow(3);
    let m2 = int(m as i64).pow(2);
    -m3 / int(6) + m2 * ratio(3, 4) - int(m as i64) * ratio(5, 6) - neg_one_pow(m) / int(8)
}

pub fn closed_form_s(n: usize, m: usize) -> Result<Rational> {
    if n < 4 || m > n {
        return Err(Error::OutOfRange(format!("S({m}) for n = {n}")));
    }
    let nn = int(n as i64);
    let constant = nn.pow(3) / int(48) - nn.pow(2) / int(8) + nn * ratio(11, 48);
    Ok(s_prime(m) + constant)
}

/// For each `l` in `0..12`: `S'(l) ≡ -1/8 (mod 2)`.
pub fn twelve_residues() -> Vec<(usize, Rational, bool)> {
    let target = mod2(&ratio(-1, 8));
    (0..12)
        .map(|l| {
            let r = mod2(&s_prime(l));
            let ok = r == target;
            (l, r, ok)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MunsonReport {
    pub n: usize,
    #[serde(with = "crate::rational::serde_str")]
    pub alpha: Rational,
    /// Hyperedge phase per weight, before reduction.
    #[serde(with = "crate::rational::serde_str::vec")]
    pub hyperedge_phases: Vec<Rational>,
    #[serde(with = "crate::rational::serde_str::vec")]
    pub residues: Vec<Rational>,
    pub residual_weights: Vec<usize>,
    pub is_identity: bool,
}

/// Largest n for the pointwise gate comparison in [`munson_check`].
pub const MAX_MUNSON_POINTWISE: usize = 16;

/// The all-ones gadget of phase `α` against the hyperedges `G̃(|s|) mod 2` on every support.
pub fn munson_check(alpha: &Rational, n: usize) -> Result<MunsonReport> {
    if n == 0 {
        return Err(Error::OutOfRange("munson check needs n >= 1".into()));
    }
    if n > MAX_MUNSON_POINTWISE {
        return Err(Error::SizeLimit {
            node: "munson".into(),
            detail: format!("{n} qubits, limit {MAX_MUNSON_POINTWISE}"),
        });
    }
    let g = SymmetricPhaseFunction::from_fn(n, |m| if m % 2 == 1 { alpha.clone() } else { Rational::zero() });
    let gt = binomial_transform(&g);
    let residues: Vec<Rational> = gt.by_weight().iter().map(mod2).collect();
    let residual_weights = (0..=n).filter(|&m| !residues[m].is_zero()).collect();

    // Σ_{s≤x} c(s) through the subset-sum butterfly, independent of the binomial formula.
    let coeffs = PhaseFunction::from_fn(n, |s| residues[s.count_ones() as usize].clone());
    let hyperedges = moebius_inverse(&coeffs);
    let gadget = expand_symmetric(&g);
    Ok(MunsonReport {
        n,
        alpha: alpha.clone(),
        hyperedge_phases: gt.by_weight().to_vec(),
        residues,
        residual_weights,
        is_identity: gate_equal(&gadget, &hyperedges)?,
    })
}

/// `odd[k]` = number of weight-`k` supports `s` with `s·x` odd, for `|x| = w`.
fn odd_counts(n: usize, w: usize) -> Vec<u64> {
    let x: u64 = if w == 0 { 0 } else { ((1u64 << w) - 1) << (n - w) };
    let mut odd = vec![0u64; n + 1];
    for s in 0..1u64 << n {
        if (s & x).count_ones() % 2 == 1 {
            odd[s.count_ones() as usize] += 1;
        }
    }
    odd
}

/// Brute-force oracle: sums the gadget phases at one representative of
/// each weight by enumerating all supports.
pub fn nest_numeric(s_hat: &SymmetricPhaseFunction) -> Result<bool> {
    let n = s_hat.qubits();
    if n > MAX_NUMERIC_QUBITS {
        return Err(Error::SizeLimit {
            node: "nest numeric".into(),
            detail: format!("{n} qubits, limit {MAX_NUMERIC_QUBITS}"),
        });
    }
    let two = int(2);
    Ok((0..=n).all(|w| {
        let odd = odd_counts(n, w);
        let t: Rational = (1..=n)
            .map(|k| s_hat.get(k) * &two * int(-(odd[k] as i64)))
            .sum();
        mod2(&t).is_zero()
    }))
}

/// `T(x) = S(x) - S(0)` as a full phase function, for comparison with gadget sums.
pub fn nest_phasefn(s_hat: &SymmetricPhaseFunction) -> PhaseFunction {
    let s = kravchuk_inverse(s_hat);
    let s0 = s.get(0).clone();
    expand_symmetric(&SymmetricPhaseFunction::from_fn(s.qubits(), |m| s.get(m) - &s0))
}
