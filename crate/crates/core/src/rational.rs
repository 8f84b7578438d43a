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

//! Exact rationals and binomial coefficients.
//!
//! Phases live in R/2Z; reduction happens only where a comparison asks for
//! it, so every value here is an ordinary big rational.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^e` as a rational, `e` may be negative.
pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Parses `"p/q"`, `"p"` or `"-p/q"`.
pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical `"p/q"` form; integers print without a denominator.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Representative of `r` modulo 2 in `[0, 2)`.
pub fn mod2(r: &Rational) -> Rational {
    let two = int(2);
    let q = (r / &two).floor();
    r - q * two
}

pub fn is_even_integer(r: &Rational) -> bool {
    r.is_integer() && r.numer().is_even()
}

/// `r` reduced into `[0, 2)` as an `f64`, for building unit phases.
pub fn to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators: reduce first so the conversion cannot overflow.
        mod2(r).to_f64().unwrap_or(0.0)
    })
}

/// Sign `(-1)^k` as a rational.
pub fn neg_one_pow(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Pascal triangle up to row `n`, for loops that need many binomials.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for r in 0..=n {
            let mut row = vec![BigInt::one(); r + 1];
            for k in 1..r {
                row[k] = &rows[r - 1][k - 1] + &rows[r - 1][k];
            }
            rows.push(row);
        }
        Self { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.rows[n][k].clone()
    }

    pub fn get_ref(&self, n: usize, k: usize) -> Option<&BigInt> {
        self.rows.get(n).and_then(|row| row.get(k))
    }
}

/// Serde adapters for rationals written as `"p/q"` strings.
pub mod serde_str {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::Rational;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        use super::super::Rational;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&super::super::format(r))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|s| super::super::parse(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse("1/4").unwrap(), ratio(1, 4));
        assert_eq!(parse("-6/8").unwrap(), ratio(-3, 4));
        assert_eq!(parse("3").unwrap(), int(3));
        assert_eq!(format(&ratio(-1, 2)), "-1/2");
        assert_eq!(format(&int(0)), "0");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn mod2_is_canonical() {
        assert_eq!(mod2(&ratio(-1, 2)), ratio(3, 2));
        assert_eq!(mod2(&ratio(-15, 8)), ratio(1, 8));
        assert_eq!(mod2(&int(4)), int(0));
        assert_eq!(mod2(&ratio(7, 3)), ratio(1, 3));
        assert!(is_even_integer(&int(-6)));
        assert!(!is_even_integer(&int(3)));
        assert!(!is_even_integer(&ratio(1, 2)));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        for n in 0..10 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal() {
        // Oracle: Pascal recurrence with plain additions.
        let table = BinomialTable::new(64);
        for n in 0..=64u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), table.get(n as usize, k as usize));
            }
        }
        let expect: BigInt = "1832624140942590534".parse().unwrap();
        assert_eq!(binomial(64, 32), expect);
    }

    #[test]
    fn pow2_signs() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), ratio(1, 4));
        assert_eq!(pow2(0), int(1));
    }
}
