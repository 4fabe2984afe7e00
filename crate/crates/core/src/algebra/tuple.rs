use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::arith;
use crate::error::{Error, Result};

/// Order of the acting group: a finite cyclic group of roots of unity, or the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Torsion {
    Finite(u64),
    Infinite,
}

impl Torsion {
    pub fn finite(t: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::invalid("t must be a positive integer"));
        }
        Ok(Torsion::Finite(t))
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Torsion::Finite(_))
    }

    pub fn as_finite(self) -> Option<u64> {
        match self {
            Torsion::Finite(t) => Some(t),
            Torsion::Infinite => None,
        }
    }

    /// `0` for finite orders, `1` for the circle.
    pub fn delta(self) -> u32 {
        u32::from(!self.is_finite())
    }

    /// True when `p` divides a finite `t`.
    pub fn divisible_by(self, p: u64) -> bool {
        matches!(self, Torsion::Finite(t) if t % p == 0)
    }

    pub fn is_even(self) -> bool {
        self.divisible_by(2)
    }
}

impl fmt::Display for Torsion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Torsion::Finite(t) => write!(f, "{t}"),
            Torsion::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Torsion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Torsion::Infinite);
        }
        let t: u64 = s
            .parse()
            .map_err(|_| Error::invalid(format!("cannot parse t from {s:?}")))?;
        Torsion::finite(t)
    }
}

impl Serialize for Torsion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Torsion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Coefficients: the integers, the rationals, or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coeff {
    Integers,
    Rationals,
    Prime(u64),
}

impl Coeff {
    pub fn prime(p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        Ok(Coeff::Prime(p))
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Coeff::Integers)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Coeff::Prime(p) => p,
            _ => 0,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Integers => f.write_str("Z"),
            Coeff::Rationals => f.write_str("Q"),
            Coeff::Prime(2) => f.write_str("F2"),
            Coeff::Prime(p) => write!(f, "F:{p}"),
        }
    }
}

impl FromStr for Coeff {
    type Err = Error;

    /// Accepts `Z`, `Q`, `F2`, `F3`, ... and `F:<p>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "Z" | "z" => return Ok(Coeff::Integers),
            "Q" | "q" => return Ok(Coeff::Rationals),
            _ => {}
        }
        let digits = s
            .strip_prefix("F:")
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::invalid(format!("unknown coefficient ring {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::invalid(format!("unknown coefficient ring {s:?}")))?;
        Coeff::prime(p)
    }
}

impl Serialize for Coeff {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The pair `(n̄, t)` naming a lens product space (finite `t`) or a
/// complex-projective product space (`t = ∞`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TupleSpec {
    n: Vec<u32>,
    t: Torsion,
}

impl TupleSpec {
    /// Rejects empty or decreasing tuples.
    pub fn new(n: Vec<u32>, t: Torsion) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::invalid("the tuple n must have at least one entry"));
        }
        if let Some(w) = n.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::invalid(format!(
                "n must be nondecreasing, found {} before {} (pass --sort to reorder)",
                w[0], w[1]
            )));
        }
        if t == Torsion::Finite(0) {
            return Err(Error::invalid("t must be a positive integer"));
        }
        Ok(TupleSpec { n, t })
    }

    /// Sorts `n` before validating.
    pub fn sorted(mut n: Vec<u32>, t: Torsion) -> Result<Self> {
        n.sort_unstable();
        Self::new(n, t)
    }

    pub fn n(&self) -> &[u32] {
        &self.n
    }

    /// The entry `n_i` for a 1-based index `i`.
    pub fn n_at(&self, i: usize) -> u32 {
        self.n[i - 1]
    }

    pub fn n1(&self) -> u32 {
        self.n[0]
    }

    pub fn t(&self) -> Torsion {
        self.t
    }

    pub fn r(&self) -> usize {
        self.n.len()
    }

    /// `|n̄|`
    pub fn size_sum(&self) -> u64 {
        self.n.iter().map(|&x| u64::from(x)).sum()
    }

    pub fn delta(&self) -> u32 {
        self.t.delta()
    }

    pub fn dim(&self) -> u64 {
        2 * self.size_sum() + self.r() as u64 - u64::from(self.delta())
    }

    /// `|n̄| + r`, the complex rank of the bundle stably equal to the tangent bundle.
    pub fn tangent_rank(&self) -> u64 {
        self.size_sum() + self.r() as u64
    }

    /// Same tuple with a different group order.
    pub fn with_t(&self, t: Torsion) -> TupleSpec {
        TupleSpec { n: self.n.clone(), t }
    }

    /// The single-entry tuple `(n₁)` of the base lens / projective space.
    pub fn base(&self) -> TupleSpec {
        TupleSpec { n: vec![self.n1()], t: self.t }
    }

    /// Keeps the listed 1-based indices (sorted, deduplicated).
    pub fn keep(&self, kept: &[usize]) -> Result<TupleSpec> {
        let mut idx = kept.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.iter().any(|&i| i == 0 || i > self.r()) {
            return Err(Error::invalid(format!("indices {kept:?} out of range 1..={}", self.r())));
        }
        if idx.is_empty() {
            return Err(Error::invalid("at least one index must be kept"));
        }
        TupleSpec::new(idx.iter().map(|&i| self.n_at(i)).collect(), self.t)
    }
}

impl fmt::Display for TupleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.n.iter().map(u32::to_string).collect();
        write!(f, "({}), t={}", parts.join(","), self.t)
    }
}
