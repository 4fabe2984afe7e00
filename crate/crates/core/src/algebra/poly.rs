//! Truncated univariate power series over `Z`, `Q` or `F_p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::arith;
use crate::algebra::tuple::Coeff;
use crate::error::{Error, Result};

/// Normalizes a scalar into the canonical representative of `ring`.
pub(crate) fn normalize(ring: Coeff, x: BigRational) -> Result<BigRational> {
    match ring {
        Coeff::Rationals => Ok(x),
        Coeff::Integers => {
            if x.is_integer() {
                Ok(x)
            } else {
                Err(Error::invalid(format!("{x} is not an integer")))
            }
        }
        Coeff::Prime(p) => {
            let pb = BigInt::from(p);
            let num = x.numer().mod_floor_big(&pb);
            let den = x.denom().mod_floor_big(&pb);
            let den_u: u64 = den.try_into().expect("residue fits");
            let inv = arith::inv_mod(i128::from(den_u), p)
                .ok_or_else(|| Error::invalid(format!("{x} has no image in F_{p}")))?;
            let v = (num * BigInt::from(inv)).mod_floor_big(&pb);
            Ok(BigRational::from_integer(v))
        }
    }
}

trait ModFloor {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_big(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

/// Truncated power series `Σ_{j ≤ N} c_j z^j`. Precision is carried per value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncPoly {
    ring: Coeff,
    coeffs: Vec<BigRational>,
}

impl TruncPoly {
    pub fn new(ring: Coeff, coeffs: Vec<BigRational>, precision: usize) -> Result<Self> {
        let mut c = coeffs;
        c.resize(precision + 1, BigRational::zero());
        c.truncate(precision + 1);
        let coeffs = c
            .into_iter()
            .map(|x| normalize(ring, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncPoly { ring, coeffs })
    }

    pub fn from_ints(ring: Coeff, coeffs: &[i64], precision: usize) -> Result<Self> {
        Self::new(
            ring,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            precision,
        )
    }

    pub fn zero(ring: Coeff, precision: usize) -> Self {
        TruncPoly { ring, coeffs: vec![BigRational::zero(); precision + 1] }
    }

    pub fn one(ring: Coeff, precision: usize) -> Self {
        let mut p = Self::zero(ring, precision);
        p.coeffs[0] = BigRational::one();
        p
    }

    /// The series `z`, which is `0` at precision `0`.
    pub fn var(ring: Coeff, precision: usize) -> Self {
        let mut p = Self::zero(ring, precision);
        if precision >= 1 {
            p.coeffs[1] = BigRational::one();
        }
        p
    }

    pub fn ring(&self) -> Coeff {
        self.ring
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^j`; zero beyond the precision.
    pub fn coeff(&self, j: usize) -> BigRational {
        self.coeffs.get(j).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `z^j` as an integer; panics for non-integral rationals.
    pub fn coeff_int(&self, j: usize) -> BigInt {
        let c = self.coeff(j);
        assert!(c.is_integer(), "coefficient {c} is not integral");
        c.to_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn truncate(&self, precision: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(precision + 1, BigRational::zero());
        TruncPoly { ring: self.ring, coeffs: c }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::CoeffMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    fn norm(&self, x: BigRational) -> BigRational {
        normalize(self.ring, x).expect("closed under ring operations")
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.precision().min(other.precision());
        let coeffs = (0..=n)
            .map(|j| self.norm(&self.coeffs[j] + &other.coeffs[j]))
            .collect();
        Ok(TruncPoly { ring: self.ring, coeffs })
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| self.norm(-c)).collect();
        TruncPoly { ring: self.ring, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigRational) -> Result<Self> {
        let k = normalize(self.ring, k.clone())?;
        let coeffs = self.coeffs.iter().map(|c| self.norm(c * &k)).collect();
        Ok(TruncPoly { ring: self.ring, coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let n = self.precision().min(other.precision());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        let coeffs = out.into_iter().map(|c| self.norm(c)).collect();
        Ok(TruncPoly { ring: self.ring, coeffs })
    }

    /// Repeated squaring.
    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::one(self.ring, self.precision());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            base = base.mul(&base).expect("same ring");
            k >>= 1;
        }
        acc
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_ring(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::invalid("inner series of a composition needs zero constant term"));
        }
        let n = self.precision().min(inner.precision());
        let inner = inner.truncate(n);
        // Horner from the top coefficient.
        let mut acc = Self::zero(self.ring, n);
        for j in (0..=n).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] = self.norm(&acc.coeffs[0] + &self.coeffs[j]);
        }
        Ok(acc)
    }

    /// Reduction of an integral series into `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self> {
        if self.ring != Coeff::Integers {
            return Err(Error::invalid("only integral series reduce modulo p"));
        }
        let ring = Coeff::prime(p)?;
        Self::new(ring, self.coeffs.clone(), self.precision())
    }
}

impl fmt::Display for TruncPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match j {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{j}"),
            };
            let term = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else {
                format!("{c}{mono}")
            };
            terms.push(term);
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// Mod-2 reduction of `(1+z)^k` at precision `N`, read off from Lucas' theorem.
pub fn binom_mod2_expand(k: u64, precision: usize) -> TruncPoly {
    let coeffs = (0..=precision as u64)
        .map(|j| BigRational::from_integer(arith::binom_mod2(k, j).into()))
        .collect();
    TruncPoly { ring: Coeff::Prime(2), coeffs }
}
