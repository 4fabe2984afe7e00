//! Formal group laws over `Z`, `Q` or `F_p`, and their `t`-series.
//!
//! A law is a bivariate series `F(x, y) = Σ a_ij x^i y^j`. The additive and
//! multiplicative laws are polynomials and therefore exact at every
//! precision; custom laws carry the precision they were given at and are
//! checked for the unit, commutativity and associativity axioms on
//! construction.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::poly::normalize;
use crate::algebra::{Coeff, TruncPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LawKind {
    Additive,
    /// `x + y + u·xy`
    Multiplicative(BigRational),
    Custom,
}

impl fmt::Display for LawKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawKind::Additive => f.write_str("additive"),
            LawKind::Multiplicative(u) => write!(f, "multiplicative({u})"),
            LawKind::Custom => f.write_str("custom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalGroupLaw {
    ring: Coeff,
    kind: LawKind,
    /// `None` for polynomial laws, exact at any precision.
    precision: Option<usize>,
    coeffs: BTreeMap<(u32, u32), BigRational>,
}

impl FormalGroupLaw {
    /// `F(x, y) = x + y`
    pub fn additive(ring: Coeff) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((1, 0), BigRational::one());
        coeffs.insert((0, 1), BigRational::one());
        FormalGroupLaw { ring, kind: LawKind::Additive, precision: None, coeffs }
    }

    /// `F(x, y) = x + y + u·xy` for a unit `u`.
    pub fn multiplicative(ring: Coeff, u: BigRational) -> Result<Self> {
        let u = normalize(ring, u)?;
        let invertible = match ring {
            Coeff::Integers => u.is_one() || (-u.clone()).is_one(),
            Coeff::Rationals | Coeff::Prime(_) => !u.is_zero(),
        };
        if !invertible {
            return Err(Error::invalid(format!("{u} is not a unit in {ring}")));
        }
        let mut law = Self::additive(ring);
        law.coeffs.insert((1, 1), u.clone());
        law.kind = LawKind::Multiplicative(u);
        Ok(law)
    }

    /// A law given by its coefficients `a_ij` with `i + j <= precision`.
    /// Rejected unless it is unital, commutative and associative to that precision.
    pub fn custom(
        ring: Coeff,
        coeffs: impl IntoIterator<Item = ((u32, u32), BigRational)>,
        precision: usize,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if (i + j) as usize > precision {
                continue;
            }
            let c = normalize(ring, c)?;
            if !c.is_zero() {
                map.insert((i, j), c);
            }
        }
        let law = FormalGroupLaw { ring, kind: LawKind::Custom, precision: Some(precision), coeffs: map };
        law.check_axioms()?;
        Ok(law)
    }

    pub fn ring(&self) -> Coeff {
        self.ring
    }

    pub fn kind(&self) -> &LawKind {
        &self.kind
    }

    pub fn precision(&self) -> Option<usize> {
        self.precision
    }

    /// `a_ij`
    pub fn coefficient(&self, i: u32, j: u32) -> BigRational {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.precision.unwrap_or(usize::MAX) as u32;
        for k in 0..=n.min(64) {
            let expect = if k == 1 { BigRational::one() } else { BigRational::zero() };
            if self.coefficient(k, 0) != expect || self.coefficient(0, k) != expect {
                return Err(Error::NotAFormalGroupLaw(format!(
                    "unit axiom F(x,0) = x fails at degree {k}"
                )));
            }
        }
        for (&(i, j), c) in &self.coeffs {
            if &self.coefficient(j, i) != c {
                return Err(Error::NotAFormalGroupLaw(format!("a_{i}{j} != a_{j}{i}")));
            }
        }
        let n = n as usize;
        let x = Trivariate::var(self.ring, 0, n);
        let y = Trivariate::var(self.ring, 1, n);
        let z = Trivariate::var(self.ring, 2, n);
        let left = self.eval_trivariate(&self.eval_trivariate(&x, &y), &z);
        let right = self.eval_trivariate(&x, &self.eval_trivariate(&y, &z));
        if left != right {
            return Err(Error::NotAFormalGroupLaw(format!(
                "F(F(x,y),z) != F(x,F(y,z)) below degree {}",
                n + 1
            )));
        }
        Ok(())
    }

    fn eval_trivariate(&self, f: &Trivariate, g: &Trivariate) -> Trivariate {
        let mut acc = Trivariate::zero(self.ring, f.precision);
        let fp = powers(f, self.coeffs.keys().map(|k| k.0).max().unwrap_or(0));
        let gp = powers(g, self.coeffs.keys().map(|k| k.1).max().unwrap_or(0));
        for (&(i, j), c) in &self.coeffs {
            let term = fp[i as usize].mul(&gp[j as usize]).scale(c);
            acc = acc.add(&term);
        }
        acc
    }

    /// `F(f, g)` for series with zero constant terms.
    pub fn evaluate(&self, f: &TruncPoly, g: &TruncPoly) -> Result<TruncPoly> {
        if f.ring() != self.ring || g.ring() != self.ring {
            return Err(Error::CoeffMismatch {
                left: self.ring.to_string(),
                right: if f.ring() != self.ring { f.ring() } else { g.ring() }.to_string(),
            });
        }
        if !f.coeff(0).is_zero() || !g.coeff(0).is_zero() {
            return Err(Error::invalid("formal group law arguments need zero constant term"));
        }
        let n = f.precision().min(g.precision());
        if let Some(law_n) = self.precision {
            if n > law_n {
                return Err(Error::invalid(format!(
                    "law is only known to precision {law_n}, {n} requested"
                )));
            }
        }
        let mut acc = TruncPoly::zero(self.ring, n);
        for (&(i, j), c) in &self.coeffs {
            if (i + j) as usize > n {
                continue;
            }
            let term = f.pow(i.into()).mul(&g.pow(j.into()))?.scale(c)?;
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// `[t](z)` by the recursion `[1](z) = z`, `[k](z) = F([k-1](z), z)`.
    pub fn t_series(&self, t: u64, precision: usize) -> Result<TSeries> {
        if t == 0 {
            return Err(Error::invalid("t must be a positive integer"));
        }
        let z = TruncPoly::var(self.ring, precision);
        let mut acc = z.clone();
        for _ in 1..t {
            acc = self.evaluate(&acc, &z)?;
        }
        Ok(TSeries { series: acc, t, kind: self.kind.clone() })
    }
}

/// The `t`-series `[t](z)` of a formal group law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    pub series: TruncPoly,
    pub t: u64,
    pub kind: LawKind,
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}](z) = {} + O(z^{})", self.t, self.series, self.series.precision() + 1)
    }
}

fn powers(f: &Trivariate, max: u32) -> Vec<Trivariate> {
    let mut out = vec![Trivariate::one(f.ring, f.precision)];
    for k in 1..=max as usize {
        let next = out[k - 1].mul(f);
        out.push(next);
    }
    out
}

/// Truncated series in three variables; only used to test associativity.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Trivariate {
    ring: Coeff,
    precision: usize,
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl Trivariate {
    fn zero(ring: Coeff, precision: usize) -> Self {
        Trivariate { ring, precision, terms: BTreeMap::new() }
    }

    fn one(ring: Coeff, precision: usize) -> Self {
        let mut t = Self::zero(ring, precision);
        t.terms.insert([0; 3], BigRational::one());
        t
    }

    fn var(ring: Coeff, which: usize, precision: usize) -> Self {
        let mut t = Self::zero(ring, precision);
        if precision >= 1 {
            let mut e = [0; 3];
            e[which] = 1;
            t.terms.insert(e, BigRational::one());
        }
        t
    }

    fn insert(&mut self, e: [u32; 3], c: BigRational) {
        if (e[0] + e[1] + e[2]) as usize > self.precision {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry = normalize(self.ring, &*entry + c).expect("closed");
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.insert(e, c.clone());
        }
        out
    }

    fn scale(&self, k: &BigRational) -> Self {
        let mut out = Self::zero(self.ring, self.precision);
        for (&e, c) in &self.terms {
            out.insert(e, c * k);
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring, self.precision.min(other.precision));
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.insert([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        out
    }
}
