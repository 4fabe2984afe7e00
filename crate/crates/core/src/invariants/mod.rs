//! Manifold invariants of `CP_n̄(t)`: Euler and Kervaire characteristics,
//! stable and genuine parallelizability, category and topological-complexity
//! intervals, span and immersion data.

mod planner;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::arith::prime_divisors;
use crate::algebra::{nu_p, Coeff, Torsion, TupleSpec};
use crate::cohomology::{cup_length, zero_divisor_cup_length, CohomologyRing};
use crate::error::{Error, Result};
use crate::steenrod;

pub use planner::{motion_plan_sphere, PlannerRule};

/// A yes/no answer that may be unknown, with a reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriState {
    True,
    False,
    Unknown(String),
}

impl TriState {
    pub fn from_bool(b: bool) -> Self {
        if b {
            TriState::True
        } else {
            TriState::False
        }
    }

    pub fn is_true(&self) -> bool {
        *self == TriState::True
    }
}

impl fmt::Display for TriState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriState::True => f.write_str("true"),
            TriState::False => f.write_str("false"),
            TriState::Unknown(reason) => write!(f, "unknown:{reason}"),
        }
    }
}

impl FromStr for TriState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "true" => Ok(TriState::True),
            "false" => Ok(TriState::False),
            _ => s
                .strip_prefix("unknown:")
                .map(|r| TriState::Unknown(r.to_string()))
                .ok_or_else(|| Error::invalid(format!("bad tri-state {s:?}"))),
        }
    }
}

impl Serialize for TriState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TriState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Kervaire semi-characteristic: a residue mod 2 in odd dimensions, `χ/2` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemiChar {
    Mod2(u8),
    Rational { num: i64, den: i64 },
}

/// Closed interval `[lo, hi]`, serialized as a two-element array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "[u64; 2]", into = "[u64; 2]")]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl From<[u64; 2]> for Interval {
    fn from(v: [u64; 2]) -> Self {
        Interval { lo: v[0], hi: v[1] }
    }
}

impl From<Interval> for [u64; 2] {
    fn from(i: Interval) -> Self {
        [i.lo, i.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Field coefficients worth checking: `Q`, `F₂`, and `F_p` for `p | t`.
pub fn field_modes(spec: &TupleSpec) -> Vec<Coeff> {
    let mut modes = vec![Coeff::Rationals, Coeff::Prime(2)];
    if let Torsion::Finite(t) = spec.t() {
        modes.extend(prime_divisors(t).into_iter().filter(|&p| p != 2).map(Coeff::Prime));
    }
    modes
}

/// `n₁+1` for `CP^{n₁}`, zero for everything else.
pub fn euler_char(spec: &TupleSpec) -> i64 {
    if spec.r() == 1 && spec.t() == Torsion::Infinite {
        i64::from(spec.n1()) + 1
    } else {
        0
    }
}

/// Alternating sum of Betti numbers over a field.
pub fn euler_char_from_betti(spec: &TupleSpec, coeff: Coeff) -> Result<i64> {
    Ok(CohomologyRing::build(spec, coeff)?.poincare_polynomial()?.alternating_sum())
}

/// Case table for the odd-dimensional semi-characteristic; `None` in even dimensions.
pub fn kervaire_table(spec: &TupleSpec) -> Option<u8> {
    if spec.dim().is_multiple_of(2) {
        return None;
    }
    let (r, t) = (spec.r(), spec.t());
    let v = if (r == 1 && t.is_even()) || (r <= 2 && t == Torsion::Infinite) {
        u64::from(spec.n1()) + 1
    } else if r == 1 && t.is_finite() {
        1
    } else {
        0
    };
    Some((v % 2) as u8)
}

/// `χ*`: `Σ β_{2i}` over `F₂` mod 2 in odd dimensions, `χ/2` in even ones.
pub fn kervaire_semichar(spec: &TupleSpec) -> Result<SemiChar> {
    if spec.dim() % 2 == 1 {
        let p = CohomologyRing::build(spec, Coeff::Prime(2))?.poincare_polynomial()?;
        Ok(SemiChar::Mod2((p.even_sum() % 2) as u8))
    } else {
        let chi = euler_char(spec);
        let r = num_rational::Rational64::new(chi, 2);
        Ok(SemiChar::Rational { num: *r.numer(), den: *r.denom() })
    }
}

/// `σ(n₁, t) = Π_{p | t} p^{e_p}`, the exponent `e_p` read off the first
/// applicable rung of the ladder below.
pub fn sigma(n1: u32, t: u64) -> Result<u128> {
    if n1 == 0 {
        return Err(Error::invalid("σ(n₁, t) needs n₁ >= 1"));
    }
    if t == 0 {
        return Err(Error::invalid("t must be a positive integer"));
    }
    let n = u64::from(n1);
    let mut out: u128 = 1;
    for p in prime_divisors(t) {
        let v = u64::from(nu_p(p, t)?);
        let e = if p == 2 && v == 1 && n % 4 != 3 {
            n + 1
        } else if p == 2 && v.max(n) == 1 {
            n
        } else if p == 2 && n % 2 == 0 {
            v + n - 1
        } else if p == 2 {
            v + n - 2
        } else if n >= 2 {
            v + (n - 2) / (p - 1)
        } else {
            0
        };
        let factor = u128::from(p)
            .checked_pow(e as u32)
            .and_then(|f| out.checked_mul(f))
            .ok_or_else(|| Error::unsupported("σ(n₁, t) overflows 128 bits"))?;
        out = factor;
    }
    Ok(out)
}

pub fn stably_parallelizable(spec: &TupleSpec) -> Result<TriState> {
    let n1 = spec.n1();
    let rank = spec.tangent_rank();
    Ok(match spec.t() {
        _ if n1 == 0 => TriState::True,
        Torsion::Infinite => TriState::from_bool(n1 == 1 && rank.is_multiple_of(2)),
        // Three-dimensional lens spaces are orientable 3-manifolds.
        Torsion::Finite(_) if n1 == 1 && spec.r() == 1 => TriState::True,
        Torsion::Finite(t) => TriState::from_bool(u128::from(rank) % sigma(n1, t)? == 0),
    })
}

pub const LENS_LITERATURE: &str = "classical_lens_space_see_literature";

pub fn parallelizable(spec: &TupleSpec) -> Result<TriState> {
    let (n1, r) = (spec.n1(), spec.r());
    Ok(match spec.t() {
        _ if n1 == 0 => {
            let sphere = spec.t() == Torsion::Infinite && r == 2;
            TriState::from_bool(!(sphere && ![0, 1, 3].contains(&spec.n_at(2))))
        }
        Torsion::Infinite => TriState::from_bool(n1 == 1 && r > 1 && spec.tangent_rank().is_multiple_of(2)),
        Torsion::Finite(_) if r > 1 => stably_parallelizable(spec)?,
        Torsion::Finite(_) if n1 == 1 => TriState::True,
        Torsion::Finite(_) => TriState::Unknown(LENS_LITERATURE.to_string()),
    })
}

/// A nowhere-vanishing vector field exists iff `r > 1` or `t` is finite.
pub fn vector_field_exists(spec: &TupleSpec) -> bool {
    spec.r() > 1 || spec.t().is_finite()
}

/// Category of the base factor: `n₁` for `CP^{n₁}`, the dimension `2n₁+1` bound for lens spaces.
pub fn cat_base(spec: &TupleSpec) -> u64 {
    match spec.t() {
        Torsion::Infinite => u64::from(spec.n1()),
        Torsion::Finite(_) => 2 * u64::from(spec.n1()) + 1,
    }
}

fn best_over_fields(
    spec: &TupleSpec,
    f: impl Fn(&CohomologyRing) -> Result<usize>,
) -> Result<u64> {
    let mut best = 0;
    for c in field_modes(spec) {
        best = best.max(f(&CohomologyRing::build(spec, c)?)?);
    }
    Ok(best as u64)
}

/// Cup length over the best field, against the product bound `r(cat_base+1)-1`.
pub fn cat_bounds(spec: &TupleSpec) -> Result<Interval> {
    let lo = best_over_fields(spec, |r| Ok(cup_length(r)?.length))?;
    let hi = spec.r() as u64 * (cat_base(spec) + 1) - 1;
    Ok(Interval { lo, hi })
}

/// The pieces assembled into the TC interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TcBounds {
    pub interval: Interval,
    pub base: Interval,
    /// `2r(cat_base+1) - 2`
    pub product_bound: u64,
    /// `r(1 + TC_base_hi) - 1`
    pub base_bound: u64,
    pub zero_divisor_cup_length: u64,
}

pub fn tc_bounds(spec: &TupleSpec, base_override: Option<Interval>) -> Result<TcBounds> {
    let n1 = u64::from(spec.n1());
    let base = match (base_override, spec.t()) {
        (Some(i), _) if i.lo > i.hi => {
            return Err(Error::invalid(format!("base TC override has lo {} > hi {}", i.lo, i.hi)));
        }
        (Some(i), _) => i,
        (None, Torsion::Infinite) => Interval { lo: 2 * n1, hi: 2 * n1 },
        (None, Torsion::Finite(_)) => {
            let lo = best_over_fields(&spec.base(), |r| Ok(zero_divisor_cup_length(r)?.length))?;
            Interval { lo, hi: 2 * (2 * n1 + 1) }
        }
    };
    let r = spec.r() as u64;
    let product_bound = 2 * r * (cat_base(spec) + 1) - 2;
    let base_bound = r * (1 + base.hi) - 1;
    let zcl = best_over_fields(spec, |r| Ok(zero_divisor_cup_length(r)?.length))?;
    let lo = zcl.max(cat_bounds(spec)?.lo);
    let hi = product_bound.min(base_bound);
    Ok(TcBounds {
        interval: Interval { lo, hi },
        base,
        product_bound,
        base_bound,
        zero_divisor_cup_length: zcl,
    })
}

/// Span data: stable span when determinable, and whether span equals it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanReport {
    pub stablespan: Option<i64>,
    pub span_equals_stablespan: bool,
    pub clause: Option<String>,
    pub span: Option<i64>,
}

pub fn span_report(spec: &TupleSpec, span_base: Option<u64>) -> Result<SpanReport> {
    let rank = spec.tangent_rank();
    if let Some(s) = span_base {
        if s > 2 * rank {
            return Err(Error::invalid(format!("span input {s} exceeds the bundle rank {}", 2 * rank)));
        }
    }
    let dim = spec.dim() as i64;
    let stable_par = stably_parallelizable(spec)?.is_true();
    let stablespan = if stable_par {
        Some(dim)
    } else {
        span_base.map(|s| s as i64 - spec.r() as i64 - i64::from(spec.delta()))
    };
    if !vector_field_exists(spec) {
        return Ok(SpanReport { stablespan, span_equals_stablespan: false, clause: None, span: Some(0) });
    }
    let spin_like = spec.n1() == 0 || rank.is_multiple_of(2);
    let chi_star = kervaire_semichar(spec)?;
    let clause = if (spec.r() as u64 - u64::from(spec.delta())).is_multiple_of(2) {
        Some("r - delta even")
    } else if dim % 8 == 3 && chi_star == SemiChar::Mod2(0) && spin_like {
        Some("dim 3 mod 8, semi-characteristic 0")
    } else {
        None
    };
    let forced = (dim % 8 == 3 && spin_like && chi_star == SemiChar::Mod2(1)).then_some(3);
    let span = if parallelizable(spec)?.is_true() {
        Some(dim)
    } else if let Some(v) = forced {
        Some(v)
    } else if clause.is_some() {
        stablespan
    } else {
        None
    };
    Ok(SpanReport {
        stablespan,
        span_equals_stablespan: clause.is_some(),
        clause: clause.map(str::to_string),
        span,
    })
}

/// Euclidean immersion dimension: exact given `gd`, an interval otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Immersion {
    pub lo: u64,
    pub hi: u64,
    pub exact: bool,
}

pub fn immersion_dim(spec: &TupleSpec, gd: Option<u64>) -> Result<Immersion> {
    let dim = spec.dim();
    let gd_max = 2 * u64::from(spec.n1()) + 2 - u64::from(spec.delta());
    match gd {
        Some(g) if g > gd_max => Err(Error::invalid(format!("gd {g} outside [0, {gd_max}]"))),
        Some(g) => {
            let v = dim + g.max(1);
            Ok(Immersion { lo: v, hi: v, exact: true })
        }
        None => Ok(Immersion { lo: dim + 1, hi: dim + gd_max, exact: false }),
    }
}

/// Optional literature inputs for [`invariant_report`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InvariantInputs {
    pub span_base: Option<u64>,
    pub gd: Option<u64>,
    pub tc_base: Option<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub chi: i64,
    pub chi_star: SemiChar,
    pub spin: bool,
    pub orientable: bool,
    pub vector_field: bool,
    pub stably_parallelizable: TriState,
    pub parallelizable: TriState,
    pub cat: Interval,
    pub tc: Interval,
    pub span: SpanReport,
    pub imm: Immersion,
}

pub fn invariant_report(spec: &TupleSpec, inputs: &InvariantInputs) -> Result<InvariantReport> {
    Ok(InvariantReport {
        chi: euler_char(spec),
        chi_star: kervaire_semichar(spec)?,
        spin: steenrod::is_spin(spec),
        orientable: steenrod::is_orientable(spec),
        vector_field: vector_field_exists(spec),
        stably_parallelizable: stably_parallelizable(spec)?,
        parallelizable: parallelizable(spec)?,
        cat: cat_bounds(spec)?,
        tc: tc_bounds(spec, inputs.tc_base)?.interval,
        span: span_report(spec, inputs.span_base)?,
        imm: immersion_dim(spec, inputs.gd)?,
    })
}

#[cfg(test)]
mod tests;
