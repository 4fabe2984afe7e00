//! Sphere-factor splittings and the stable wedge decomposition into stunted
//! lens / projective spaces, with Poincaré-polynomial bookkeeping.

mod normed;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Coeff, GradedAbGroup, LaurentPoly, Torsion, TupleSpec};
use crate::cohomology::CohomologyRing;
use crate::error::{Error, Result};

pub use normed::{mu1, mu1_conjugated, mu_k, C2};

/// Minimal dimension `a_k` of a nontrivial real `Cliff(k)`-module.
pub fn clifford_module_dim(k: u64) -> u128 {
    const TABLE: [u128; 8] = [2, 4, 4, 8, 8, 8, 8, 16];
    if k == 0 {
        return 1;
    }
    let (q, s) = ((k - 1) / 8, (k - 1) % 8);
    TABLE[s as usize] * 16u128.pow(q as u32)
}

/// `a_k | m`.
pub fn clifford_admits(k: u64, m: u64) -> bool {
    u128::from(m) % clifford_module_dim(k) == 0
}

/// Why a sphere factor splits off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitRule {
    /// `n₁ = 0`: the space is a product of spheres.
    TrivialBase,
    /// `n₁ = 1`, `n_i` odd: a normed map built from quaternionic multiplication.
    OddOverThreeSphere,
    /// `t = 2` and `ℝ^{2n_i+2}` carries a `Cliff(2n₁+1)`-module structure.
    Clifford,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SplitStatus {
    Splits { rules: Vec<SplitRule> },
    Unknown { reason: String },
}

pub const NO_INVARIANT_MAP: &str = "no_invariant_map_known";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorStatus {
    pub index: usize,
    pub sphere_dim: u64,
    #[serde(flatten)]
    pub status: SplitStatus,
}

/// `CP_n̄(t) ≅ CP_m̄(t) × Π S^{2n_i+1}` over the split indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianSplitting {
    pub factors: Vec<FactorStatus>,
    pub remainder: TupleSpec,
}

impl CartesianSplitting {
    pub fn split_dims(&self) -> Vec<u64> {
        self.factors
            .iter()
            .filter(|f| matches!(f.status, SplitStatus::Splits { .. }))
            .map(|f| f.sphere_dim)
            .collect()
    }
}

impl fmt::Display for CartesianSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spheres: Vec<String> = self.split_dims().iter().map(|d| format!("S^{d}")).collect();
        if spheres.is_empty() {
            write!(f, "no sphere factors split off")
        } else {
            let space = if self.remainder.t().is_finite() { "L" } else { "CP" };
            write!(f, "{space}_{} × {}", self.remainder, spheres.join(" × "))
        }
    }
}

pub fn cartesian_split(spec: &TupleSpec) -> CartesianSplitting {
    let n1 = spec.n1();
    let mut factors = Vec::new();
    let mut kept = vec![1];
    for i in 2..=spec.r() {
        let ni = spec.n_at(i);
        let mut rules = Vec::new();
        if n1 == 0 {
            rules.push(SplitRule::TrivialBase);
        }
        if n1 == 1 && ni % 2 == 1 {
            rules.push(SplitRule::OddOverThreeSphere);
        }
        if spec.t() == Torsion::Finite(2) && clifford_admits(2 * u64::from(n1) + 1, 2 * u64::from(ni) + 2) {
            rules.push(SplitRule::Clifford);
        }
        let status = if rules.is_empty() {
            kept.push(i);
            SplitStatus::Unknown { reason: NO_INVARIANT_MAP.to_string() }
        } else {
            SplitStatus::Splits { rules }
        };
        factors.push(FactorStatus { index: i, sphere_dim: 2 * u64::from(ni) + 1, status });
    }
    let remainder = spec.keep(&kept).expect("index 1 is always kept");
    CartesianSplitting { factors, remainder }
}

/// One summand `Σ^{shift} CP_top(t)/CP_bottom(t)` of the wedge decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeSummand {
    pub sigma: Vec<usize>,
    pub shift: i64,
    pub t: Torsion,
    pub top: i64,
    pub bottom: i64,
}

impl fmt::Display for WedgeSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ^{} CP_{}({})/CP_{}({})", self.shift, self.top, self.t, self.bottom, self.t)
    }
}

/// Summands of `Σ T(kγ)` (for `k = 0`, of `Σ CP_n̄(t)`), one per `σ ⊆ {2..r}`
/// in lexicographic order.
pub fn wedge_decomposition(spec: &TupleSpec, k: u64) -> Vec<WedgeSummand> {
    let k = k as i64;
    let n1 = i64::from(spec.n1());
    let rest: Vec<usize> = (2..=spec.r()).collect();
    let mut sigmas: Vec<Vec<usize>> = (0u64..1 << rest.len())
        .map(|mask| {
            rest.iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, &i)| i)
                .collect()
        })
        .collect();
    sigmas.sort();
    sigmas
        .into_iter()
        .map(|sigma| {
            let r_sigma = sigma.len() as i64 + 1;
            let size = n1 + sigma.iter().map(|&i| i64::from(spec.n_at(i))).sum::<i64>();
            WedgeSummand {
                shift: 2 - r_sigma,
                t: spec.t(),
                top: size + k + r_sigma - 1,
                bottom: size - n1 + k + r_sigma - 2,
                sigma,
            }
        })
        .collect()
}

/// Reduced cohomology of `CP_top(t)/CP_bottom(t)` from its cellular cochain
/// complex; `bottom = -1` means the basepoint.
pub fn stunted_cohomology(t: Torsion, top: i64, bottom: i64, coeff: Coeff) -> Result<GradedAbGroup> {
    if bottom < -1 || bottom >= top {
        return Err(Error::invalid(format!("need -1 <= bottom < top, got {bottom}, {top}")));
    }
    let dim = |m: i64| match t {
        Torsion::Infinite => 2 * m,
        Torsion::Finite(_) => 2 * m + 1,
    };
    let lo = if bottom >= 0 { dim(bottom) + 1 } else { 1 };
    let hi = dim(top);
    let cell = |d: i64| d >= lo && d <= hi && (t.is_finite() || d % 2 == 0);
    // δ: C^{2i-1} → C^{2i} is multiplication by t; every other coboundary vanishes.
    let kills = match (t, coeff) {
        (Torsion::Infinite, _) => false,
        (Torsion::Finite(t), Coeff::Prime(p)) => t % p != 0,
        (Torsion::Finite(_), _) => true,
    };
    let mut g = GradedAbGroup::new();
    for d in lo..=hi {
        if !cell(d) {
            continue;
        }
        let Torsion::Finite(tv) = t else {
            g.add_free(d, 1);
            continue;
        };
        if d % 2 == 1 {
            // Odd cell: survives only if its coboundary target is absent or δ is zero.
            if !cell(d + 1) || !kills {
                g.add_free(d, 1);
            }
        } else if !cell(d - 1) {
            g.add_free(d, 1);
        } else if coeff == Coeff::Integers {
            g.add_torsion(d, tv);
        } else if !kills {
            g.add_free(d, 1);
        }
    }
    Ok(g)
}

/// Outcome of the suspension bookkeeping check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeCheck {
    pub holds: bool,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub first_mismatch: Option<i64>,
}

fn ranks(g: &GradedAbGroup) -> LaurentPoly {
    let mut l = LaurentPoly::zero();
    for d in g.degrees() {
        l.add_term(d, g.get(d).free as i64);
    }
    l
}

/// Compares `Σ_σ s^{shift} P̃(stunted_σ)` with `s · P̃(T(kγ))`, where
/// `P̃(T(kγ)) = s^{2k} P(CP_n̄(t))` for `k >= 1` and `P̃(CP_n̄(t))` for `k = 0`.
pub fn verify_wedge(spec: &TupleSpec, k: u64, coeff: Coeff) -> Result<WedgeCheck> {
    if !coeff.is_field() {
        return Err(Error::unsupported("wedge bookkeeping uses field coefficients"));
    }
    let mut lhs = LaurentPoly::zero();
    for s in wedge_decomposition(spec, k) {
        let g = stunted_cohomology(s.t, s.top, s.bottom, coeff)?;
        lhs = lhs.add(&ranks(&g).shift(s.shift));
    }
    let p = CohomologyRing::build(spec, coeff)?.poincare_polynomial()?;
    let thom = if k == 0 { p.reduced() } else { LaurentPoly::from_poincare(&p).shift(2 * k as i64) };
    let rhs = thom.shift(1);
    let first_mismatch = lhs.first_difference(&rhs);
    Ok(WedgeCheck { holds: first_mismatch.is_none(), lhs, rhs, first_mismatch })
}
