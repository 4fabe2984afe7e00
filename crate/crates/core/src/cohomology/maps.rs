//! Maps between rings: restriction along coordinate retractions, pullback
//! along the covering `π: CP_n̄(t) → CP_n̄(t')`, and reduction of integral
//! classes to a prime field.

use crate::algebra::{Coeff, Torsion, TupleSpec};
use crate::cohomology::{BasePart, CohomologyRing, Element, Monomial, Presentation};
use crate::error::{Error, Result};

impl CohomologyRing {
    /// `z^a` in whichever presentation is active; zero if it does not survive.
    pub fn z_power(&self, a: u32) -> Element {
        match self.presentation() {
            Presentation::PPrimary { .. } => self.monomial(Monomial::base(BasePart::YZ { y: false, a })),
            _ => self.monomial(Monomial::base(BasePart::ZPow(a))),
        }
    }

    /// The exterior monomial `x_S` (with unit base part).
    pub fn x_set(&self, ext: &[usize]) -> Element {
        let unit = self.one().terms().next().expect("unit").0.base;
        self.monomial(Monomial::new(unit, ext.to_vec()))
    }

    /// Orientation class of the base factor.
    fn base_top(&self) -> Element {
        let n1 = self.spec().n1();
        match self.presentation() {
            Presentation::Projective => self.z_power(n1),
            Presentation::PPrimary { .. } => self.monomial(Monomial::base(BasePart::YZ { y: true, a: n1 })),
            _ => self.omega(),
        }
    }
}

/// Restriction `p*` along the retraction onto the coordinates in `kept`,
/// together with the section `j*`.
#[derive(Debug, Clone)]
pub struct RestrictionMap {
    full: CohomologyRing,
    sub: CohomologyRing,
    kept: Vec<usize>,
}

impl RestrictionMap {
    /// `kept` is a set of 1-based indices that must contain `1`.
    pub fn new(spec: &TupleSpec, coeff: Coeff, kept: &[usize]) -> Result<Self> {
        let mut kept = kept.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if kept.first() != Some(&1) {
            return Err(Error::invalid("the kept index set must contain 1"));
        }
        let sub_spec = spec.keep(&kept)?;
        Ok(RestrictionMap {
            full: CohomologyRing::build(spec, coeff)?,
            sub: CohomologyRing::build(&sub_spec, coeff)?,
            kept,
        })
    }

    pub fn full(&self) -> &CohomologyRing {
        &self.full
    }

    pub fn sub(&self) -> &CohomologyRing {
        &self.sub
    }

    /// `p*`: a monomial of the reduced tuple to the same-named monomial of the full ring.
    pub fn p_star(&self, m: &Monomial) -> Result<Monomial> {
        self.sub.check(m)?;
        let ext = m.ext.iter().map(|&i| self.kept[i - 1]).collect();
        Ok(Monomial::new(m.base, ext))
    }

    /// `j*`: kills every `x_i` with `i` not kept.
    pub fn j_star(&self, m: &Monomial) -> Result<Element> {
        self.full.check(m)?;
        let mut ext = Vec::with_capacity(m.ext.len());
        for &i in &m.ext {
            match self.kept.iter().position(|&k| k == i) {
                Some(pos) => ext.push(pos + 1),
                None => return Ok(Element::zero()),
            }
        }
        Ok(self.sub.monomial(Monomial::new(m.base, ext)))
    }

    /// Image of `p*` on the basis of the reduced tuple.
    pub fn image(&self) -> Vec<Monomial> {
        self.sub.basis().iter().map(|m| self.p_star(m).expect("sub-basis")).collect()
    }
}

/// Pullback along `π: CP_n̄(t) → CP_n̄(t')` for `t | t'` or `t' = ∞`.
#[derive(Debug, Clone)]
pub struct ProjectionPullback {
    source: CohomologyRing,
    target: CohomologyRing,
    degree: Option<u64>,
}

impl ProjectionPullback {
    pub fn new(n: &[u32], t: u64, t_prime: Torsion, coeff: Coeff) -> Result<Self> {
        let target_spec = TupleSpec::new(n.to_vec(), Torsion::finite(t)?)?;
        let degree = match t_prime {
            Torsion::Finite(tp) if tp % t != 0 => {
                return Err(Error::invalid(format!("{t} does not divide {tp}")));
            }
            Torsion::Finite(tp) => Some(tp / t),
            Torsion::Infinite => None,
        };
        Ok(ProjectionPullback {
            source: CohomologyRing::build(&target_spec.with_t(t_prime), coeff)?,
            target: CohomologyRing::build(&target_spec, coeff)?,
            degree,
        })
    }

    pub fn source(&self) -> &CohomologyRing {
        &self.source
    }

    pub fn target(&self) -> &CohomologyRing {
        &self.target
    }

    /// Degree `t'/t` of the covering on the base sphere classes.
    pub fn covering_degree(&self) -> Option<u64> {
        self.degree
    }

    /// `z ↦ z`, `x_i ↦ x_i`, `ω' ↦ (t'/t)ω`, `y' ↦ (t'/t)y`.
    pub fn pull_back(&self, m: &Monomial) -> Result<Element> {
        self.source.check(m)?;
        let n1 = self.source.spec().n1();
        let d = self.degree.unwrap_or(0) as i64;
        let tgt = &self.target;
        let base = match m.base {
            BasePart::ZPow(a) => tgt.z_power(a),
            BasePart::YZ { y: false, a } => tgt.z_power(a),
            BasePart::Omega => tgt.scale(&tgt.base_top(), d),
            BasePart::YZ { y: true, a } => match tgt.presentation() {
                Presentation::PPrimary { .. } => {
                    tgt.scaled(Monomial::base(BasePart::YZ { y: true, a }), d)
                }
                _ if a == n1 => tgt.scale(&tgt.base_top(), d),
                _ => Element::zero(),
            },
        };
        Ok(tgt.mul(&base, &tgt.x_set(&m.ext)))
    }
}

/// Reduction of integral classes to `F_p`, acting on the base factor and
/// fixing every `x_S`.
#[derive(Debug, Clone)]
pub struct CoefficientReduction {
    source: CohomologyRing,
    target: CohomologyRing,
}

impl CoefficientReduction {
    pub fn new(spec: &TupleSpec, p: u64) -> Result<Self> {
        Ok(CoefficientReduction {
            source: CohomologyRing::build(spec, Coeff::Integers)?,
            target: CohomologyRing::build(spec, Coeff::prime(p)?)?,
        })
    }

    pub fn source(&self) -> &CohomologyRing {
        &self.source
    }

    pub fn target(&self) -> &CohomologyRing {
        &self.target
    }

    pub fn reduce(&self, m: &Monomial) -> Result<Element> {
        self.source.check(m)?;
        let tgt = &self.target;
        let base = match m.base {
            BasePart::ZPow(a) => tgt.z_power(a),
            BasePart::Omega => tgt.base_top(),
            BasePart::YZ { .. } => unreachable!("integral rings have no y"),
        };
        Ok(tgt.mul(&base, &tgt.x_set(&m.ext)))
    }

    /// Rank of the image in each degree, for comparison with `H^d(X;Z) ⊗ F_p`.
    pub fn image_rank(&self, degree: u64) -> usize {
        self.source
            .basis_in_degree(degree)
            .into_iter()
            .filter(|m| !self.reduce(m).expect("basis").is_zero())
            .count()
    }
}
