//! Cohomology rings of `CP_n̄(t)` with integral, rational or prime-field
//! coefficients.
//!
//! The ring is the tensor product of the ring of the base lens (or
//! projective) space `CP_(n₁)(t)` with an exterior algebra on classes
//! `x_i` of degree `2n_i + 1`, `2 <= i <= r`. Elements are written in the
//! monomial basis `b · x_S`, base part first and exterior letters in
//! increasing index order.

mod cup;
mod maps;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{nu_p, Coeff, GradedAbGroup, PoincareSeries, Torsion, TupleSpec};
use crate::error::{Error, Result};
use crate::fgl::FormalGroupLaw;

pub use cup::{cup_length, zero_divisor_cup_length, CupLength, TensorElement};
pub use maps::{CoefficientReduction, ProjectionPullback, RestrictionMap};

/// The base-space factor of a basis monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasePart {
    /// `z^a`
    ZPow(u32),
    /// The top class of a lens space when `t` is invertible (or integrally free).
    Omega,
    /// `y^ε z^a` in the `p`-primary presentation.
    YZ { y: bool, a: u32 },
}

impl BasePart {
    pub fn is_unit(&self) -> bool {
        matches!(self, BasePart::ZPow(0) | BasePart::YZ { y: false, a: 0 })
    }
}

/// A basis element `b · x_S`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub base: BasePart,
    /// Sorted 1-based indices in `2..=r`.
    pub ext: Vec<usize>,
}

impl Monomial {
    pub fn new(base: BasePart, mut ext: Vec<usize>) -> Self {
        ext.sort_unstable();
        ext.dedup();
        Monomial { base, ext }
    }

    pub fn base(base: BasePart) -> Self {
        Monomial { base, ext: Vec::new() }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let zpow = |a: u32| match a {
            0 => None,
            1 => Some("z".to_string()),
            _ => Some(format!("z^{a}")),
        };
        match self.base {
            BasePart::ZPow(a) => parts.extend(zpow(a)),
            BasePart::Omega => parts.push("w".to_string()),
            BasePart::YZ { y, a } => {
                if y {
                    parts.push("y".to_string());
                }
                parts.extend(zpow(a));
            }
        }
        parts.extend(self.ext.iter().map(|i| format!("x{i}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("·"))
        }
    }
}

/// How the base ring `h*(CP_(n₁)(t))` is presented for a given coefficient choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    /// `t = ∞`: truncated polynomial ring on `z`.
    Projective,
    /// Integral coefficients, finite `t`: `Z[z]/(z^{n₁+1}, t·z) ⊕ Z·ω`.
    Additive { t: u64 },
    /// `t` invertible in a field: only `1` and `ω` survive.
    Sphere,
    /// `F_p` with `p | t`, where `e = ν_p(t)`: `y^ε z^a` with `y² = 2^{e-1} z`.
    PPrimary { p: u64, e: u32 },
}

/// Group generated by a basis monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassGroup {
    Free,
    Cyclic(u64),
    /// One copy of the coefficient field.
    Field,
}

/// Finite linear combination of basis monomials with integer coefficients,
/// reduced by the ring it belongs to.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    terms: BTreeMap<Monomial, i64>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coeff(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single monomial of a one-term element with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.iter().next() {
            Some((m, 1)) if self.terms.len() == 1 => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| match c {
                1 => m.to_string(),
                -1 => format!("-{m}"),
                c => format!("{c}·{m}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// A named algebra generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u64,
    pub monomial: Monomial,
}

/// Graded cohomology ring of `CP_n̄(t)` in a monomial basis.
#[derive(Debug, Clone)]
pub struct CohomologyRing {
    spec: TupleSpec,
    coeff: Coeff,
    presentation: Presentation,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl CohomologyRing {
    pub fn build(spec: &TupleSpec, coeff: Coeff) -> Result<Self> {
        if let Coeff::Prime(p) = coeff {
            Coeff::prime(p)?;
        }
        let presentation = match (spec.t(), coeff) {
            (Torsion::Infinite, _) => Presentation::Projective,
            (Torsion::Finite(t), Coeff::Integers) => Presentation::Additive { t },
            (Torsion::Finite(_), Coeff::Rationals) => Presentation::Sphere,
            (Torsion::Finite(t), Coeff::Prime(p)) => {
                if t % p == 0 {
                    Presentation::PPrimary { p, e: nu_p(p, t)? }
                } else {
                    Presentation::Sphere
                }
            }
        };
        let n1 = spec.n1();
        let bases: Vec<BasePart> = match presentation {
            Presentation::Projective => (0..=n1).map(BasePart::ZPow).collect(),
            Presentation::Additive { t } => {
                let mut b = vec![BasePart::ZPow(0)];
                if t > 1 {
                    b.extend((1..=n1).map(BasePart::ZPow));
                }
                b.push(BasePart::Omega);
                b
            }
            Presentation::Sphere => vec![BasePart::ZPow(0), BasePart::Omega],
            Presentation::PPrimary { .. } => (0..=n1)
                .flat_map(|a| [BasePart::YZ { y: false, a }, BasePart::YZ { y: true, a }])
                .collect(),
        };
        let r = spec.r();
        let mut basis = Vec::with_capacity(bases.len() << (r - 1));
        for mask in 0u64..(1 << (r - 1)) {
            let ext: Vec<usize> = (2..=r).filter(|i| mask & (1 << (i - 2)) != 0).collect();
            for &b in &bases {
                basis.push(Monomial { base: b, ext: ext.clone() });
            }
        }
        let mut ring = CohomologyRing {
            spec: spec.clone(),
            coeff,
            presentation,
            basis,
            index: HashMap::new(),
        };
        let mut basis = std::mem::take(&mut ring.basis);
        basis.sort_by(|a, b| ring.degree(a).cmp(&ring.degree(b)).then_with(|| a.cmp(b)));
        ring.index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        ring.basis = basis;
        Ok(ring)
    }

    pub fn spec(&self) -> &TupleSpec {
        &self.spec
    }

    pub fn coeff(&self) -> Coeff {
        self.coeff
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    /// Basis monomials ordered by degree.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn basis_in_degree(&self, d: u64) -> Vec<&Monomial> {
        self.basis.iter().filter(|m| self.degree(m) == d).collect()
    }

    pub fn base_degree(&self, b: &BasePart) -> u64 {
        match *b {
            BasePart::ZPow(a) => 2 * u64::from(a),
            BasePart::Omega => 2 * u64::from(self.spec.n1()) + 1,
            BasePart::YZ { y, a } => u64::from(y) + 2 * u64::from(a),
        }
    }

    pub fn degree(&self, m: &Monomial) -> u64 {
        self.base_degree(&m.base)
            + m.ext.iter().map(|&i| 2 * u64::from(self.spec.n_at(i)) + 1).sum::<u64>()
    }

    pub fn class_group(&self, m: &Monomial) -> ClassGroup {
        match (self.coeff, self.presentation, m.base) {
            (Coeff::Integers, Presentation::Additive { t }, BasePart::ZPow(a)) if a >= 1 => {
                ClassGroup::Cyclic(t)
            }
            (Coeff::Integers, _, _) => ClassGroup::Free,
            _ => ClassGroup::Field,
        }
    }

    fn reduce_coeff(&self, m: &Monomial, c: i64) -> i64 {
        match (self.coeff, self.class_group(m)) {
            (Coeff::Prime(p), _) => c.rem_euclid(p as i64),
            (_, ClassGroup::Cyclic(t)) => c.rem_euclid(t as i64),
            _ => c,
        }
    }

    pub fn check(&self, m: &Monomial) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::ForeignMonomial(m.to_string()))
        }
    }

    pub fn one(&self) -> Element {
        let unit = match self.presentation {
            Presentation::PPrimary { .. } => BasePart::YZ { y: false, a: 0 },
            _ => BasePart::ZPow(0),
        };
        self.monomial(Monomial::base(unit))
    }

    /// The element `1·m`, zero if `m` is not a basis class.
    pub fn monomial(&self, m: Monomial) -> Element {
        self.scaled(m, 1)
    }

    pub fn scaled(&self, m: Monomial, c: i64) -> Element {
        let mut e = Element::zero();
        self.add_term(&mut e, m, c);
        e
    }

    fn add_term(&self, e: &mut Element, m: Monomial, c: i64) {
        if !self.contains(&m) {
            return;
        }
        let entry = e.terms.entry(m.clone()).or_insert(0);
        *entry = self.reduce_coeff(&m, *entry + c);
        if *entry == 0 {
            e.terms.remove(&m);
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        let mut out = a.clone();
        for (m, c) in b.terms() {
            self.add_term(&mut out, m.clone(), c);
        }
        out
    }

    pub fn scale(&self, a: &Element, k: i64) -> Element {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            self.add_term(&mut out, m.clone(), c * k);
        }
        out
    }

    /// Coefficient of `y²` expressed through `z`: `2^{e-1}` reduced mod `p`.
    fn y_square_coeff(&self) -> i64 {
        match self.presentation {
            Presentation::PPrimary { p: 2, e: 1 } => 1,
            _ => 0,
        }
    }

    fn base_mul(&self, a: BasePart, b: BasePart) -> Option<(i64, BasePart)> {
        let n1 = self.spec.n1();
        match (a, b) {
            (BasePart::ZPow(i), BasePart::ZPow(j)) => (i + j <= n1).then_some((1, BasePart::ZPow(i + j))),
            (BasePart::Omega, other) | (other, BasePart::Omega) => {
                (other == BasePart::ZPow(0)).then_some((1, BasePart::Omega))
            }
            (BasePart::YZ { y: y1, a: i }, BasePart::YZ { y: y2, a: j }) => {
                if y1 && y2 {
                    let c = self.y_square_coeff();
                    (c != 0 && i + j < n1).then_some((c, BasePart::YZ { y: false, a: i + j + 1 }))
                } else {
                    (i + j <= n1).then_some((1, BasePart::YZ { y: y1 || y2, a: i + j }))
                }
            }
            _ => None,
        }
    }

    /// Product of two basis monomials with the Koszul sign convention.
    pub fn multiply(&self, m1: &Monomial, m2: &Monomial) -> Result<Element> {
        self.check(m1)?;
        self.check(m2)?;
        Ok(self.multiply_unchecked(m1, m2))
    }

    fn multiply_unchecked(&self, m1: &Monomial, m2: &Monomial) -> Element {
        let Some((c, base)) = self.base_mul(m1.base, m2.base) else {
            return Element::zero();
        };
        if m1.ext.iter().any(|i| m2.ext.contains(i)) {
            return Element::zero();
        }
        // x_{S1} moves past the base part of m2.
        let mut odd = (m1.ext.len() as u64 * self.base_degree(&m2.base)) % 2;
        // Sorting x_{S1} x_{S2}: each inversion is a transposition of odd letters.
        for &i in &m1.ext {
            odd += m2.ext.iter().filter(|&&j| j < i).count() as u64;
        }
        let sign = if odd.is_multiple_of(2) { 1 } else { -1 };
        let mut ext = m1.ext.clone();
        ext.extend_from_slice(&m2.ext);
        self.scaled(Monomial::new(base, ext), sign * c)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::zero();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                let prod = self.multiply_unchecked(m1, m2);
                for (m, c) in prod.terms() {
                    self.add_term(&mut out, m.clone(), c * c1 * c2);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &Element, k: u64) -> Element {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, a))
    }

    /// Degree of a homogeneous element, `None` for zero.
    pub fn element_degree(&self, e: &Element) -> Option<u64> {
        e.terms().next().map(|(m, _)| self.degree(m))
    }

    /// The class `z`, zero when it does not survive in this presentation.
    pub fn z(&self) -> Element {
        match self.presentation {
            Presentation::PPrimary { .. } => self.monomial(Monomial::base(BasePart::YZ { y: false, a: 1 })),
            _ => self.monomial(Monomial::base(BasePart::ZPow(1))),
        }
    }

    /// The class `y` of the `p`-primary presentation, zero otherwise.
    pub fn y(&self) -> Element {
        self.monomial(Monomial::base(BasePart::YZ { y: true, a: 0 }))
    }

    pub fn omega(&self) -> Element {
        self.monomial(Monomial::base(BasePart::Omega))
    }

    /// `x_i` for `2 <= i <= r`.
    pub fn x(&self, i: usize) -> Element {
        let unit = self.one().terms().next().expect("unit").0.clone();
        self.monomial(Monomial::new(unit.base, vec![i]))
    }

    /// Algebra generators: `z`, `y` or `ω` for the base, then `x_2, …, x_r`.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        let mut push = |name: String, e: Element| {
            if let Some(m) = e.as_monomial() {
                out.push(Generator { name, degree: self.degree(m), monomial: m.clone() });
            }
        };
        match self.presentation {
            Presentation::Projective => push("z".into(), self.z()),
            Presentation::Additive { .. } => {
                push("z".into(), self.z());
                push("w".into(), self.omega());
            }
            Presentation::Sphere => push("w".into(), self.omega()),
            Presentation::PPrimary { .. } => {
                push("y".into(), self.y());
                push("z".into(), self.z());
            }
        }
        for i in 2..=self.spec.r() {
            push(format!("x{i}"), self.x(i));
        }
        out
    }

    /// Human-readable defining relations.
    pub fn relations(&self) -> Vec<String> {
        let n1 = self.spec.n1();
        let mut out = Vec::new();
        match self.presentation {
            Presentation::Projective => {
                if n1 >= 1 {
                    out.push(format!("z^{} = 0", n1 + 1));
                }
            }
            Presentation::Additive { t } => {
                let series = FormalGroupLaw::additive(Coeff::Integers)
                    .t_series(t, n1 as usize + 1)
                    .expect("t >= 1");
                out.push(format!("z^{} = 0", n1 + 1));
                out.push(format!("[{t}](z) = {} = 0", series.series));
                out.push("w·c = 0 for deg c > 0".to_string());
            }
            Presentation::Sphere => {
                out.push(format!("z = 0 ([t](z) = tz with t = {} invertible)", self.spec.t()));
                out.push("w·c = 0 for deg c > 0".to_string());
            }
            Presentation::PPrimary { p, e } => {
                if p == 2 && e == 1 {
                    out.push("y^2 = z".to_string());
                } else {
                    out.push("y^2 = 0".to_string());
                }
                out.push(format!("z^{} = 0", n1 + 1));
            }
        }
        for i in 2..=self.spec.r() {
            out.push(format!("x{i}^2 = 0"));
        }
        out
    }

    /// Groups per degree: free or cyclic for `Z`, vector-space dimension otherwise.
    pub fn graded_groups(&self) -> GradedAbGroup {
        let mut g = GradedAbGroup::new();
        for m in &self.basis {
            let d = self.degree(m) as i64;
            match self.class_group(m) {
                ClassGroup::Cyclic(t) => g.add_torsion(d, t),
                ClassGroup::Free | ClassGroup::Field => g.add_free(d, 1),
            }
        }
        g
    }

    /// `Σ dim H^d s^d`; field coefficients only.
    pub fn poincare_polynomial(&self) -> Result<PoincareSeries> {
        if !self.coeff.is_field() {
            return Err(Error::unsupported("Poincaré polynomials need field coefficients"));
        }
        Ok(self.betti())
    }

    pub(crate) fn betti(&self) -> PoincareSeries {
        let top = self.basis.iter().map(|m| self.degree(m)).max().unwrap_or(0) as usize;
        let mut c = vec![0; top + 1];
        for m in &self.basis {
            c[self.degree(m) as usize] += 1;
        }
        PoincareSeries::new(c)
    }

    pub fn top_degree(&self) -> u64 {
        self.basis.iter().map(|m| self.degree(m)).max().unwrap_or(0)
    }
}
