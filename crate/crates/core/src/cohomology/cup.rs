//! Cup length and zero-divisor cup length by exhaustive search over
//! generator multisets.

use std::collections::BTreeMap;

use crate::cohomology::{CohomologyRing, Element, Generator, Monomial};
use crate::error::{Error, Result};

/// A longest nonzero product and the generators realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupLength {
    pub length: usize,
    pub witness: Vec<String>,
}

/// Element of `H ⊗ H` in the basis `a ⊗ b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Monomial, Monomial), i64>,
}

impl TensorElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, a: &Monomial, b: &Monomial) -> i64 {
        self.terms.get(&(a.clone(), b.clone())).copied().unwrap_or(0)
    }
}

fn require_field(ring: &CohomologyRing) -> Result<()> {
    if ring.coeff().is_field() {
        Ok(())
    } else {
        Err(Error::unsupported("cup lengths are computed over field coefficients"))
    }
}

fn search<T>(
    gens: &[T],
    current: &T,
    start: usize,
    path: &mut Vec<usize>,
    best: &mut Vec<usize>,
    mul: &impl Fn(&T, &T) -> T,
    is_zero: &impl Fn(&T) -> bool,
) {
    if path.len() > best.len() {
        *best = path.clone();
    }
    for (i, g) in gens.iter().enumerate().skip(start) {
        let next = mul(current, g);
        if !is_zero(&next) {
            path.push(i);
            search(gens, &next, i, path, best, mul, is_zero);
            path.pop();
        }
    }
}

fn names(gens: &[Generator], idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| gens[i].name.clone()).collect()
}

/// Longest nonzero product of positive-degree generators.
pub fn cup_length(ring: &CohomologyRing) -> Result<CupLength> {
    require_field(ring)?;
    let gens = ring.generators();
    let elems: Vec<Element> = gens.iter().map(|g| ring.monomial(g.monomial.clone())).collect();
    let mut best = Vec::new();
    search(
        &elems,
        &ring.one(),
        0,
        &mut Vec::new(),
        &mut best,
        &|a, b| ring.mul(a, b),
        &Element::is_zero,
    );
    Ok(CupLength { length: best.len(), witness: names(&gens, &best) })
}

/// Product in `H ⊗ H`: `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac ⊗ bd`.
pub fn tensor_mul(ring: &CohomologyRing, x: &TensorElement, y: &TensorElement) -> TensorElement {
    let p = ring.coeff().characteristic() as i64;
    let mut out: BTreeMap<(Monomial, Monomial), i64> = BTreeMap::new();
    for ((a, b), c1) in x.terms() {
        for ((c, d), c2) in y.terms() {
            let sign = if ring.degree(b) * ring.degree(c) % 2 == 1 { -1 } else { 1 };
            let left = ring.mul(&ring.monomial(a.clone()), &ring.monomial(c.clone()));
            if left.is_zero() {
                continue;
            }
            let right = ring.mul(&ring.monomial(b.clone()), &ring.monomial(d.clone()));
            for (l, cl) in left.terms() {
                for (r, cr) in right.terms() {
                    *out.entry((l.clone(), r.clone())).or_insert(0) += sign * c1 * c2 * cl * cr;
                }
            }
        }
    }
    if p > 0 {
        out.values_mut().for_each(|c| *c = c.rem_euclid(p));
    }
    out.retain(|_, c| *c != 0);
    TensorElement { terms: out }
}

/// `g ⊗ 1 - 1 ⊗ g`.
pub fn generator_difference(ring: &CohomologyRing, g: &Monomial) -> TensorElement {
    let unit = ring.one().terms().next().expect("unit").0.clone();
    let p = ring.coeff().characteristic() as i64;
    let neg = if p > 0 { p - 1 } else { -1 };
    let mut terms = BTreeMap::new();
    terms.insert((g.clone(), unit.clone()), 1);
    terms.insert((unit, g.clone()), neg);
    TensorElement { terms }
}

/// Longest nonzero product of generator differences in `H ⊗ H`.
pub fn zero_divisor_cup_length(ring: &CohomologyRing) -> Result<CupLength> {
    require_field(ring)?;
    let gens = ring.generators();
    let bars: Vec<TensorElement> =
        gens.iter().map(|g| generator_difference(ring, &g.monomial)).collect();
    let unit = ring.one().terms().next().expect("unit").0.clone();
    let mut one = TensorElement::default();
    one.terms.insert((unit.clone(), unit), 1);
    let mut best = Vec::new();
    search(
        &bars,
        &one,
        0,
        &mut Vec::new(),
        &mut best,
        &|a, b| tensor_mul(ring, a, b),
        &TensorElement::is_zero,
    );
    Ok(CupLength { length: best.len(), witness: names(&gens, &best) })
}
