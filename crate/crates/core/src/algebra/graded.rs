//! Graded bookkeeping: abelian groups per degree, Poincaré series, Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{arith, Coeff};

/// A finitely generated abelian group `Z^free ⊕ ⊕ Z/c`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub free: u64,
    pub torsion: Vec<u64>,
}

impl GroupEntry {
    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.iter().all(|&c| c == 1)
    }

    /// Elementary-divisor form: torsion split into sorted prime powers, units dropped.
    pub fn normalized(&self) -> GroupEntry {
        let mut torsion: Vec<u64> = self
            .torsion
            .iter()
            .flat_map(|&c| arith::factorize(c).into_iter().map(|(p, e)| p.pow(e)))
            .collect();
        torsion.sort_unstable();
        GroupEntry { free: self.free, torsion }
    }
}

impl GroupEntry {
    /// Renders with the free part written over `base`, e.g. `F3^2` or `Q`.
    pub fn render_over(&self, base: &str) -> String {
        let n = self.normalized();
        let mut parts = Vec::new();
        match n.free {
            0 => {}
            1 => parts.push(base.to_string()),
            k => parts.push(format!("{base}^{k}")),
        }
        parts.extend(n.torsion.iter().map(|c| format!("Z/{c}")));
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for GroupEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_over("Z"))
    }
}

/// Abelian groups indexed by degree; torsion is kept as given and only
/// normalized when comparing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedAbGroup {
    entries: BTreeMap<i64, GroupEntry>,
}

impl GradedAbGroup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_free(&mut self, degree: i64, rank: u64) {
        if rank > 0 {
            self.entries.entry(degree).or_default().free += rank;
        }
    }

    pub fn add_torsion(&mut self, degree: i64, order: u64) {
        if order > 1 {
            self.entries.entry(degree).or_default().torsion.push(order);
        }
    }

    pub fn get(&self, degree: i64) -> GroupEntry {
        self.entries.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero degrees, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        self.entries
            .iter()
            .filter(|(_, g)| !g.is_zero())
            .map(|(&d, _)| d)
            .collect()
    }

    pub fn top_degree(&self) -> Option<i64> {
        self.degrees().last().copied()
    }

    pub fn normalized(&self) -> BTreeMap<i64, GroupEntry> {
        self.entries
            .iter()
            .map(|(&d, g)| (d, g.normalized()))
            .filter(|(_, g)| !g.is_zero())
            .collect()
    }

    /// Isomorphism of graded groups, after elementary-divisor normalization.
    pub fn equivalent(&self, other: &GradedAbGroup) -> bool {
        self.normalized() == other.normalized()
    }

    /// Degrees in which the two groups disagree.
    pub fn mismatches(&self, other: &GradedAbGroup) -> Vec<i64> {
        let (a, b) = (self.normalized(), other.normalized());
        let mut degs: Vec<i64> = a.keys().chain(b.keys()).copied().collect();
        degs.sort_unstable();
        degs.dedup();
        degs.into_iter().filter(|d| a.get(d) != b.get(d)).collect()
    }

    /// Degrees `0..=top` rendered as strings (`0` for trivial groups).
    pub fn render(&self, top: i64) -> Vec<String> {
        (0..=top).map(|d| self.get(d).to_string()).collect()
    }

    /// Like [`render`](Self::render), writing free summands over the given coefficients.
    pub fn render_over(&self, top: i64, coeff: Coeff) -> Vec<String> {
        let base = match coeff {
            Coeff::Prime(p) => format!("F{p}"),
            c => c.to_string(),
        };
        (0..=top).map(|d| self.get(d).render_over(&base)).collect()
    }
}

/// `Σ β_d s^d` with non-negative coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareSeries {
    coeffs: Vec<u64>,
}

impl PoincareSeries {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        PoincareSeries { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![1])
    }

    /// `1 + s^d`
    pub fn sphere(d: usize) -> Self {
        let mut c = vec![0; d + 1];
        c[0] += 1;
        c[d] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::default();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// `P(-1)`
    pub fn alternating_sum(&self) -> i64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// `Σ β_{2i}`
    pub fn even_sum(&self) -> u64 {
        self.coeffs.iter().step_by(2).sum()
    }

    /// `β_d = β_{dim-d}` for all `d`, with nothing above `dim`.
    pub fn is_palindromic(&self, dim: usize) -> bool {
        if self.coeffs.len() > dim + 1 {
            return false;
        }
        (0..=dim).all(|d| self.coeff(d) == self.coeff(dim - d))
    }

    /// The reduced series (degree-0 term lowered by one).
    pub fn reduced(&self) -> LaurentPoly {
        let mut l = LaurentPoly::from_poincare(self);
        l.add_term(0, -1);
        l
    }
}

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LaurentPoly::from_poincare(self).fmt(f)
    }
}

/// Integer Laurent polynomial in `s`, used for suspension bookkeeping.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut l = Self::zero();
        l.add_term(exp, coeff);
        l
    }

    pub fn from_poincare(p: &PoincareSeries) -> Self {
        let mut l = Self::zero();
        for (d, &c) in p.coeffs().iter().enumerate() {
            l.add_term(d as i64, c as i64);
        }
        l
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let e = self.terms.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    /// Multiplication by `s^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Lowest exponent at which `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        self.terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|&e| self.coeff(e) != other.coeff(e))
            .min()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, &c)| {
                let mono = match e {
                    0 => String::new(),
                    1 => "s".to_string(),
                    _ => format!("s^{e}"),
                };
                match (c, mono.is_empty()) {
                    (c, true) => c.to_string(),
                    (1, false) => mono,
                    (-1, false) => format!("-{mono}"),
                    (c, false) => format!("{c}{mono}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_divisor_comparison() {
        let mut a = GradedAbGroup::new();
        a.add_torsion(2, 6);
        a.add_free(0, 1);
        let mut b = GradedAbGroup::new();
        b.add_torsion(2, 3);
        b.add_torsion(2, 2);
        b.add_free(0, 1);
        b.add_torsion(5, 1);
        assert!(a.equivalent(&b));
        b.add_free(3, 1);
        assert_eq!(a.mismatches(&b), vec![3]);
        assert_eq!(a.get(2).to_string(), "Z/2 + Z/3");
    }

    #[test]
    fn poincare_helpers() {
        let p = PoincareSeries::sphere(2).mul(&PoincareSeries::sphere(5));
        assert_eq!(p.coeffs(), &[1, 0, 1, 0, 0, 1, 0, 1]);
        assert!(p.is_palindromic(7));
        assert!(!p.is_palindromic(8));
        assert_eq!(p.alternating_sum(), 0);
        assert_eq!(p.even_sum(), 2);
        assert_eq!(p.to_string(), "1 + s^2 + s^5 + s^7");
        let l = p.reduced().shift(-1);
        assert_eq!(l.coeff(-1), 0);
        assert_eq!(l.coeff(1), 1);
    }
}
