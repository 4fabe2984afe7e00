//! Free `ℤ[ℤ_t]`-chain complexes of products of odd spheres with the
//! diagonal action, and their quotient complexes over `ℤ`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Torsion, TupleSpec};
use crate::error::{Error, Result};

/// `Σ c_a λ^a` in `ℤ[ℤ_t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coeffs: Vec<i64>,
}

impl GroupRingElement {
    pub fn zero(t: u64) -> Self {
        GroupRingElement { coeffs: vec![0; t as usize] }
    }

    pub fn monomial(t: u64, a: u64, c: i64) -> Self {
        let mut e = Self::zero(t);
        e.coeffs[(a % t) as usize] = c;
        e
    }

    /// `λ - 1`
    pub fn lambda_minus_one(t: u64) -> Self {
        let mut e = Self::monomial(t, 1, 1);
        e.coeffs[0] -= 1;
        e
    }

    /// `N = 1 + λ + … + λ^{t-1}`
    pub fn norm(t: u64) -> Self {
        GroupRingElement { coeffs: vec![1; t as usize] }
    }

    pub fn order(&self) -> u64 {
        self.coeffs.len() as u64
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.coeffs.iter_mut().zip(&other.coeffs).for_each(|(a, b)| *a += b);
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.coeffs.len();
        let mut out = vec![0; t];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[(i + j) % t] += a * b;
            }
        }
        GroupRingElement { coeffs: out }
    }

    /// `ε(Σ c_a λ^a) = Σ c_a`
    pub fn augmentation(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

/// Sparse matrix stored by columns; `columns[i]` lists `(row, entry)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    pub rows: usize,
    pub columns: Vec<Vec<(usize, T)>>,
}

impl<T> SparseMatrix<T> {
    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nonzeros(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }
}

/// Chain complex of free `ℤ[ℤ_t]`-modules; `boundaries[d]: C_d → C_{d-1}`.
#[derive(Debug, Clone)]
pub struct EquivariantComplex {
    pub t: u64,
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix<GroupRingElement>>,
}

/// Chain complex of free abelian groups; `boundaries[d]: C_d → C_{d-1}`.
#[derive(Debug, Clone)]
pub struct QuotientComplex {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<SparseMatrix<i64>>,
}

fn empty<T>(rows: usize, cols: usize) -> SparseMatrix<T> {
    SparseMatrix { rows, columns: (0..cols).map(|_| Vec::new()).collect() }
}

/// Minimal free `ℤ_t`-cell structure on `S^{2n+1}`: one cell per degree,
/// `∂e_{2i} = N e_{2i-1}`, `∂e_{2i+1} = (λ-1) e_{2i}`.
pub fn sphere_complex(n: u32, t: u64) -> Result<EquivariantComplex> {
    if t == 0 {
        return Err(Error::invalid("t must be a positive integer"));
    }
    let top = 2 * n as usize + 1;
    let boundaries = (0..=top)
        .map(|d| {
            let mut m = empty(if d == 0 { 0 } else { 1 }, 1);
            if d > 0 {
                let e = if d % 2 == 0 {
                    GroupRingElement::norm(t)
                } else {
                    GroupRingElement::lambda_minus_one(t)
                };
                m.columns[0].push((0, e));
            }
            m
        })
        .collect();
    Ok(EquivariantComplex { t, ranks: vec![1; top + 1], boundaries })
}

/// A `ℤ[ℤ_t]`-basis cell `e_{j₁} ⊗ λ^{a₂} e_{j₂} ⊗ … ⊗ λ^{a_r} e_{j_r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductCell {
    pub j: Vec<usize>,
    pub a: Vec<u64>,
}

pub const DEFAULT_CAP: u128 = 200_000;

/// Number of basis cells, `Π(2n_i+2) · t^{r-1}`.
pub fn basis_size(spec: &TupleSpec) -> Option<u128> {
    let t = u128::from(spec.t().as_finite()?);
    let cells: u128 = spec.n().iter().map(|&n| 2 * u128::from(n) + 2).product();
    Some(cells * t.pow(spec.r() as u32 - 1))
}

/// Cells of each degree in a fixed order, with their inverse index.
pub struct ProductBasis {
    pub cells: Vec<Vec<ProductCell>>,
    index: HashMap<ProductCell, usize>,
}

impl ProductBasis {
    pub fn index_of(&self, c: &ProductCell) -> usize {
        self.index[c]
    }
}

fn product_basis(spec: &TupleSpec, t: u64) -> ProductBasis {
    let tops: Vec<usize> = spec.n().iter().map(|&n| 2 * n as usize + 1).collect();
    let dim: usize = tops.iter().sum();
    let mut cells: Vec<Vec<ProductCell>> = vec![Vec::new(); dim + 1];
    let r = spec.r();
    let mut j = vec![0usize; r];
    loop {
        let d: usize = j.iter().sum();
        let mut a = vec![0u64; r - 1];
        loop {
            cells[d].push(ProductCell { j: j.clone(), a: a.clone() });
            let Some(pos) = (0..r - 1).rev().find(|&i| a[i] + 1 < t) else { break };
            a[pos] += 1;
            a[pos + 1..].iter_mut().for_each(|x| *x = 0);
        }
        let Some(pos) = (0..r).rev().find(|&i| j[i] < tops[i]) else { break };
        j[pos] += 1;
        j[pos + 1..].iter_mut().for_each(|x| *x = 0);
    }
    let mut index = HashMap::new();
    for level in &cells {
        for (i, c) in level.iter().enumerate() {
            index.insert(c.clone(), i);
        }
    }
    ProductBasis { cells, index }
}

/// Tensor product of the sphere complexes with the diagonal action, in the
/// basis normalized so the first factor carries no group element.
pub fn product_complex(spec: &TupleSpec, cap: u128) -> Result<(EquivariantComplex, ProductBasis)> {
    let Torsion::Finite(t) = spec.t() else {
        return Err(Error::unsupported("the chain-complex oracle needs finite t"));
    };
    let size = basis_size(spec).expect("finite t");
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    let spheres: Vec<EquivariantComplex> =
        spec.n().iter().map(|&n| sphere_complex(n, t)).collect::<Result<_>>()?;
    let basis = product_basis(spec, t);
    let ranks: Vec<usize> = basis.cells.iter().map(Vec::len).collect();
    let mut boundaries = vec![empty(0, ranks[0])];
    for d in 1..ranks.len() {
        let mut m = empty(ranks[d - 1], ranks[d]);
        for (col, cell) in basis.cells[d].iter().enumerate() {
            let mut entries: BTreeMap<usize, GroupRingElement> = BTreeMap::new();
            let mut sign = 1i64;
            for (i, sphere) in spheres.iter().enumerate() {
                let ji = cell.j[i];
                if ji > 0 {
                    let dsph = &sphere.boundaries[ji].columns[0][0].1;
                    for (c, &coef) in dsph.coeffs().iter().enumerate().filter(|(_, &c)| c != 0) {
                        let mut target = cell.clone();
                        target.j[i] -= 1;
                        // λ^c on the first factor is pulled out to the front.
                        let (group, a_shift) = if i == 0 { (c as u64, t - c as u64) } else { (0, 0) };
                        if i == 0 {
                            target.a.iter_mut().for_each(|x| *x = (*x + a_shift) % t);
                        } else {
                            target.a[i - 1] = (target.a[i - 1] + c as u64) % t;
                        }
                        let row = basis.index_of(&target);
                        entries
                            .entry(row)
                            .or_insert_with(|| GroupRingElement::zero(t))
                            .add_assign(&GroupRingElement::monomial(t, group, sign * coef));
                    }
                }
                if ji % 2 == 1 {
                    sign = -sign;
                }
            }
            m.columns[col] = entries.into_iter().filter(|(_, e)| !e.is_zero()).collect();
        }
        boundaries.push(m);
    }
    Ok((EquivariantComplex { t, ranks, boundaries }, basis))
}

impl EquivariantComplex {
    /// `∂_{d-1} ∘ ∂_d = 0` for every `d`, over the group ring.
    pub fn is_complex(&self) -> bool {
        (2..self.boundaries.len()).all(|d| {
            let (inner, outer) = (&self.boundaries[d], &self.boundaries[d - 1]);
            inner.columns.iter().all(|col| {
                let mut acc: BTreeMap<usize, GroupRingElement> = BTreeMap::new();
                for (mid, g) in col {
                    for (row, h) in &outer.columns[*mid] {
                        acc.entry(*row)
                            .or_insert_with(|| GroupRingElement::zero(self.t))
                            .add_assign(&h.mul(g));
                    }
                }
                acc.values().all(GroupRingElement::is_zero)
            })
        })
    }

    /// `C ⊗_{ℤ[ℤ_t]} ℤ`: every entry replaced by its augmentation.
    pub fn quotient(&self) -> QuotientComplex {
        let boundaries = self
            .boundaries
            .iter()
            .map(|m| SparseMatrix {
                rows: m.rows,
                columns: m
                    .columns
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|(r, g)| (*r, g.augmentation()))
                            .filter(|(_, c)| *c != 0)
                            .collect()
                    })
                    .collect(),
            })
            .collect();
        QuotientComplex { ranks: self.ranks.clone(), boundaries }
    }
}

impl QuotientComplex {
    pub fn is_complex(&self) -> bool {
        (2..self.boundaries.len()).all(|d| {
            let (inner, outer) = (&self.boundaries[d], &self.boundaries[d - 1]);
            inner.columns.iter().all(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (mid, g) in col {
                    for (row, h) in &outer.columns[*mid] {
                        *acc.entry(*row).or_insert(0) += h * g;
                    }
                }
                acc.values().all(|&v| v == 0)
            })
        })
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }
}

/// Builds the product complex, checks `∂∘∂ = 0` at both levels, and passes to the quotient.
pub fn product_quotient_complex(spec: &TupleSpec, cap: u128) -> Result<QuotientComplex> {
    let (complex, _) = product_complex(spec, cap)?;
    assert!(complex.is_complex(), "equivariant boundary does not square to zero");
    let q = complex.quotient();
    assert!(q.is_complex(), "quotient boundary does not square to zero");
    Ok(q)
}
