//! Smith normal form over `ℤ` and ranks over `F_p` for sparse integer matrices.
//!
//! Unit pivots are eliminated first on the sparse representation; whatever
//! survives is diagonalized densely with gcd pivoting.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::oracle::complex::SparseMatrix;

type Row = BTreeMap<usize, BigInt>;

fn to_rows(m: &SparseMatrix<i64>) -> Vec<Row> {
    let mut rows = vec![Row::new(); m.rows];
    for (c, col) in m.columns.iter().enumerate() {
        for &(r, v) in col {
            if v != 0 {
                rows[r].insert(c, BigInt::from(v));
            }
        }
    }
    rows
}

/// Removes `±1` pivots; returns how many were removed.
fn eliminate_units(rows: &mut [Row], ncols: usize) -> usize {
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.keys() {
            col_rows[c].insert(r);
        }
    }
    let mut count = 0;
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&r| rows[r].len());
    loop {
        // Markowitz-style choice: a unit entry minimizing fill-in.
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &order {
            let row = &rows[r];
            for (&c, v) in row {
                if v.magnitude().is_one() {
                    let cost = (row.len() - 1) * (col_rows[c].len() - 1);
                    if best.is_none_or(|(_, _, b)| cost < b) {
                        best = Some((r, c, cost));
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((p, c, _)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[p]);
        let pivot = pivot_row[&c].clone();
        for &k in col_rows[c].clone().iter().filter(|&&k| k != p) {
            let factor = &rows[k][&c] * &pivot;
            for (&j, v) in &pivot_row {
                let entry = rows[k].entry(j).or_insert_with(BigInt::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    rows[k].remove(&j);
                    col_rows[j].remove(&k);
                } else {
                    col_rows[j].insert(k);
                }
            }
        }
        for &j in pivot_row.keys() {
            col_rows[j].remove(&p);
        }
        order.retain(|&r| r != p && !rows[r].is_empty());
        order.sort_by_key(|&r| rows[r].len());
        count += 1;
    }
    count
}

/// Diagonalizes a dense matrix by gcd pivoting; returns the nonzero diagonal.
fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
    let mut diag = Vec::new();
    let mut k = 0;
    while k < m.min(n) {
        let mut pos = None;
        for i in k..m {
            for j in k..n {
                if !a[i][j].is_zero() && pos.is_none_or(|(pi, pj): (usize, usize)| a[i][j].abs() < a[pi][pj].abs()) {
                    pos = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pos else { break };
        a.swap(k, pi);
        a.iter_mut().for_each(|row| row.swap(k, pj));
        loop {
            let mut clean = true;
            for i in k + 1..m {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = a[i][k].div_floor(&a[k][k]);
                let (upper, lower) = a.split_at_mut(i);
                for (x, y) in lower[0][k..].iter_mut().zip(&upper[k][k..]) {
                    *x -= &q * y;
                }
                if !a[i][k].is_zero() {
                    clean = false;
                    if a[i][k].abs() < a[k][k].abs() {
                        a.swap(i, k);
                    }
                }
            }
            for j in k + 1..n {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = a[k][j].div_floor(&a[k][k]);
                for row in a.iter_mut().skip(k) {
                    let v = &q * &row[k];
                    row[j] -= v;
                }
                if !a[k][j].is_zero() {
                    clean = false;
                    if a[k][j].abs() < a[k][k].abs() {
                        a.iter_mut().for_each(|row| row.swap(k, j));
                    }
                }
            }
            if clean {
                break;
            }
        }
        diag.push(a[k][k].abs());
        k += 1;
    }
    diag
}

/// Rearranges a diagonal into a divisibility chain `d₁ | d₂ | …`.
fn chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Nonzero invariant factors of an integer matrix, as a divisibility chain.
pub fn smith_normal_form(m: &SparseMatrix<i64>) -> Vec<BigInt> {
    let mut rows = to_rows(m);
    let units = eliminate_units(&mut rows, m.cols());
    let live_rows: Vec<&Row> = rows.iter().filter(|r| !r.is_empty()).collect();
    let live_cols: BTreeSet<usize> = live_rows.iter().flat_map(|r| r.keys().copied()).collect();
    let col_pos: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let dense: Vec<Vec<BigInt>> = live_rows
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); live_cols.len()];
            for (c, x) in r.iter() {
                v[col_pos[c]] = x.clone();
            }
            v
        })
        .collect();
    let mut d = vec![BigInt::one(); units];
    d.extend(dense_diagonal(dense));
    chain(d)
}

/// Rank over `F_p` by sparse Gaussian elimination.
pub fn rank_mod_p(m: &SparseMatrix<i64>, p: u64) -> usize {
    let p = p as i64;
    let mut pivots: BTreeMap<usize, BTreeMap<usize, i64>> = BTreeMap::new();
    let mut rank = 0;
    for col in &m.columns {
        let mut v: BTreeMap<usize, i64> =
            col.iter().map(|&(r, x)| (r, x.rem_euclid(p))).filter(|&(_, x)| x != 0).collect();
        while let Some((&lead, &x)) = v.iter().next() {
            let Some(pv) = pivots.get(&lead) else { break };
            // Pivot vectors are normalized to leading coefficient 1.
            for (&r, &y) in pv {
                let e = v.entry(r).or_insert(0);
                *e = (*e - x * y).rem_euclid(p);
                if *e == 0 {
                    v.remove(&r);
                }
            }
        }
        if let Some((&lead, &x)) = v.iter().next() {
            let inv = crate::algebra::arith::inv_mod(i128::from(x), p as u64).expect("p prime") as i64;
            v.values_mut().for_each(|y| *y = (*y * inv).rem_euclid(p));
            pivots.insert(lead, v);
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sparse(dense: &[Vec<i64>]) -> SparseMatrix<i64> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        SparseMatrix {
            rows,
            columns: (0..cols)
                .map(|c| (0..rows).filter(|&r| dense[r][c] != 0).map(|r| (r, dense[r][c])).collect())
                .collect(),
        }
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(smith_normal_form(&sparse(&[vec![2, 0], vec![0, 3]])), ints(&[1, 6]));
        assert_eq!(smith_normal_form(&sparse(&[vec![0, 0], vec![0, 0]])), ints(&[]));
        assert_eq!(smith_normal_form(&sparse(&[vec![3]])), ints(&[3]));
        assert_eq!(
            smith_normal_form(&sparse(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])),
            ints(&[2, 6, 12])
        );
    }

    /// Determinantal divisors: d₁⋯d_k is the gcd of all k×k minors.
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum()
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        (k - 1..n)
            .flat_map(|last| {
                subsets(last, k - 1).into_iter().map(move |mut s| {
                    s.push(last);
                    s
                })
            })
            .collect()
    }

    fn minor_gcd(m: &[Vec<i64>], k: usize) -> i64 {
        let (rows, cols) = (m.len(), m[0].len());
        let mut g = 0i64;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        g
    }

    proptest! {
        #[test]
        fn agrees_with_determinantal_divisors(
            m in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 3), 3)
        ) {
            let d = smith_normal_form(&sparse(&m));
            let mut product = BigInt::one();
            for k in 1..=3 {
                let g = minor_gcd(&m, k);
                if k <= d.len() {
                    product *= &d[k - 1];
                    prop_assert_eq!(BigInt::from(g), product.clone());
                } else {
                    prop_assert_eq!(g, 0);
                }
            }
            for w in d.windows(2) {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }

        #[test]
        fn rank_mod_p_matches_invariant_factors(
            m in proptest::collection::vec(proptest::collection::vec(-4i64..=4, 4), 3),
            p in prop::sample::select(vec![2u64, 3, 5])
        ) {
            let s = sparse(&m);
            let d = smith_normal_form(&s);
            let expected = d.iter().filter(|x| !(*x % BigInt::from(p)).is_zero()).count();
            prop_assert_eq!(rank_mod_p(&s, p), expected);
        }
    }
}
