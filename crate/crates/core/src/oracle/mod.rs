//! Brute-force homology of `L_n̄(t)` from an explicit cellular chain complex,
//! used to cross-check the cohomology rings.

pub mod complex;
pub mod smith;

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::algebra::{Coeff, GradedAbGroup, PoincareSeries, TupleSpec};
use crate::cohomology::CohomologyRing;
use crate::error::{Error, Result};

pub use complex::{
    basis_size, product_complex, product_quotient_complex, sphere_complex, EquivariantComplex,
    GroupRingElement, QuotientComplex, SparseMatrix, DEFAULT_CAP,
};
pub use smith::{rank_mod_p, smith_normal_form};

/// Integral homology or field Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyResult {
    Integral(GradedAbGroup),
    Betti(PoincareSeries),
}

fn empty_matrix(rows: usize) -> SparseMatrix<i64> {
    SparseMatrix { rows, columns: Vec::new() }
}

pub fn homology(c: &QuotientComplex, coeff: Coeff) -> HomologyResult {
    let top = c.top_degree();
    let boundary = |d: usize| {
        if d <= top {
            c.boundaries[d].clone()
        } else {
            empty_matrix(c.ranks[top])
        }
    };
    match coeff {
        Coeff::Integers => {
            let factors: Vec<_> = (0..=top + 1).map(|d| smith_normal_form(&boundary(d))).collect();
            let mut g = GradedAbGroup::new();
            for d in 0..=top {
                let rank_out = factors[d].len();
                let rank_in = factors[d + 1].len();
                g.add_free(d as i64, (c.ranks[d] - rank_out - rank_in) as u64);
                for f in factors[d + 1].iter().filter(|f| !f.is_one()) {
                    g.add_torsion(d as i64, f.to_u64().expect("torsion fits in u64"));
                }
            }
            HomologyResult::Integral(g)
        }
        _ => {
            let rank = |d: usize| match coeff {
                Coeff::Prime(p) => rank_mod_p(&boundary(d), p),
                _ => smith_normal_form(&boundary(d)).len(),
            };
            let ranks: Vec<usize> = (0..=top + 1).map(rank).collect();
            let betti = (0..=top).map(|d| (c.ranks[d] - ranks[d] - ranks[d + 1]) as u64).collect();
            HomologyResult::Betti(PoincareSeries::new(betti))
        }
    }
}

/// `H^d ≅ Free(H_d) ⊕ Tors(H_{d-1})`.
pub fn cohomology_from_homology(h: &GradedAbGroup) -> GradedAbGroup {
    let mut g = GradedAbGroup::new();
    for d in h.degrees() {
        let e = h.get(d);
        g.add_free(d, e.free);
        for &t in &e.torsion {
            g.add_torsion(d + 1, t);
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdict {
    pub degree: i64,
    pub theory: String,
    pub oracle: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub coeff: Coeff,
    pub matches: bool,
    pub degrees: Vec<DegreeVerdict>,
}

/// Oracle cohomology as a graded group; field coefficients give free ranks.
pub fn oracle_cohomology(spec: &TupleSpec, coeff: Coeff, cap: u128) -> Result<GradedAbGroup> {
    let q = product_quotient_complex(spec, cap)?;
    Ok(match homology(&q, coeff) {
        HomologyResult::Integral(h) => cohomology_from_homology(&h),
        HomologyResult::Betti(p) => {
            let mut g = GradedAbGroup::new();
            for (d, &b) in p.coeffs().iter().enumerate() {
                g.add_free(d as i64, b);
            }
            g
        }
    })
}

/// Degree-by-degree comparison of the ring's groups with the oracle's.
pub fn compare_with_theory(spec: &TupleSpec, coeff: Coeff, cap: u128) -> Result<OracleComparison> {
    if !spec.t().is_finite() {
        return Err(Error::unsupported("no finite cell model for t = inf; the oracle needs finite t"));
    }
    let theory = CohomologyRing::build(spec, coeff)?.graded_groups();
    let oracle = oracle_cohomology(spec, coeff, cap)?;
    let top = spec.dim() as i64 + 1;
    let degrees: Vec<DegreeVerdict> = (0..=top)
        .map(|d| {
            let (a, b) = (theory.get(d).normalized(), oracle.get(d).normalized());
            DegreeVerdict { degree: d, theory: a.to_string(), oracle: b.to_string(), ok: a == b }
        })
        .collect();
    Ok(OracleComparison { coeff, matches: degrees.iter().all(|v| v.ok), degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Torsion;

    fn spec(n: &[u32], t: u64) -> TupleSpec {
        TupleSpec::new(n.to_vec(), Torsion::Finite(t)).unwrap()
    }

    #[test]
    fn sphere_complex_boundaries() {
        let c = sphere_complex(1, 3).unwrap();
        assert_eq!(c.ranks, vec![1, 1, 1, 1]);
        assert_eq!(c.boundaries[1].columns[0][0].1.coeffs(), &[-1, 1, 0]);
        assert_eq!(c.boundaries[2].columns[0][0].1.coeffs(), &[1, 1, 1]);
        assert_eq!(c.boundaries[3].columns[0][0].1.coeffs(), &[-1, 1, 0]);
        assert!(c.is_complex());
        let circle = sphere_complex(0, 5).unwrap();
        assert_eq!(circle.ranks.len(), 2);
        let n = GroupRingElement::norm(5);
        assert!(GroupRingElement::lambda_minus_one(5).mul(&n).is_zero());
    }

    #[test]
    fn product_complex_sizes() {
        let q = product_quotient_complex(&spec(&[0, 0], 2), DEFAULT_CAP).unwrap();
        assert_eq!(q.ranks.iter().sum::<usize>(), 8);
        let q = product_quotient_complex(&spec(&[1], 3), DEFAULT_CAP).unwrap();
        assert_eq!(q.ranks, vec![1, 1, 1, 1]);
        let entries: Vec<i64> = (1..=3)
            .map(|d| q.boundaries[d].columns[0].first().map_or(0, |e| e.1))
            .collect();
        assert_eq!(entries, vec![0, 3, 0]);
        assert!(matches!(
            product_quotient_complex(&spec(&[2, 2, 2], 6), 1000),
            Err(Error::CapExceeded { size: 7776, cap: 1000 })
        ));
    }

    #[test]
    fn homology_examples() {
        let q = product_quotient_complex(&spec(&[1], 3), DEFAULT_CAP).unwrap();
        let HomologyResult::Integral(h) = homology(&q, Coeff::Integers) else { unreachable!() };
        assert_eq!(h.render(3), vec!["Z", "Z/3", "0", "Z"]);

        let q = product_quotient_complex(&spec(&[1, 1], 2), DEFAULT_CAP).unwrap();
        let HomologyResult::Betti(b) = homology(&q, Coeff::Prime(2)) else { unreachable!() };
        assert_eq!(b.coeffs(), &[1, 1, 1, 2, 1, 1, 1]);

        let q = product_quotient_complex(&spec(&[0, 0, 0], 4), DEFAULT_CAP).unwrap();
        let HomologyResult::Integral(h) = homology(&q, Coeff::Integers) else { unreachable!() };
        assert_eq!(h.render(3), vec!["Z", "Z^3", "Z^3", "Z"]);
    }

    #[test]
    fn comparisons() {
        for (n, t, c) in [
            (vec![1], 3, Coeff::Integers),
            (vec![1, 2], 4, Coeff::Prime(2)),
            (vec![2, 2], 3, Coeff::Integers),
            (vec![1, 1], 6, Coeff::Integers),
            (vec![0, 1, 1], 4, Coeff::Prime(3)),
        ] {
            let s = spec(&n, t);
            let cmp = compare_with_theory(&s, c, DEFAULT_CAP).unwrap();
            assert!(cmp.matches, "{s} {c}: {:?}", cmp.degrees);
        }
        let inf = TupleSpec::new(vec![1], Torsion::Infinite).unwrap();
        assert!(matches!(
            compare_with_theory(&inf, Coeff::Integers, DEFAULT_CAP),
            Err(Error::Unsupported(_))
        ));
    }
}
