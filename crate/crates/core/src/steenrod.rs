//! Mod-2 Steenrod squares on the rings of [`crate::cohomology`], and the
//! Stiefel–Whitney classes of the tangent bundle.

use crate::algebra::{binom_mod2_expand, Coeff, Torsion, TruncPoly, TupleSpec};
use crate::cohomology::{BasePart, CohomologyRing, Element, Monomial};
use crate::error::{Error, Result};

fn require_f2(ring: &CohomologyRing) -> Result<()> {
    if ring.coeff() == Coeff::Prime(2) {
        Ok(())
    } else {
        Err(Error::unsupported(format!(
            "Steenrod squares need F2 coefficients, got {}",
            ring.coeff()
        )))
    }
}

/// `Sq` of a basis monomial, as a mixed-degree element.
///
/// Generators: `Sq(y) = y + y²`, `Sq(z) = z + z²`, `Sq(x_i) = (1+z)^{n_i+1} x_i`,
/// `Sq(ω) = ω`; products by the Cartan formula.
pub fn total_sq(ring: &CohomologyRing, m: &Monomial) -> Result<Element> {
    require_f2(ring)?;
    ring.check(m)?;
    let z = ring.z();
    let sq_z = ring.add(&z, &ring.mul(&z, &z));
    let mut out = match m.base {
        BasePart::ZPow(a) | BasePart::YZ { y: false, a } => ring.pow(&sq_z, u64::from(a)),
        BasePart::YZ { y: true, a } => {
            let y = ring.y();
            let sq_y = ring.add(&y, &ring.mul(&y, &y));
            ring.mul(&sq_y, &ring.pow(&sq_z, u64::from(a)))
        }
        BasePart::Omega => ring.omega(),
    };
    let one_plus_z = ring.add(&ring.one(), &z);
    for &i in &m.ext {
        let n_i = u64::from(ring.spec().n_at(i));
        let sq_x = ring.mul(&ring.pow(&one_plus_z, n_i + 1), &ring.x(i));
        out = ring.mul(&out, &sq_x);
    }
    Ok(out)
}

fn component(ring: &CohomologyRing, e: &Element, degree: u64) -> Element {
    let mut out = Element::zero();
    for (m, c) in e.terms().filter(|(m, _)| ring.degree(m) == degree) {
        out = ring.add(&out, &ring.scaled(m.clone(), c));
    }
    out
}

/// `Sq^k m`, the degree `deg m + k` part of `Sq(m)`.
pub fn sq_k(ring: &CohomologyRing, m: &Monomial, k: u64) -> Result<Element> {
    let total = total_sq(ring, m)?;
    Ok(component(ring, &total, ring.degree(m) + k))
}

/// `Sq^k` extended linearly to homogeneous or mixed elements.
pub fn sq(ring: &CohomologyRing, k: u64, e: &Element) -> Result<Element> {
    let mut out = Element::zero();
    for (m, c) in e.terms() {
        out = ring.add(&out, &ring.scale(&sq_k(ring, m, k)?, c));
    }
    Ok(out)
}

/// Nonzero squares `Sq^k m`, `k >= 1`, of one basis monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteenrodRow {
    pub monomial: Monomial,
    pub degree: u64,
    pub squares: Vec<(u64, Element)>,
}

/// Square tables, one row per basis monomial of the requested degree.
pub fn steenrod_table(ring: &CohomologyRing, degree: u64) -> Result<Vec<SteenrodRow>> {
    require_f2(ring)?;
    ring.basis_in_degree(degree)
        .into_iter()
        .map(|m| {
            let squares = (1..=degree)
                .map(|k| Ok((k, sq_k(ring, m, k)?)))
                .filter(|r| !matches!(r, Ok((_, e)) if e.is_zero()))
                .collect::<Result<Vec<_>>>()?;
            Ok(SteenrodRow { monomial: m.clone(), degree, squares })
        })
        .collect()
}

/// Whether the mod-2 presentation contains the class `z` (even or infinite `t`, `n₁ >= 1`).
fn has_mod2_z(spec: &TupleSpec) -> bool {
    spec.n1() >= 1 && (spec.t() == Torsion::Infinite || spec.t().is_even())
}

/// Total Stiefel–Whitney class of the tangent bundle, `(1+z)^{|n̄|+r}`
/// modulo `z^{n₁+1}`, as a polynomial in `z` over `F₂`.
pub fn stiefel_whitney_total(spec: &TupleSpec) -> TruncPoly {
    let precision = if has_mod2_z(spec) { spec.n1() as usize } else { 0 };
    binom_mod2_expand(spec.tangent_rank(), precision)
}

/// `w_1`: always zero, since the total class is a polynomial in the degree-2 class `z`.
pub fn w1_vanishes(spec: &TupleSpec) -> bool {
    let _ = spec;
    true
}

/// `w_2 = 0`.
pub fn w2_vanishes(spec: &TupleSpec) -> bool {
    stiefel_whitney_total(spec).coeff_int(1) == 0.into()
}

pub fn is_orientable(spec: &TupleSpec) -> bool {
    let _ = spec;
    true
}

/// Spin iff `n₁ = 0`, `|n̄| + r` is even, or `t` is odd (no mod-2 class in degree 2).
pub fn is_spin(spec: &TupleSpec) -> bool {
    spec.n1() == 0
        || spec.tangent_rank().is_multiple_of(2)
        || matches!(spec.t(), Torsion::Finite(t) if t % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binom_mod2, Torsion};

    fn f2(n: &[u32], t: Torsion) -> CohomologyRing {
        CohomologyRing::build(&TupleSpec::new(n.to_vec(), t).unwrap(), Coeff::Prime(2)).unwrap()
    }

    fn grid_rings() -> Vec<CohomologyRing> {
        let mut out = Vec::new();
        for n in [
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![1, 1],
            vec![1, 2],
            vec![2, 2],
            vec![0, 2, 2],
            vec![1, 1, 2],
            vec![2, 2, 2],
        ] {
            for t in [Torsion::Finite(2), Torsion::Finite(4), Torsion::Infinite, Torsion::Finite(3)] {
                out.push(f2(&n, t));
            }
        }
        out
    }

    #[test]
    fn documented_values() {
        let r = f2(&[2, 2], Torsion::Infinite);
        let x2 = r.x(2);
        let z = r.z();
        let expected = r.add(&r.add(&x2, &r.mul(&z, &x2)), &r.mul(&r.mul(&z, &z), &x2));
        let m = x2.as_monomial().unwrap();
        assert_eq!(total_sq(&r, m).unwrap(), expected);

        let r = f2(&[1, 1], Torsion::Finite(2));
        let y = r.y();
        assert_eq!(sq_k(&r, y.as_monomial().unwrap(), 1).unwrap(), r.z());

        let r = f2(&[1, 1], Torsion::Infinite);
        let x2 = r.x(2);
        assert!(sq_k(&r, x2.as_monomial().unwrap(), 2).unwrap().is_zero());
        assert!(sq_k(&r, x2.as_monomial().unwrap(), 3).unwrap().is_zero());

        let r = CohomologyRing::build(
            &TupleSpec::new(vec![1], Torsion::Finite(2)).unwrap(),
            Coeff::Rationals,
        )
        .unwrap();
        assert!(matches!(total_sq(&r, &r.basis()[0]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn sq1_on_powers_of_y() {
        let r = f2(&[3], Torsion::Finite(2));
        let y = r.y();
        for a in 1..=6u64 {
            let ya = r.pow(&y, a);
            let Some(m) = ya.as_monomial() else { continue };
            let expected = r.scale(&r.pow(&y, a + 1), i64::from(binom_mod2(a, 1)));
            assert_eq!(sq_k(&r, m, 1).unwrap(), expected, "a = {a}");
        }
    }

    #[test]
    fn sq1_of_z_vanishes_for_higher_two_powers() {
        let r = f2(&[2], Torsion::Finite(4));
        assert!(sq_k(&r, r.z().as_monomial().unwrap(), 1).unwrap().is_zero());
        assert_eq!(sq_k(&r, r.y().as_monomial().unwrap(), 1).unwrap(), Element::zero());
    }

    #[test]
    fn axioms_and_cartan() {
        for r in grid_rings() {
            for m in r.basis() {
                let d = r.degree(m);
                assert_eq!(sq_k(&r, m, 0).unwrap(), r.monomial(m.clone()));
                assert_eq!(sq_k(&r, m, d).unwrap(), r.multiply(m, m).unwrap(), "{m}");
                for k in d + 1..=d + 3 {
                    assert!(sq_k(&r, m, k).unwrap().is_zero());
                }
            }
            for a in r.basis() {
                for b in r.basis() {
                    let mut lhs = Element::zero();
                    for (m, c) in r.multiply(a, b).unwrap().terms() {
                        lhs = r.add(&lhs, &r.scale(&total_sq(&r, m).unwrap(), c));
                    }
                    let rhs = r.mul(&total_sq(&r, a).unwrap(), &total_sq(&r, b).unwrap());
                    assert_eq!(lhs, rhs, "{}: {a} {b}", r.spec());
                }
            }
        }
    }

    #[test]
    fn adem_relations() {
        for r in grid_rings() {
            for m in r.basis() {
                let e = r.monomial(m.clone());
                for b in 1..12u64 {
                    for a in 1..(2 * b).min(13 - b) {
                        let lhs = sq(&r, a, &sq(&r, b, &e).unwrap()).unwrap();
                        let mut rhs = Element::zero();
                        for j in 0..=a / 2 {
                            let c = i64::from(crate::algebra::arith::binom_mod2_signed(
                                b as i64 - 1 - j as i64,
                                a as i64 - 2 * j as i64,
                            ));
                            if c == 0 {
                                continue;
                            }
                            let term = sq(&r, a + b - j, &sq(&r, j, &e).unwrap()).unwrap();
                            rhs = r.add(&rhs, &term);
                        }
                        assert_eq!(lhs, rhs, "{}: Sq^{a}Sq^{b} {m}", r.spec());
                    }
                }
            }
        }
    }

    #[test]
    fn stiefel_whitney_examples() {
        let s = |n: &[u32], t| TupleSpec::new(n.to_vec(), t).unwrap();
        let w = stiefel_whitney_total(&s(&[1, 1], Torsion::Infinite));
        assert_eq!(w.to_string(), "1");
        let w = stiefel_whitney_total(&s(&[1, 2], Torsion::Infinite));
        assert_eq!(w.to_string(), "1 + z");
        for t in [Torsion::Finite(2), Torsion::Finite(3), Torsion::Infinite] {
            assert_eq!(stiefel_whitney_total(&s(&[0, 4], t)).to_string(), "1");
        }
        assert!(is_spin(&s(&[1, 1], Torsion::Infinite)));
        assert!(!is_spin(&s(&[1, 2], Torsion::Infinite)));
        assert!(is_spin(&s(&[0, 5], Torsion::Finite(3))));
        assert!(is_spin(&s(&[1, 2], Torsion::Finite(3))));
    }

    #[test]
    fn spin_matches_w2() {
        for n in [vec![0], vec![1], vec![2], vec![1, 2], vec![2, 2], vec![1, 1, 1], vec![2, 2, 2]] {
            for t in [1, 2, 3, 4, 6].map(Torsion::Finite).into_iter().chain([Torsion::Infinite]) {
                let s = TupleSpec::new(n.clone(), t).unwrap();
                assert!(w1_vanishes(&s));
                assert_eq!(is_spin(&s), w2_vanishes(&s), "{s}");
            }
        }
    }
}
