use super::*;

fn spec(n: &[u32], t: Torsion) -> TupleSpec {
    TupleSpec::new(n.to_vec(), t).unwrap()
}

const INF: Torsion = Torsion::Infinite;

fn fin(t: u64) -> Torsion {
    Torsion::Finite(t)
}

fn grid() -> Vec<TupleSpec> {
    let mut out = Vec::new();
    let ts = [fin(1), fin(2), fin(3), fin(4), fin(6), INF];
    for a in 0..=2u32 {
        for t in ts {
            out.push(spec(&[a], t));
        }
        for b in a..=2 {
            for t in ts {
                out.push(spec(&[a, b], t));
            }
            for c in b..=2 {
                for t in ts {
                    out.push(spec(&[a, b, c], t));
                }
            }
        }
    }
    out
}

#[test]
fn euler_characteristic() {
    assert_eq!(euler_char(&spec(&[2], INF)), 3);
    assert_eq!(euler_char(&spec(&[1, 2], fin(3))), 0);
    assert_eq!(euler_char(&spec(&[4], fin(6))), 0);
    for s in grid() {
        for c in field_modes(&s) {
            assert_eq!(euler_char_from_betti(&s, c).unwrap(), euler_char(&s), "{s} {c}");
        }
        assert_eq!(vector_field_exists(&s), euler_char(&s) == 0, "{s}");
    }
}

#[test]
fn semi_characteristic() {
    assert_eq!(kervaire_semichar(&spec(&[2], fin(2))).unwrap(), SemiChar::Mod2(1));
    assert_eq!(kervaire_semichar(&spec(&[1, 1], INF)).unwrap(), SemiChar::Mod2(0));
    assert_eq!(kervaire_semichar(&spec(&[0, 0, 0], fin(2))).unwrap(), SemiChar::Mod2(0));
    assert_eq!(
        kervaire_semichar(&spec(&[2], INF)).unwrap(),
        SemiChar::Rational { num: 3, den: 2 }
    );
    for s in grid().into_iter().filter(|s| s.dim() % 2 == 1) {
        let SemiChar::Mod2(v) = kervaire_semichar(&s).unwrap() else { panic!("{s}") };
        assert_eq!(Some(v), kervaire_table(&s), "{s}");
    }
}

#[test]
fn sigma_ladder() {
    assert_eq!(sigma(1, 2).unwrap(), 4);
    assert_eq!(sigma(3, 2).unwrap(), 4);
    assert_eq!(sigma(1, 3).unwrap(), 1);
    assert_eq!(sigma(2, 12).unwrap(), 24);
    assert!(sigma(0, 2).is_err());
    assert_eq!(sigma(5, 1).unwrap(), 1);
    // ν₂(t) >= 2 walks past the first two rungs.
    assert_eq!(sigma(2, 4).unwrap(), 8);
    assert_eq!(sigma(3, 4).unwrap(), 8);
    assert_eq!(sigma(4, 9).unwrap(), 9 * 3);
}

#[test]
fn stable_parallelizability() {
    assert_eq!(stably_parallelizable(&spec(&[1, 1], INF)).unwrap(), TriState::True);
    assert_eq!(stably_parallelizable(&spec(&[1, 2], INF)).unwrap(), TriState::False);
    assert_eq!(stably_parallelizable(&spec(&[1, 1], fin(2))).unwrap(), TriState::True);
    assert_eq!(stably_parallelizable(&spec(&[0, 2], fin(5))).unwrap(), TriState::True);
    for s in grid() {
        if stably_parallelizable(&s).unwrap().is_true() {
            let w = steenrod::stiefel_whitney_total(&s);
            assert!((1..=w.precision()).all(|j| w.coeff_int(j) == 0.into()), "{s}: {w}");
        }
    }
}

#[test]
fn genuine_parallelizability() {
    assert_eq!(parallelizable(&spec(&[1, 1], INF)).unwrap(), TriState::True);
    assert_eq!(parallelizable(&spec(&[2], INF)).unwrap(), TriState::False);
    assert_eq!(parallelizable(&spec(&[0, 4], INF)).unwrap(), TriState::False);
    assert_eq!(parallelizable(&spec(&[0, 3], INF)).unwrap(), TriState::True);
    assert_eq!(parallelizable(&spec(&[1], fin(2))).unwrap(), TriState::True);
    assert_eq!(
        parallelizable(&spec(&[2], fin(3))).unwrap(),
        TriState::Unknown(LENS_LITERATURE.to_string())
    );
    for s in grid() {
        if parallelizable(&s).unwrap().is_true() {
            assert!(stably_parallelizable(&s).unwrap().is_true(), "{s}");
            assert!(s.dim() == 0 || euler_char(&s) == 0, "{s}");
        }
    }
}

#[test]
fn vector_fields() {
    assert!(!vector_field_exists(&spec(&[3], INF)));
    assert!(vector_field_exists(&spec(&[3], fin(9))));
    assert!(vector_field_exists(&spec(&[1, 1], INF)));
}

#[test]
fn category_bounds() {
    assert_eq!(cat_bounds(&spec(&[1, 1], INF)).unwrap(), Interval { lo: 2, hi: 3 });
    for n1 in 0..4 {
        assert_eq!(cat_bounds(&spec(&[n1], INF)).unwrap(), Interval { lo: n1.into(), hi: n1.into() });
    }
    assert_eq!(cat_bounds(&spec(&[1, 1], fin(2))).unwrap(), Interval { lo: 4, hi: 7 });
}

#[test]
fn complexity_bounds() {
    let b = tc_bounds(&spec(&[1, 1], INF), None).unwrap();
    assert_eq!(b.base_bound, 5);
    assert_eq!(b.interval, Interval { lo: 3, hi: 5 });
    for n1 in 0..4u64 {
        let b = tc_bounds(&spec(&[n1 as u32], INF), None).unwrap();
        assert_eq!(b.interval, Interval { lo: 2 * n1, hi: 2 * n1 });
    }
    let b = tc_bounds(&spec(&[1, 1, 1], INF), None).unwrap();
    assert_eq!((b.base_bound, b.product_bound), (8, 10));
    let bad = Interval { lo: 3, hi: 2 };
    assert!(tc_bounds(&spec(&[1], fin(2)), Some(bad)).is_err());
    let b = tc_bounds(&spec(&[1, 2], fin(2)), Some(Interval { lo: 3, hi: 3 })).unwrap();
    assert_eq!(b.base_bound, 7);
}

#[test]
fn bounds_are_coherent() {
    for s in grid().into_iter().filter(|s| s.r() <= 2 || s.size_sum() <= 3) {
        let cat = cat_bounds(&s).unwrap();
        let tc = tc_bounds(&s, None).unwrap();
        assert!(cat.lo <= cat.hi && tc.interval.lo <= tc.interval.hi, "{s}");
        if tc.base.hi <= 2 * cat_base(&s) {
            assert!(tc.base_bound + (s.r() as u64 - 1) <= tc.product_bound, "{s}");
        }
    }
}

#[test]
fn span_clauses() {
    let r = span_report(&spec(&[1, 1], fin(2)), None).unwrap();
    assert!(r.span_equals_stablespan);
    assert_eq!((r.stablespan, r.span), (Some(6), Some(6)));

    let r = span_report(&spec(&[1], fin(2)), None).unwrap();
    assert!(r.span_equals_stablespan);
    assert_eq!(r.span, Some(3));

    let r = span_report(&spec(&[2], fin(2)), None).unwrap();
    assert!(!r.span_equals_stablespan);
    assert_eq!(r.stablespan, None);
    let r = span_report(&spec(&[2], fin(2)), Some(4)).unwrap();
    assert_eq!(r.stablespan, Some(3));
    assert!(span_report(&spec(&[2], fin(2)), Some(7)).is_err());

    let r = span_report(&spec(&[2], INF), None).unwrap();
    assert_eq!(r.span, Some(0));
}

#[test]
fn immersion_formula() {
    let i = immersion_dim(&spec(&[1, 1], INF), Some(0)).unwrap();
    assert_eq!((i.lo, i.exact), (6, true));
    let i = immersion_dim(&spec(&[2], INF), Some(2)).unwrap();
    assert_eq!(i.lo, 6);
    let i = immersion_dim(&spec(&[1, 2], fin(3)), None).unwrap();
    assert_eq!((i.lo, i.hi, i.exact), (9, 12, false));
    assert!(immersion_dim(&spec(&[1], INF), Some(4)).is_err());
}

#[test]
fn report_serializes_tri_states_as_strings() {
    let r = invariant_report(&spec(&[2], fin(3)), &InvariantInputs::default()).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["parallelizable"], format!("unknown:{LENS_LITERATURE}"));
    assert_eq!(json["cat"], serde_json::json!([3, 5]));
    let back: InvariantReport = serde_json::from_value(json).unwrap();
    assert_eq!(back, r);
}
