//! Two-rule motion planner on `S^{2n+1} ⊂ ℂ^{n+1}`, equivariant under
//! multiplication by unit scalars.

use num_complex::Complex64;

use crate::error::{Error, Result};

const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlannerRule {
    /// Shortest geodesic; needs `A ≠ -B`.
    Geodesic,
    /// Half great circle in the direction `iA` to `-A`, then the geodesic to `B`; needs `A ≠ B`.
    ViaAntipode,
}

fn dot(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x * y.conj()).re).sum()
}

fn dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

fn geodesic(a: &[Complex64], b: &[Complex64], s: f64) -> Vec<Complex64> {
    let theta = dot(a, b).clamp(-1.0, 1.0).acos();
    if theta < 1e-15 {
        return a.to_vec();
    }
    let (wa, wb) = (((1.0 - s) * theta).sin() / theta.sin(), (s * theta).sin() / theta.sin());
    a.iter().zip(b).map(|(x, y)| x * wa + y * wb).collect()
}

/// Samples the planned path from `a` to `b` at `samples` evenly spaced times.
pub fn motion_plan_sphere(
    a: &[Complex64],
    b: &[Complex64],
    rule: PlannerRule,
    samples: usize,
) -> Result<Vec<Vec<Complex64>>> {
    if a.is_empty() || a.len() != b.len() {
        return Err(Error::invalid("endpoints must be nonempty vectors of equal length"));
    }
    if samples < 2 {
        return Err(Error::invalid("need at least two samples"));
    }
    for v in [a, b] {
        if (dot(v, v).sqrt() - 1.0).abs() > EPS {
            return Err(Error::invalid("endpoints must be unit vectors"));
        }
    }
    let minus_a: Vec<Complex64> = a.iter().map(|x| -x).collect();
    match rule {
        PlannerRule::Geodesic if dist(&minus_a, b) < EPS => {
            return Err(Error::invalid("the geodesic rule needs non-antipodal endpoints"));
        }
        PlannerRule::ViaAntipode if dist(a, b) < EPS => {
            return Err(Error::invalid("the antipode rule needs distinct endpoints"));
        }
        _ => {}
    }
    let i = Complex64::i();
    let path = (0..samples)
        .map(|j| {
            let s = j as f64 / (samples - 1) as f64;
            match rule {
                PlannerRule::Geodesic => geodesic(a, b, s),
                PlannerRule::ViaAntipode if s <= 0.5 => {
                    let phi = 2.0 * std::f64::consts::PI * s;
                    a.iter().map(|x| x * phi.cos() + i * x * phi.sin()).collect()
                }
                PlannerRule::ViaAntipode => geodesic(&minus_a, b, 2.0 * s - 1.0),
            }
        })
        .collect();
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_unit(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
        let v: Vec<Complex64> = (0..len)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let n = dot(&v, &v).sqrt();
        v.into_iter().map(|x| x / n).collect()
    }

    #[test]
    fn constant_path_for_equal_endpoints() {
        let a = vec![Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let path = motion_plan_sphere(&a, &a, PlannerRule::Geodesic, 5).unwrap();
        assert!(path.iter().all(|p| dist(p, &a) < 1e-12));
    }

    #[test]
    fn first_leg_passes_through_i_a() {
        let a = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let b = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let path = motion_plan_sphere(&a, &b, PlannerRule::ViaAntipode, 9).unwrap();
        let ia: Vec<Complex64> = a.iter().map(|x| Complex64::i() * x).collect();
        assert!(dist(&path[2], &ia) < 1e-12);
        assert!(dist(&path[4], &[-a[0], -a[1]]) < 1e-12);
        assert!(dist(&path[8], &b) < 1e-12);
    }

    #[test]
    fn rejects_degenerate_endpoints() {
        let a = vec![Complex64::new(1.0, 0.0)];
        let minus_a = vec![Complex64::new(-1.0, 0.0)];
        assert!(motion_plan_sphere(&a, &minus_a, PlannerRule::Geodesic, 4).is_err());
        assert!(motion_plan_sphere(&a, &a, PlannerRule::ViaAntipode, 4).is_err());
        assert!(motion_plan_sphere(&a, &[Complex64::new(2.0, 0.0)], PlannerRule::Geodesic, 4).is_err());
    }

    #[test]
    fn unit_norm_continuity_and_equivariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for trial in 0..200 {
            let len = 1 + trial % 3;
            let a = random_unit(&mut rng, len);
            let b = random_unit(&mut rng, len);
            for rule in [PlannerRule::Geodesic, PlannerRule::ViaAntipode] {
                let coarse = motion_plan_sphere(&a, &b, rule, 65).unwrap();
                let fine = motion_plan_sphere(&a, &b, rule, 1025).unwrap();
                for p in &fine {
                    assert!((dot(p, p).sqrt() - 1.0).abs() < 1e-12);
                }
                let step = |path: &Vec<Vec<Complex64>>| {
                    path.windows(2).map(|w| dist(&w[0], &w[1])).fold(0.0, f64::max)
                };
                assert!(step(&fine) < step(&coarse));
                assert!(step(&fine) < 0.02);

                let t = 2 + trial as u64 % 5;
                let k = rng.gen_range(0..t);
                let lambda = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / t as f64);
                let la: Vec<Complex64> = a.iter().map(|x| lambda * x).collect();
                let lb: Vec<Complex64> = b.iter().map(|x| lambda * x).collect();
                let moved = motion_plan_sphere(&la, &lb, rule, 65).unwrap();
                for (p, q) in coarse.iter().zip(&moved) {
                    let lp: Vec<Complex64> = p.iter().map(|x| lambda * x).collect();
                    assert!(dist(&lp, q) < 1e-12);
                }
            }
        }
    }
}
