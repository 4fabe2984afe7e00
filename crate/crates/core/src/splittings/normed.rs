//! The normed bilinear-type map `μ₁: ℂ² × ℂ² → ℂ²` and its block powers.

use num_complex::Complex64;

pub type C2 = [Complex64; 2];

/// `μ₁(z₁,z₂,w₁,w₂) = (i z̄₁ w₁ + z₂ w̄₂, −z̄₂ w₁ − i z₁ w̄₂)`.
pub fn mu1(z: C2, w: C2) -> C2 {
    let i = Complex64::i();
    let [z1, z2] = z;
    let [w1, w2] = w;
    [
        i * z1.conj() * w1 + z2 * w2.conj(),
        -z2.conj() * w1 - i * z1 * w2.conj(),
    ]
}

/// `g(z, w) = μ₁(z̄, w)`, invariant under `(z, w) ↦ (λ⁻¹z, λw)`.
pub fn mu1_conjugated(z: C2, w: C2) -> C2 {
    mu1([z[0].conj(), z[1].conj()], w)
}

/// `μ_k(α, β₁, …, β_k) = (μ₁(α, β₁), …, μ₁(α, β_k))`.
pub fn mu_k(alpha: C2, betas: &[C2]) -> Vec<C2> {
    betas.iter().map(|&b| mu1(alpha, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-12;

    fn norm(v: &[Complex64]) -> f64 {
        v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    fn sample(rng: &mut ChaCha8Rng) -> C2 {
        [
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        ]
    }

    fn unit(rng: &mut ChaCha8Rng) -> C2 {
        let v = sample(rng);
        let n = norm(&v);
        [v[0] / n, v[1] / n]
    }

    /// Determinant by partial-pivot elimination.
    fn det4(mut a: [[f64; 4]; 4]) -> f64 {
        let mut det = 1.0;
        for c in 0..4 {
            let p = (c..4).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
            if a[p][c] == 0.0 {
                return 0.0;
            }
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in c + 1..4 {
                let f = a[r][c] / a[c][c];
                let pivot = a[c];
                for (x, y) in a[r][c..].iter_mut().zip(&pivot[c..]) {
                    *x -= f * y;
                }
            }
        }
        det
    }

    #[test]
    fn documented_values() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(mu1([one, zero], [one, zero]), [Complex64::i(), zero]);
        assert_eq!(mu1([zero, one], [zero, one]), [one, zero]);
    }

    #[test]
    fn norm_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let (z, w) = (sample(&mut rng), sample(&mut rng));
            assert!((norm(&mu1(z, w)) - norm(&z) * norm(&w)).abs() < TOL);
        }
    }

    #[test]
    fn unimodular_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let (z, w) = (sample(&mut rng), sample(&mut rng));
            let lambda = Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU));
            let a = mu1([lambda * z[0], lambda * z[1]], [lambda * w[0], lambda * w[1]]);
            let b = mu1(z, w);
            assert!(norm(&[a[0] - b[0], a[1] - b[1]]) < TOL);
            let c = mu1_conjugated([z[0] / lambda, z[1] / lambda], [lambda * w[0], lambda * w[1]]);
            let d = mu1_conjugated(z, w);
            assert!(norm(&[c[0] - d[0], c[1] - d[1]]) < TOL);
        }
    }

    #[test]
    fn invertible_on_unit_sphere() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let basis = |k: usize| {
            let mut w = [Complex64::new(0.0, 0.0); 2];
            if k.is_multiple_of(2) {
                w[k / 2] = Complex64::new(1.0, 0.0);
            } else {
                w[k / 2] = Complex64::i();
            }
            w
        };
        for _ in 0..1000 {
            let z = unit(&mut rng);
            let mut m = [[0.0; 4]; 4];
            for (col, k) in (0..4).enumerate() {
                let v = mu1(z, basis(k));
                let real = [v[0].re, v[0].im, v[1].re, v[1].im];
                for row in 0..4 {
                    m[row][col] = real[row];
                }
            }
            // An isometry for |z| = 1, so |det| = 1.
            assert!((det4(m).abs() - 1.0).abs() < TOL);
        }
    }

    #[test]
    fn block_map_is_blockwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let alpha = sample(&mut rng);
        let betas: Vec<C2> = (0..3).map(|_| sample(&mut rng)).collect();
        let out = mu_k(alpha, &betas);
        let total_in: f64 = betas.iter().map(|b| norm(b).powi(2)).sum::<f64>().sqrt();
        let total_out: f64 = out.iter().map(|b| norm(b).powi(2)).sum::<f64>().sqrt();
        assert!((total_out - norm(&alpha) * total_in).abs() < TOL);
        assert_eq!(out[1], mu1(alpha, betas[1]));
    }
}
