//! The norm-preserving map `μ₁` on `ℂ² × ℂ²` and its equivariant variant.

use std::fmt::Write;

use lensprod::splittings::{mu1, mu1_conjugated, mu_k, C2};
use num_complex::Complex64;

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    let z: C2 = [Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
    let w: C2 = [Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.25)];
    let m = mu1(z, w);
    writeln!(out, "|μ₁(z, w)| = {:.12}, |z||w| = {:.12}", norm(&m), norm(&z) * norm(&w)).unwrap();
    let lambda = Complex64::from_polar(1.0, 0.7);
    let g = mu1_conjugated(z, w);
    let g_moved = mu1_conjugated([z[0] / lambda, z[1] / lambda], [w[0] * lambda, w[1] * lambda]);
    writeln!(out, "g moves by {:.2e} under the circle action", norm(&[g[0] - g_moved[0], g[1] - g_moved[1]]))
        .unwrap();
    let blocks = mu_k(z, &[w, z]);
    let flat: Vec<Complex64> = blocks.iter().flatten().copied().collect();
    writeln!(out, "|μ₂(z; w, z)| = {:.12}", norm(&flat)).unwrap();
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
