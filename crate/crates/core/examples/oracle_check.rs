//! Cross-checks the cohomology rings against homology computed from an
//! explicit equivariant cell structure on a product of spheres.

use std::fmt::Write;

use lensprod::oracle::{compare_with_theory, DEFAULT_CAP};
use lensprod::{Coeff, Torsion, TupleSpec};

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    for (n, t, coeff) in [
        (vec![1], 3, Coeff::Integers),
        (vec![1, 1], 4, Coeff::Integers),
        (vec![1, 2], 6, Coeff::Prime(3)),
        (vec![0, 1, 1], 2, Coeff::Prime(2)),
    ] {
        let spec = TupleSpec::new(n, Torsion::Finite(t))?;
        let cmp = compare_with_theory(&spec, coeff, DEFAULT_CAP)?;
        writeln!(out, "{spec} over {coeff}: {}", if cmp.matches { "match" } else { "mismatch" }).unwrap();
        for v in cmp.degrees.iter().filter(|v| v.theory != "0") {
            writeln!(out, "  H^{} = {}", v.degree, v.oracle).unwrap();
        }
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
