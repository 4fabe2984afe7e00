//! Sphere factors that split off, and the stable wedge decomposition of a
//! Thom space, checked against cohomology ranks.

use std::fmt::Write;

use lensprod::splittings::{cartesian_split, verify_wedge, wedge_decomposition};
use lensprod::{Coeff, Torsion, TupleSpec};

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    for (n, t) in [(vec![1, 1, 3], Torsion::Finite(2)), (vec![1, 3, 7], Torsion::Infinite), (vec![2, 5], Torsion::Finite(3))] {
        let spec = TupleSpec::new(n, t)?;
        writeln!(out, "{}", cartesian_split(&spec)).unwrap();
    }
    let spec = TupleSpec::new(vec![1, 1], Torsion::Finite(4))?;
    for k in 0..=2 {
        writeln!(out, "k = {k}:").unwrap();
        for w in wedge_decomposition(&spec, k) {
            writeln!(out, "  {w}").unwrap();
        }
        let check = verify_wedge(&spec, k, Coeff::Prime(2))?;
        writeln!(out, "  ranks {} = {} ({})", check.lhs, check.rhs, check.holds).unwrap();
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
