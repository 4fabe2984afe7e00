//! Euler characteristics, parallelizability, category and complexity bounds.

use std::fmt::Write;

use lensprod::invariants::{invariant_report, InvariantInputs, Interval};
use lensprod::{Torsion, TupleSpec};

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    let cases = [
        (vec![1, 1], Torsion::Infinite, InvariantInputs::default()),
        (vec![1, 3], Torsion::Finite(2), InvariantInputs::default()),
        (vec![2], Torsion::Finite(3), InvariantInputs::default()),
        (
            vec![1, 2],
            Torsion::Finite(2),
            InvariantInputs { tc_base: Some(Interval { lo: 3, hi: 3 }), gd: Some(1), span_base: None },
        ),
    ];
    for (n, t, inputs) in cases {
        let spec = TupleSpec::new(n, t)?;
        let r = invariant_report(&spec, &inputs)?;
        writeln!(out, "{spec}: χ = {}, spin {}, vector field {}", r.chi, r.spin, r.vector_field).unwrap();
        writeln!(out, "  stably parallelizable {}, parallelizable {}", r.stably_parallelizable, r.parallelizable)
            .unwrap();
        writeln!(out, "  cat ∈ {}, TC ∈ {}, immersion in R^{}..R^{}", r.cat, r.tc, r.imm.lo, r.imm.hi).unwrap();
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
