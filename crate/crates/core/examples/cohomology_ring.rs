//! Presentations, graded groups and cup lengths of a few lens product spaces.

use std::fmt::Write;

use lensprod::cohomology::{cup_length, zero_divisor_cup_length, CohomologyRing};
use lensprod::{Coeff, Torsion, TupleSpec};

fn describe(out: &mut String, n: &[u32], t: Torsion, coeff: Coeff) -> lensprod::Result<()> {
    let spec = TupleSpec::new(n.to_vec(), t)?;
    let ring = CohomologyRing::build(&spec, coeff)?;
    writeln!(out, "H*({spec}; {coeff}), dimension {}", spec.dim()).unwrap();
    for g in ring.generators() {
        writeln!(out, "  {} in degree {}", g.name, g.degree).unwrap();
    }
    for rel in ring.relations() {
        writeln!(out, "  {rel}").unwrap();
    }
    writeln!(out, "  groups: {}", ring.graded_groups().render_over(spec.dim() as i64, coeff).join(", ")).unwrap();
    if coeff.is_field() {
        let cl = cup_length(&ring)?;
        writeln!(out, "  Poincaré polynomial {}", ring.poincare_polynomial()?).unwrap();
        writeln!(out, "  cup length {} via {}", cl.length, cl.witness.join("·")).unwrap();
        writeln!(out, "  zero-divisor cup length {}", zero_divisor_cup_length(&ring)?.length).unwrap();
    }
    Ok(())
}

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    describe(&mut out, &[1, 1], Torsion::Infinite, Coeff::Rationals)?;
    describe(&mut out, &[1, 2], Torsion::Finite(4), Coeff::Integers)?;
    describe(&mut out, &[1, 1], Torsion::Finite(2), Coeff::Prime(2))?;
    describe(&mut out, &[2], Torsion::Finite(3), Coeff::Prime(3))?;
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
