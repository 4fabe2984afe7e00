//! Steenrod squares and the Stiefel–Whitney class of the tangent bundle.

use std::fmt::Write;

use lensprod::cohomology::CohomologyRing;
use lensprod::steenrod::{is_orientable, is_spin, stiefel_whitney_total, steenrod_table};
use lensprod::{Coeff, Torsion, TupleSpec};

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    for (n, t) in [(vec![1, 2], Torsion::Finite(2)), (vec![2, 2], Torsion::Infinite), (vec![1, 1], Torsion::Finite(4))] {
        let spec = TupleSpec::new(n, t)?;
        let ring = CohomologyRing::build(&spec, Coeff::Prime(2))?;
        writeln!(out, "{spec}").unwrap();
        for d in 1..=spec.dim().min(4) {
            for row in steenrod_table(&ring, d)? {
                let squares: Vec<String> =
                    row.squares.iter().map(|(k, v)| format!("Sq^{k} = {v}")).collect();
                let squares = if squares.is_empty() { "all squares vanish".to_string() } else { squares.join(", ") };
                writeln!(out, "  {}: {squares}", row.monomial).unwrap();
            }
        }
        writeln!(out, "  w = {}", stiefel_whitney_total(&spec)).unwrap();
        writeln!(out, "  orientable {}, spin {}", is_orientable(&spec), is_spin(&spec)).unwrap();
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
