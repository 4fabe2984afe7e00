//! `t`-series of the additive and multiplicative formal group laws, which
//! give the top relation in the cohomology of a lens space.

use std::fmt::Write;

use lensprod::fgl::FormalGroupLaw;
use lensprod::Coeff;
use num_rational::BigRational;

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    let one = BigRational::from_integer(1.into());
    for t in [2, 3, 4] {
        let add = FormalGroupLaw::additive(Coeff::Integers).t_series(t, 5)?;
        let mul = FormalGroupLaw::multiplicative(Coeff::Integers, one.clone())?.t_series(t, 5)?;
        let mul2 = FormalGroupLaw::multiplicative(Coeff::Prime(2), one.clone())?.t_series(t, 5)?;
        writeln!(out, "additive:          {add}").unwrap();
        writeln!(out, "multiplicative:    {mul}").unwrap();
        writeln!(out, "multiplicative/F2: {mul2}").unwrap();
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
