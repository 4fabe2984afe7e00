//! The two-rule motion planner on an odd sphere.

use std::fmt::Write;

use lensprod::invariants::{motion_plan_sphere, PlannerRule};
use num_complex::Complex64;

pub fn run() -> lensprod::Result<String> {
    let mut out = String::new();
    let a = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    let b = vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 1.0)];
    let minus_a: Vec<Complex64> = a.iter().map(|x| -x).collect();
    for (rule, target) in [(PlannerRule::Geodesic, &b), (PlannerRule::ViaAntipode, &minus_a)] {
        let path = motion_plan_sphere(&a, target, rule, 5)?;
        writeln!(out, "{rule:?}:").unwrap();
        for p in path {
            let coords: Vec<String> = p.iter().map(|c| format!("{:+.3}{:+.3}i", c.re, c.im)).collect();
            writeln!(out, "  ({})", coords.join(", ")).unwrap();
        }
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("example inputs are valid"));
}
