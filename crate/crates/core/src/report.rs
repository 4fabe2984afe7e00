//! The combined `report` document.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{Coeff, Torsion, TupleSpec};
use crate::cohomology::CohomologyRing;
use crate::error::{Error, Result};
use crate::invariants::{invariant_report, InvariantInputs, InvariantReport};
use crate::oracle;
use crate::splittings::{cartesian_split, wedge_decomposition, FactorStatus, WedgeSummand};
use crate::steenrod;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputSection {
    pub n: Vec<u32>,
    pub t: Torsion,
    pub coeff: Coeff,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub name: String,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSection {
    /// Betti numbers over the chosen field, or free ranks over `ℤ`.
    pub poincare: Vec<u64>,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareEntry {
    pub class: String,
    pub k: u64,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingsSection {
    pub cartesian: Vec<FactorStatus>,
    pub wedge: Vec<WedgeSummand>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSection {
    pub checked: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: InputSection,
    pub dim: u64,
    pub ring: RingSection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steenrod: Option<Vec<SquareEntry>>,
    pub invariants: InvariantReport,
    pub splittings: SplittingsSection,
    pub oracle: OracleSection,
}

/// Assembles every section. Squares are listed only over `F2`; the oracle runs
/// only for finite `t` with a basis under `cap` and is otherwise marked unchecked.
pub fn build_report(
    spec: &TupleSpec,
    coeff: Coeff,
    k: u64,
    inputs: &InvariantInputs,
    cap: u128,
) -> Result<Report> {
    let ring = CohomologyRing::build(spec, coeff)?;
    let poincare = if coeff.is_field() {
        ring.poincare_polynomial()?.coeffs().to_vec()
    } else {
        let g = ring.graded_groups();
        (0..=spec.dim() as i64).map(|d| g.get(d).free).collect()
    };
    let steenrod = if coeff == Coeff::Prime(2) {
        let mut rows = Vec::new();
        for d in 1..=spec.dim() {
            for row in steenrod::steenrod_table(&ring, d)? {
                for (k, v) in row.squares {
                    rows.push(SquareEntry { class: row.monomial.to_string(), k, value: v.to_string() });
                }
            }
        }
        Some(rows)
    } else {
        None
    };
    let oracle = match oracle::compare_with_theory(spec, coeff, cap) {
        Ok(cmp) => OracleSection { checked: true, matches: cmp.matches },
        Err(Error::Unsupported(_) | Error::CapExceeded { .. }) => OracleSection { checked: false, matches: false },
        Err(e) => return Err(e),
    };
    Ok(Report {
        input: InputSection { n: spec.n().to_vec(), t: spec.t(), coeff },
        dim: spec.dim(),
        ring: RingSection {
            poincare,
            generators: ring
                .generators()
                .into_iter()
                .map(|g| GeneratorEntry { name: g.name, degree: g.degree })
                .collect(),
            relations: ring.relations(),
        },
        steenrod,
        invariants: invariant_report(spec, inputs)?,
        splittings: SplittingsSection {
            cartesian: cartesian_split(spec).factors,
            wedge: wedge_decomposition(spec, k),
        },
        oracle,
    })
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let n: Vec<String> = self.input.n.iter().map(u32::to_string).collect();
        writeln!(s, "n = ({}), t = {}, coefficients {}, dim {}", n.join(","), self.input.t, self.input.coeff, self.dim)
            .unwrap();
        writeln!(s, "Poincaré coefficients: {:?}", self.ring.poincare).unwrap();
        let gens: Vec<String> = self.ring.generators.iter().map(|g| format!("{}:{}", g.name, g.degree)).collect();
        writeln!(s, "generators: {}", gens.join(" ")).unwrap();
        for r in &self.ring.relations {
            writeln!(s, "  {r}").unwrap();
        }
        if let Some(sq) = &self.steenrod {
            writeln!(s, "nonzero squares: {}", sq.iter().filter(|e| e.value != "0").count()).unwrap();
        }
        let inv = &self.invariants;
        writeln!(s, "χ = {}, spin {}, orientable {}", inv.chi, inv.spin, inv.orientable).unwrap();
        writeln!(s, "stably parallelizable {}, parallelizable {}", inv.stably_parallelizable, inv.parallelizable)
            .unwrap();
        writeln!(s, "cat ∈ {}, TC ∈ {}", inv.cat, inv.tc).unwrap();
        let split: Vec<String> = self
            .splittings
            .cartesian
            .iter()
            .filter(|f| matches!(f.status, crate::splittings::SplitStatus::Splits { .. }))
            .map(|f| format!("S^{}", f.sphere_dim))
            .collect();
        writeln!(s, "split sphere factors: {}", if split.is_empty() { "none".into() } else { split.join(" × ") })
            .unwrap();
        writeln!(s, "wedge summands: {}", self.splittings.wedge.len()).unwrap();
        let oracle = match self.oracle {
            OracleSection { checked: false, .. } => "not run",
            OracleSection { matches: true, .. } => "match",
            _ => "MISMATCH",
        };
        writeln!(s, "oracle: {oracle}").unwrap();
        s
    }
}
