//! Cohomology rings, Steenrod squares, stable splittings and manifold
//! invariants of complex-projective product spaces `CP_n̄` and `t`-torsion
//! lens product spaces `L_n̄(t)`, cross-checked against a brute-force
//! equivariant chain-complex homology computation.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod fgl;
pub mod invariants;
pub mod oracle;
pub mod report;
pub mod splittings;
pub mod steenrod;

pub use algebra::{Coeff, Torsion, TupleSpec};
pub use error::{Error, Result};
