//! Exact arithmetic foundations shared by every other module.

pub mod arith;
pub mod graded;
pub mod poly;
pub mod tuple;

pub use arith::{binom_mod2, is_prime, nu_p};
pub use graded::{GradedAbGroup, GroupEntry, LaurentPoly, PoincareSeries};
pub use poly::{binom_mod2_expand, TruncPoly};
pub use tuple::{Coeff, Torsion, TupleSpec};
