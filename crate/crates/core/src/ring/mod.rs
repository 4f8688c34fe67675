//! Exact arithmetic in `Z[z]` and its field of fractions.

pub mod bag;
pub mod cyclo;
pub mod ratfunc;
pub mod zpoly;

pub use bag::{factored_expand, FactorBag};
pub use cyclo::CycloFrac;
pub use ratfunc::{rat_arith, rat_normalize, series_prefix, RatFunc, RatOp};
pub use zpoly::{poly_derivative, poly_mul, ZPoly};
