//! Exact Poincaré series for the joint invariants and covariants of two
//! binary forms.
//!
//! The series is obtained from the partial-fraction decomposition of a
//! bivariate generating function in `t`, followed by a diagonal extraction
//! in `z`. Every step is exact integer arithmetic.

pub mod batch;
pub mod canonical;
pub mod cli;
pub mod error;
pub mod multisection;
pub mod oracle;
pub mod ring;
pub mod springer;

pub use canonical::{parse_json, present, rat_equal, render, Format, Presentation};
pub use error::{Error, Result};
pub use oracle::{dim_covariants, dim_invariants, omega_count, FormPair};
pub use ring::{FactorBag, RatFunc, ZPoly};
pub use springer::{poincare_series, Kind, PoincareResult};
