//! Exact q-series engine: truncated series arithmetic, Bailey pairs,
//! multisum enumeration, cyclotomic evaluation and strange identities.

pub mod bailey;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod identities;
pub mod multisum;
pub mod qfunctions;
pub mod rational;
pub mod series;
pub mod strange;

pub use error::{Error, Result};
pub use rational::Rational;
pub use series::{QSeries, XPoly};

/// Engine version recorded in harness reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
