//! Exact multilinear algebra for quaternionic k-vector fields.
//!
//! Everything is computed over ℚ(i); there is no floating point anywhere.

pub mod error;
pub mod eh;
pub mod exact;
pub mod fiber;
pub mod flat;
pub mod quaternion;
pub mod twistor;

pub use error::{Error, Result};
pub use exact::GaussianRational;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
