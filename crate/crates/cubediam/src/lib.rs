//! Move graphs of `n x n x n` cubes: exact breadth-first censuses of the
//! small groups, coupon-collector statistics, and the batched-covering
//! estimate that predicts graph diameters from a handful of exactly counted
//! shallow levels.
//!
//! The crate is organized around the pipeline
//! [`cube`] → [`census`] (exact per-depth counts) and
//! [`orders`] + [`coupon`] → [`estimator`] (predicted per-depth counts and
//! diameters), with [`codec`] providing the perfect-rank index that makes the
//! 2x2x2 censuses a bitset sweep.

pub mod census;
pub mod codec;
pub mod coupon;
pub mod cube;
mod error;
pub mod estimator;
pub mod orders;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
