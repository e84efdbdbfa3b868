//! Exact and asymptotic computations for the trace of plane partitions and
//! for plane overpartitions.

pub mod error;
pub mod exact_qseries;
pub mod polylog_unit;
pub mod asymptotics;
pub mod circle_diag;
pub mod cli;

pub use error::{Error, Result};
