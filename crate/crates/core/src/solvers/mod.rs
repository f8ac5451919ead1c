//! Exact independence and matching numbers, and the bounds report.

mod bounds;
mod independence;
mod matching;

pub use bounds::{bounds_report, BoundsReport, Inequality, Rational, ReportError};
pub use independence::{independence_number, DEFAULT_INDEPENDENCE_CAP};
pub use matching::matching_number;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("instance has {n} vertices, above the solver cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
}
