//! Formats, batch processing and analysis drivers around `zforce-core`.

pub mod analysis;
pub mod batch;
pub mod dot;
pub mod graph6;
pub mod input;
pub mod json;

pub use zforce_core as core;
