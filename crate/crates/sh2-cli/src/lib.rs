//! Samplers, mesh export and verification suites built on `sh2-geom`.

mod error;
pub mod export;
mod grid;
pub mod mesh;
pub mod sampling;
pub mod verify;

pub use error::CliError;
pub use grid::{GridShape, SampleGrid};
