//! Driver, file formats and command line for the resonant quartet search.
//!
//! [`run`] executes a [`SearchConfig`] on a rayon pool and returns a
//! [`SearchReport`]; [`emit`](emit::emit) renders it as CSV or JSON.

mod error;
pub use error::RunError;

pub mod config;
pub mod driver;
pub mod emit;
pub mod reference;
pub mod report;

pub use config::{Mode, OutputFormat, SearchConfig, TridentRanges};
pub use report::{run, SearchReport};
