//! Parallel sweeps, WZ grids and special-number queries on top of
//! `supercong-core`, plus the table and JSON-lines report formats.

pub mod error;
pub mod report;
pub mod special;
pub mod sweep;
pub mod wz;

pub use error::CliError;
pub use report::{Format, Record};
pub use sweep::{parse_prime_range, run_sweep, CheckSelection, Summary, SweepConfig, SweepOutcome};
pub use wz::{run_wz, WzFamily, WzSummary};
