//! Input parsing, subcommands and reports for the `toricmot` binary.

pub mod commands;
pub mod error;
pub mod input;
pub mod render;
pub mod report;

pub use commands::run;
pub use error::CliError;
pub use input::{Format, InputSpec, Mode, SeriesKind};
pub use report::{Command, ReportDoc};
