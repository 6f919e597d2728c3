//! File formats, reports and the command-line interface.

pub mod cli;
mod format;
mod report;

pub use cli::cli_main;
pub use format::{parse_plain, parse_polytope, parse_structured, write_plain, write_structured};
pub use report::{emit_extreme, emit_points, emit_report, emit_verdict, ReportFormat, SumReport, SumStats};
