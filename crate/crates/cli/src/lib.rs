//! File formats, report rendering and subcommands of the `domsr` tool.

pub mod format;
pub mod graph;
pub mod report;
pub mod run;

pub use format::{parse_algebra_file, parse_algebras, render_algebra, ParseError, ParseErrorKind};
pub use graph::{parse_graph_file, render_graph};
pub use run::{run, Cli, CliError, Env, Outcome};
