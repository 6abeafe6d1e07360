//! Command-line front end: expression parsing, output formats and the
//! `algdiag` subcommands.

pub mod app;
pub mod expr;
pub mod output;

pub use app::run;
