//! Library surface of the `ihull` command line tool: input parsing, report
//! rendering, the commands, and the verification harness. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod commands;
pub mod error;
pub mod freeprod;
pub mod input;
pub mod report;
pub mod verify;

pub use commands::Options;
pub use error::CliError;
