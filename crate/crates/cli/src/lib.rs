//! Command-line front end: argument parsing, command execution and report
//! rendering.

pub mod args;
pub mod report;
pub mod run;
