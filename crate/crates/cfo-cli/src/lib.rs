//! Run harness behind the `cfo` binary: configuration, subcommand
//! implementations, and the deterministic report writers.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
