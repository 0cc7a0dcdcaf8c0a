//! File formats, experiment configuration, and the benchmark harness behind
//! the `bppc` command line tool.

pub mod bench;
pub mod config;
pub mod format;
