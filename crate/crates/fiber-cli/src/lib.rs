//! Batch verification of stable fiber data over finite root systems:
//! configuration, suite orchestration, and report rendering for the
//! `fiber-cli` binary. The binary is a thin shell over these modules so
//! that integration tests can drive the exact production types.

pub mod config;
pub mod document;
pub mod emit;
pub mod runner;
