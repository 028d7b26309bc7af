//! Command implementations and report serialization behind the `wphodge`
//! binary.

pub mod commands;
pub mod report;
pub mod sample;
