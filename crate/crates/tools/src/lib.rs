//! Parallel drivers, report formats and the command layer for `quintic-core`.

pub mod commands;
pub mod parallel;
pub mod report;
pub mod verify;

pub use commands::{Format, Mode};
pub use report::{Check, Status, VerificationReport};
pub use verify::VerifyOptions;
