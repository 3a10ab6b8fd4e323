//! Front end for the `cohom` binary: algebra files, matrix literals, dispatch.

pub mod commands;
pub mod file;
pub mod matrix;

pub use commands::{execute, Cli, Command, Options, Outcome, Usage};
pub use file::{AlgebraFile, FieldTag, FileError};
