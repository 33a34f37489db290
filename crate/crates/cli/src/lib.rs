//! File formats, renderers and the `fillpair` command line for coherent
//! filling pairs.

pub mod cli;
pub mod document;
pub mod dot;
pub mod error;
pub mod json;
pub mod render;

pub use error::CliError;
