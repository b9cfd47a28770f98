//! Document format, reports and command-line driver for `ualg-core`.

pub mod cli;
pub mod document;
pub mod model;
pub mod report;
pub mod word;
