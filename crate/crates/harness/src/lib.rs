//! Companion crate for `monideal-core`: text and structured formats,
//! localization scans, the worked-example registry, the seeded fuzzer and
//! the `monideal` command-line tool.

pub mod doc;
mod error;
pub mod fuzz;
pub mod parse;
pub mod registry;
pub mod scan;

pub use error::HarnessError;
