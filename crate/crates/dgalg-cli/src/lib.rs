//! Library surface of the command-line crate: the file formats and the
//! report writer, shared by the binary and its tests.

pub mod format;
pub mod report;
