//! Library surface of the CLI: the fixture format and the report schema,
//! shared between the binary and its tests.

pub mod fixture;
pub mod report;
