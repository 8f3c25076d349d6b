//! Library surface of the `opsplit` CLI: the algebra file format and the
//! report schema, shared with integration tests.

pub mod file;
pub mod report;
