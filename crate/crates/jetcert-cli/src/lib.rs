//! Library surface of the `jetcert` binary: the emitted document schema
//! and the profile CSV export, shared with the integration tests.

pub mod document;
