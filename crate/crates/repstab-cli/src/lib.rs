//! Library half of the command-line driver: the module corpus, the disk
//! cache, report writers, and the verification suites. The binary is a thin
//! argument-parsing shell over these.

pub mod cache;
pub mod corpus;
pub mod report;
pub mod suites;
