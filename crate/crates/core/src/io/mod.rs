//! Text formats and JSON reports.

mod cnf;
mod format;
mod report;

pub use cnf::{parse_cnf, serialize_cnf};
pub use format::{parse_instance, serialize_instance, GraphInstance, Instance, Parsed, MAX_VERTICES};
pub use report::{emit_report, CertificateFile, SCHEMA_VERSION};
