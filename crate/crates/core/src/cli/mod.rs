//! Library side of the `aztec-count` binary: record formats, the compute and
//! sweep commands, and the verification suites.

mod commands;
pub mod record;
pub mod verify;

pub use commands::{compute, sweep};
pub use record::{Format, Outcome, OutputRecord};
pub use verify::{verify, VerifyConfig, VerifyReport};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAPACITY: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    if err.is_capacity() {
        EXIT_CAPACITY
    } else {
        EXIT_USAGE
    }
}

/// One-line JSON description of an error, for the diagnostic stream.
pub fn error_json(err: &Error) -> String {
    let value = match err {
        Error::Capacity {
            kind,
            requested,
            limit,
        } => serde_json::json!({
            "error": "capacity",
            "kind": kind.to_string(),
            "requested": requested,
            "limit": limit,
            "message": err.to_string(),
        }),
        other => serde_json::json!({
            "error": "invalid",
            "message": other.to_string(),
        }),
    };
    value.to_string()
}
