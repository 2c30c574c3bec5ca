//! Output plumbing for the `orbit-hilbert` binary, exposed so that emitted
//! JSON can be decoded back into the same record type.

pub mod record;

pub use record::{Layout, OutputRecord};
