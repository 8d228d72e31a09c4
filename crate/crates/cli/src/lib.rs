//! Problem-file parsing and command dispatch for the `trigsb` binary.
//!
//! A problem file declares a variety (`lie` or `assoc`), a mode (`plain`,
//! `di` or `tri`), an ordered generator list, a relation block, and
//! optionally a multiplication table for the envelope commands. Commands
//! produce deterministic text reports; the membership command distinguishes
//! member / non-member / inconclusive through its exit code.

pub mod commands;
pub mod problem;

pub use commands::{run, Command, Flags, RunOutput};
pub use problem::{parse_problem, ProblemFile, ProblemMode, Relations};
