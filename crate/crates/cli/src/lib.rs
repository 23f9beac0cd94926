//! Command-line front end: problem files in, text reports out.

pub mod problem;
pub mod report;

pub use problem::{parse_problem, ArrowSpec, Entry, FieldSpec, Problem, ProblemFile, QuiverSpec};
pub use report::{dispatch, Command, ExitStatus, Flags, Outcome};
