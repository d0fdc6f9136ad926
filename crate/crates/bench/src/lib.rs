//! Declarative benchmark runner for the laminated plate solver: JSON case
//! files, the published tables as builtin cases, result tables and a
//! tolerance comparison.

// `!(x > 0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod builtin;
pub mod report;
pub mod runner;
pub mod spec;

pub use report::{compare, Comparison, Profile};
pub use runner::{run_case, run_cases, CaseResult};
pub use spec::CaseSpec;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("invalid case: {0}")]
    Spec(String),
    #[error("case '{case}' failed")]
    Case {
        case: String,
        #[source]
        source: cuf_iga::Error,
    },
    #[error(transparent)]
    Core(#[from] cuf_iga::Error),
    #[error("unknown case or group '{0}'")]
    UnknownCase(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
