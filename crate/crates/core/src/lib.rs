//! Exact enumeration of Dyck paths with flaws, refined by peaks, valleys,
//! double ascents and double descents.
//!
//! The crate has two sides that are kept independent on purpose:
//!
//! - [`enumerate`] is a brute-force oracle that walks every path;
//! - [`closed_forms`], [`bijections`] and [`series`] compute the same numbers
//!   by formula, by explicit bijection, and by truncated generating function.
//!
//! [`verify`] diffs each prediction against the oracle, and the `dyckflaw`
//! binary exposes all of it from the command line.

pub mod bijections;
pub mod cli;
pub mod closed_forms;
pub mod enumerate;
pub mod path;
pub mod poly;
pub mod series;
pub mod verify;

pub use bijections::{
    cf_decompose_forward, cf_decompose_inverse, cf_step, cf_step_inverse, complement,
    reverse_complement, CfDecomposition,
};
pub use enumerate::{count_table, enumerate_paths, table_polynomial, CountTable, Oracle, StatKind};
pub use path::{ParseError, Path, StatVector, Step};
pub use poly::IntPolynomial;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("flaw count m={m} exceeds semilength n={n}")]
    FlawsExceedSemilength { m: usize, n: usize },
    #[error("unknown statistic {0:?} (expected peak, valley, double_ascent or double_descent)")]
    UnknownStat(String),
    #[error("{what}: argument out of range ({detail})")]
    Domain { what: &'static str, detail: String },
    #[error("path {0} lies weakly below the x-axis: no prime Catalan factor to move")]
    NoPrimeFactor(String),
    #[error("path {0} has no flaws: nothing to move back above the axis")]
    NoFlaws(String),
    #[error("series has constant term {0}, expected 1")]
    NonUnitConstant(String),
    #[error("coefficient {0} is not divisible by 2 while taking a square root")]
    NonIntegralRoot(String),
}
