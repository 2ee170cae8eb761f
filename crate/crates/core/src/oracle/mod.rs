//! Brute-force verifiers that share no elimination code with the engine,
//! and the seeded differential runner that pits the two against each other.

mod differential;
mod integer;
mod minors;

pub use differential::{
    differential_run, differential_run_with, oracle_checks, CheckOutcome, OracleReport, OracleSummary, RunOptions, Verdict,
    SUITE_PARAMS,
};
pub use integer::{integer_homology, IntegerHomology};
pub use minors::{minor_valuation_invariants, minor_valuation_invariants_bounded, DEFAULT_MINOR_BOUND};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix is {rows}x{cols} after dropping zero lines; minor enumeration is limited to {bound}")]
    TooLarge { rows: usize, cols: usize, bound: usize },
}
