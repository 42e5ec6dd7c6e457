//! Algorithm X over a dancing-links arena.
//!
//! [`DlxMatrix`] holds the four-way linked cells; [`DlxMatrix::cover`] and
//! [`DlxMatrix::uncover`] are the column-level analogue of the list
//! `remove`/`restore` pair. [`solve`] wraps build and search.

mod instance;
mod matrix;
mod search;

pub use instance::{ExactCoverInstance, InstanceError, Solution};
pub use matrix::{AuditError, DlxMatrix};
pub use search::{
    solve, solve_matrix, SearchMode, SearchOutcome, SearchStats, SearchSummary, SolveError,
    SolveReport, SolverConfig,
};
