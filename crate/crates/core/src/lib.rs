//! Dancing links, twice.
//!
//! [`cdll`] is a fixed-capacity, array-backed circular doubly-linked list
//! whose `remove` leaves the removed node's links in place so that `restore`
//! can undo it in constant time. [`model`] is a plain `Vec`-based reference
//! implementation of the same list, used to check the arena version.
//!
//! [`dlx`] applies the same trick in two dimensions to run Knuth's
//! Algorithm X on exact cover problems, and [`encode`] turns Sudoku and
//! n-queens into such problems.
//!
//! ```
//! use dancing_links::dlx::{solve, ExactCoverInstance, SearchMode, SolverConfig};
//!
//! let mut instance = ExactCoverInstance::new(["A", "B", "C"], Vec::<String>::new());
//! instance.add_row(["A"]);
//! instance.add_row(["B", "C"]);
//! instance.add_row(["A", "B"]);
//! instance.add_row(["C"]);
//!
//! let report = solve(&instance, &SolverConfig::new(SearchMode::All)).unwrap();
//! let rows: Vec<_> = report.solutions.iter().map(|s| s.to_string()).collect();
//! assert_eq!(rows, ["0 1", "2 3"]);
//! ```

pub mod cdll;
pub mod dlx;
pub mod encode;
pub mod format;
pub mod model;

pub use cdll::{AllocTag, Cdll, CdllNode, CAPACITY, MAX_NODE};
pub use dlx::{
    solve, DlxMatrix, ExactCoverInstance, SearchMode, SolveError, SolveReport, Solution,
    SolverConfig,
};
pub use model::ListModel;
