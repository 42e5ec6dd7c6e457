use std::num::NonZeroU64;

use thiserror::Error;

use super::instance::{ExactCoverInstance, InstanceError, Solution};
use super::matrix::{AuditError, DlxMatrix};

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub enum SearchMode {
    #[default]
    First,
    All,
    Count,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverConfig {
    pub mode: SearchMode,
    /// Stop after this many solutions.
    pub solution_limit: Option<NonZeroU64>,
    /// Maximum number of row trials.
    pub node_limit: Option<NonZeroU64>,
    /// Audit the arena before every column choice.
    pub audit: bool,
}

impl SolverConfig {
    pub fn new(mode: SearchMode) -> Self {
        SolverConfig {
            mode,
            ..Self::default()
        }
    }

    fn effective_solution_limit(&self) -> Option<u64> {
        match self.mode {
            SearchMode::First => Some(1),
            SearchMode::All | SearchMode::Count => self.solution_limit.map(NonZeroU64::get),
        }
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Row trials: one per row tried as the cover of a chosen column.
    pub steps: u64,
    /// Largest partial solution reached.
    pub max_depth: usize,
    pub solutions: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The whole search tree was explored.
    Complete,
    /// Stopped at the solution limit.
    SolutionLimit,
    /// Stopped at the node limit.
    BudgetExhausted,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    pub stats: SearchStats,
    pub outcome: SearchOutcome,
}

enum Flow {
    Continue,
    Stop(SearchOutcome),
}

struct Search<'a, F> {
    matrix: &'a mut DlxMatrix,
    emit: F,
    partial: Vec<usize>,
    stats: SearchStats,
    solution_limit: Option<u64>,
    node_limit: Option<u64>,
    audit: bool,
}

impl<F: FnMut(&[usize])> Search<'_, F> {
    fn run(&mut self) -> Result<Flow, AuditError> {
        if self.matrix.is_solved() {
            self.stats.solutions += 1;
            (self.emit)(&self.partial);
            if self.solution_limit.is_some_and(|l| self.stats.solutions >= l) {
                return Ok(Flow::Stop(SearchOutcome::SolutionLimit));
            }
            return Ok(Flow::Continue);
        }
        if self.audit {
            self.matrix.audit()?;
        }
        let column = self.matrix.choose_column().expect("ring is not empty");
        self.matrix.cover(column);

        let mut flow = Ok(Flow::Continue);
        let header = column + 1;
        let mut r = self.matrix.cell(header).down;
        while r != header {
            if self.node_limit.is_some_and(|l| self.stats.steps >= l) {
                flow = Ok(Flow::Stop(SearchOutcome::BudgetExhausted));
                break;
            }
            self.stats.steps += 1;
            self.partial.push(self.matrix.row_of(r));
            self.stats.max_depth = self.stats.max_depth.max(self.partial.len());

            let mut j = self.matrix.cell(r).right;
            while j != r {
                let c = self.matrix.cell(j).column;
                self.matrix.cover(c);
                j = self.matrix.cell(j).right;
            }
            let inner = self.run();
            let mut j = self.matrix.cell(r).left;
            while j != r {
                let c = self.matrix.cell(j).column;
                self.matrix.uncover(c);
                j = self.matrix.cell(j).left;
            }
            self.partial.pop();

            match inner {
                Ok(Flow::Continue) => {}
                stop => {
                    flow = stop;
                    break;
                }
            }
            r = self.matrix.cell(r).down;
        }

        self.matrix.uncover(column);
        flow
    }
}

impl DlxMatrix {
    /// Algorithm X over the arena. `emit` receives the row ids of each
    /// solution in the order they were chosen.
    ///
    /// The arena is back in its entry state when this returns, including on
    /// early stops and audit failures.
    pub fn search<F>(&mut self, config: &SolverConfig, emit: F) -> Result<SearchSummary, AuditError>
    where
        F: FnMut(&[usize]),
    {
        let mut search = Search {
            matrix: self,
            emit,
            partial: Vec::new(),
            stats: SearchStats::default(),
            solution_limit: config.effective_solution_limit(),
            node_limit: config.node_limit.map(NonZeroU64::get),
            audit: config.audit,
        };
        let outcome = match search.run()? {
            Flow::Continue => SearchOutcome::Complete,
            Flow::Stop(outcome) => outcome,
        };
        Ok(SearchSummary {
            stats: search.stats,
            outcome,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    /// Solutions in discovery order. Empty in [`SearchMode::Count`].
    pub solutions: Vec<Solution>,
    pub stats: SearchStats,
}

impl SolveReport {
    pub fn count(&self) -> u64 {
        self.stats.solutions
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("node limit reached after {} steps", .0.stats.steps)]
    BudgetExhausted(Box<SolveReport>),
    #[error("arena audit failed: {0}")]
    Audit(#[from] AuditError),
}

/// Builds the arena for `instance` and runs the search.
pub fn solve(instance: &ExactCoverInstance, config: &SolverConfig) -> Result<SolveReport, SolveError> {
    let mut matrix = DlxMatrix::build(instance)?;
    solve_matrix(&mut matrix, config)
}

/// Runs the search on an already built arena and collects a report.
pub fn solve_matrix(matrix: &mut DlxMatrix, config: &SolverConfig) -> Result<SolveReport, SolveError> {
    let keep = config.mode != SearchMode::Count;
    let mut solutions = Vec::new();
    let summary = matrix.search(config, |rows| {
        if keep {
            solutions.push(Solution::new(rows.to_vec()));
        }
    })?;
    let report = SolveReport {
        solutions,
        stats: summary.stats,
    };
    match summary.outcome {
        SearchOutcome::BudgetExhausted => Err(SolveError::BudgetExhausted(Box::new(report))),
        SearchOutcome::Complete | SearchOutcome::SolutionLimit => Ok(report),
    }
}
