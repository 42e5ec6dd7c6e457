use thiserror::Error;

use crate::dlx::{ExactCoverInstance, Solution};

pub const MAX_QUEENS: usize = 16;

/// Board size for the n-queens encoding, `1..=16`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QueensSpec {
    n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("board size {0} is outside 1..={MAX_QUEENS}")]
pub struct BoardSizeError(pub usize);

impl QueensSpec {
    pub fn new(n: usize) -> Result<Self, BoardSizeError> {
        if (1..=MAX_QUEENS).contains(&n) {
            Ok(QueensSpec { n })
        } else {
            Err(BoardSizeError(n))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Row id to `(rank, file)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueensTable {
    pub n: usize,
    pub squares: Vec<(usize, usize)>,
}

/// Ranks `R{i}` and files `F{j}` are primary; diagonals `A{i+j}` and
/// anti-diagonals `B{i-j+n-1}` are secondary. One row per square, rank major.
pub fn encode_nqueens(spec: QueensSpec) -> (ExactCoverInstance, QueensTable) {
    let n = spec.n;
    let diagonals = 2 * n - 1;
    let primary = (0..n)
        .map(|i| format!("R{i}"))
        .chain((0..n).map(|j| format!("F{j}")));
    let secondary = (0..diagonals)
        .map(|k| format!("A{k}"))
        .chain((0..diagonals).map(|k| format!("B{k}")));
    let mut instance = ExactCoverInstance::new(primary, secondary);
    let mut squares = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            instance.add_row([
                format!("R{i}"),
                format!("F{j}"),
                format!("A{}", i + j),
                format!("B{}", i + n - 1 - j),
            ]);
            squares.push((i, j));
        }
    }
    (instance, QueensTable { n, squares })
}

/// File of the queen on each rank.
pub fn decode_nqueens(solution: &Solution, table: &QueensTable) -> Vec<usize> {
    let mut files = vec![usize::MAX; table.n];
    for &id in &solution.rows {
        let (rank, file) = table.squares[id];
        files[rank] = file;
    }
    files
}

/// Whether `files` places `n` mutually non-attacking queens.
pub fn is_valid_placement(files: &[usize]) -> bool {
    let n = files.len();
    files.iter().all(|&f| f < n)
        && (0..n).all(|a| {
            (a + 1..n).all(|b| {
                files[a] != files[b] && files[a].abs_diff(files[b]) != b - a
            })
        })
}
