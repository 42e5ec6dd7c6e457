use std::fmt;

use thiserror::Error;

use crate::dlx::{ExactCoverInstance, Solution};

/// A 9x9 grid in row-major order; 0 is a blank.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SudokuGrid {
    pub cells: [u8; 81],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    Row(usize),
    Column(usize),
    Box(usize),
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unit::Row(i) => write!(f, "row {}", i + 1),
            Unit::Column(i) => write!(f, "column {}", i + 1),
            Unit::Box(i) => write!(f, "box {}", i + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SudokuError {
    #[error("cell {index} holds {value}, expected 0-9")]
    InvalidDigit { index: usize, value: u8 },
    #[error("digit {digit} repeats in {unit}")]
    Conflict { digit: u8, unit: Unit },
}

/// A `(row, column, digit)` placement, zero-based row and column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Placement {
    pub row: usize,
    pub col: usize,
    pub digit: u8,
}

/// Row id to placement, produced alongside the instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SudokuTable {
    pub placements: Vec<Placement>,
}

fn box_of(row: usize, col: usize) -> usize {
    (row / 3) * 3 + col / 3
}

impl SudokuGrid {
    pub const EMPTY: SudokuGrid = SudokuGrid { cells: [0; 81] };

    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.cells[row * 9 + col]
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&d| d != 0)
    }

    /// Checks digit range, then that no given repeats in a row, column or box.
    pub fn validate(&self) -> Result<(), SudokuError> {
        if let Some((index, &value)) = self.cells.iter().enumerate().find(|(_, &d)| d > 9) {
            return Err(SudokuError::InvalidDigit { index, value });
        }
        let units = (0..9)
            .map(Unit::Row)
            .chain((0..9).map(Unit::Column))
            .chain((0..9).map(Unit::Box));
        for unit in units {
            let mut seen = [false; 10];
            for (r, c) in unit_cells(unit) {
                let d = self.get(r, c);
                if d == 0 {
                    continue;
                }
                if seen[d as usize] {
                    return Err(SudokuError::Conflict { digit: d, unit });
                }
                seen[d as usize] = true;
            }
        }
        Ok(())
    }

    /// Whether every row, column and box holds 1-9 exactly once.
    pub fn is_solved(&self) -> bool {
        self.is_complete() && self.validate().is_ok()
    }

    /// Whether `self` is a completion of `puzzle`.
    pub fn solves(&self, puzzle: &SudokuGrid) -> bool {
        self.is_solved()
            && puzzle
                .cells
                .iter()
                .zip(&self.cells)
                .all(|(&given, &d)| given == 0 || given == d)
    }
}

fn unit_cells(unit: Unit) -> impl Iterator<Item = (usize, usize)> {
    (0..9).map(move |k| match unit {
        Unit::Row(r) => (r, k),
        Unit::Column(c) => (k, c),
        Unit::Box(b) => ((b / 3) * 3 + k / 3, (b % 3) * 3 + k % 3),
    })
}

impl fmt::Display for SudokuGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.cells {
            let ch = if d == 0 { '.' } else { char::from(b'0' + d) };
            write!(f, "{ch}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SudokuGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SudokuGrid({self})")
    }
}

/// Exact cover encoding: 324 primary columns and one row per admissible
/// placement.
///
/// Columns are `p{r}{c}` (cell filled), `r{r}{d}`, `c{c}{d}` and `b{b}{d}`
/// (digit present in row, column, box), all 1-based. A given cell
/// contributes only its own placement; a blank cell contributes every digit
/// not already given in its row, column or box.
pub fn encode_sudoku(grid: &SudokuGrid) -> Result<(ExactCoverInstance, SudokuTable), SudokuError> {
    grid.validate()?;

    let mut primary = Vec::with_capacity(324);
    for prefix in ["p", "r", "c", "b"] {
        for a in 1..=9 {
            for b in 1..=9 {
                primary.push(format!("{prefix}{a}{b}"));
            }
        }
    }
    let mut instance = ExactCoverInstance::new(primary, Vec::<String>::new());

    let mut in_row = [[false; 10]; 9];
    let mut in_col = [[false; 10]; 9];
    let mut in_box = [[false; 10]; 9];
    for r in 0..9 {
        for c in 0..9 {
            let d = grid.get(r, c) as usize;
            if d != 0 {
                in_row[r][d] = true;
                in_col[c][d] = true;
                in_box[box_of(r, c)][d] = true;
            }
        }
    }

    let mut placements = Vec::new();
    for r in 0..9 {
        for c in 0..9 {
            let b = box_of(r, c);
            let given = grid.get(r, c);
            for d in 1..=9u8 {
                let admissible = if given != 0 {
                    given == d
                } else {
                    let k = d as usize;
                    !(in_row[r][k] || in_col[c][k] || in_box[b][k])
                };
                if !admissible {
                    continue;
                }
                instance.add_row([
                    format!("p{}{}", r + 1, c + 1),
                    format!("r{}{}", r + 1, d),
                    format!("c{}{}", c + 1, d),
                    format!("b{}{}", b + 1, d),
                ]);
                placements.push(Placement { row: r, col: c, digit: d });
            }
        }
    }
    Ok((instance, SudokuTable { placements }))
}

/// Fills a grid from the placements named by `solution`.
pub fn decode_sudoku(solution: &Solution, table: &SudokuTable) -> SudokuGrid {
    let mut grid = SudokuGrid::EMPTY;
    for &id in &solution.rows {
        let p = table.placements[id];
        grid.cells[p.row * 9 + p.col] = p.digit;
    }
    grid
}
