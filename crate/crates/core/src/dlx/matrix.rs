use thiserror::Error;

use super::instance::{ExactCoverInstance, InstanceError};

const ROOT: usize = 0;
/// `row` of header cells and `column` of the root.
const NONE: usize = usize::MAX;

/// One cell of the four-way linked arena. Header cells carry `row == NONE`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Cell {
    pub(crate) left: usize,
    pub(crate) right: usize,
    pub(crate) up: usize,
    pub(crate) down: usize,
    pub(crate) column: usize,
    pub(crate) row: usize,
}

/// Sparse 0/1 matrix as a dancing-links arena.
///
/// ```text
///  root <> P0 <> P1 <> ... <> Pk <:     S0   S1 ...   (column headers)
///          ||    ||           ||        ||   ||
///          r0 <> r0 ...                 ..   ..       (row cells)
/// ```
///
/// Cell 0 is the root, cells `1..=columns` are column headers in the
/// instance's column order, everything after that is row cells in row order.
/// Only primary headers sit on the root's left/right ring; secondary headers
/// are self-linked horizontally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DlxMatrix {
    pub(crate) cells: Vec<Cell>,
    sizes: Vec<usize>,
    names: Vec<String>,
    primary: usize,
    rows: usize,
}

/// A structural invariant of the arena that does not hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("cell {cell} has a link out of range")]
    LinkOutOfRange { cell: usize },
    #[error("column {column} has size {recorded} but {reachable} reachable cells")]
    SizeMismatch {
        column: usize,
        recorded: usize,
        reachable: usize,
    },
    #[error("vertical list of column {column} is broken at cell {cell}")]
    BrokenColumn { column: usize, cell: usize },
    #[error("header ring is broken at cell {cell}")]
    BrokenRing { cell: usize },
}

impl DlxMatrix {
    pub fn build(instance: &ExactCoverInstance) -> Result<Self, InstanceError> {
        let rows = instance.resolve()?;
        let columns = instance.column_count();
        let primary = instance.primary.len();
        let total = 1 + columns + rows.iter().map(Vec::len).sum::<usize>();
        let mut cells = Vec::with_capacity(total);

        cells.push(Cell {
            left: if primary == 0 { ROOT } else { primary },
            right: if primary == 0 { ROOT } else { 1 },
            up: ROOT,
            down: ROOT,
            column: NONE,
            row: NONE,
        });
        for col in 0..columns {
            let id = col + 1;
            let (left, right) = if col < primary {
                (col, if col + 1 == primary { ROOT } else { id + 1 })
            } else {
                (id, id)
            };
            cells.push(Cell {
                left,
                right,
                up: id,
                down: id,
                column: col,
                row: NONE,
            });
        }

        let mut sizes = vec![0; columns];
        for (row, cols) in rows.iter().enumerate() {
            let first = cells.len();
            let len = cols.len();
            for (k, &col) in cols.iter().enumerate() {
                let id = first + k;
                let header = col + 1;
                let above = cells[header].up;
                cells.push(Cell {
                    left: if k == 0 { first + len - 1 } else { id - 1 },
                    right: if k + 1 == len { first } else { id + 1 },
                    up: above,
                    down: header,
                    column: col,
                    row,
                });
                cells[above].down = id;
                cells[header].up = id;
                sizes[col] += 1;
            }
        }
        debug_assert_eq!(cells.len(), total);

        Ok(DlxMatrix {
            cells,
            sizes,
            names: instance.columns().map(str::to_string).collect(),
            primary,
            rows: rows.len(),
        })
    }

    pub fn column_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn primary_count(&self) -> usize {
        self.primary
    }

    pub fn row_count(&self) -> usize {
        self.rows
    }

    /// Root, headers and row cells.
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn size(&self, column: usize) -> usize {
        self.sizes[column]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn name(&self, column: usize) -> &str {
        &self.names[column]
    }

    pub fn column_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Uncovered primary columns in ring order.
    pub fn active_columns(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut at = self.cells[ROOT].right;
        while at != ROOT {
            out.push(self.cells[at].column);
            at = self.cells[at].right;
        }
        out
    }

    /// `true` once every primary column is covered.
    pub fn is_solved(&self) -> bool {
        self.cells[ROOT].right == ROOT
    }

    /// Removes `column` from the header ring and hides every row that
    /// intersects it from the other columns.
    pub fn cover(&mut self, column: usize) {
        let header = column + 1;
        let Cell { left, right, .. } = self.cells[header];
        self.cells[right].left = left;
        self.cells[left].right = right;

        let mut i = self.cells[header].down;
        while i != header {
            let mut j = self.cells[i].right;
            while j != i {
                let Cell { up, down, column, .. } = self.cells[j];
                self.cells[down].up = up;
                self.cells[up].down = down;
                self.sizes[column] -= 1;
                j = self.cells[j].right;
            }
            i = self.cells[i].down;
        }
    }

    /// Exact reverse of [`DlxMatrix::cover`]. Must be applied in LIFO order.
    pub fn uncover(&mut self, column: usize) {
        let header = column + 1;
        let mut i = self.cells[header].up;
        while i != header {
            let mut j = self.cells[i].left;
            while j != i {
                let Cell { up, down, column, .. } = self.cells[j];
                self.sizes[column] += 1;
                self.cells[down].up = j;
                self.cells[up].down = j;
                j = self.cells[j].left;
            }
            i = self.cells[i].up;
        }

        let Cell { left, right, .. } = self.cells[header];
        self.cells[right].left = header;
        self.cells[left].right = header;
    }

    /// Uncovered primary column of minimum size, leftmost on ties.
    pub fn choose_column(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut at = self.cells[ROOT].right;
        while at != ROOT {
            let col = self.cells[at].column;
            let size = self.sizes[col];
            if best.is_none_or(|(_, s)| size < s) {
                best = Some((col, size));
            }
            at = self.cells[at].right;
        }
        best.map(|(col, _)| col)
    }

    /// Row id of the row containing `cell`.
    pub(crate) fn row_of(&self, cell: usize) -> usize {
        self.cells[cell].row
    }

    pub(crate) fn cell(&self, cell: usize) -> &Cell {
        &self.cells[cell]
    }

    /// Checks link ranges, every vertical list and size counter, and the
    /// header ring.
    pub fn audit(&self) -> Result<(), AuditError> {
        let len = self.cells.len();
        for (id, cell) in self.cells.iter().enumerate() {
            if [cell.left, cell.right, cell.up, cell.down]
                .iter()
                .any(|&l| l >= len)
            {
                return Err(AuditError::LinkOutOfRange { cell: id });
            }
        }

        for column in 0..self.column_count() {
            let header = column + 1;
            let mut reachable = 0;
            let mut at = header;
            loop {
                let down = self.cells[at].down;
                if self.cells[down].up != at {
                    return Err(AuditError::BrokenColumn { column, cell: at });
                }
                at = down;
                if at == header {
                    break;
                }
                if self.cells[at].column != column || self.cells[at].row == NONE || reachable >= len {
                    return Err(AuditError::BrokenColumn { column, cell: at });
                }
                reachable += 1;
            }
            if reachable != self.sizes[column] {
                return Err(AuditError::SizeMismatch {
                    column,
                    recorded: self.sizes[column],
                    reachable,
                });
            }
        }

        let mut steps = 0;
        let mut at = ROOT;
        loop {
            let right = self.cells[at].right;
            if self.cells[right].left != at {
                return Err(AuditError::BrokenRing { cell: at });
            }
            at = right;
            if at == ROOT {
                break;
            }
            steps += 1;
            if at > self.primary || steps > self.primary {
                return Err(AuditError::BrokenRing { cell: at });
            }
        }
        Ok(())
    }
}
