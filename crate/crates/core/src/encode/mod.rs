//! Reductions from puzzles to exact cover, and back.

mod queens;
mod sudoku;

pub use queens::{
    decode_nqueens, encode_nqueens, is_valid_placement, BoardSizeError, QueensSpec, QueensTable,
    MAX_QUEENS,
};
pub use sudoku::{
    decode_sudoku, encode_sudoku, Placement, SudokuError, SudokuGrid, SudokuTable, Unit,
};
