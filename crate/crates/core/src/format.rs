//! Text formats for exact cover instances and Sudoku grids.
//!
//! Exact cover files:
//!
//! ```text
//! # comment
//! A B C | S T      <- primary columns, optionally `|` and secondary columns
//! A S              <- one row per non-empty line, ids 0, 1, 2, ...
//! B C
//! ```
//!
//! Sudoku files hold 81 cells from `1-9`, `.` or `0` in row-major order;
//! whitespace is ignored.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::dlx::ExactCoverInstance;
use crate::encode::SudokuGrid;

/// 1-based source position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing column header")]
    MissingHeader,
    #[error("malformed header: {0}")]
    MalformedHeader(&'static str),
    #[error("duplicate column `{0}`")]
    DuplicateColumn(String),
    #[error("unknown column `{0}`")]
    UnknownColumn(String),
    #[error("column `{0}` repeated in row")]
    RepeatedColumn(String),
    #[error("unexpected `|` in row")]
    SeparatorInRow,
    #[error("invalid sudoku character `{0}`")]
    InvalidCell(char),
    #[error("expected 81 cells, found {0}")]
    CellCount(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {kind}")]
pub struct ParseError {
    pub location: Location,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, column: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError {
        location: Location { line, column },
        kind,
    })
}

/// Whitespace-separated tokens with their 1-based character column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut chars_before = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        chars_before += rest[..rest.len() - trimmed.len()].chars().count();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let token = &trimmed[..end];
        let column = chars_before + 1;
        chars_before += token.chars().count();
        rest = &trimmed[end..];
        Some((column, token))
    })
}

pub fn parse_matrix(text: &str) -> Result<ExactCoverInstance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let Some((header_line, header)) = lines.next() else {
        let last = text.lines().count().max(1);
        return err(last, 1, ParseErrorKind::MissingHeader);
    };

    let mut primary = Vec::new();
    let mut secondary = Vec::new();
    let mut seen = HashSet::new();
    let mut after_bar = false;
    for (col, tok) in tokens(header) {
        if tok == "|" {
            if after_bar {
                return err(header_line, col, ParseErrorKind::MalformedHeader("more than one `|`"));
            }
            after_bar = true;
            continue;
        }
        if tok.contains('|') {
            return err(header_line, col, ParseErrorKind::MalformedHeader("`|` must stand alone"));
        }
        if !seen.insert(tok) {
            return err(header_line, col, ParseErrorKind::DuplicateColumn(tok.to_string()));
        }
        if after_bar {
            secondary.push(tok.to_string());
        } else {
            primary.push(tok.to_string());
        }
    }

    let mut instance = ExactCoverInstance::new(primary, secondary);
    for (line_no, line) in lines {
        let mut row = Vec::new();
        let mut in_row = HashSet::new();
        for (col, tok) in tokens(line) {
            if tok == "|" {
                return err(line_no, col, ParseErrorKind::SeparatorInRow);
            }
            if !seen.contains(tok) {
                return err(line_no, col, ParseErrorKind::UnknownColumn(tok.to_string()));
            }
            if !in_row.insert(tok) {
                return err(line_no, col, ParseErrorKind::RepeatedColumn(tok.to_string()));
            }
            row.push(tok.to_string());
        }
        instance.add_row(row);
    }
    Ok(instance)
}

/// Renders an instance in the format read by [`parse_matrix`].
pub fn write_matrix(instance: &ExactCoverInstance) -> String {
    let mut out = instance.primary.join(" ");
    if !instance.secondary.is_empty() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str("| ");
        out.push_str(&instance.secondary.join(" "));
    } else if out.is_empty() {
        out.push('|');
    }
    out.push('\n');
    for row in &instance.rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_sudoku(text: &str) -> Result<SudokuGrid, ParseError> {
    let mut cells = [0u8; 81];
    let mut count = 0;
    let mut at = Location { line: 1, column: 1 };
    for (line_no, line) in text.lines().enumerate() {
        for (col, ch) in line.chars().enumerate() {
            at = Location {
                line: line_no + 1,
                column: col + 1,
            };
            if ch.is_whitespace() {
                continue;
            }
            let digit = match ch {
                '.' | '0' => 0,
                '1'..='9' => ch as u8 - b'0',
                _ => return err(at.line, at.column, ParseErrorKind::InvalidCell(ch)),
            };
            if count == 81 {
                return err(at.line, at.column, ParseErrorKind::CellCount(82));
            }
            cells[count] = digit;
            count += 1;
        }
    }
    if count != 81 {
        return err(at.line, at.column, ParseErrorKind::CellCount(count));
    }
    Ok(SudokuGrid { cells })
}
