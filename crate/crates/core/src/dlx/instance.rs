use std::collections::{HashMap, HashSet};

use thiserror::Error;

/// An exact cover problem: named columns and rows that are column subsets.
///
/// Primary columns must be covered exactly once, secondary columns at most
/// once. Row ids are positions in `rows`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactCoverInstance {
    pub primary: Vec<String>,
    pub secondary: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("duplicate column `{0}`")]
    DuplicateColumn(String),
    #[error("row {row} names undeclared column `{column}`")]
    UnknownColumn { row: usize, column: String },
    #[error("row {row} names column `{column}` more than once")]
    RepeatedColumnInRow { row: usize, column: String },
    #[error("row {0} is empty")]
    EmptyRow(usize),
}

impl ExactCoverInstance {
    pub fn new<P, S>(primary: P, secondary: S) -> Self
    where
        P: IntoIterator,
        P::Item: Into<String>,
        S: IntoIterator,
        S::Item: Into<String>,
    {
        ExactCoverInstance {
            primary: primary.into_iter().map(Into::into).collect(),
            secondary: secondary.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// Appends a row and returns its id.
    pub fn add_row<I>(&mut self, columns: I) -> usize
    where
        I: IntoIterator,
        I::Item: Into<String>,
    {
        self.rows.push(columns.into_iter().map(Into::into).collect());
        self.rows.len() - 1
    }

    pub fn column_count(&self) -> usize {
        self.primary.len() + self.secondary.len()
    }

    /// Column names in index order: primary first, then secondary.
    pub fn columns(&self) -> impl Iterator<Item = &str> {
        self.primary.iter().chain(&self.secondary).map(String::as_str)
    }

    /// Validates the instance and resolves every row to column indices.
    pub fn resolve(&self) -> Result<Vec<Vec<usize>>, InstanceError> {
        let mut index = HashMap::with_capacity(self.column_count());
        for (i, name) in self.columns().enumerate() {
            if index.insert(name, i).is_some() {
                return Err(InstanceError::DuplicateColumn(name.to_string()));
            }
        }
        self.rows
            .iter()
            .enumerate()
            .map(|(row, names)| {
                if names.is_empty() {
                    return Err(InstanceError::EmptyRow(row));
                }
                let mut seen = HashSet::with_capacity(names.len());
                names
                    .iter()
                    .map(|name| {
                        let &col = index.get(name.as_str()).ok_or_else(|| {
                            InstanceError::UnknownColumn {
                                row,
                                column: name.clone(),
                            }
                        })?;
                        if !seen.insert(col) {
                            return Err(InstanceError::RepeatedColumnInRow {
                                row,
                                column: name.clone(),
                            });
                        }
                        Ok(col)
                    })
                    .collect()
            })
            .collect()
    }
}

/// A set of rows that forms an exact cover, ids ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Solution {
    pub rows: Vec<usize>,
}

impl Solution {
    pub fn new(mut rows: Vec<usize>) -> Self {
        rows.sort_unstable();
        Solution { rows }
    }

    /// Checks that the rows cover every primary column exactly once and no
    /// secondary column more than once.
    pub fn is_exact_cover_of(&self, instance: &ExactCoverInstance) -> bool {
        let Ok(resolved) = instance.resolve() else {
            return false;
        };
        let mut hits = vec![0usize; instance.column_count()];
        for &r in &self.rows {
            let Some(cols) = resolved.get(r) else {
                return false;
            };
            for &c in cols {
                hits[c] += 1;
            }
        }
        let primary = instance.primary.len();
        hits[..primary].iter().all(|&h| h == 1) && hits[primary..].iter().all(|&h| h <= 1)
    }
}

impl std::fmt::Display for Solution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for r in &self.rows {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{r}")?;
            first = false;
        }
        Ok(())
    }
}
