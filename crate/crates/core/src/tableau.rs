//! Permutation tableaux: 0/1 fillings of a partition shape inside a
//! `k × (n−k)` box such that every column contains a 1 and no 0 has both a
//! 1 above it and a 1 to its left.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::PermtabError;
use crate::partition::Partition;

/// A candidate permutation tableau.  Construction checks structural shape
/// only; `validate` checks the two tableau conditions and the full-width
/// top row.  English convention: row 0 on top, column 0 at the left.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermutationTableau {
    k: usize,
    n: usize,
    shape: Partition,
    rows: Vec<Vec<bool>>,
}

/// First violated condition found by `validate`, naming the offending
/// cell or column (0-based).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationFailure {
    #[error("column {col} contains no 1")]
    ColumnWithoutOne { col: usize },
    #[error("cell ({row},{col}) is a 0 with a 1 above it and a 1 to its left")]
    ForbiddenZero { row: usize, col: usize },
    #[error("top row has length {lambda1}, expected n−k = {expected}")]
    ShortTopRow { lambda1: usize, expected: usize },
}

impl PermutationTableau {
    /// Builds a tableau candidate from its rows of bits.  The shape is read
    /// off the row lengths; rows must form a partition fitting the box.
    pub fn new(k: usize, n: usize, rows: Vec<Vec<bool>>) -> Result<Self, PermtabError> {
        if n < k {
            return Err(PermtabError::MalformedTableau {
                reason: format!("n = {n} smaller than k = {k}"),
            });
        }
        if rows.len() > k {
            return Err(PermtabError::MalformedTableau {
                reason: format!("{} rows exceed box height k = {k}", rows.len()),
            });
        }
        let parts: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(parts)?;
        if shape.len() != rows.len() {
            return Err(PermtabError::MalformedTableau {
                reason: "empty row in filling".to_string(),
            });
        }
        if shape.part(0) > n - k {
            return Err(PermtabError::MalformedTableau {
                reason: format!(
                    "top row of length {} exceeds box width n−k = {}",
                    shape.part(0),
                    n - k
                ),
            });
        }
        Ok(PermutationTableau { k, n, shape, rows })
    }

    /// Parses rows given as strings of '0'/'1' characters.
    pub fn from_bit_rows(k: usize, n: usize, rows: &[&str]) -> Result<Self, PermtabError> {
        let rows: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(PermtabError::MalformedTableau {
                            reason: format!("bad filling character {c:?}"),
                        }),
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        PermutationTableau::new(k, n, rows)
    }

    pub fn empty(k: usize) -> Self {
        PermutationTableau {
            k,
            n: k,
            shape: Partition::empty(),
            rows: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of columns of the box, `n − k`.
    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    /// Cell content; `None` when `(row, col)` lies outside the shape.
    pub fn cell(&self, row: usize, col: usize) -> Option<bool> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Checks the column condition, the forbidden-zero pattern, and that
    /// the top row spans the box.  Reports the first violation in
    /// row-major scan order (column condition per column first).
    pub fn validate(&self) -> Result<(), ValidationFailure> {
        let m = self.cols();
        if m > 0 && self.shape.part(0) != m {
            return Err(ValidationFailure::ShortTopRow {
                lambda1: self.shape.part(0),
                expected: m,
            });
        }
        for col in 0..m {
            let height = self.shape.column_height(col);
            if !(0..height).any(|row| self.rows[row][col]) {
                return Err(ValidationFailure::ColumnWithoutOne { col });
            }
        }
        for (row, cells) in self.rows.iter().enumerate() {
            let mut one_to_left = false;
            for (col, &bit) in cells.iter().enumerate() {
                if bit {
                    one_to_left = true;
                } else if one_to_left && (0..row).any(|r| self.rows[r][col]) {
                    return Err(ValidationFailure::ForbiddenZero { row, col });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Labels the `n` steps of the southeast border path from the
    /// northeast corner of the box to the southwest corner.
    pub fn path_labeling(&self) -> PathLabeling {
        let mut steps = Vec::with_capacity(self.n);
        let m = self.cols();
        // Vertical step of row i, then horizontal steps of the columns
        // whose bottom edge lies under row i (rightmost first).
        for row in 0..self.k {
            steps.push(PathStep::Vertical { row });
            let here = self.shape.part(row);
            let below = self.shape.part(row + 1);
            for col in (below..here).rev() {
                steps.push(PathStep::Horizontal { col });
            }
        }
        debug_assert_eq!(steps.len(), self.n);
        debug_assert_eq!(
            steps.iter().filter(|s| matches!(s, PathStep::Horizontal { .. })).count(),
            m
        );
        PathLabeling { steps }
    }

    /// Cell statistics: the count of 2's of the box representation.
    pub fn twos(&self) -> usize {
        self.k * self.cols() - self.shape.size()
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.shape.size() - self.ones()
    }

    /// Deletes the rightmost `i` columns and then every resulting all-zero
    /// row (used by the relative-permutation machinery).  Cutting zero
    /// columns leaves the tableau unchanged.
    pub fn cut_columns(&self, i: usize) -> Result<PermutationTableau, PermtabError> {
        let m = self.cols();
        assert!(i <= m, "cannot cut {i} of {m} columns");
        if i == 0 {
            return Ok(self.clone());
        }
        let keep = m - i;
        let mut rows: Vec<Vec<bool>> = Vec::new();
        let mut dropped = 0;
        for r in &self.rows {
            let truncated: Vec<bool> = r.iter().take(keep).copied().collect();
            if truncated.iter().any(|&b| b) {
                rows.push(truncated);
            } else {
                dropped += 1;
            }
        }
        // Rows of the box below the shape stay (they are all-2 rows, not
        // all-zero rows), so only truncated shape rows can disappear.
        let k = self.k - dropped;
        PermutationTableau::new(k, k + keep, rows)
    }

    /// Deterministic stream of every valid tableau in the `k × (n−k)` box:
    /// shapes in lexicographic order, fillings in row-major binary order.
    pub fn enumerate(k: usize, n: usize) -> TableauEnumerator {
        assert!(k <= n, "need k ≤ n");
        let shapes = if n == k {
            vec![Partition::empty()]
        } else if k == 0 {
            Vec::new()
        } else {
            Partition::shapes_with_first_part(n - k, k)
        };
        TableauEnumerator {
            k,
            n,
            shapes,
            shape_idx: 0,
            pending: Vec::new(),
        }
    }

    /// All valid tableaux with path length `n`, over every box height `k`.
    pub fn enumerate_all_k(n: usize) -> impl Iterator<Item = PermutationTableau> {
        (0..=n).flat_map(move |k| PermutationTableau::enumerate(k, n))
    }

    /// Tableau text format: header `k n`, then one '0'/'1' line per row.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}", self.k, self.n);
        for row in &self.rows {
            out.push('\n');
            for &bit in row {
                out.push(if bit { '1' } else { '0' });
            }
        }
        out
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            k: self.k,
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&b| if b { '1' } else { '0' }).collect())
                .collect(),
        }
    }
}

/// JSON mirror of the text format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub k: usize,
    pub n: usize,
    pub rows: Vec<String>,
}

impl TableauJson {
    pub fn into_tableau(self) -> Result<PermutationTableau, PermtabError> {
        let rows: Vec<&str> = self.rows.iter().map(String::as_str).collect();
        PermutationTableau::from_bit_rows(self.k, self.n, &rows)
    }
}

impl FromStr for PermutationTableau {
    type Err = PermtabError;

    fn from_str(s: &str) -> Result<Self, PermtabError> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(PermtabError::Parse {
            input: s.to_string(),
            what: "tableau header",
        })?;
        let mut it = header.split_whitespace();
        let k: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(PermtabError::Parse {
                input: header.to_string(),
                what: "tableau k",
            })?;
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(PermtabError::Parse {
                input: header.to_string(),
                what: "tableau n",
            })?;
        let rows: Vec<&str> = lines.map(str::trim).collect();
        PermutationTableau::from_bit_rows(k, n, &rows)
    }
}

impl fmt::Display for PermutationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for PermutationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationTableau[{}]", self.to_text().replace('\n', " / "))
    }
}

/// One step of the labeled border path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PathStep {
    Vertical { row: usize },
    Horizontal { col: usize },
}

/// The border path of a tableau, steps indexed by label − 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathLabeling {
    steps: Vec<PathStep>,
}

impl PathLabeling {
    pub fn n(&self) -> usize {
        self.steps.len()
    }

    /// The step carrying the given 1-based label.
    pub fn step(&self, label: usize) -> PathStep {
        self.steps[label - 1]
    }

    pub fn labels(&self) -> impl Iterator<Item = (usize, PathStep)> + '_ {
        self.steps.iter().enumerate().map(|(i, &s)| (i + 1, s))
    }

    pub fn vertical_labels(&self) -> Vec<usize> {
        self.labels()
            .filter_map(|(l, s)| matches!(s, PathStep::Vertical { .. }).then_some(l))
            .collect()
    }

    pub fn horizontal_labels(&self) -> Vec<usize> {
        self.labels()
            .filter_map(|(l, s)| matches!(s, PathStep::Horizontal { .. }).then_some(l))
            .collect()
    }

    /// Label of the vertical step at `row` (0-based).
    pub fn row_label(&self, row: usize) -> usize {
        self.labels()
            .find_map(|(l, s)| (s == PathStep::Vertical { row }).then_some(l))
            .expect("row within box")
    }

    /// Label of the horizontal step under column `col` (0-based).
    pub fn col_label(&self, col: usize) -> usize {
        self.labels()
            .find_map(|(l, s)| (s == PathStep::Horizontal { col }).then_some(l))
            .expect("column within box")
    }
}

/// Streaming enumerator: one shape at a time, valid fillings generated by
/// backtracking over cells in row-major order (so emitted fillings are in
/// row-major binary order).
pub struct TableauEnumerator {
    k: usize,
    n: usize,
    shapes: Vec<Partition>,
    shape_idx: usize,
    pending: Vec<PermutationTableau>,
}

impl Iterator for TableauEnumerator {
    type Item = PermutationTableau;

    fn next(&mut self) -> Option<PermutationTableau> {
        loop {
            if let Some(t) = self.pending.pop() {
                return Some(t);
            }
            if self.shape_idx >= self.shapes.len() {
                return None;
            }
            let shape = self.shapes[self.shape_idx].clone();
            self.shape_idx += 1;
            let mut batch = valid_fillings(self.k, self.n, &shape);
            batch.reverse();
            self.pending = batch;
        }
    }
}

/// All valid fillings of `shape` inside the `k × (n−k)` box, in row-major
/// binary order.  Prunes forbidden zeros as soon as they appear and column
/// violations when a column's last cell is placed.
fn valid_fillings(k: usize, n: usize, shape: &Partition) -> Vec<PermutationTableau> {
    let ell = shape.len();
    let mut rows: Vec<Vec<bool>> = (0..ell).map(|r| vec![false; shape.part(r)]).collect();
    let mut col_has_one = vec![false; shape.part(0)];
    let mut out = Vec::new();

    fn rec(
        k: usize,
        n: usize,
        shape: &Partition,
        rows: &mut Vec<Vec<bool>>,
        col_has_one: &mut Vec<bool>,
        row: usize,
        col: usize,
        row_has_one: bool,
        out: &mut Vec<PermutationTableau>,
    ) {
        if row == shape.len() {
            out.push(
                PermutationTableau::new(k, n, rows.clone()).expect("shape fits box"),
            );
            return;
        }
        if col == shape.part(row) {
            rec(k, n, shape, rows, col_has_one, row + 1, 0, false, out);
            return;
        }
        let col_height = shape.column_height(col);
        let last_of_column = row + 1 == col_height;
        // Try 0 first: permitted unless it completes an all-zero column or
        // forms the forbidden pattern.
        let zero_ok = !(last_of_column && !col_has_one[col])
            && !(row_has_one && (0..row).any(|r| rows[r][col]));
        if zero_ok {
            rows[row][col] = false;
            rec(k, n, shape, rows, col_has_one, row, col + 1, row_has_one, out);
        }
        rows[row][col] = true;
        let prev = col_has_one[col];
        col_has_one[col] = true;
        rec(k, n, shape, rows, col_has_one, row, col + 1, true, out);
        col_has_one[col] = prev;
        rows[row][col] = false;
    }

    rec(k, n, shape, &mut rows, &mut col_has_one, 0, 0, false, &mut out);
    out
}
