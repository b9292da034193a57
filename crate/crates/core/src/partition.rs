//! Integer partitions (Young diagram shapes).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PermtabError;

/// A partition: weakly decreasing positive parts.  Trailing zero parts are
/// dropped at construction, so the empty partition has no parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PermtabError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) || parts.contains(&0) {
            return Err(PermtabError::MalformedTableau {
                reason: format!("parts {parts:?} are not weakly decreasing positives"),
            });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The part at `row` (0-based), or 0 beyond the last part.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Height of column `col` (0-based): the number of parts `> col`.
    pub fn column_height(&self, col: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > col).count()
    }

    /// All shapes with first part exactly `first` and at most `max_rows`
    /// parts, in lexicographic order on the part sequences.  With
    /// `first = 0` only the empty shape is produced.
    pub fn shapes_with_first_part(first: usize, max_rows: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if first == 0 || max_rows == 0 {
            if first == 0 {
                out.push(Partition::empty());
            }
            return out;
        }
        let mut prefix = vec![first];
        fn extend(prefix: &mut Vec<usize>, max_rows: usize, out: &mut Vec<Partition>) {
            out.push(Partition {
                parts: prefix.clone(),
            });
            if prefix.len() == max_rows {
                return;
            }
            let last = *prefix.last().unwrap();
            for next in 1..=last {
                prefix.push(next);
                extend(prefix, max_rows, out);
                prefix.pop();
            }
        }
        extend(&mut prefix, max_rows, &mut out);
        out
    }

    /// All shapes contained in a `max_rows × max_cols` box (first part
    /// unconstrained), in lexicographic order.
    pub fn shapes_in_box(max_rows: usize, max_cols: usize) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        for first in 1..=max_cols {
            out.extend(Partition::shapes_with_first_part(first, max_rows));
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}
