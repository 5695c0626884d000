//! Dense row-major matrices over an exact ring.

use super::Ring;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> RingMatrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Dimension {
                    expected: ncols,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RingMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Column j as a slice-of-rows view (cloned; used by the permanent
    /// kernel to lay out column-major toggles).
    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
}
