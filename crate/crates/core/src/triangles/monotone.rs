use serde::{Deserialize, Serialize};

use super::{check_triangular, RawRows};
use crate::error::{Error, Result};

/// A monotone triangle of order `n`: `n` rows, row `i` holding `i` strictly
/// increasing entries, bottom row `1..=n`, and every entry squeezed between
/// its two lower neighbours.
///
/// Rows are stored densely and 1-based in the API: `get(i, p)` is the `p`-th
/// entry of row `i`. The two lower neighbours of `(i, p)` are `(i+1, p)`
/// (southwest) and `(i+1, p+1)` (southeast).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRows<u32>", into = "RawRows<u32>")]
pub struct MonotoneTriangle {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = check_triangular(&rows, false)?;
        let bottom: Vec<u32> = (1..=n as u32).collect();
        if rows[n - 1] != bottom {
            return Err(Error::BottomRow { n, found: rows[n - 1].clone() });
        }
        for i in 0..n - 1 {
            for p in 0..=i {
                let v = rows[i][p];
                if v < 1 || v as usize > n {
                    return Err(Error::Entry { row: i + 1, pos: p + 1, value: v as i64, allowed: "1..=n" });
                }
                if p > 0 && rows[i][p - 1] >= v {
                    return Err(Error::RowStrict { row: i + 1, pos: p + 1 });
                }
                if !(rows[i + 1][p] <= v && v <= rows[i + 1][p + 1]) {
                    return Err(Error::Interlace { row: i + 1, pos: p + 1 });
                }
            }
        }
        Ok(Self { n, rows })
    }

    /// The minimal monotone triangle, whose row `i` is `1..=i`.
    pub fn identity(n: usize) -> Self {
        let rows = (1..=n).map(|i| (1..=i as u32).collect()).collect();
        Self { n, rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        Self { n: rows.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `(i, p)`, both 1-based.
    pub fn get(&self, i: usize, p: usize) -> u32 {
        self.rows[i - 1][p - 1]
    }

    /// All entries above the bottom row, row-major.
    pub fn free_entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows[..self.n.saturating_sub(1)].iter().flatten().copied()
    }
}

impl TryFrom<RawRows<u32>> for MonotoneTriangle {
    type Error = Error;

    fn try_from(raw: RawRows<u32>) -> Result<Self> {
        let t = Self::new(raw.rows)?;
        if t.n != raw.n {
            return Err(Error::Shape(format!("declared n = {} but rows give n = {}", raw.n, t.n)));
        }
        Ok(t)
    }
}

impl From<MonotoneTriangle> for RawRows<u32> {
    fn from(t: MonotoneTriangle) -> Self {
        RawRows { n: t.n, rows: t.rows }
    }
}
