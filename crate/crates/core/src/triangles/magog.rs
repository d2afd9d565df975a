use serde::{Deserialize, Serialize};

use super::{check_triangular, RawRows};
use crate::error::{Error, Result};

/// A magog triangle of order `n`. Same shape and bottom row as a monotone
/// triangle, with entries in `1..=n`, strictly increasing rows, and for every
/// entry above the bottom row
///
/// ```text
/// α(i+1, p) <= α(i, p)        and        α(i, p) + 1 >= α(i+1, p+1)
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRows<u32>", into = "RawRows<u32>")]
pub struct MagogTriangle {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl MagogTriangle {
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
                if rows[i + 1][p] > v || v + 1 < rows[i + 1][p + 1] {
                    return Err(Error::MagogCondition { row: i + 1, pos: p + 1 });
                }
            }
        }
        Ok(Self { n, rows })
    }

    /// The minimal magog triangle (row `i` is `1..=i`).
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

    pub fn get(&self, i: usize, p: usize) -> u32 {
        self.rows[i - 1][p - 1]
    }

    pub fn free_entries(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows[..self.n.saturating_sub(1)].iter().flatten().copied()
    }

    /// Whether this magog triangle lies in the permutation subset, tested
    /// directly on the magog entries: there must be no entry `(i, p)` and
    /// `k >= 0` with
    ///
    /// ```text
    /// α(i,p) >= α(i+1,p+1) = α(i+k+1,p+1) > α(i+k+1,p) + 1
    /// ```
    pub fn is_permutation(&self) -> bool {
        let n = self.n;
        for i in 1..n {
            for p in 1..=i {
                let top = self.get(i, p);
                let se = self.get(i + 1, p + 1);
                if top < se {
                    continue;
                }
                for r in i + 1..=n {
                    if self.get(r, p + 1) == se && se > self.get(r, p) + 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl TryFrom<RawRows<u32>> for MagogTriangle {
    type Error = Error;

    fn try_from(raw: RawRows<u32>) -> Result<Self> {
        let t = Self::new(raw.rows)?;
        if t.n != raw.n {
            return Err(Error::Shape(format!("declared n = {} but rows give n = {}", raw.n, t.n)));
        }
        Ok(t)
    }
}

impl From<MagogTriangle> for RawRows<u32> {
    fn from(t: MagogTriangle) -> Self {
        RawRows { n: t.n, rows: t.rows }
    }
}
