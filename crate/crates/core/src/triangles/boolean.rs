use serde::{Deserialize, Serialize};

use super::{check_triangular, RawRows};
use crate::error::{Error, Result};

/// A TSSCPP boolean triangle of order `n`: `n - 1` rows of 0/1 entries, row
/// `i` holding `i` entries.
///
/// Index conventions. The dense position `p` (1-based) of row `i` corresponds
/// to the column label `j = n - i + p - 1` used for the diagonal inequalities;
/// entries sharing a column label form a northwest-to-southeast diagonal.
/// Column `c` starts at row `n - c` and has `c` entries. The defining rule is
///
/// ```text
/// 1 + Σ_{i=j+1..i'} b(i, n-j-1)  >=  Σ_{i=j..i'} b(i, n-j)      for 1 <= j <= i' <= n-1
/// ```
///
/// i.e. along every diagonal, each partial sum exceeds the partial sum of the
/// diagonal to its left by at most one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRows<u8>", into = "RawRows<u8>")]
pub struct BooleanTriangle {
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl BooleanTriangle {
    pub fn new(n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("order must be at least 1".into()));
        }
        let len = check_triangular(&rows, true)?;
        if len != n - 1 {
            return Err(Error::Shape(format!("order {n} needs {} rows, found {len}", n - 1)));
        }
        for (i, row) in rows.iter().enumerate() {
            for (p, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::Entry { row: i + 1, pos: p + 1, value: v as i64, allowed: "{0,1}" });
                }
            }
        }
        let t = Self { n, rows };
        if let Some((diagonal, through_row)) = t.first_partial_sum_violation() {
            return Err(Error::PartialSum { diagonal, through_row });
        }
        Ok(t)
    }

    /// Every entry one: the minimum of the boolean order and the identity
    /// permutation under the permutation bijection.
    pub fn all_ones(n: usize) -> Self {
        Self { n, rows: (1..n).map(|i| vec![1; i]).collect() }
    }

    pub fn all_zeros(n: usize) -> Self {
        Self { n, rows: (1..n).map(|i| vec![0; i]).collect() }
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<Vec<u8>>) -> Self {
        Self { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Dense entry: row `i` in `1..n`, position `p` in `1..=i`.
    pub fn get(&self, i: usize, p: usize) -> u8 {
        self.rows[i - 1][p - 1]
    }

    /// Entry by column label `j` in `n-i..=n-1`.
    pub fn at_column(&self, i: usize, j: usize) -> u8 {
        self.get(i, j + i + 1 - self.n)
    }

    pub fn entries(&self) -> impl Iterator<Item = u8> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// The entries of column `c` (1..n), top to bottom: `b(n-c, 1), b(n-c+1, 2), …`.
    /// These are the steps of the `c`-th lattice path.
    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..c).map(|s| self.get(self.n - c + s, s + 1)).collect()
    }

    /// Rows weakly decrease left to right (the permutation subset).
    pub fn is_permutation(&self) -> bool {
        self.first_increasing_row().is_none()
    }

    pub(crate) fn first_increasing_row(&self) -> Option<usize> {
        self.rows
            .iter()
            .position(|r| r.windows(2).any(|w| w[0] < w[1]))
            .map(|i| i + 1)
    }

    /// First `(j, i')` (scanning `i'` then `j`) at which the diagonal
    /// partial-sum inequality fails.
    fn first_partial_sum_violation(&self) -> Option<(usize, usize)> {
        let n = self.n;
        for through in 1..n {
            for j in 1..=through {
                let right: u32 = (j..=through).map(|i| self.at_column(i, n - j) as u32).sum();
                // column 0 does not exist, so the last diagonal has an empty left sum
                let left: u32 = if n - j > 1 {
                    (j + 1..=through).map(|i| self.at_column(i, n - j - 1) as u32).sum()
                } else {
                    0
                };
                if 1 + left < right {
                    return Some((j, through));
                }
            }
        }
        None
    }
}

impl TryFrom<RawRows<u8>> for BooleanTriangle {
    type Error = Error;

    fn try_from(raw: RawRows<u8>) -> Result<Self> {
        Self::new(raw.n, raw.rows)
    }
}

impl From<BooleanTriangle> for RawRows<u8> {
    fn from(t: BooleanTriangle) -> Self {
        RawRows { n: t.n, rows: t.rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_left_of_one_under_a_one() {
        let err = BooleanTriangle::new(3, vec![vec![1], vec![0, 1]]).unwrap_err();
        assert_eq!(err, Error::PartialSum { diagonal: 1, through_row: 2 });
    }

    #[test]
    fn accepts_non_permutation_of_order_three() {
        let b = BooleanTriangle::new(3, vec![vec![0], vec![0, 1]]).unwrap();
        assert!(!b.is_permutation());
    }

    #[test]
    fn constant_triangles_are_valid() {
        for n in 1..8 {
            let z = BooleanTriangle::all_zeros(n);
            assert_eq!(BooleanTriangle::new(n, z.rows().to_vec()).unwrap(), z);
            let o = BooleanTriangle::all_ones(n);
            assert_eq!(BooleanTriangle::new(n, o.rows().to_vec()).unwrap(), o);
        }
    }

    #[test]
    fn entry_and_shape_errors() {
        assert!(matches!(BooleanTriangle::new(3, vec![vec![2], vec![0, 0]]), Err(Error::Entry { .. })));
        assert!(matches!(BooleanTriangle::new(3, vec![vec![1]]), Err(Error::Shape(_))));
        assert!(BooleanTriangle::new(1, vec![]).is_ok());
    }

    #[test]
    fn columns_are_diagonals() {
        let b = BooleanTriangle::new(3, vec![vec![1], vec![0, 0]]).unwrap();
        assert_eq!(b.column(1), vec![0]);
        assert_eq!(b.column(2), vec![1, 0]);
        assert_eq!(b.at_column(2, 1), 0);
        assert_eq!(b.at_column(1, 2), 1);
    }
}
