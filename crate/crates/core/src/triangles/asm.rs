use serde::{Deserialize, Serialize};

use super::{Permutation, RawRows};
use crate::error::{Error, Result};

/// An alternating sign matrix: entries in `{-1, 0, 1}`, every row and column
/// sums to one, and the nonzero entries of each line alternate in sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRows<i8>", into = "RawRows<i8>")]
pub struct Asm {
    n: usize,
    rows: Vec<Vec<i8>>,
}

fn check_line(values: impl Iterator<Item = i8>) -> (i64, bool) {
    let mut partial = 0i64;
    let mut alternates = true;
    for v in values {
        partial += v as i64;
        if !(0..=1).contains(&partial) {
            alternates = false;
        }
    }
    (partial, alternates)
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("matrix must have at least one row".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(Error::Entry { row: i + 1, pos: j + 1, value: v as i64, allowed: "{-1,0,1}" });
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            let (sum, alternates) = check_line(row.iter().copied());
            if sum != 1 {
                return Err(Error::RowSum { row: i + 1, sum });
            }
            if !alternates {
                return Err(Error::Alternation { line: format!("row {}", i + 1) });
            }
        }
        for j in 0..n {
            let (sum, alternates) = check_line(rows.iter().map(|r| r[j]));
            if sum != 1 {
                return Err(Error::ColumnSum { col: j + 1, sum });
            }
            if !alternates {
                return Err(Error::Alternation { line: format!("column {}", j + 1) });
            }
        }
        Ok(Self { n, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| (0..n).map(|j| (i == j) as i8).collect()).collect();
        Self { n, rows }
    }

    /// The permutation matrix with a one at `(i, σ(i))`.
    pub fn from_permutation(sigma: &Permutation) -> Self {
        let n = sigma.n();
        let rows = (1..=n)
            .map(|i| (1..=n).map(|j| (sigma.apply(i) as usize == j) as i8).collect())
            .collect();
        Self { n, rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i8>>) -> Self {
        Self { n: rows.len(), rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i8>] {
        &self.rows
    }

    /// Entry `(i, j)`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.rows[i - 1][j - 1]
    }

    pub fn is_permutation_matrix(&self) -> bool {
        self.rows.iter().flatten().all(|&v| v >= 0)
    }

    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation_matrix() {
            return None;
        }
        let sigma = self
            .rows
            .iter()
            .map(|r| r.iter().position(|&v| v == 1).unwrap() as u32 + 1)
            .collect();
        Some(Permutation::from_vec_unchecked(sigma))
    }
}

impl TryFrom<RawRows<i8>> for Asm {
    type Error = Error;

    fn try_from(raw: RawRows<i8>) -> Result<Self> {
        let a = Self::new(raw.rows)?;
        if a.n != raw.n {
            return Err(Error::Shape(format!("declared n = {} but rows give n = {}", raw.n, a.n)));
        }
        Ok(a)
    }
}

impl From<Asm> for RawRows<i8> {
    fn from(a: Asm) -> Self {
        RawRows { n: a.n, rows: a.rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn middle_minus_one() {
        let a = Asm::new(vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]).unwrap();
        assert!(!a.is_permutation_matrix());
        assert!(a.to_permutation().is_none());
    }

    #[test]
    fn identity_is_permutation() {
        for n in 1..6 {
            let id = Asm::identity(n);
            assert_eq!(Asm::new(id.rows().to_vec()).unwrap(), id);
            assert!(id.is_permutation_matrix());
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            Asm::new(vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 1]]).unwrap_err(),
            Error::RowSum { row: 1, sum: 0 }
        );
        assert!(matches!(
            Asm::new(vec![vec![1, 1, -1], vec![0, 0, 1], vec![0, 0, 1]]),
            Err(Error::Alternation { .. })
        ));
        assert!(matches!(
            Asm::new(vec![vec![1, 0], vec![1, 0]]),
            Err(Error::ColumnSum { col: 1, sum: 2 })
        ));
        assert!(matches!(Asm::new(vec![vec![2]]), Err(Error::Entry { .. })));
    }
}
