use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPermutation", into = "RawPermutation")]
pub struct Permutation {
    sigma: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawPermutation {
    n: usize,
    sigma: Vec<u32>,
}

impl Permutation {
    pub fn new(sigma: Vec<u32>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &sigma {
            if v == 0 || v as usize > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Self { sigma })
    }

    pub(crate) fn from_vec_unchecked(sigma: Vec<u32>) -> Self {
        Self { sigma }
    }

    pub fn identity(n: usize) -> Self {
        Self { sigma: (1..=n as u32).collect() }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.sigma
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> u32 {
        self.sigma[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.sigma.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Self { sigma: inv }
    }

    /// Digits run together for `n <= 9`, comma-separated above.
    pub fn to_one_line(&self) -> String {
        let parts: Vec<String> = self.sigma.iter().map(|v| v.to_string()).collect();
        if self.n() <= 9 {
            parts.concat()
        } else {
            parts.join(",")
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_one_line())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<u32>> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse().map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}"))))
                .collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}"))))
                .collect()
        };
        let values = values?;
        if !s.contains(',') && values.len() > 9 {
            return Err(Error::InvalidPermutation("use commas for n > 9".into()));
        }
        Self::new(values)
    }
}

impl TryFrom<RawPermutation> for Permutation {
    type Error = Error;

    fn try_from(raw: RawPermutation) -> Result<Self> {
        let p = Self::new(raw.sigma)?;
        if p.n() != raw.n {
            return Err(Error::Shape(format!("declared n = {} but sigma has length {}", raw.n, p.n())));
        }
        Ok(p)
    }
}

impl From<Permutation> for RawPermutation {
    fn from(p: Permutation) -> Self {
        RawPermutation { n: p.n(), sigma: p.sigma }
    }
}
