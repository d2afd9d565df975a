use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    /// `(0, -1)`
    #[serde(rename = "V")]
    Vertical,
    /// `(1, -1)`
    #[serde(rename = "D")]
    Diagonal,
}

/// A nest of `n - 1` non-intersecting lattice paths. Path `k` (1-based)
/// starts at `(k, k)` and takes `k` steps down to the x-axis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawNest", into = "RawNest")]
pub struct NilpNest {
    n: usize,
    paths: Vec<Vec<Step>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNest {
    n: usize,
    paths: Vec<Vec<Step>>,
}

impl NilpNest {
    pub fn new(n: usize, paths: Vec<Vec<Step>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("order must be at least 1".into()));
        }
        if paths.len() != n - 1 {
            return Err(Error::Shape(format!("order {n} needs {} paths, found {}", n - 1, paths.len())));
        }
        for (k, path) in paths.iter().enumerate() {
            if path.len() != k + 1 {
                return Err(Error::Shape(format!("path {} must have {} steps, found {}", k + 1, k + 1, path.len())));
            }
        }
        let nest = Self { n, paths };
        let mut seen: HashMap<(i64, i64), usize> = HashMap::new();
        for k in 1..n {
            for pt in nest.points(k) {
                if let Some(&first) = seen.get(&pt) {
                    return Err(Error::Intersecting { first, second: k, x: pt.0, y: pt.1 });
                }
                seen.insert(pt, k);
            }
        }
        Ok(nest)
    }

    pub(crate) fn from_paths_unchecked(n: usize, paths: Vec<Vec<Step>>) -> Self {
        Self { n, paths }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[Vec<Step>] {
        &self.paths
    }

    /// Path `k`, 1-based.
    pub fn path(&self, k: usize) -> &[Step] {
        &self.paths[k - 1]
    }

    /// Every lattice point visited by path `k`, start included.
    pub fn points(&self, k: usize) -> Vec<(i64, i64)> {
        let (mut x, mut y) = (k as i64, k as i64);
        let mut pts = vec![(x, y)];
        for step in self.path(k) {
            if *step == Step::Diagonal {
                x += 1;
            }
            y -= 1;
            pts.push((x, y));
        }
        pts
    }

    /// The x-coordinates `r_k` where each path meets the axis.
    pub fn endpoints(&self) -> Vec<i64> {
        (1..self.n).map(|k| *self.points(k).last().map(|(x, _)| x).unwrap()).collect()
    }
}

impl TryFrom<RawNest> for NilpNest {
    type Error = Error;

    fn try_from(raw: RawNest) -> Result<Self> {
        Self::new(raw.n, raw.paths)
    }
}

impl From<NilpNest> for RawNest {
    fn from(t: NilpNest) -> Self {
        RawNest { n: t.n, paths: t.paths }
    }
}
