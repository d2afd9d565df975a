use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::RawRows;
use crate::error::{Error, Result};

/// A plane partition in a `2n × 2n × 2n` box, stored as the completed
/// `2n × 2n` array of stack heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRows<u32>", into = "RawRows<u32>")]
pub struct PlanePartition {
    n: usize,
    rows: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub symmetric: bool,
    pub cyclically_symmetric: bool,
    pub self_complementary: bool,
}

impl SymmetryReport {
    pub fn is_tsscpp(&self) -> bool {
        self.symmetric && self.cyclically_symmetric && self.self_complementary
    }
}

impl PlanePartition {
    /// `n` is half the side of the box.
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let side = 2 * n;
        if n == 0 {
            return Err(Error::Shape("order must be at least 1".into()));
        }
        if rows.len() != side || rows.iter().any(|r| r.len() != side) {
            return Err(Error::Shape(format!("plane partition of order {n} must be {side}×{side}")));
        }
        for i in 0..side {
            for j in 0..side {
                let v = rows[i][j];
                if v as usize > side {
                    return Err(Error::Entry { row: i + 1, pos: j + 1, value: v as i64, allowed: "0..=2n" });
                }
                if (j > 0 && rows[i][j - 1] < v) || (i > 0 && rows[i - 1][j] < v) {
                    return Err(Error::Monotonicity { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Height `t(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - 1]
    }

    /// Whether the unit cube at `(i, j, k)` (all 1-based) belongs to the stack.
    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        k >= 1 && k as u32 <= self.get(i, j)
    }

    /// The lattice points `(i, j, k)` with `1 <= k <= t(i, j)`.
    pub fn points(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let side = 2 * self.n;
        (1..=side).flat_map(move |i| {
            (1..=side).flat_map(move |j| (1..=self.get(i, j) as usize).map(move |k| (i, j, k)))
        })
    }

    /// Whether no `(i, j)` with `n < i <= j < 2n` and `k >= 0` has
    /// `t(i,j) > t(i,j+1) = t(i+k,j+k+1) > t(i+k+1,j+k+1)`.
    pub fn is_permutation_tsscpp(&self) -> bool {
        let (n, side) = (self.n, 2 * self.n);
        for i in n + 1..side {
            for j in i..side {
                let mid = self.get(i, j + 1);
                if self.get(i, j) <= mid {
                    continue;
                }
                for k in 0.. {
                    if i + k + 1 > side || j + k + 1 > side {
                        break;
                    }
                    if self.get(i + k, j + k + 1) == mid && mid > self.get(i + k + 1, j + k + 1) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks each symmetry by brute force over the cubes of the box.
    pub fn symmetry_report(&self) -> SymmetryReport {
        let side = 2 * self.n;
        let mut symmetric = true;
        let mut cyclic = true;
        let mut complementary = true;
        for i in 1..=side {
            for j in 1..=side {
                for k in 1..=side {
                    let inside = self.contains(i, j, k);
                    if inside && !self.contains(j, i, k) {
                        symmetric = false;
                    }
                    if inside && !self.contains(j, k, i) {
                        cyclic = false;
                    }
                    if inside == self.contains(side + 1 - i, side + 1 - j, side + 1 - k) {
                        complementary = false;
                    }
                }
            }
        }
        SymmetryReport { symmetric, cyclically_symmetric: cyclic, self_complementary: complementary }
    }
}

impl TryFrom<RawRows<u32>> for PlanePartition {
    type Error = Error;

    fn try_from(raw: RawRows<u32>) -> Result<Self> {
        Self::new(raw.n, raw.rows)
    }
}

impl From<PlanePartition> for RawRows<u32> {
    fn from(p: PlanePartition) -> Self {
        RawRows { n: p.n, rows: p.rows }
    }
}

/// The corner `t(n+R, n+C)`, `1 <= R <= C <= n`, of a TSSCPP array. Row `R`
/// holds the `n - R + 1` entries for `C = R..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRows<u32>", into = "RawRows<u32>")]
pub struct FundamentalDomain {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl FundamentalDomain {
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("order must be at least 1".into()));
        }
        if rows.len() != n {
            return Err(Error::Shape(format!("domain of order {n} needs {n} rows, found {}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n - r {
                return Err(Error::Shape(format!("domain row {} must have {} entries", r + 1, n - r)));
            }
        }
        let d = Self { n, rows };
        for r in 1..=n {
            for c in r..=n {
                let v = d.get(r, c);
                if (c > r && d.get(r, c - 1) < v) || (r > 1 && d.get(r - 1, c) < v) {
                    return Err(Error::Monotonicity { row: n + r, col: n + c });
                }
            }
        }
        Ok(d)
    }

    pub fn zero(n: usize) -> Self {
        Self { n, rows: (0..n).map(|r| vec![0; n - r]).collect() }
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<Vec<u32>>) -> Self {
        Self { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `t(n+r, n+c)` for `1 <= r <= c <= n`.
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.rows[r - 1][c - r]
    }
}

impl TryFrom<RawRows<u32>> for FundamentalDomain {
    type Error = Error;

    fn try_from(raw: RawRows<u32>) -> Result<Self> {
        Self::new(raw.n, raw.rows)
    }
}

impl From<FundamentalDomain> for RawRows<u32> {
    fn from(d: FundamentalDomain) -> Self {
        RawRows { n: d.n, rows: d.rows }
    }
}

pub fn fundamental_domain(p: &PlanePartition) -> Result<FundamentalDomain> {
    let report = p.symmetry_report();
    if !report.is_tsscpp() {
        let mut missing = Vec::new();
        if !report.symmetric {
            missing.push("not symmetric");
        }
        if !report.cyclically_symmetric {
            missing.push("not cyclically symmetric");
        }
        if !report.self_complementary {
            missing.push("not self-complementary");
        }
        return Err(Error::NotTsscpp(missing.join(", ")));
    }
    let n = p.n;
    let rows = (1..=n).map(|r| (r..=n).map(|c| p.get(n + r, n + c)).collect()).collect();
    Ok(FundamentalDomain { n, rows })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Unknown,
    In,
    Out,
}

struct Closure {
    side: usize,
    cells: Vec<Cell>,
    queue: VecDeque<(usize, usize, usize)>,
}

impl Closure {
    fn idx(&self, (i, j, k): (usize, usize, usize)) -> usize {
        ((i - 1) * self.side + (j - 1)) * self.side + (k - 1)
    }

    fn set(&mut self, pt: (usize, usize, usize), state: Cell) -> Result<()> {
        let at = self.idx(pt);
        match self.cells[at] {
            Cell::Unknown => {
                self.cells[at] = state;
                self.queue.push_back(pt);
                Ok(())
            }
            s if s == state => Ok(()),
            _ => Err(Error::InconsistentDomain(format!(
                "cube ({},{},{}) is forced both inside and outside",
                pt.0, pt.1, pt.2
            ))),
        }
    }

    fn propagate(&mut self) -> Result<()> {
        let side = self.side;
        while let Some(pt) = self.queue.pop_front() {
            let state = self.cells[self.idx(pt)];
            let flipped = if state == Cell::In { Cell::Out } else { Cell::In };
            let (a, b, c) = pt;
            for q in [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                self.set(q, state)?;
                self.set((side + 1 - q.0, side + 1 - q.1, side + 1 - q.2), flipped)?;
            }
            if state == Cell::In {
                for q in [(a - 1, b, c), (a, b - 1, c), (a, b, c - 1)] {
                    if q.0 >= 1 && q.1 >= 1 && q.2 >= 1 {
                        self.set(q, Cell::In)?;
                    }
                }
            } else {
                for q in [(a + 1, b, c), (a, b + 1, c), (a, b, c + 1)] {
                    if q.0 <= side && q.1 <= side && q.2 <= side {
                        self.set(q, Cell::Out)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rebuilds the whole TSSCPP from its fundamental domain by closing the known
/// cubes under coordinate permutations, complementation and the plane
/// partition order.
pub fn expand_fundamental(d: &FundamentalDomain) -> Result<PlanePartition> {
    let n = d.n;
    let side = 2 * n;
    let mut closure = Closure { side, cells: vec![Cell::Unknown; side * side * side], queue: VecDeque::new() };
    for r in 1..=n {
        for c in r..=n {
            let v = d.get(r, c) as usize;
            if v > side {
                return Err(Error::InconsistentDomain(format!("entry t({},{}) = {v} exceeds the box", n + r, n + c)));
            }
            for k in 1..=side {
                let state = if k <= v { Cell::In } else { Cell::Out };
                closure.set((n + r, n + c, k), state)?;
            }
        }
    }
    closure.propagate()?;
    let mut rows = vec![vec![0u32; side]; side];
    for i in 1..=side {
        for j in 1..=side {
            let mut height = 0;
            for k in 1..=side {
                match closure.cells[closure.idx((i, j, k))] {
                    Cell::In => height = k as u32,
                    Cell::Out => {}
                    Cell::Unknown => {
                        return Err(Error::InconsistentDomain(format!("cube ({i},{j},{k}) is undetermined")));
                    }
                }
            }
            rows[i - 1][j - 1] = height;
        }
    }
    let p = PlanePartition::new(n, rows).map_err(|e| Error::InconsistentDomain(e.to_string()))?;
    let back = fundamental_domain(&p).map_err(|e| Error::InconsistentDomain(e.to_string()))?;
    if &back != d {
        return Err(Error::InconsistentDomain("expansion does not reproduce the domain".into()));
    }
    Ok(p)
}
