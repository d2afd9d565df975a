//! Exhaustive generation of every family by backtracking over row-major
//! cells, pruning as soon as a partial array breaks a defining inequality.

use serde::{Deserialize, Serialize};

use crate::bijections::{fundamental_from_magog, monotone_to_asm};
use crate::error::{Error, Result};
use crate::triangles::*;

/// Environment variable overriding every size cap.
pub const MAX_N_ENV: &str = "TSSCPP_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyId {
    Asm,
    MonotoneTriangle,
    MagogTriangle,
    BooleanTriangle,
    NilpNest,
    Tsscpp,
    Permutation,
    PermutationBoolean,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::Asm,
        FamilyId::MonotoneTriangle,
        FamilyId::MagogTriangle,
        FamilyId::BooleanTriangle,
        FamilyId::NilpNest,
        FamilyId::Tsscpp,
        FamilyId::Permutation,
        FamilyId::PermutationBoolean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Asm => "asm",
            FamilyId::MonotoneTriangle => "monotone",
            FamilyId::MagogTriangle => "magog",
            FamilyId::BooleanTriangle => "boolean",
            FamilyId::NilpNest => "nilp",
            FamilyId::Tsscpp => "tsscpp",
            FamilyId::Permutation => "permutation",
            FamilyId::PermutationBoolean => "permutation_boolean",
        }
    }

    pub fn default_cap(self) -> usize {
        match self {
            FamilyId::Permutation | FamilyId::PermutationBoolean => 8,
            _ => 7,
        }
    }

    /// The default cap, or `TSSCPP_MAX_N` when it is set to a number.
    pub fn cap(self) -> usize {
        std::env::var(MAX_N_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or_else(|| self.default_cap())
    }

    pub fn check(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Unsupported("n must be at least 1".into()));
        }
        let cap = self.cap();
        if n > cap {
            return Err(Error::CapExceeded { what: self.name().into(), n, cap });
        }
        Ok(())
    }
}

impl std::str::FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "asm" => FamilyId::Asm,
            "monotone" | "monotone_triangle" => FamilyId::MonotoneTriangle,
            "magog" | "magog_triangle" => FamilyId::MagogTriangle,
            "boolean" | "boolean_triangle" => FamilyId::BooleanTriangle,
            "nilp" => FamilyId::NilpNest,
            "tsscpp" | "plane_partition" => FamilyId::Tsscpp,
            "permutation" | "perm" => FamilyId::Permutation,
            "permutation_boolean" | "perm_boolean" => FamilyId::PermutationBoolean,
            _ => return Err(Error::Unsupported(format!("unknown family {s:?}"))),
        })
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Constraints for filling an array one cell at a time.
trait Rule {
    fn cells(&self) -> usize;
    /// Inclusive candidate range for the next cell given the filled prefix.
    fn range(&self, prefix: &[u32]) -> (u32, u32);
    /// Whether the prefix, whose last cell was just placed, can still be completed.
    fn admissible(&self, _prefix: &[u32]) -> bool {
        true
    }
}

/// Depth-first search yielding every complete assignment in lexicographic order.
struct Search<R> {
    rule: R,
    vals: Vec<u32>,
    his: Vec<u32>,
    started: bool,
    done: bool,
}

impl<R: Rule> Search<R> {
    fn new(rule: R) -> Self {
        Self { rule, vals: Vec::new(), his: Vec::new(), started: false, done: false }
    }

    fn advance(&mut self, mut bump: bool) -> bool {
        let cells = self.rule.cells();
        loop {
            if bump {
                loop {
                    let Some(last) = self.vals.last_mut() else { return false };
                    if *last < *self.his.last().unwrap() {
                        *last += 1;
                        if self.rule.admissible(&self.vals) {
                            break;
                        }
                    } else {
                        self.vals.pop();
                        self.his.pop();
                    }
                }
                bump = false;
            }
            if self.vals.len() == cells {
                return true;
            }
            let (lo, hi) = self.rule.range(&self.vals);
            if lo > hi {
                bump = true;
                continue;
            }
            self.vals.push(lo);
            self.his.push(hi);
            if !self.rule.admissible(&self.vals) {
                bump = true;
            }
        }
    }
}

impl<R: Rule> Iterator for Search<R> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let found = self.advance(self.started);
        self.started = true;
        if found {
            Some(self.vals.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// Row `i` (1-based) of a triangle starts at flat index `i(i-1)/2`.
fn row_start(i: usize) -> usize {
    i * (i - 1) / 2
}

/// Row and position of flat cell `idx`.
fn locate(idx: usize) -> (usize, usize) {
    let mut i = 1;
    while row_start(i + 1) <= idx {
        i += 1;
    }
    (i, idx - row_start(i) + 1)
}

fn split_rows<T: Copy>(flat: &[T], rows: usize) -> Vec<Vec<T>> {
    (1..=rows).map(|i| flat[row_start(i)..row_start(i) + i].to_vec()).collect()
}

struct MonotoneRule {
    n: usize,
}

impl Rule for MonotoneRule {
    fn cells(&self) -> usize {
        row_start(self.n)
    }

    fn range(&self, prefix: &[u32]) -> (u32, u32) {
        let (i, p) = locate(prefix.len());
        let mut lo = p as u32;
        let mut hi = (self.n - i + p) as u32;
        if i > 1 {
            let above = row_start(i - 1);
            if p < i {
                hi = hi.min(prefix[above + p - 1]);
            }
            if p > 1 {
                lo = lo.max(prefix[above + p - 2]);
            }
        }
        if p > 1 {
            lo = lo.max(prefix[prefix.len() - 1] + 1);
        }
        (lo, hi)
    }
}

struct MagogRule {
    n: usize,
}

impl Rule for MagogRule {
    fn cells(&self) -> usize {
        row_start(self.n)
    }

    fn range(&self, prefix: &[u32]) -> (u32, u32) {
        let (i, p) = locate(prefix.len());
        let mut lo = p as u32;
        let mut hi = (self.n - i + p) as u32;
        if i > 1 {
            let above = row_start(i - 1);
            if p < i {
                hi = hi.min(prefix[above + p - 1]);
            }
            if p > 1 {
                hi = hi.min(prefix[above + p - 2] + 1);
            }
        }
        if p > 1 {
            lo = lo.max(prefix[prefix.len() - 1] + 1);
        }
        (lo, hi)
    }
}

struct BooleanRule {
    n: usize,
    weakly_decreasing: bool,
}

impl Rule for BooleanRule {
    fn cells(&self) -> usize {
        row_start(self.n)
    }

    fn range(&self, prefix: &[u32]) -> (u32, u32) {
        let (_, p) = locate(prefix.len());
        if self.weakly_decreasing && p > 1 {
            (0, prefix[prefix.len() - 1])
        } else {
            (0, 1)
        }
    }

    fn admissible(&self, prefix: &[u32]) -> bool {
        let idx = prefix.len() - 1;
        if prefix[idx] == 0 {
            return true;
        }
        let (i, p) = locate(idx);
        let c = self.n - i + p - 1;
        // column c contains (r, p - i + r) for r <= i
        let column_sum = |c: usize| -> u32 {
            if c == 0 {
                return 0;
            }
            let first = self.n - c;
            (first..=i)
                .map(|r| r + c + 1 - self.n)
                .zip(first..=i)
                .map(|(q, r)| prefix[row_start(r) + q - 1])
                .sum()
        };
        1 + column_sum(c - 1) >= column_sum(c)
    }
}

/// Flat layout: path `k` occupies cells `row_start(k)..row_start(k) + k`,
/// with `0` a vertical and `1` a diagonal step.
struct NilpRule {
    n: usize,
}

impl Rule for NilpRule {
    fn cells(&self) -> usize {
        row_start(self.n)
    }

    fn range(&self, _prefix: &[u32]) -> (u32, u32) {
        (0, 1)
    }

    fn admissible(&self, prefix: &[u32]) -> bool {
        let idx = prefix.len() - 1;
        let (k, s) = locate(idx);
        let start = row_start(k);
        let x = k as u32 + prefix[start..=idx].iter().sum::<u32>();
        let y = k - s;
        // earlier paths are complete; path j sits at height y after j - y steps
        (y.max(1)..k).all(|j| {
            let steps = j - y;
            j as u32 + prefix[row_start(j)..row_start(j) + steps].iter().sum::<u32>() != x
        })
    }
}

pub fn monotone_triangles(n: usize) -> impl Iterator<Item = MonotoneTriangle> {
    Search::new(MonotoneRule { n }).map(move |flat| {
        let mut rows = split_rows(&flat, n - 1);
        rows.push((1..=n as u32).collect());
        MonotoneTriangle::from_rows_unchecked(rows)
    })
}

pub fn asms(n: usize) -> impl Iterator<Item = Asm> {
    monotone_triangles(n).map(|m| monotone_to_asm(&m))
}

pub fn magog_triangles(n: usize) -> impl Iterator<Item = MagogTriangle> {
    Search::new(MagogRule { n }).map(move |flat| {
        let mut rows = split_rows(&flat, n - 1);
        rows.push((1..=n as u32).collect());
        MagogTriangle::from_rows_unchecked(rows)
    })
}

fn to_bits(flat: &[u32], n: usize) -> Vec<Vec<u8>> {
    split_rows(flat, n - 1).into_iter().map(|r| r.into_iter().map(|v| v as u8).collect()).collect()
}

pub fn boolean_triangles(n: usize) -> impl Iterator<Item = BooleanTriangle> {
    Search::new(BooleanRule { n, weakly_decreasing: false })
        .map(move |flat| BooleanTriangle::from_rows_unchecked(n, to_bits(&flat, n)))
}

/// Boolean triangles whose rows weakly decrease.
pub fn permutation_booleans(n: usize) -> impl Iterator<Item = BooleanTriangle> {
    Search::new(BooleanRule { n, weakly_decreasing: true })
        .map(move |flat| BooleanTriangle::from_rows_unchecked(n, to_bits(&flat, n)))
}

pub fn nilp_nests(n: usize) -> impl Iterator<Item = NilpNest> {
    Search::new(NilpRule { n }).map(move |flat| {
        let paths = split_rows(&flat, n - 1)
            .into_iter()
            .map(|p| p.into_iter().map(|v| if v == 0 { Step::Vertical } else { Step::Diagonal }).collect())
            .collect();
        NilpNest::from_paths_unchecked(n, paths)
    })
}

/// TSSCPPs as full plane partitions, in the order of their magog triangles.
pub fn tsscpps(n: usize) -> impl Iterator<Item = PlanePartition> {
    magog_triangles(n).map(|m| expand_fundamental(&fundamental_from_magog(&m)).expect("magog domains expand"))
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next: Option<Vec<u32>> = Some((1..=n as u32).collect());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| succ[i] < succ[i + 1]) {
            let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
            succ.swap(i, j);
            succ[i + 1..].reverse();
            next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(cur))
    })
}

/// Every object of the family, each exactly once, in a fixed order: triangles
/// and nests are lexicographic in their row-major entries, alternating sign
/// matrices and TSSCPPs follow the monotone and magog triangles they come from.
pub fn generate(family: FamilyId, n: usize) -> Result<Box<dyn Iterator<Item = Object>>> {
    family.check(n)?;
    Ok(match family {
        FamilyId::Asm => Box::new(asms(n).map(Object::from)),
        FamilyId::MonotoneTriangle => Box::new(monotone_triangles(n).map(Object::from)),
        FamilyId::MagogTriangle => Box::new(magog_triangles(n).map(Object::from)),
        FamilyId::BooleanTriangle => Box::new(boolean_triangles(n).map(Object::from)),
        FamilyId::NilpNest => Box::new(nilp_nests(n).map(Object::from)),
        FamilyId::Tsscpp => Box::new(tsscpps(n).map(Object::from)),
        FamilyId::Permutation => Box::new(permutations(n).map(Object::from)),
        FamilyId::PermutationBoolean => Box::new(permutation_booleans(n).map(Object::from)),
    })
}

/// Counts the family without materialising objects.
pub fn count(family: FamilyId, n: usize) -> Result<u64> {
    family.check(n)?;
    Ok(match family {
        FamilyId::Asm | FamilyId::MonotoneTriangle => Search::new(MonotoneRule { n }).count() as u64,
        FamilyId::MagogTriangle | FamilyId::Tsscpp => Search::new(MagogRule { n }).count() as u64,
        FamilyId::BooleanTriangle => Search::new(BooleanRule { n, weakly_decreasing: false }).count() as u64,
        FamilyId::NilpNest => Search::new(NilpRule { n }).count() as u64,
        FamilyId::Permutation => (1..=n as u64).product(),
        FamilyId::PermutationBoolean => Search::new(BooleanRule { n, weakly_decreasing: true }).count() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locate_matches_row_start() {
        for idx in 0..30 {
            let (i, p) = locate(idx);
            assert_eq!(row_start(i) + p - 1, idx);
            assert!(p <= i);
        }
    }

    #[test]
    fn seven_of_each_at_order_three() {
        for family in [
            FamilyId::Asm,
            FamilyId::MonotoneTriangle,
            FamilyId::MagogTriangle,
            FamilyId::BooleanTriangle,
            FamilyId::NilpNest,
            FamilyId::Tsscpp,
        ] {
            assert_eq!(generate(family, 3).unwrap().count(), 7, "{family}");
            assert_eq!(count(family, 3).unwrap(), 7, "{family}");
        }
    }

    #[test]
    fn small_orders() {
        for family in FamilyId::ALL {
            assert_eq!(count(family, 1).unwrap(), 1);
            assert_eq!(count(family, 2).unwrap(), 2);
        }
    }

    #[test]
    fn boolean_order_three_is_lexicographic() {
        let got: Vec<_> = boolean_triangles(3).map(|b| b.rows().concat()).collect();
        let want: Vec<Vec<u8>> = vec![
            vec![0, 0, 0],
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 1, 0],
            vec![1, 1, 1],
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn permutations_are_lexicographic() {
        let got: Vec<String> = permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(got, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn zero_order_is_rejected() {
        assert!(generate(FamilyId::Asm, 0).is_err());
    }
}
