use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bijections::{convert, Kind};
use crate::enumerate::{generate, FamilyId};
use crate::error::{Error, Result};
use crate::triangles::*;

/// `I(A) = Σ A(i,j) A(k,l)` over `i > k`, `j < l`.
pub fn inversion_number(a: &Asm) -> i64 {
    let n = a.n();
    // above[l] = Σ_{k < i} A(k, l)
    let mut above = vec![0i64; n];
    let mut total = 0;
    for row in a.rows() {
        let mut right = 0i64;
        for j in (0..n).rev() {
            total += row[j] as i64 * right;
            right += above[j];
        }
        for (l, &v) in row.iter().enumerate() {
            above[l] += v as i64;
        }
    }
    total
}

pub fn perm_inversions(sigma: &Permutation) -> u64 {
    let s = sigma.as_slice();
    (0..s.len())
        .map(|i| s[i + 1..].iter().filter(|&&v| v < s[i]).count() as u64)
        .sum()
}

pub fn count_negative_ones(a: &Asm) -> usize {
    a.rows().iter().flatten().filter(|&&v| v == -1).count()
}

/// Entries strictly between both lower neighbours.
pub fn strict_diagonal_entries(m: &MonotoneTriangle) -> usize {
    let n = m.n();
    (1..n)
        .flat_map(|i| (1..=i).map(move |p| (i, p)))
        .filter(|&(i, p)| m.get(i + 1, p) < m.get(i, p) && m.get(i, p) < m.get(i + 1, p + 1))
        .count()
}

pub fn boolean_zero_count(b: &BooleanTriangle) -> usize {
    b.entries().filter(|&v| v == 0).count()
}

pub fn boolean_last_row_zeros(b: &BooleanTriangle) -> usize {
    b.rows().last().map_or(0, |r| r.iter().filter(|&&v| v == 0).count())
}

/// Row of the lowest one on the rightmost diagonal `b(i, i)`, if any.
pub fn boolean_lowest_one_last_diagonal(b: &BooleanTriangle) -> Option<usize> {
    (1..b.n()).rev().find(|&i| b.get(i, i) == 1)
}

/// Adjacent `0, 1` pairs read left to right along rows.
pub fn zero_then_one_count(b: &BooleanTriangle) -> usize {
    b.rows().iter().map(|r| r.windows(2).filter(|w| w[0] == 0 && w[1] == 1).count()).sum()
}

/// Whether no subsequence of `sigma` is order-isomorphic to `pattern`.
pub fn avoids(sigma: &Permutation, pattern: &Permutation) -> Result<bool> {
    let (n, k) = (sigma.n(), pattern.n());
    if k > n {
        return Err(Error::PatternTooLong { pattern: k, len: n });
    }
    fn extend(s: &[u32], pat: &[u32], from: usize, chosen: &mut Vec<u32>) -> bool {
        let depth = chosen.len();
        if depth == pat.len() {
            return true;
        }
        for idx in from..s.len() {
            let v = s[idx];
            let fits = chosen.iter().zip(pat).all(|(&c, &q)| (c < v) == (q < pat[depth]));
            if fits {
                chosen.push(v);
                if extend(s, pat, idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    Ok(!extend(sigma.as_slice(), pattern.as_slice(), 0, &mut Vec::new()))
}

/// Statistics of an alternating sign matrix. `last_row_one_col` is the column
/// of the one in the bottom row and `last_col_one_row` the row of the one in
/// the last column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatBundle {
    pub inversion_number: i64,
    pub negative_ones: usize,
    pub last_row_one_col: usize,
    pub last_col_one_row: usize,
}

impl StatBundle {
    pub fn of(a: &Asm) -> Self {
        let n = a.n();
        StatBundle {
            inversion_number: inversion_number(a),
            negative_ones: count_negative_ones(a),
            last_row_one_col: (1..=n).find(|&j| a.get(n, j) == 1).unwrap(),
            last_col_one_row: (1..=n).find(|&i| a.get(i, n) == 1).unwrap(),
        }
    }
}

/// Boolean-side counterparts of [`StatBundle`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BooleanStats {
    pub zeros: usize,
    pub last_row_zeros: usize,
    pub lowest_one_last_diagonal: Option<usize>,
    pub zero_then_one: usize,
}

impl BooleanStats {
    pub fn of(b: &BooleanTriangle) -> Self {
        BooleanStats {
            zeros: boolean_zero_count(b),
            last_row_zeros: boolean_last_row_zeros(b),
            lowest_one_last_diagonal: boolean_lowest_one_last_diagonal(b),
            zero_then_one: zero_then_one_count(b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Inversions,
    NegativeOnes,
    StrictDiagonal,
    LastRowOneCol,
    LastColOneRow,
    Zeros,
    LastRowZeros,
    /// Zero when the rightmost diagonal has no one.
    LowestOneLastDiagonal,
    ZeroThenOne,
}

impl Statistic {
    pub const ALL: [Statistic; 9] = [
        Statistic::Inversions,
        Statistic::NegativeOnes,
        Statistic::StrictDiagonal,
        Statistic::LastRowOneCol,
        Statistic::LastColOneRow,
        Statistic::Zeros,
        Statistic::LastRowZeros,
        Statistic::LowestOneLastDiagonal,
        Statistic::ZeroThenOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::Inversions => "inversions",
            Statistic::NegativeOnes => "negative_ones",
            Statistic::StrictDiagonal => "strict_diagonal",
            Statistic::LastRowOneCol => "last_row_one_col",
            Statistic::LastColOneRow => "last_col_one_row",
            Statistic::Zeros => "zeros",
            Statistic::LastRowZeros => "last_row_zeros",
            Statistic::LowestOneLastDiagonal => "lowest_one_last_diagonal",
            Statistic::ZeroThenOne => "zero_then_one",
        }
    }

    fn on_asm(self) -> bool {
        matches!(
            self,
            Statistic::Inversions
                | Statistic::NegativeOnes
                | Statistic::StrictDiagonal
                | Statistic::LastRowOneCol
                | Statistic::LastColOneRow
        )
    }

    /// Evaluates the statistic, converting the object to an alternating sign
    /// matrix or a boolean triangle first when needed.
    pub fn evaluate(self, obj: &Object) -> Result<i64> {
        if let (Statistic::Inversions, Object::Permutation(p)) = (self, obj) {
            return Ok(perm_inversions(p) as i64);
        }
        if self.on_asm() {
            let Object::Asm(a) = convert(obj, Kind::Asm)? else { unreachable!() };
            let s = StatBundle::of(&a);
            return Ok(match self {
                Statistic::Inversions => s.inversion_number,
                Statistic::NegativeOnes => s.negative_ones as i64,
                Statistic::StrictDiagonal => strict_diagonal_entries(&crate::bijections::asm_to_monotone(&a)) as i64,
                Statistic::LastRowOneCol => s.last_row_one_col as i64,
                _ => s.last_col_one_row as i64,
            });
        }
        let Object::BooleanTriangle(b) = convert(obj, Kind::BooleanTriangle)? else { unreachable!() };
        let s = BooleanStats::of(&b);
        Ok(match self {
            Statistic::Zeros => s.zeros as i64,
            Statistic::LastRowZeros => s.last_row_zeros as i64,
            Statistic::LowestOneLastDiagonal => s.lowest_one_last_diagonal.unwrap_or(0) as i64,
            _ => s.zero_then_one as i64,
        })
    }
}

impl std::str::FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown statistic {s:?}")))
    }
}

/// Number of objects of the family taking each value of the statistic.
pub fn distribution(family: FamilyId, n: usize, statistic: Statistic) -> Result<BTreeMap<i64, u64>> {
    let mut counts = BTreeMap::new();
    for obj in generate(family, n)? {
        *counts.entry(statistic.evaluate(&obj)?).or_insert(0) += 1;
    }
    Ok(counts)
}
