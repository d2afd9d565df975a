//! The concrete posets: orders on triangles, on permutations, on Catalan
//! sequences, and the three-dimensional posets whose ideals give `A_n`, `T_n`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bijections::{boolean_to_magog, permutation_to_boolean, permutation_to_monotone};
use crate::enumerate::{self, FamilyId};
use crate::error::{Error, Result};
use crate::poset::{order_ideals, Poset};
use crate::statistics::perm_inversions;
use crate::triangles::{Object, Permutation};

/// Largest ground set any constructor here will build.
pub const POSET_SIZE_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `x <= y` when every entry of `x` is at most the matching entry of `y`.
    Componentwise,
    /// `x <= y` when every entry of `x` is at least the matching entry of `y`.
    Reverse,
}

/// Orders vectors of equal length entrywise.
pub fn entrywise(labels: Vec<String>, vectors: &[Vec<u32>], direction: Direction) -> Result<Poset> {
    Poset::from_comparisons(labels, |a, b| {
        let (x, y) = (&vectors[a], &vectors[b]);
        match direction {
            Direction::Componentwise => x.iter().zip(y).all(|(u, v)| u <= v),
            Direction::Reverse => x.iter().zip(y).all(|(u, v)| u >= v),
        }
    })
}

fn check_size(what: &'static str, size: u64) -> Result<()> {
    if size > POSET_SIZE_CAP as u64 {
        return Err(Error::SizeCap { what, size: size as usize, cap: POSET_SIZE_CAP });
    }
    Ok(())
}

fn flat<T: Copy + Into<u32>>(rows: &[Vec<T>]) -> Vec<u32> {
    rows.iter().flatten().map(|&v| v.into()).collect()
}

fn vec_label(v: &[u32]) -> String {
    serde_json::to_string(v).unwrap()
}

/// `A_n`: monotone triangles, componentwise.
pub fn build_an(n: usize) -> Result<Poset> {
    check_size("A_n", enumerate::count(FamilyId::MonotoneTriangle, n)?)?;
    let (labels, vectors): (Vec<_>, Vec<_>) = enumerate::monotone_triangles(n)
        .map(|m| (Object::from(m.clone()).to_json(), flat(m.rows())))
        .unzip();
    entrywise(labels, &vectors, Direction::Componentwise)
}

/// `T_n`: magog triangles, componentwise.
pub fn build_tn(n: usize) -> Result<Poset> {
    check_size("T_n", enumerate::count(FamilyId::MagogTriangle, n)?)?;
    let (labels, vectors): (Vec<_>, Vec<_>) = enumerate::magog_triangles(n)
        .map(|m| (Object::from(m.clone()).to_json(), flat(m.rows())))
        .unzip();
    entrywise(labels, &vectors, Direction::Componentwise)
}

/// `TBool_n`: boolean triangles, reverse componentwise, so more zeros sit higher.
pub fn build_tbool(n: usize) -> Result<Poset> {
    check_size("TBool_n", enumerate::count(FamilyId::BooleanTriangle, n)?)?;
    let (labels, vectors): (Vec<_>, Vec<_>) = enumerate::boolean_triangles(n)
        .map(|b| (Object::from(b.clone()).to_json(), flat(b.rows())))
        .unzip();
    entrywise(labels, &vectors, Direction::Reverse)
}

fn permutation_poset(n: usize, what: &'static str, encode: impl Fn(&Permutation) -> Vec<u32>, direction: Direction) -> Result<Poset> {
    FamilyId::Permutation.check(n)?;
    check_size(what, (1..=n as u64).product())?;
    let (labels, vectors): (Vec<_>, Vec<_>) = enumerate::permutations(n).map(|p| (p.to_string(), encode(&p))).unzip();
    entrywise(labels, &vectors, direction)
}

/// `A_n` restricted to permutation matrices, labelled in one-line notation.
pub fn build_an_perm(n: usize) -> Result<Poset> {
    permutation_poset(n, "A_n^Perm", |p| flat(permutation_to_monotone(p).rows()), Direction::Componentwise)
}

/// `T_n` restricted to permutation TSSCPP, labelled by the corresponding permutation.
pub fn build_tn_perm(n: usize) -> Result<Poset> {
    permutation_poset(
        n,
        "T_n^Perm",
        |p| flat(boolean_to_magog(&permutation_to_boolean(p)).rows()),
        Direction::Componentwise,
    )
}

/// `TBool_n` restricted to permutation TSSCPP, labelled by the corresponding permutation.
pub fn build_tbool_perm(n: usize) -> Result<Poset> {
    permutation_poset(n, "TBool_n^Perm", |p| flat(permutation_to_boolean(p).rows()), Direction::Reverse)
}

fn from_permutation_covers(n: usize, what: &'static str, covers_of: impl Fn(&[u32]) -> Vec<Vec<u32>>) -> Result<Poset> {
    FamilyId::Permutation.check(n)?;
    check_size(what, (1..=n as u64).product())?;
    let perms: Vec<Permutation> = enumerate::permutations(n).collect();
    let index: HashMap<Vec<u32>, usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice().to_vec(), i)).collect();
    let mut covers = Vec::new();
    for (i, p) in perms.iter().enumerate() {
        for up in covers_of(p.as_slice()) {
            covers.push((i, index[&up]));
        }
    }
    Poset::from_covers(perms.iter().map(|p| p.to_string()).collect(), &covers)
}

/// Weak order: swapping the values `k` and `k + 1` when `k` comes first.
pub fn build_weak_order(n: usize) -> Result<Poset> {
    from_permutation_covers(n, "weak order", |s| {
        let mut pos = vec![0; s.len() + 1];
        for (i, &v) in s.iter().enumerate() {
            pos[v as usize] = i;
        }
        (1..s.len())
            .filter(|&k| pos[k] < pos[k + 1])
            .map(|k| {
                let mut t = s.to_vec();
                t.swap(pos[k], pos[k + 1]);
                t
            })
            .collect()
    })
}

/// Strong Bruhat order: any transposition adding exactly one inversion.
pub fn build_strong_bruhat(n: usize) -> Result<Poset> {
    from_permutation_covers(n, "strong Bruhat order", |s| {
        let base = perm_inversions(&Permutation::from_vec_unchecked(s.to_vec()));
        let mut ups = Vec::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] < s[j] {
                    let mut t = s.to_vec();
                    t.swap(i, j);
                    if perm_inversions(&Permutation::from_vec_unchecked(t.clone())) == base + 1 {
                        ups.push(t);
                    }
                }
            }
        }
        ups
    })
}

/// Sequences with `i <= x_i <= n` accepted by `keep`.
fn bounded_sequences(n: usize, keep: impl Fn(&[u32]) -> bool) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut x: Vec<u32> = (1..=n as u32).collect();
    loop {
        if keep(&x) {
            out.push(x.clone());
        }
        let Some(i) = (0..n).rev().find(|&i| x[i] < n as u32) else { break };
        x[i] += 1;
        for (k, v) in x.iter_mut().enumerate().skip(i + 1) {
            *v = k as u32 + 1;
        }
    }
    out
}

pub fn is_bracket_vector(x: &[u32]) -> bool {
    let n = x.len();
    (0..n).all(|i| {
        let xi = x[i] as usize;
        i < xi && xi <= n && (i..xi).all(|j| x[j] <= x[i])
    })
}

/// Tamari lattice on bracket vectors, reverse componentwise.
pub fn build_tamari(n: usize) -> Result<Poset> {
    FamilyId::Permutation.check(n)?;
    let seqs = bounded_sequences(n, is_bracket_vector);
    entrywise(seqs.iter().map(|s| vec_label(s)).collect(), &seqs, Direction::Reverse)
}

/// Catalan distributive lattice on weakly increasing sequences, reverse componentwise.
pub fn build_catalan_distributive(n: usize) -> Result<Poset> {
    FamilyId::Permutation.check(n)?;
    let seqs = bounded_sequences(n, |x| x.windows(2).all(|w| w[0] <= w[1]));
    entrywise(seqs.iter().map(|s| vec_label(s)).collect(), &seqs, Direction::Reverse)
}

/// `[2] × [3] × ⋯ × [n]`; coordinate `i` ranges over `0..=i`.
pub fn build_product_of_chains(n: usize) -> Result<Poset> {
    FamilyId::Permutation.check(n)?;
    check_size("product of chains", (1..=n as u64).product())?;
    let mut points: Vec<Vec<u32>> = vec![Vec::new()];
    for i in 1..n as u32 {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=i).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    entrywise(points.iter().map(|p| vec_label(p)).collect(), &points, Direction::Componentwise)
}

/// Compact display form of an element label: triangle rows joined by `/`
/// (for example `2/13/123`); labels without rows are returned unchanged.
pub fn short_label(label: &str) -> String {
    let Ok(value) = serde_json::from_str::<serde_json::Value>(label) else {
        return label.to_string();
    };
    let Some(rows) = value.get("rows").and_then(|r| r.as_array()) else {
        return label.to_string();
    };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.as_array().map(|r| r.iter().map(|v| v.to_string()).collect()).unwrap_or_default())
        .collect();
    let wide = cells.iter().flatten().any(|c| c.len() > 1);
    cells.iter().map(|r| r.join(if wide { "," } else { "" })).collect::<Vec<_>>().join("/")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverRule {
    /// `(i,j,k)` covers `(i,j+1,k)`, `(i,j+1,k-1)`, `(i+1,j,k)`, `(i+1,j,k-1)`.
    Pn,
    /// `(i,j,k)` covers `(i+1,j-1,k)`, `(i,j+1,k-1)`, `(i+1,j,k)`.
    Qn,
}

/// Points `(i, j, k)` with `i + j + k <= n - 2`, ordered by one of two cover rules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinIrreduciblePoset3D {
    pub n: usize,
    pub rule: CoverRule,
    pub points: Vec<(i64, i64, i64)>,
}

impl JoinIrreduciblePoset3D {
    pub fn new(n: usize, rule: CoverRule) -> Self {
        let m = n as i64 - 2;
        let mut points = Vec::new();
        for i in 0..=m {
            for j in 0..=m - i {
                for k in 0..=m - i - j {
                    points.push((i, j, k));
                }
            }
        }
        Self { n, rule, points }
    }

    pub fn lower_covers_of(&self, (i, j, k): (i64, i64, i64)) -> Vec<(i64, i64, i64)> {
        let candidates = match self.rule {
            CoverRule::Pn => vec![(i, j + 1, k), (i, j + 1, k - 1), (i + 1, j, k), (i + 1, j, k - 1)],
            CoverRule::Qn => vec![(i + 1, j - 1, k), (i, j + 1, k - 1), (i + 1, j, k)],
        };
        candidates.into_iter().filter(|c| self.points.contains(c)).collect()
    }

    pub fn to_poset(&self) -> Result<Poset> {
        let index: HashMap<_, _> = self.points.iter().enumerate().map(|(a, &p)| (p, a)).collect();
        let covers: Vec<(usize, usize)> = self
            .points
            .iter()
            .enumerate()
            .flat_map(|(a, &p)| self.lower_covers_of(p).into_iter().map(move |c| (c, a)))
            .map(|(c, a)| (index[&c], a))
            .collect();
        let labels = self.points.iter().map(|&(i, j, k)| format!("[{i},{j},{k}]")).collect();
        Poset::from_covers(labels, &covers)
    }
}

pub fn build_pn(n: usize) -> Result<Poset> {
    JoinIrreduciblePoset3D::new(n, CoverRule::Pn).to_poset()
}

pub fn build_qn(n: usize) -> Result<Poset> {
    JoinIrreduciblePoset3D::new(n, CoverRule::Qn).to_poset()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderName {
    An,
    Tn,
    TBool,
    AnPerm,
    TnPerm,
    TBoolPerm,
    Weak,
    Strong,
    Tamari,
    Catalan,
    Chains,
    Pn,
    Qn,
    JPn,
    JQn,
}

impl OrderName {
    pub const ALL: [OrderName; 15] = [
        OrderName::An,
        OrderName::Tn,
        OrderName::TBool,
        OrderName::AnPerm,
        OrderName::TnPerm,
        OrderName::TBoolPerm,
        OrderName::Weak,
        OrderName::Strong,
        OrderName::Tamari,
        OrderName::Catalan,
        OrderName::Chains,
        OrderName::Pn,
        OrderName::Qn,
        OrderName::JPn,
        OrderName::JQn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderName::An => "An",
            OrderName::Tn => "Tn",
            OrderName::TBool => "TBool",
            OrderName::AnPerm => "AnPerm",
            OrderName::TnPerm => "TnPerm",
            OrderName::TBoolPerm => "TBoolPerm",
            OrderName::Weak => "weak",
            OrderName::Strong => "strong",
            OrderName::Tamari => "tamari",
            OrderName::Catalan => "catalan",
            OrderName::Chains => "chains",
            OrderName::Pn => "Pn",
            OrderName::Qn => "Qn",
            OrderName::JPn => "JPn",
            OrderName::JQn => "JQn",
        }
    }

    pub fn build(self, n: usize) -> Result<Poset> {
        if n == 0 {
            return Err(Error::Unsupported("n must be at least 1".into()));
        }
        match self {
            OrderName::An => build_an(n),
            OrderName::Tn => build_tn(n),
            OrderName::TBool => build_tbool(n),
            OrderName::AnPerm => build_an_perm(n),
            OrderName::TnPerm => build_tn_perm(n),
            OrderName::TBoolPerm => build_tbool_perm(n),
            OrderName::Weak => build_weak_order(n),
            OrderName::Strong => build_strong_bruhat(n),
            OrderName::Tamari => build_tamari(n),
            OrderName::Catalan => build_catalan_distributive(n),
            OrderName::Chains => build_product_of_chains(n),
            OrderName::Pn => build_pn(n),
            OrderName::Qn => build_qn(n),
            OrderName::JPn => {
                FamilyId::Asm.check(n)?;
                order_ideals(&build_pn(n)?)
            }
            OrderName::JQn => {
                FamilyId::Tsscpp.check(n)?;
                order_ideals(&build_qn(n)?)
            }
        }
    }
}

impl std::str::FromStr for OrderName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OrderName::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unsupported(format!("unknown poset {s:?}")))
    }
}
