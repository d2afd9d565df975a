//! Finite checks of the structural statements about the posets in [`crate::orders`].

use serde::Serialize;
use serde_json::{json, Value};

use crate::bijections::magog_to_boolean;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::orders::{
    build_an, build_an_perm, build_catalan_distributive, build_pn, build_product_of_chains, build_qn,
    build_strong_bruhat, build_tamari, build_tbool, build_tbool_perm, build_tn, build_tn_perm, build_weak_order,
};
use crate::poset::{isomorphic_to, lattice_report, order_ideals, Poset};
use crate::statistics::avoids;
use crate::triangles::{BooleanTriangle, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `A_n` is isomorphic to the ideals of `P_n`.
    AsmIdeals,
    /// `A_n` on permutation matrices is the strong Bruhat order.
    AsmPermutationsBruhat,
    /// `T_n` is isomorphic to the ideals of `Q_n`.
    TsscppIdeals,
    /// 132-avoiders in `T_n^Perm` form the Tamari lattice.
    MagogTamari,
    /// 213-avoiders in `T_n^Perm` form the Catalan distributive lattice.
    MagogCatalan,
    /// `TBool_n^Perm` is a product of chains between the weak and strong orders.
    BooleanSandwich,
    /// Both Catalan lattices sit inside `TBool_n^Perm` the same way.
    BooleanCatalan,
    /// Covers of `T_n` seen on boolean triangles are one of two local moves.
    CoverMoves,
    /// `T_n^Perm` and `TBool_n` are lattices exactly when `n <= 3`.
    NonLattice,
    /// Avoiders of 123, 231, 312 and 321 in `T_n^Perm` are neither ranked nor lattices.
    UnrankedAvoiders,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::AsmIdeals,
        Claim::AsmPermutationsBruhat,
        Claim::TsscppIdeals,
        Claim::MagogTamari,
        Claim::MagogCatalan,
        Claim::BooleanSandwich,
        Claim::BooleanCatalan,
        Claim::CoverMoves,
        Claim::NonLattice,
        Claim::UnrankedAvoiders,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::AsmIdeals => "asm-ideals",
            Claim::AsmPermutationsBruhat => "asm-permutations-bruhat",
            Claim::TsscppIdeals => "tsscpp-ideals",
            Claim::MagogTamari => "magog-tamari",
            Claim::MagogCatalan => "magog-catalan",
            Claim::BooleanSandwich => "boolean-sandwich",
            Claim::BooleanCatalan => "boolean-catalan",
            Claim::CoverMoves => "cover-moves",
            Claim::NonLattice => "non-lattice",
            Claim::UnrankedAvoiders => "unranked-avoiders",
        }
    }

    pub fn check(self, n: usize) -> Result<ClaimReport> {
        let (holds, witness) = match self {
            Claim::AsmIdeals => ideals_claim(build_an(n)?, build_pn(n)?)?,
            Claim::TsscppIdeals => ideals_claim(build_tn(n)?, build_qn(n)?)?,
            Claim::AsmPermutationsBruhat => {
                let a = build_an_perm(n)?;
                let s = build_strong_bruhat(n)?;
                let iso = isomorphic_to(&a, &s)?.is_some();
                let same = same_relations(&a, &s);
                (iso && same.is_null(), json!({ "isomorphic": iso, "label_mismatch": same }))
            }
            Claim::MagogTamari => avoider_claim(&build_tn_perm(n)?, "132", build_tamari(n)?)?,
            Claim::MagogCatalan => avoider_claim(&build_tn_perm(n)?, "213", build_catalan_distributive(n)?)?,
            Claim::BooleanCatalan => {
                let t = build_tbool_perm(n)?;
                let (h1, w1) = avoider_claim(&t, "132", build_tamari(n)?)?;
                let (h2, w2) = avoider_claim(&t, "213", build_catalan_distributive(n)?)?;
                (h1 && h2, json!({ "132": w1, "213": w2 }))
            }
            Claim::BooleanSandwich => {
                let t = build_tbool_perm(n)?;
                let iso = isomorphic_to(&t, &build_product_of_chains(n)?)?.is_some();
                let below = build_weak_order(n)?.first_relation_missing_from(&t);
                let above = t.first_relation_missing_from(&build_strong_bruhat(n)?);
                (
                    iso && below.is_none() && above.is_none(),
                    json!({ "isomorphic_to_chains": iso, "weak_not_in_boolean": below, "boolean_not_in_strong": above }),
                )
            }
            Claim::CoverMoves => cover_moves(n)?,
            Claim::NonLattice => {
                let expect = n <= 3;
                let perm = lattice_report(&build_tn_perm(n)?)?;
                let boolean = lattice_report(&build_tbool(n)?)?;
                (
                    perm.is_lattice == expect && boolean.is_lattice == expect,
                    json!({ "expected_lattice": expect, "magog_permutations": perm, "boolean": boolean }),
                )
            }
            Claim::UnrankedAvoiders => {
                let t = build_tn_perm(n)?;
                let mut holds = true;
                let mut found = serde_json::Map::new();
                for pattern in ["123", "231", "312", "321"] {
                    let sub = avoiders(&t, pattern)?;
                    let ranked = sub.is_ranked();
                    let lattice = lattice_report(&sub)?.is_lattice;
                    holds &= !ranked && !lattice;
                    found.insert(pattern.into(), json!({ "size": sub.len(), "ranked": ranked, "lattice": lattice }));
                }
                (holds, Value::Object(found))
            }
        };
        Ok(ClaimReport { claim: self, n, holds, witness })
    }
}

impl std::str::FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown claim {s:?}")))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claim: Claim,
    pub n: usize,
    pub holds: bool,
    /// Supporting data: sizes, lattice witnesses, or the first offending pair.
    pub witness: Value,
}

fn ideals_claim(lattice: Poset, base: Poset) -> Result<(bool, Value)> {
    let ideals = order_ideals(&base)?;
    let iso = isomorphic_to(&lattice, &ideals)?.is_some();
    Ok((iso, json!({ "size": lattice.len(), "ideals": ideals.len(), "isomorphic": iso })))
}

/// First relation on which two posets with the same labels disagree.
fn same_relations(p: &Poset, q: &Poset) -> Value {
    match p.first_relation_missing_from(q).or_else(|| q.first_relation_missing_from(p)) {
        Some(pair) => json!(pair),
        None => Value::Null,
    }
}

fn avoiders(p: &Poset, pattern: &str) -> Result<Poset> {
    let pattern: Permutation = pattern.parse()?;
    let mut keep = Vec::with_capacity(p.len());
    for label in p.labels() {
        let sigma: Permutation = label.parse()?;
        keep.push(sigma.n() < pattern.n() || avoids(&sigma, &pattern)?);
    }
    Ok(p.induced_subposet(|i, _| keep[i]))
}

fn avoider_claim(p: &Poset, pattern: &str, target: Poset) -> Result<(bool, Value)> {
    let sub = avoiders(p, pattern)?;
    let iso = isomorphic_to(&sub, &target)?.is_some();
    Ok((iso, json!({ "avoiders": sub.len(), "target": target.len(), "isomorphic": iso })))
}

/// Whether `hi` arises from `lo` by turning a one with a zero to its
/// southeast into a zero with a one there, or by clearing a one in the last row.
pub fn is_cover_move(lo: &BooleanTriangle, hi: &BooleanTriangle) -> bool {
    let rows = lo.rows().len();
    let diff: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|i| (1..=i).map(move |p| (i, p)))
        .filter(|&(i, p)| lo.get(i, p) != hi.get(i, p))
        .collect();
    match diff[..] {
        [(i, p)] => i == rows && lo.get(i, p) == 1,
        [(i, p), (k, q)] => k == i + 1 && q == p + 1 && lo.get(i, p) == 1 && lo.get(k, q) == 0,
        _ => false,
    }
}

fn cover_moves(n: usize) -> Result<(bool, Value)> {
    let t = build_tn(n)?;
    let booleans: Vec<BooleanTriangle> = enumerate::magog_triangles(n).map(|m| magog_to_boolean(&m)).collect();
    let covers = t.covers();
    for &(lo, hi) in &covers {
        if !is_cover_move(&booleans[lo], &booleans[hi]) {
            return Ok((false, json!({ "lower": booleans[lo].rows(), "upper": booleans[hi].rows() })));
        }
    }
    Ok((true, json!({ "covers": covers.len() })))
}
