use serde::{Deserialize, Serialize};

use super::{count_order_ideals, Poset};
use crate::error::{Error, Result};

pub const LATTICE_SIZE_CAP: usize = 10_000;
const TRIPLE_SCAN_LIMIT: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWitness {
    /// `"join"` or `"meet"`: the bound that does not exist.
    pub missing: String,
    pub pair: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub is_lattice: bool,
    pub witness: Option<LatticeWitness>,
    pub is_distributive: Option<bool>,
    /// `x, y, z` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`.
    pub distributivity_witness: Option<(String, String, String)>,
}

/// Least element of the bound set `common`, if it lies below all of it.
fn least(p: &Poset, position: &[usize], common: &fixedbitset::FixedBitSet, upward: bool) -> Option<usize> {
    let pick = if upward {
        common.ones().min_by_key(|&z| position[z])
    } else {
        common.ones().max_by_key(|&z| position[z])
    }?;
    let reach = if upward { p.up_set(pick) } else { p.down_set(pick) };
    common.is_subset(reach).then_some(pick)
}

fn bound_table(p: &Poset, position: &[usize], upward: bool) -> std::result::Result<Vec<u32>, (usize, usize)> {
    let n = p.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in a..n {
            let mut common = if upward { p.up_set(a).clone() } else { p.down_set(a).clone() };
            common.intersect_with(if upward { p.up_set(b) } else { p.down_set(b) });
            let z = least(p, position, &common, upward).ok_or((a, b))? as u32;
            table[a * n + b] = z;
            table[b * n + a] = z;
        }
    }
    Ok(table)
}

/// Checks that every pair has a join and a meet (joins first, so the first
/// witness reported for a non-lattice is a pair without a join when one
/// exists), then tests distributivity.
pub fn lattice_report(p: &Poset) -> Result<LatticeReport> {
    let n = p.len();
    if n > LATTICE_SIZE_CAP {
        return Err(Error::SizeCap { what: "lattice report", size: n, cap: LATTICE_SIZE_CAP });
    }
    if n == 0 {
        return Err(Error::Unsupported("the empty poset has no lattice report".into()));
    }
    let mut position = vec![0; n];
    for (pos, i) in p.linear_extension().into_iter().enumerate() {
        position[i] = pos;
    }
    let fail = |missing: &str, (a, b): (usize, usize)| LatticeReport {
        is_lattice: false,
        witness: Some(LatticeWitness {
            missing: missing.into(),
            pair: (p.label(a).to_string(), p.label(b).to_string()),
        }),
        is_distributive: None,
        distributivity_witness: None,
    };
    let join = match bound_table(p, &position, true) {
        Ok(t) => t,
        Err(pair) => return Ok(fail("join", pair)),
    };
    let meet = match bound_table(p, &position, false) {
        Ok(t) => t,
        Err(pair) => return Ok(fail("meet", pair)),
    };
    let mut report = LatticeReport { is_lattice: true, witness: None, is_distributive: None, distributivity_witness: None };
    if n <= TRIPLE_SCAN_LIMIT {
        let j = |a: usize, b: usize| join[a * n + b] as usize;
        let m = |a: usize, b: usize| meet[a * n + b] as usize;
        for x in 0..n {
            for y in 0..n {
                for z in y + 1..n {
                    if m(x, j(y, z)) != j(m(x, y), m(x, z)) {
                        report.is_distributive = Some(false);
                        report.distributivity_witness =
                            Some((p.label(x).into(), p.label(y).into(), p.label(z).into()));
                        return Ok(report);
                    }
                }
            }
        }
        report.is_distributive = Some(true);
    } else {
        // a finite lattice is distributive iff it has as many elements as
        // its poset of join-irreducibles has order ideals
        let lower = p.lower_covers();
        let irreducibles = p.induced_subposet(|i, _| lower[i].len() == 1);
        let ideals = count_order_ideals(&irreducibles, Some(n as u64 + 1));
        report.is_distributive = Some(ideals == n as u64);
    }
    Ok(report)
}
