use fixedbitset::FixedBitSet;

use super::Poset;
use crate::error::{Error, Result};

pub const IDEAL_COUNT_CAP: usize = 200_000;

/// Visits every down-closed subset. Elements are decided in a linear
/// extension, so an element may join only once everything below it has.
/// Stops early when `visit` returns `false`.
fn for_each_ideal(p: &Poset, mut visit: impl FnMut(&FixedBitSet) -> bool) {
    let order = p.linear_extension();
    let n = p.len();
    let below: Vec<FixedBitSet> = (0..n)
        .map(|i| {
            let mut b = p.down_set(i).clone();
            b.set(i, false);
            b
        })
        .collect();
    let mut current = FixedBitSet::with_capacity(n);
    // choice[d]: 0 = untried, 1 = tried with element in, 2 = tried with element out
    let mut choice = vec![0u8; n + 1];
    let mut depth = 0;
    loop {
        if depth == n {
            if !visit(&current) {
                return;
            }
            if depth == 0 {
                return;
            }
            depth -= 1;
            continue;
        }
        let x = order[depth];
        match choice[depth] {
            0 => {
                choice[depth] = 1;
                if below[x].is_subset(&current) {
                    current.insert(x);
                    depth += 1;
                    choice[depth] = 0;
                }
            }
            1 => {
                choice[depth] = 2;
                current.set(x, false);
                depth += 1;
                choice[depth] = 0;
            }
            _ => {
                if depth == 0 {
                    return;
                }
                depth -= 1;
            }
        }
    }
}

/// Number of order ideals, counting no further than `limit`.
pub fn count_order_ideals(p: &Poset, limit: Option<u64>) -> u64 {
    let mut count = 0u64;
    for_each_ideal(p, |_| {
        count += 1;
        limit.map_or(true, |l| count < l)
    });
    count
}

/// The lattice `J(P)` of order ideals ordered by inclusion. Each ideal is
/// labelled by the JSON list of its elements' labels.
pub fn order_ideals(p: &Poset) -> Result<Poset> {
    let mut ideals = Vec::new();
    let mut overflow = false;
    for_each_ideal(p, |s| {
        if ideals.len() == IDEAL_COUNT_CAP {
            overflow = true;
            return false;
        }
        ideals.push(s.clone());
        true
    });
    if overflow {
        return Err(Error::SizeCap { what: "order ideals", size: IDEAL_COUNT_CAP + 1, cap: IDEAL_COUNT_CAP });
    }
    ideals.sort_by_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    let labels = ideals
        .iter()
        .map(|s| serde_json::to_string(&s.ones().map(|i| p.label(i)).collect::<Vec<_>>()).unwrap())
        .collect();
    Poset::from_comparisons(labels, |a, b| ideals[a].is_subset(&ideals[b]))
}
