use std::collections::{BTreeMap, VecDeque};

use super::Poset;
use crate::error::{Error, Result};

pub const ISOMORPHISM_SIZE_CAP: usize = 5_000;

/// Colours both posets jointly so equal colours are comparable across them.
/// Starts from (down-set size, up-set size, lower cover count, upper cover
/// count) and refines by the colour multisets of the covers until stable.
fn refine(p: &Poset, q: &Poset) -> (Vec<usize>, Vec<usize>) {
    let sides = [p, q];
    let lower: Vec<Vec<Vec<usize>>> = sides.iter().map(|s| s.lower_covers()).collect();
    let upper: Vec<Vec<Vec<usize>>> = sides.iter().map(|s| s.upper_covers()).collect();
    let mut colors: Vec<Vec<usize>> = {
        let mut ids = BTreeMap::new();
        sides
            .iter()
            .enumerate()
            .map(|(k, s)| {
                (0..s.len())
                    .map(|i| {
                        let key = (
                            s.down_set(i).count_ones(..),
                            s.up_set(i).count_ones(..),
                            lower[k][i].len(),
                            upper[k][i].len(),
                        );
                        let next = ids.len();
                        *ids.entry(key).or_insert(next)
                    })
                    .collect()
            })
            .collect()
    };
    let mut classes = colors.iter().flatten().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let mut ids = BTreeMap::new();
        let next_colors: Vec<Vec<usize>> = (0..2)
            .map(|k| {
                (0..sides[k].len())
                    .map(|i| {
                        let mut down: Vec<usize> = lower[k][i].iter().map(|&j| colors[k][j]).collect();
                        let mut up: Vec<usize> = upper[k][i].iter().map(|&j| colors[k][j]).collect();
                        down.sort_unstable();
                        up.sort_unstable();
                        let key = (colors[k][i], down, up);
                        let next = ids.len();
                        *ids.entry(key).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        colors = next_colors;
        if ids.len() == classes {
            break;
        }
        classes = ids.len();
    }
    let mut it = colors.into_iter();
    (it.next().unwrap(), it.next().unwrap())
}

/// Visits elements so that each one after the first in its component is
/// cover-adjacent to an earlier one, starting from the rarest colours.
fn search_order(p: &Poset, colors: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut freq = BTreeMap::new();
    for &c in colors {
        *freq.entry(c).or_insert(0usize) += 1;
    }
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&i| (freq[&colors[i]], i));
    let neighbours: Vec<Vec<usize>> = {
        let mut nb = p.upper_covers();
        for (i, lows) in p.lower_covers().into_iter().enumerate() {
            nb[i].extend(lows);
        }
        nb
    };
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in seeds {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &neighbours[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

/// An order isomorphism `p → q` as a map from indices of `p` to indices of
/// `q`, or `None` when the posets are not isomorphic.
pub fn isomorphic_to(p: &Poset, q: &Poset) -> Result<Option<Vec<usize>>> {
    let n = p.len();
    if n.max(q.len()) > ISOMORPHISM_SIZE_CAP {
        return Err(Error::SizeCap { what: "isomorphism test", size: n.max(q.len()), cap: ISOMORPHISM_SIZE_CAP });
    }
    if n != q.len() || p.relation_count() != q.relation_count() || p.covers().len() != q.covers().len() {
        return Ok(None);
    }
    let (cp, cq) = refine(p, q);
    let mut hist_p = cp.clone();
    let mut hist_q = cq.clone();
    hist_p.sort_unstable();
    hist_q.sort_unstable();
    if hist_p != hist_q {
        return Ok(None);
    }
    let mut members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (j, &c) in cq.iter().enumerate() {
        members.entry(c).or_default().push(j);
    }
    let order = search_order(p, &cp);
    let candidates: Vec<&Vec<usize>> = order.iter().map(|&x| &members[&cp[x]]).collect();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut next = vec![0usize; n + 1];
    let mut pos = 0;
    loop {
        if pos == n {
            return Ok(Some(image));
        }
        let x = order[pos];
        let mut placed = false;
        while next[pos] < candidates[pos].len() {
            let y = candidates[pos][next[pos]];
            next[pos] += 1;
            if used[y] {
                continue;
            }
            let consistent = order[..pos].iter().all(|&a| {
                let b = image[a];
                p.leq(x, a) == q.leq(y, b) && p.leq(a, x) == q.leq(b, y)
            });
            if consistent {
                image[x] = y;
                used[y] = true;
                placed = true;
                break;
            }
        }
        if placed {
            pos += 1;
            next[pos] = 0;
        } else {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            let prev = order[pos];
            used[image[prev]] = false;
            image[prev] = usize::MAX;
        }
    }
}
