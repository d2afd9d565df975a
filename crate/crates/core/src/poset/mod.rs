//! Finite posets stored as closed relation matrices.

mod ideals;
mod iso;
mod lattice;

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

pub use ideals::{count_order_ideals, order_ideals};
pub use iso::isomorphic_to;
pub use lattice::{lattice_report, LatticeReport, LatticeWitness};

#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[i]` holds every `j` with `i <= j`.
    up: Vec<FixedBitSet>,
    /// `down[j]` holds every `i` with `i <= j`.
    down: Vec<FixedBitSet>,
}

#[derive(Serialize)]
struct PosetJson {
    elements: Vec<serde_json::Value>,
    covers: Vec<[usize; 2]>,
}

impl Poset {
    /// Builds the order from `leq(i, j)`, adding reflexivity and taking the
    /// transitive closure, then checks antisymmetry.
    pub fn from_comparisons(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if i == j || leq(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::close(labels, up)
    }

    /// Builds the order generated by the pairs `(lower, upper)`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::NotPartialOrder(format!("cover ({a},{b}) is out of range")));
            }
            up[a].insert(b);
        }
        Self::close(labels, up)
    }

    fn close(labels: Vec<String>, mut up: Vec<FixedBitSet>) -> Result<Self> {
        let n = labels.len();
        for k in 0..n {
            let via = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&via);
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in up[i].ones() {
                if i != j && up[j].contains(i) {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are comparable both ways",
                        labels[i], labels[j]
                    )));
                }
                down[j].insert(i);
            }
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::NotPartialOrder(format!("duplicate label {l}")));
            }
        }
        Ok(Self { labels, index, up, down })
    }

    pub fn chain(k: usize) -> Self {
        Self::from_comparisons((0..k).map(|i| i.to_string()).collect(), |i, j| i <= j).unwrap()
    }

    pub fn antichain(k: usize) -> Self {
        Self::from_comparisons((0..k).map(|i| i.to_string()).collect(), |i, j| i == j).unwrap()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Number of pairs `i < j`.
    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..) - 1).sum()
    }

    /// A linear extension: sorting by down-set size respects the order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(..), i));
        order
    }

    /// Upper covers of each element.
    pub fn upper_covers(&self) -> Vec<Vec<usize>> {
        (0..self.len())
            .map(|i| {
                let mut strict = self.up[i].clone();
                strict.set(i, false);
                let mut covers = strict.clone();
                for k in strict.ones() {
                    let mut above = self.up[k].clone();
                    above.set(k, false);
                    covers.difference_with(&above);
                }
                covers.ones().collect()
            })
            .collect()
    }

    pub fn lower_covers(&self) -> Vec<Vec<usize>> {
        let mut lower = vec![Vec::new(); self.len()];
        for (i, ups) in self.upper_covers().into_iter().enumerate() {
            for j in ups {
                lower[j].push(i);
            }
        }
        lower
    }

    /// The Hasse diagram as `(lower, upper)` pairs, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.upper_covers()
            .into_iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.into_iter().map(move |j| (i, j)))
            .collect()
    }

    /// Cover pairs by label.
    pub fn cover_labels(&self) -> Vec<(String, String)> {
        let mut v: Vec<_> = self
            .covers()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect();
        v.sort();
        v
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].count_ones(..) == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].count_ones(..) == 1).collect()
    }

    /// Whether every maximal chain has the same length.
    pub fn is_ranked(&self) -> bool {
        let lower = self.lower_covers();
        let mut shortest = vec![0usize; self.len()];
        let mut longest = vec![0usize; self.len()];
        for i in self.linear_extension() {
            if let Some(lo) = lower[i].iter().map(|&k| shortest[k] + 1).min() {
                shortest[i] = lo;
                longest[i] = lower[i].iter().map(|&k| longest[k] + 1).max().unwrap();
            }
        }
        let tops = self.maximal_elements();
        let lo = tops.iter().map(|&i| shortest[i]).min();
        let hi = tops.iter().map(|&i| longest[i]).max();
        lo == hi
    }

    pub fn induced_subposet(&self, keep: impl Fn(usize, &str) -> bool) -> Poset {
        let kept: Vec<usize> = (0..self.len()).filter(|&i| keep(i, &self.labels[i])).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::from_comparisons(labels, |a, b| self.leq(kept[a], kept[b])).expect("restriction of a partial order")
    }

    /// Same ground set, each element renamed.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<Poset> {
        let labels = self.labels.iter().map(|l| f(l)).collect();
        Poset::from_comparisons(labels, |a, b| self.leq(a, b))
    }

    /// The first relation `a < b` of `self`, among labels shared with
    /// `other`, that fails in `other`.
    pub fn first_relation_missing_from(&self, other: &Poset) -> Option<(String, String)> {
        let shared: Vec<(usize, usize)> = (0..self.len())
            .filter_map(|i| other.index_of(&self.labels[i]).map(|j| (i, j)))
            .collect();
        for &(a, oa) in &shared {
            for &(b, ob) in &shared {
                if self.lt(a, b) && !other.lt(oa, ob) {
                    return Some((self.labels[a].clone(), self.labels[b].clone()));
                }
            }
        }
        None
    }

    /// Every relation of `self` between labels that also occur in `other`
    /// holds in `other`.
    pub fn relations_subset(&self, other: &Poset) -> bool {
        self.first_relation_missing_from(other).is_none()
    }

    /// `{"elements":[...],"covers":[[i,j],...]}`; labels that are JSON are
    /// embedded as JSON.
    pub fn to_json(&self) -> String {
        let elements = self
            .labels
            .iter()
            .map(|l| match serde_json::from_str::<serde_json::Value>(l) {
                Ok(v) if v.is_object() || v.is_array() => v,
                _ => serde_json::Value::String(l.clone()),
            })
            .collect();
        let covers = self.covers().into_iter().map(|(a, b)| [a, b]).collect();
        serde_json::to_string(&PosetJson { elements, covers }).expect("poset json")
    }

    /// Graphviz digraph of the Hasse diagram, edges pointing upward.
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_with(name, |l| l.to_string())
    }

    /// Like [`Poset::to_dot`], displaying each node as `display(label)`.
    pub fn to_dot_with(&self, name: &str, display: impl Fn(&str) -> String) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", escape(&display(l)));
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
