//! Value types for every object family. Constructors validate and report the
//! first violated condition in row-major order.
//!
//! Triangles are stored densely: row `i` (1-based) is a plain list of `i`
//! entries, and the bottom row of a monotone or magog triangle is `1..=n`.

mod asm;
mod boolean;
mod magog;
mod monotone;
mod nilp;
mod permutation;
mod plane;

pub use asm::Asm;
pub use boolean::BooleanTriangle;
pub use magog::MagogTriangle;
pub use monotone::MonotoneTriangle;
pub use nilp::{NilpNest, Step};
pub use permutation::Permutation;
pub use plane::{expand_fundamental, fundamental_domain, FundamentalDomain, PlanePartition, SymmetryReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Serialize, Deserialize)]
pub(crate) struct RawRows<T> {
    pub n: usize,
    pub rows: Vec<Vec<T>>,
}

/// Checks that row `i` has `i + 1` entries and returns the number of rows.
pub(crate) fn check_triangular<T>(rows: &[Vec<T>], allow_empty: bool) -> Result<usize> {
    if rows.is_empty() && !allow_empty {
        return Err(Error::Shape("triangle must have at least one row".into()));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != i + 1 {
            return Err(Error::Shape(format!("row {} has {} entries, expected {}", i + 1, row.len(), i + 1)));
        }
    }
    Ok(rows.len())
}

/// Any object, tagged by `kind` for JSON input and output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Object {
    Asm(Asm),
    MonotoneTriangle(MonotoneTriangle),
    MagogTriangle(MagogTriangle),
    BooleanTriangle(BooleanTriangle),
    Nilp(NilpNest),
    Permutation(Permutation),
    PlanePartition(PlanePartition),
    FundamentalDomain(FundamentalDomain),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Asm(_) => "asm",
            Object::MonotoneTriangle(_) => "monotone_triangle",
            Object::MagogTriangle(_) => "magog_triangle",
            Object::BooleanTriangle(_) => "boolean_triangle",
            Object::Nilp(_) => "nilp",
            Object::Permutation(_) => "permutation",
            Object::PlanePartition(_) => "plane_partition",
            Object::FundamentalDomain(_) => "fundamental_domain",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Object::Asm(x) => x.n(),
            Object::MonotoneTriangle(x) => x.n(),
            Object::MagogTriangle(x) => x.n(),
            Object::BooleanTriangle(x) => x.n(),
            Object::Nilp(x) => x.n(),
            Object::Permutation(x) => x.n(),
            Object::PlanePartition(x) => x.n(),
            Object::FundamentalDomain(x) => x.n(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("objects always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

macro_rules! object_from {
    ($($variant:ident($ty:ty)),*) => {
        $(impl From<$ty> for Object {
            fn from(x: $ty) -> Self {
                Object::$variant(x)
            }
        })*
    };
}

object_from!(
    Asm(Asm),
    MonotoneTriangle(MonotoneTriangle),
    MagogTriangle(MagogTriangle),
    BooleanTriangle(BooleanTriangle),
    Nilp(NilpNest),
    Permutation(Permutation),
    PlanePartition(PlanePartition),
    FundamentalDomain(FundamentalDomain)
);
