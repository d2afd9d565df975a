//! Alternating sign matrices, totally symmetric self-complementary plane
//! partitions, the triangular arrays encoding them, and the posets they carry.
//!
//! ```
//! use tsscpp::bijections::permutation_to_boolean;
//! use tsscpp::statistics::boolean_zero_count;
//!
//! let sigma = "463512".parse().unwrap();
//! assert_eq!(boolean_zero_count(&permutation_to_boolean(&sigma)), 11);
//! ```

pub mod bijections;
pub mod claims;
pub mod enumerate;
pub mod error;
pub mod orders;
pub mod poset;
pub mod statistics;
pub mod triangles;

pub use error::{Error, Result};
pub use triangles::*;

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/triangles.md")]
    mod triangles {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    mod statistics {}
    #[doc = include_str!("../../../book/src/posets.md")]
    mod posets {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
