//! Permutations, classical pattern containment, avoidance classes and their
//! generating trees.

mod brute;
mod class;
mod containment;
mod eco;
mod permutation;

pub use brute::{all_permutations, brute_force_counts, brute_force_level};
pub use class::{active_sites, avoids_all, AvoidanceClass};
pub use containment::{contains, Pattern, MAX_PATTERN_LEN};
pub use eco::{eco_counts, eco_enumerate, eco_stats, EcoStats, Limits};
pub use permutation::{Permutation, SiteIndex, MAX_LEN};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not a permutation of 1..n: {0:?}")]
    NotAPermutation(Vec<u8>),
    #[error("cannot parse permutation `{0}`")]
    Parse(String),
    #[error("permutation of length {len} exceeds the supported maximum")]
    TooLong { len: usize },
    #[error("patterns must be non-empty")]
    EmptyPattern,
    #[error("pattern of length {len} exceeds the supported maximum {max}")]
    PatternTooLong { len: usize, max: usize },
    #[error("site {site} is not a gap of a permutation of length {len}")]
    InvalidSite { site: usize, len: usize },
    #[error("{perm} is not a member of {class}")]
    NotInClass { perm: String, class: String },
    #[error("a basis needs at least one pattern")]
    EmptyBasis,
    #[error("pattern {0} appears twice in the basis")]
    DuplicatePattern(String),
    #[error("generating tree exceeded the node cap of {cap} at level {level}")]
    NodeCapExceeded { level: usize, cap: u64 },
    #[error("brute force at n = {n} exceeds the factorial cap n <= {cap}")]
    FactorialCapExceeded { n: usize, cap: usize },
    #[error("count overflow")]
    Overflow,
}

/// Every child of `perm` obtained by inserting the new maximum, one per site.
pub fn insert_max_all(perm: &Permutation) -> Vec<Permutation> {
    (1..=perm.len() + 1)
        .map(|s| {
            perm.insert_max(SiteIndex::new(s, perm.len()).expect("site in range"))
                .expect("length within bounds")
        })
        .collect()
}

/// Position-reversed, value-complemented permutation.
pub fn reverse_complement(perm: &Permutation) -> Permutation {
    perm.reverse_complement()
}

/// Inserts `n+1` at `site`.
pub fn insert_max(perm: &Permutation, site: SiteIndex) -> Result<Permutation, PermError> {
    perm.insert_max(site)
}
