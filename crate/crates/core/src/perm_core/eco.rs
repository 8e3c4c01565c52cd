//! Generating-tree (ECO) construction: level `n+1` is obtained from level `n`
//! by inserting `n+1` into every active site.
//!
//! Avoidance classes are closed under deleting the maximum, so every member
//! of length `n+1` has exactly one parent and the tree lists each member once.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::{AvoidanceClass, PermError, Permutation};
use crate::counts::{Count, CountSeries};

/// Resource caps shared by the enumerators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which the brute-force oracle walks all of `Sₙ`.
    pub factorial_cap: usize,
    /// Largest number of generating-tree nodes an ECO run may visit.
    pub node_cap: u64,
}

impl Limits {
    pub const DEFAULT_FACTORIAL_CAP: usize = 9;
    pub const DEFAULT_NODE_CAP: u64 = 5_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            factorial_cap: Self::DEFAULT_FACTORIAL_CAP,
            node_cap: Self::DEFAULT_NODE_CAP,
        }
    }
}

/// Per-level statistics of a streamed generating tree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EcoStats {
    /// Number of nodes on each level `0..=n_max`.
    pub counts: CountSeries,
    /// For each level, how many nodes have a given number of active sites.
    pub site_histograms: Vec<BTreeMap<usize, Count>>,
}

/// All levels `0..=n_max` of the generating tree, each in generation order.
///
/// Fails with [`PermError::NodeCapExceeded`] instead of truncating when the
/// stored tree would exceed `node_cap` nodes.
pub fn eco_enumerate(
    cls: &AvoidanceClass,
    n_max: usize,
    node_cap: u64,
) -> Result<Vec<Vec<Permutation>>, PermError> {
    let mut levels = vec![vec![Permutation::empty()]];
    let mut stored: u64 = 1;
    let mut scratch = Vec::new();
    let mut gaps = Vec::new();
    for n in 0..n_max {
        let mut next = Vec::new();
        for perm in &levels[n] {
            cls.active_gaps_into(perm.values(), &mut scratch, &mut gaps);
            stored += gaps.len() as u64;
            if stored > node_cap {
                return Err(PermError::NodeCapExceeded { level: n + 1, cap: node_cap });
            }
            for &gap in &gaps {
                let mut child = Vec::with_capacity(n + 1);
                child.extend_from_slice(&perm.values()[..gap]);
                child.push((n + 1) as u8);
                child.extend_from_slice(&perm.values()[gap..]);
                next.push(Permutation::from_vec_unchecked(child));
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Level sizes only; see [`eco_stats`].
pub fn eco_counts(cls: &AvoidanceClass, n_max: usize, limits: &Limits) -> Result<CountSeries, PermError> {
    Ok(eco_stats(cls, n_max, limits)?.counts)
}

/// Streams the generating tree down to level `n_max` without storing it,
/// recording level sizes and the active-site distribution of every level.
///
/// Subtrees below a shallow frontier are explored in parallel; the result is
/// identical to a sequential run.
pub fn eco_stats(cls: &AvoidanceClass, n_max: usize, limits: &Limits) -> Result<EcoStats, PermError> {
    if n_max >= super::MAX_LEN {
        return Err(PermError::TooLong { len: n_max + 1 });
    }
    let visited = AtomicU64::new(0);
    let mut acc = Accumulator::new(n_max);

    // Breadth-first down to the frontier, then one task per frontier node.
    let split = n_max.min(6);
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    let mut scratch = Vec::new();
    let mut gaps = Vec::new();
    for n in 0..split {
        let mut next = Vec::new();
        for perm in &frontier {
            bump(&visited, limits.node_cap, n)?;
            cls.active_gaps_into(perm, &mut scratch, &mut gaps);
            acc.record(n, gaps.len())?;
            for &gap in &gaps {
                let mut child = perm.clone();
                child.insert(gap, (n + 1) as u8);
                next.push(child);
            }
        }
        frontier = next;
    }

    let parts: Vec<Result<Accumulator, PermError>> = frontier
        .into_par_iter()
        .map(|mut perm| {
            let mut local = Accumulator::new(n_max);
            let mut walker = Walker {
                cls,
                n_max,
                node_cap: limits.node_cap,
                visited: &visited,
                acc: &mut local,
            };
            walker.visit(&mut perm, split)?;
            Ok(local)
        })
        .collect();
    for part in parts {
        acc.merge(part?)?;
    }
    Ok(acc.finish())
}

fn bump(visited: &AtomicU64, cap: u64, level: usize) -> Result<(), PermError> {
    if visited.fetch_add(1, Ordering::Relaxed) + 1 > cap {
        return Err(PermError::NodeCapExceeded { level, cap });
    }
    Ok(())
}

struct Walker<'a> {
    cls: &'a AvoidanceClass,
    n_max: usize,
    node_cap: u64,
    visited: &'a AtomicU64,
    acc: &'a mut Accumulator,
}

impl Walker<'_> {
    fn visit(&mut self, perm: &mut Vec<u8>, level: usize) -> Result<(), PermError> {
        bump(self.visited, self.node_cap, level)?;
        let mut scratch = Vec::with_capacity(level + 1);
        let mut gaps = Vec::with_capacity(level + 1);
        self.cls.active_gaps_into(perm, &mut scratch, &mut gaps);
        self.acc.record(level, gaps.len())?;
        if level == self.n_max {
            return Ok(());
        }
        let new_max = (level + 1) as u8;
        for &gap in &gaps {
            perm.insert(gap, new_max);
            let res = self.visit(perm, level + 1);
            perm.remove(gap);
            res?;
        }
        Ok(())
    }
}

struct Accumulator {
    counts: Vec<Count>,
    hist: Vec<BTreeMap<usize, Count>>,
}

impl Accumulator {
    fn new(n_max: usize) -> Self {
        Accumulator {
            counts: vec![0; n_max + 1],
            hist: vec![BTreeMap::new(); n_max + 1],
        }
    }

    fn record(&mut self, level: usize, sites: usize) -> Result<(), PermError> {
        self.counts[level] = self.counts[level].checked_add(1).ok_or(PermError::Overflow)?;
        *self.hist[level].entry(sites).or_insert(0) += 1;
        Ok(())
    }

    fn merge(&mut self, other: Accumulator) -> Result<(), PermError> {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a = a.checked_add(b).ok_or(PermError::Overflow)?;
        }
        for (h, o) in self.hist.iter_mut().zip(other.hist) {
            for (sites, c) in o {
                let e = h.entry(sites).or_insert(0);
                *e = e.checked_add(c).ok_or(PermError::Overflow)?;
            }
        }
        Ok(())
    }

    fn finish(self) -> EcoStats {
        EcoStats {
            counts: CountSeries::new(self.counts),
            site_histograms: self.hist,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(b: &[&str]) -> AvoidanceClass {
        AvoidanceClass::from_patterns(b).unwrap()
    }

    fn sizes(levels: &[Vec<Permutation>]) -> Vec<usize> {
        levels.iter().map(Vec::len).collect()
    }

    #[test]
    fn level_sizes_catalan_and_fibonacci() {
        let cat = eco_enumerate(&class(&["123"]), 3, 1_000).unwrap();
        assert_eq!(sizes(&cat), vec![1, 1, 2, 5]);
        let fib = eco_enumerate(&class(&["123", "132", "213"]), 4, 1_000).unwrap();
        assert_eq!(sizes(&fib), vec![1, 1, 2, 3, 5]);
    }

    #[test]
    fn decreasing_permutations_only_for_12() {
        let levels = eco_enumerate(&class(&["12"]), 3, 100).unwrap();
        let shown: Vec<Vec<String>> = levels
            .iter()
            .map(|l| l.iter().map(|p| p.to_string()).collect())
            .collect();
        assert_eq!(shown, vec![vec!["ε"], vec!["1"], vec!["21"], vec!["321"]]);
    }

    #[test]
    fn node_cap_is_an_error_not_a_truncation() {
        let err = eco_enumerate(&class(&["123"]), 8, 100).unwrap_err();
        assert!(matches!(err, PermError::NodeCapExceeded { cap: 100, .. }));
        let limits = Limits { node_cap: 100, ..Limits::default() };
        assert!(matches!(
            eco_counts(&class(&["123"]), 8, &limits),
            Err(PermError::NodeCapExceeded { cap: 100, .. })
        ));
    }

    #[test]
    fn streamed_counts_match_stored_levels() {
        let cls = class(&["123", "3214"]);
        let levels = eco_enumerate(&cls, 9, 1_000_000).unwrap();
        let stats = eco_stats(&cls, 9, &Limits::default()).unwrap();
        let stored: Vec<Count> = levels.iter().map(|l| l.len() as Count).collect();
        assert_eq!(stats.counts.terms(), stored.as_slice());
        assert_eq!(stats.counts, [1, 1, 2, 5, 13, 34, 89, 233, 610, 1597]);
        // Σ active sites on level n = size of level n+1.
        for n in 0..9 {
            let sons: Count = stats.site_histograms[n].iter().map(|(s, c)| *s as Count * c).sum();
            assert_eq!(sons, stats.counts.terms()[n + 1]);
        }
    }

    #[test]
    fn empty_level_zero_only() {
        let stats = eco_stats(&class(&["1"]), 3, &Limits::default()).unwrap();
        assert_eq!(stats.counts, [1, 0, 0, 0]);
        assert_eq!(stats.site_histograms[0].get(&0), Some(&1));
    }
}
