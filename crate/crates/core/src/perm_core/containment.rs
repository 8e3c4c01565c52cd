//! Classical pattern containment.
//!
//! A pattern `γ₁…γₖ` occurs in `π` when some positions `j₁ < … < jₖ` satisfy
//! `π_{jₐ} < π_{j_b} ⇔ γₐ < γ_b`. The matcher picks positions left to right.
//! Each pattern index `i` records which earlier index holds the next smaller
//! and next larger pattern value, so one comparison against each of those
//! two already-matched entries decides whether a candidate keeps the partial
//! match order-isomorphic. Candidates are also pruned by position: index `i`
//! may not sit so far right that the remaining `k − i − 1` indices no longer fit.

use std::fmt;
use std::str::FromStr;

use super::{PermError, Permutation};

/// Longest pattern accepted by the matcher.
pub const MAX_PATTERN_LEN: usize = 32;

/// A non-empty permutation used as a forbidden configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    perm: Permutation,
    /// For each index, the earlier index holding the largest smaller value.
    below: Vec<Option<u8>>,
    /// For each index, the earlier index holding the smallest larger value.
    above: Vec<Option<u8>>,
    /// Index of the largest value.
    max_index: usize,
}

impl Pattern {
    pub fn new(perm: Permutation) -> Result<Self, PermError> {
        let k = perm.len();
        if k == 0 {
            return Err(PermError::EmptyPattern);
        }
        if k > MAX_PATTERN_LEN {
            return Err(PermError::PatternTooLong { len: k, max: MAX_PATTERN_LEN });
        }
        let v = perm.values();
        let mut below = Vec::with_capacity(k);
        let mut above = Vec::with_capacity(k);
        for i in 0..k {
            let lo = (0..i).filter(|&j| v[j] < v[i]).max_by_key(|&j| v[j]);
            let hi = (0..i).filter(|&j| v[j] > v[i]).min_by_key(|&j| v[j]);
            below.push(lo.map(|j| j as u8));
            above.push(hi.map(|j| j as u8));
        }
        let max_index = v.iter().position(|&x| x as usize == k).unwrap_or(0);
        Ok(Pattern { perm, below, above, max_index })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn values(&self) -> &[u8] {
        self.perm.values()
    }

    pub fn reverse_complement(&self) -> Pattern {
        Pattern::new(self.perm.reverse_complement()).expect("non-empty pattern")
    }

    /// Whether the occurrence may use `text[pos]` for pattern index `i`,
    /// given the values already matched.
    #[inline]
    fn fits(&self, i: usize, value: u8, matched: &[u8; MAX_PATTERN_LEN]) -> bool {
        if let Some(lo) = self.below[i] {
            if value <= matched[lo as usize] {
                return false;
            }
        }
        if let Some(hi) = self.above[i] {
            if value >= matched[hi as usize] {
                return false;
            }
        }
        true
    }
}

impl TryFrom<Permutation> for Pattern {
    type Error = PermError;

    fn try_from(perm: Permutation) -> Result<Self, Self::Error> {
        Pattern::new(perm)
    }
}

impl FromStr for Pattern {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::new(s.parse()?)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

/// True iff some subsequence of `perm` is order-isomorphic to `pat`.
pub fn contains(perm: &Permutation, pat: &Pattern) -> bool {
    contains_in(perm.values(), pat)
}

pub(crate) fn contains_in(text: &[u8], pat: &Pattern) -> bool {
    if pat.len() > text.len() {
        return false;
    }
    let mut matched = [0u8; MAX_PATTERN_LEN];
    search(text, pat, 0, 0, None, &mut matched)
}

/// True iff `pat` occurs in `text` with its maximum matched to `text[pos]`.
///
/// Used for active-site tests: when `text` was obtained by inserting a new
/// global maximum at `pos` into a permutation avoiding `pat`, any new
/// occurrence has to run through that entry.
pub(crate) fn contains_through_max(text: &[u8], pat: &Pattern, pos: usize) -> bool {
    if pat.len() > text.len() {
        return false;
    }
    let m = pat.max_index;
    // Room for the pattern entries left and right of its maximum.
    if pos < m || text.len() - pos < pat.len() - m {
        return false;
    }
    let mut matched = [0u8; MAX_PATTERN_LEN];
    search(text, pat, 0, 0, Some((m, pos)), &mut matched)
}

fn search(
    text: &[u8],
    pat: &Pattern,
    i: usize,
    start: usize,
    pin: Option<(usize, usize)>,
    matched: &mut [u8; MAX_PATTERN_LEN],
) -> bool {
    let k = pat.len();
    if i == k {
        return true;
    }
    let mut lo = start;
    let mut hi = text.len() - (k - i);
    if let Some((pi, pos)) = pin {
        match i.cmp(&pi) {
            std::cmp::Ordering::Less => hi = hi.min(pos - (pi - i)),
            std::cmp::Ordering::Equal => {
                lo = lo.max(pos);
                hi = hi.min(pos);
            }
            std::cmp::Ordering::Greater => lo = lo.max(pos + 1),
        }
    }
    if lo > hi {
        return false;
    }
    for j in lo..=hi {
        let value = text[j];
        if !pat.fits(i, value, matched) {
            continue;
        }
        matched[i] = value;
        if search(text, pat, i + 1, j + 1, pin, matched) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    /// Definition-level oracle: try every index subset.
    fn contains_naive(perm: &[u8], pat: &[u8]) -> bool {
        (0..perm.len()).combinations(pat.len()).any(|idx| {
            idx.iter().enumerate().all(|(a, &ja)| {
                idx.iter()
                    .enumerate()
                    .all(|(b, &jb)| (perm[ja] < perm[jb]) == (pat[a] < pat[b]))
            })
        })
    }

    #[test]
    fn worked_examples() {
        assert!(contains(&p("7154326"), &pat("123")));
        assert!(!contains(&p("7465312"), &pat("123")));
        assert!(!contains(&Permutation::empty(), &pat("1")));
        assert!(contains(&p("6475231"), &pat("132")));
        assert!(!contains(&p("12"), &pat("123")));
    }

    #[test]
    fn empty_pattern_rejected() {
        assert_eq!(Pattern::new(Permutation::empty()), Err(PermError::EmptyPattern));
    }

    #[test]
    fn agrees_with_subset_oracle_exhaustively() {
        for n in 0..=6usize {
            for perm in (1..=n as u8).permutations(n) {
                for k in 1..=4usize {
                    for g in (1..=k as u8).permutations(k) {
                        let pattern = Pattern::new(Permutation::new(g.clone()).unwrap()).unwrap();
                        assert_eq!(
                            contains_in(&perm, &pattern),
                            contains_naive(&perm, &g),
                            "{perm:?} / {g:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pinned_search_only_counts_occurrences_through_the_maximum() {
        // 2143 avoids 123; inserting 5 at the end creates 1 4 5 and 2 4 5.
        let text = [2, 1, 4, 3, 5];
        assert!(contains_through_max(&text, &pat("123"), 4));
        let text = [5, 2, 1, 4, 3];
        assert!(!contains_through_max(&text, &pat("123"), 0));
        // Occurrence exists but not through the pinned entry.
        let text = [5, 1, 2, 3, 4];
        assert!(contains_in(&text, &pat("123")));
        assert!(!contains_through_max(&text, &pat("123"), 0));
    }
}
