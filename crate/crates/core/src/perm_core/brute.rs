//! Independent oracle: walk all of `Sₙ` in lexicographic order and keep the
//! permutations that avoid the basis.

use rayon::prelude::*;

use super::{AvoidanceClass, PermError, Permutation};
use crate::counts::{Count, CountSeries};

/// Rearranges `v` into the next permutation in lexicographic order; returns
/// `false` (leaving `v` sorted ascending) after the last one.
pub(crate) fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn check_cap(n: usize, cap: usize) -> Result<(), PermError> {
    if n > cap {
        return Err(PermError::FactorialCapExceeded { n, cap });
    }
    Ok(())
}

/// Runs `f` over every permutation of length `n` starting with `first`.
fn for_each_with_first(n: usize, first: u8, mut f: impl FnMut(&[u8])) {
    let mut v: Vec<u8> = std::iter::once(first)
        .chain((1..=n as u8).filter(|&x| x != first))
        .collect();
    loop {
        f(&v);
        if !next_permutation(&mut v[1..]) {
            break;
        }
    }
}

fn count_level(cls: &AvoidanceClass, n: usize) -> Count {
    if n == 0 {
        return cls.avoids_values(&[]) as Count;
    }
    (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut c: Count = 0;
            for_each_with_first(n, first, |v| {
                if cls.avoids_values(v) {
                    c += 1;
                }
            });
            c
        })
        .sum()
}

/// `|Sₙ(B)|` for `n = 0..=n_max`, by filtering all `n!` permutations.
pub fn brute_force_counts(
    cls: &AvoidanceClass,
    n_max: usize,
    factorial_cap: usize,
) -> Result<CountSeries, PermError> {
    check_cap(n_max, factorial_cap)?;
    Ok((0..=n_max).map(|n| count_level(cls, n)).collect())
}

/// The members of `Sₙ(B)` in lexicographic order.
pub fn brute_force_level(
    cls: &AvoidanceClass,
    n: usize,
    factorial_cap: usize,
) -> Result<Vec<Permutation>, PermError> {
    check_cap(n, factorial_cap)?;
    if n == 0 {
        return Ok(if cls.avoids_values(&[]) { vec![Permutation::empty()] } else { vec![] });
    }
    let chunks: Vec<Vec<Permutation>> = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            for_each_with_first(n, first, |v| {
                if cls.avoids_values(v) {
                    out.push(Permutation::from_vec_unchecked(v.to_vec()));
                }
            });
            out
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Every permutation of length `n`, lexicographically.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut state: Option<Vec<u8>> = Some((1..=n as u8).collect());
    std::iter::from_fn(move || {
        let cur = state.take()?;
        let mut next = cur.clone();
        if next_permutation(&mut next) {
            state = Some(next);
        }
        Some(Permutation::from_vec_unchecked(cur))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(b: &[&str]) -> AvoidanceClass {
        AvoidanceClass::from_patterns(b).unwrap()
    }

    #[test]
    fn lexicographic_walk_covers_sn() {
        let all: Vec<String> = all_permutations(3).map(|p| p.to_string()).collect();
        assert_eq!(all, vec!["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(6).count(), 720);
        assert_eq!(all_permutations(0).count(), 1);
    }

    #[test]
    fn golden_counts() {
        assert_eq!(brute_force_counts(&class(&["123", "213"]), 5, 9).unwrap(), [1, 1, 2, 4, 8, 16]);
        assert_eq!(brute_force_counts(&class(&["1"]), 3, 9).unwrap(), [1, 0, 0, 0]);
        assert_eq!(
            brute_force_counts(&class(&["123", "2143", "3214"]), 6, 9).unwrap(),
            [1, 1, 2, 5, 12, 29, 70]
        );
    }

    #[test]
    fn factorial_cap_enforced() {
        assert_eq!(
            brute_force_counts(&class(&["123"]), 10, 9),
            Err(PermError::FactorialCapExceeded { n: 10, cap: 9 })
        );
        assert!(brute_force_level(&class(&["123"]), 4, 3).is_err());
    }

    #[test]
    fn level_is_sorted_and_filtered() {
        let lvl = brute_force_level(&class(&["123", "132", "213"]), 4, 9).unwrap();
        let shown: Vec<String> = lvl.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["3412", "3421", "4231", "4312", "4321"]);
    }
}
