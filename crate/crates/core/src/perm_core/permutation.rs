use std::fmt;
use std::str::FromStr;

use super::PermError;

/// Longest permutation representable; values are stored as `u8`.
pub const MAX_LEN: usize = u8::MAX as usize;

/// A permutation `π₁π₂…πₙ` of `{1, …, n}` in one-line notation.
///
/// The empty permutation (`n = 0`) is a valid value.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

/// A gap in a permutation of length `n`, numbered `1..=n+1`; site `i` sits
/// immediately before `πᵢ` and site `n+1` is the trailing gap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SiteIndex(usize);

impl SiteIndex {
    /// Site `index` in a permutation of length `len`.
    pub fn new(index: usize, len: usize) -> Result<Self, PermError> {
        if index == 0 || index > len + 1 {
            return Err(PermError::InvalidSite { site: index, len });
        }
        Ok(SiteIndex(index))
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub(crate) fn from_gap(gap: usize) -> Self {
        SiteIndex(gap + 1)
    }
}

impl fmt::Display for SiteIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Permutation {
    /// Validates that `values` is a bijection on `{1, …, len}`.
    pub fn new(values: Vec<u8>) -> Result<Self, PermError> {
        if values.len() > MAX_LEN {
            return Err(PermError::TooLong { len: values.len() });
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(values));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    /// `n (n-1) … 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n as u8).rev().collect())
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// Places the new maximum `n+1` into `site`, shifting later entries right.
    pub fn insert_max(&self, site: SiteIndex) -> Result<Permutation, PermError> {
        let n = self.len();
        if site.0 > n + 1 {
            return Err(PermError::InvalidSite { site: site.0, len: n });
        }
        if n + 1 > MAX_LEN {
            return Err(PermError::TooLong { len: n + 1 });
        }
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&self.0[..site.0 - 1]);
        values.push((n + 1) as u8);
        values.extend_from_slice(&self.0[site.0 - 1..]);
        Ok(Permutation(values))
    }

    /// Removes the entry `n`; the inverse of [`Permutation::insert_max`].
    pub fn remove_max(&self) -> Permutation {
        let n = self.len() as u8;
        Permutation(self.0.iter().copied().filter(|&v| v != n).collect())
    }

    /// Position-reversed, value-complemented permutation (`v ↦ n+1−v`).
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len() as u8;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    /// Reduces any sequence of distinct values to the permutation with the
    /// same relative order.
    pub fn standardize(values: &[u32]) -> Result<Permutation, PermError> {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by_key(|&i| values[i]);
        if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
            return Err(PermError::NotAPermutation(
                values.iter().map(|&v| v.min(255) as u8).collect(),
            ));
        }
        if values.len() > MAX_LEN {
            return Err(PermError::TooLong { len: values.len() });
        }
        let mut out = vec![0u8; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = (rank + 1) as u8;
        }
        Ok(Permutation(out))
    }
}

impl fmt::Display for Permutation {
    /// Digits run together when every value is a single digit (`7465312`),
    /// otherwise values are separated by spaces. The empty permutation prints
    /// as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        if self.0.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts one-line digit strings (`"2143"`), space- or dot-separated values
    /// for longer permutations, and `ε` or the empty string for the empty one.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "ε" || s == "e" {
            return Ok(Permutation::empty());
        }
        let values: Vec<u8> = if s.contains(|c: char| c.is_whitespace() || c == '.') {
            s.split(|c: char| c.is_whitespace() || c == '.')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u8>().map_err(|_| PermError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| PermError::Parse(s.to_string()))
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}
