//! Exact per-level count sequences shared by every enumeration method.

use std::fmt;

/// Exact integer used for all counts.
pub type Count = u128;

/// Counts indexed by length `n = 0, 1, 2, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountSeries(Vec<Count>);

impl CountSeries {
    pub fn new(terms: Vec<Count>) -> Self {
        CountSeries(terms)
    }

    pub fn terms(&self) -> &[Count] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<Count> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, n: usize) -> Option<Count> {
        self.0.get(n).copied()
    }

    /// Series restricted to the first `len` terms.
    pub fn truncated(&self, len: usize) -> CountSeries {
        CountSeries(self.0.iter().take(len).copied().collect())
    }

    /// Index of the first term where the two series differ, comparing only the
    /// common prefix.
    pub fn first_mismatch(&self, other: &CountSeries) -> Option<usize> {
        self.0
            .iter()
            .zip(other.0.iter())
            .position(|(a, b)| a != b)
    }

    /// Comma-separated terms, e.g. `1,1,2,5,14`.
    pub fn to_csv_string(&self) -> String {
        self.0
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for CountSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv_string())
    }
}

impl From<Vec<Count>> for CountSeries {
    fn from(v: Vec<Count>) -> Self {
        CountSeries(v)
    }
}

impl FromIterator<Count> for CountSeries {
    fn from_iter<I: IntoIterator<Item = Count>>(iter: I) -> Self {
        CountSeries(iter.into_iter().collect())
    }
}

impl PartialEq<[Count]> for CountSeries {
    fn eq(&self, other: &[Count]) -> bool {
        self.0 == other
    }
}

impl<const N: usize> PartialEq<[Count; N]> for CountSeries {
    fn eq(&self, other: &[Count; N]) -> bool {
        self.0 == other
    }
}
