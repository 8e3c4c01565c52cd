use std::fmt;

use super::containment::{contains_in, contains_through_max};
use super::{PermError, Permutation, SiteIndex};
use crate::perm_core::Pattern;

/// `S(B)`: the permutations avoiding every pattern of the basis `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidanceClass {
    name: String,
    basis: Vec<Pattern>,
    k: Option<u32>,
}

impl AvoidanceClass {
    pub fn new(name: impl Into<String>, basis: Vec<Pattern>) -> Result<Self, PermError> {
        if basis.is_empty() {
            return Err(PermError::EmptyBasis);
        }
        for (i, a) in basis.iter().enumerate() {
            if basis[..i].contains(a) {
                return Err(PermError::DuplicatePattern(a.to_string()));
            }
        }
        Ok(AvoidanceClass { name: name.into(), basis, k: None })
    }

    /// Builds a class from one-line patterns, named after its basis.
    pub fn from_patterns(patterns: &[&str]) -> Result<Self, PermError> {
        let basis = patterns
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Pattern>, _>>()?;
        let name = format!("S({})", patterns.join(","));
        AvoidanceClass::new(name, basis)
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[Pattern] {
        &self.basis
    }

    pub fn k(&self) -> Option<u32> {
        self.k
    }

    /// Basis in one-line form, comma separated.
    pub fn basis_string(&self) -> String {
        self.basis
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Same set of patterns, regardless of order.
    pub fn same_basis(&self, other: &AvoidanceClass) -> bool {
        self.basis.len() == other.basis.len() && self.basis.iter().all(|p| other.basis.contains(p))
    }

    pub(crate) fn avoids_values(&self, values: &[u8]) -> bool {
        self.basis.iter().all(|p| !contains_in(values, p))
    }

    /// Active gaps (0-based) of `values`, which must already avoid the basis.
    /// `scratch` is reused to hold the child permutation.
    pub(crate) fn active_gaps_into(&self, values: &[u8], scratch: &mut Vec<u8>, out: &mut Vec<usize>) {
        out.clear();
        let new_max = (values.len() + 1) as u8;
        for gap in 0..=values.len() {
            scratch.clear();
            scratch.extend_from_slice(&values[..gap]);
            scratch.push(new_max);
            scratch.extend_from_slice(&values[gap..]);
            if self.basis.iter().all(|p| !contains_through_max(scratch, p, gap)) {
                out.push(gap);
            }
        }
    }
}

impl fmt::Display for AvoidanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// True iff `perm` contains none of the patterns of `cls`.
pub fn avoids_all(perm: &Permutation, cls: &AvoidanceClass) -> bool {
    cls.avoids_values(perm.values())
}

/// Sites where inserting the new maximum keeps `perm` inside `cls`, in
/// increasing order.
pub fn active_sites(perm: &Permutation, cls: &AvoidanceClass) -> Result<Vec<SiteIndex>, PermError> {
    if !avoids_all(perm, cls) {
        return Err(PermError::NotInClass {
            perm: perm.to_string(),
            class: cls.name().to_string(),
        });
    }
    let mut scratch = Vec::with_capacity(perm.len() + 1);
    let mut gaps = Vec::new();
    cls.active_gaps_into(perm.values(), &mut scratch, &mut gaps);
    Ok(gaps.into_iter().map(SiteIndex::from_gap).collect())
}
