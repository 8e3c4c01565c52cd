//! The k-indexed pattern families and the named classes built from them,
//! each tied to its succession rule and generating function.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::counts::CountSeries;
use crate::genfunc::{self, ChainKind, GfError, RationalGF};
use crate::perm_core::{AvoidanceClass, Pattern, PermError, Permutation};
use crate::succession::{RuleError, SuccessionRule};

/// Largest `k` accepted anywhere in the catalog.
pub const MAX_K: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("{id} is not defined for k = {k} (admissible: {min}..={max})")]
    KOutOfRange { id: String, k: u32, min: u32, max: u32 },
    #[error("{0} needs a value for k")]
    MissingK(String),
    #[error("{0} takes no k")]
    UnexpectedK(String),
    #[error("invalid basis `{0}`: patterns are one-line words over the digits 1-9")]
    InvalidBasis(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Rule(#[from] RuleError),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// The five families of patterns, each a word of length `k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternFamily {
    /// `k(k−1)…21(k+1)`
    R,
    /// `1(k+1)k…2`
    Q,
    /// `(k−1)…21(k+1)k`
    P,
    /// `21(k+1)k…43`
    S,
    /// Taken equal to `r_k`, so that `w₃ = 3214`.
    W,
}

impl PatternFamily {
    pub const ALL: [PatternFamily; 5] =
        [PatternFamily::R, PatternFamily::Q, PatternFamily::P, PatternFamily::S, PatternFamily::W];

    pub fn name(self) -> &'static str {
        match self {
            PatternFamily::R => "r",
            PatternFamily::Q => "q",
            PatternFamily::P => "p",
            PatternFamily::S => "s",
            PatternFamily::W => "w",
        }
    }

    pub fn min_k(self) -> u32 {
        match self {
            PatternFamily::R | PatternFamily::Q | PatternFamily::P => 2,
            PatternFamily::S | PatternFamily::W => 3,
        }
    }

    pub fn generate(self, k: u32) -> Result<Pattern, CatalogError> {
        check_k(self.name(), k, self.min_k())?;
        let k8 = k as u8;
        let word: Vec<u8> = match self {
            PatternFamily::R | PatternFamily::W => (1..=k8).rev().chain([k8 + 1]).collect(),
            PatternFamily::Q => [1].into_iter().chain((2..=k8 + 1).rev()).collect(),
            PatternFamily::P => (1..k8).rev().chain([k8 + 1, k8]).collect(),
            PatternFamily::S => [2, 1].into_iter().chain((3..=k8 + 1).rev()).collect(),
        };
        Ok(Pattern::try_from(Permutation::new(word)?)?)
    }
}

impl FromStr for PatternFamily {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PatternFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CatalogError::UnknownClass(s.to_string()))
    }
}

pub fn family_r(k: u32) -> Result<Pattern, CatalogError> {
    PatternFamily::R.generate(k)
}

pub fn family_q(k: u32) -> Result<Pattern, CatalogError> {
    PatternFamily::Q.generate(k)
}

pub fn family_p(k: u32) -> Result<Pattern, CatalogError> {
    PatternFamily::P.generate(k)
}

pub fn family_s(k: u32) -> Result<Pattern, CatalogError> {
    PatternFamily::S.generate(k)
}

pub fn family_w(k: u32) -> Result<Pattern, CatalogError> {
    PatternFamily::W.generate(k)
}

fn check_k(id: &str, k: u32, min: u32) -> Result<(), CatalogError> {
    if k < min || k > MAX_K {
        return Err(CatalogError::KOutOfRange { id: id.to_string(), k, min, max: MAX_K });
    }
    Ok(())
}

/// How an entry's generating function is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GfSource {
    Rational(RationalGF),
    /// Not rational; terms come from the Catalan recurrence.
    Catalan,
}

impl GfSource {
    pub fn series(&self, n_max: usize) -> Result<CountSeries, GfError> {
        match self {
            GfSource::Rational(gf) => gf.series(n_max),
            GfSource::Catalan => genfunc::catalan_terms(n_max),
        }
    }
}

impl fmt::Display for GfSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfSource::Rational(gf) => gf.fmt(f),
            GfSource::Catalan => f.write_str("(1 - sqrt(1 - 4*x))/(2*x)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassCatalogEntry {
    Fib,
    /// `{123, 213, 312}`: counted by `n`, kept to document that it is not Fibonacci.
    FibAlt,
    Gfib,
    Gfib2,
    Pow2,
    Pow2B,
    Cat1,
    Cat2,
    Direct,
    Pell,
    Evf1,
    Evf2,
    Catalan,
}

use ClassCatalogEntry as E;

/// Every entry, in table order.
pub fn catalog() -> &'static [ClassCatalogEntry] {
    &[
        E::Fib, E::FibAlt, E::Gfib, E::Gfib2, E::Pow2, E::Pow2B, E::Cat1, E::Cat2, E::Direct,
        E::Pell, E::Evf1, E::Evf2, E::Catalan,
    ]
}

impl ClassCatalogEntry {
    pub fn id(self) -> &'static str {
        match self {
            E::Fib => "FIB",
            E::FibAlt => "FIB_ALT",
            E::Gfib => "GFIB",
            E::Gfib2 => "GFIB2",
            E::Pow2 => "POW2",
            E::Pow2B => "POW2B",
            E::Cat1 => "CAT1",
            E::Cat2 => "CAT2",
            E::Direct => "DIRECT",
            E::Pell => "PELL",
            E::Evf1 => "EVF1",
            E::Evf2 => "EVF2",
            E::Catalan => "CATALAN",
        }
    }

    /// Smallest admissible `k`, or `None` for entries without a parameter.
    pub fn min_k(self) -> Option<u32> {
        match self {
            E::Gfib | E::Gfib2 | E::Cat1 | E::Cat2 | E::Direct => Some(2),
            E::Evf1 | E::Evf2 => Some(3),
            _ => None,
        }
    }

    pub fn is_k_indexed(self) -> bool {
        self.min_k().is_some()
    }

    pub fn sequence_name(self) -> &'static str {
        match self {
            E::Fib => "Fibonacci",
            E::FibAlt => "n",
            E::Gfib | E::Gfib2 => "k-generalized Fibonacci",
            E::Pow2 | E::Pow2B => "2^(n-1)",
            E::Cat1 => "P_k convergents",
            E::Cat2 => "M_k convergents",
            E::Direct => "D_k convergents (Pell to Catalan)",
            E::Pell => "Pell",
            E::Evf1 | E::Evf2 => "Fbar_k",
            E::Catalan => "Catalan",
        }
    }

    pub fn gf_id(self) -> &'static str {
        match self {
            E::Fib => "fib",
            E::FibAlt => "linear",
            E::Gfib | E::Gfib2 => "tk",
            E::Pow2 | E::Pow2B => "pow2",
            E::Cat1 => "convergentP",
            E::Cat2 => "convergentM",
            E::Direct => "convergentD",
            E::Pell | E::Evf1 | E::Evf2 => "fbark",
            E::Catalan => "catalan",
        }
    }

    pub fn rule_id(self) -> &'static str {
        match self {
            E::Fib => "rsfibo",
            E::FibAlt => "linear",
            E::Gfib => "gfib",
            E::Gfib2 => "gfib2",
            E::Pow2 => "rs2fin",
            E::Pow2B => "pow2",
            E::Cat1 => "cat1",
            E::Cat2 => "omega",
            E::Direct => "direct",
            E::Pell => "direct(3)",
            E::Evf1 => "evf1",
            E::Evf2 => "evf2",
            E::Catalan => "rscat",
        }
    }

    /// Validates `k` against the entry, returning the `k` to build with.
    fn resolve_k(self, k: Option<u32>) -> Result<u32, CatalogError> {
        match (self.min_k(), k) {
            (None, None) => Ok(0),
            (None, Some(_)) => Err(CatalogError::UnexpectedK(self.id().into())),
            (Some(_), None) => Err(CatalogError::MissingK(self.id().into())),
            (Some(min), Some(k)) => check_k(self.id(), k, min).map(|_| k),
        }
    }

    pub fn basis(self, k: Option<u32>) -> Result<Vec<Pattern>, CatalogError> {
        let k = self.resolve_k(k)?;
        let fixed = |words: &[&str]| -> Result<Vec<Pattern>, CatalogError> {
            words.iter().map(|w| w.parse().map_err(CatalogError::from)).collect()
        };
        let with = |words: &[&str], extra: Vec<Pattern>| -> Result<Vec<Pattern>, CatalogError> {
            let mut b = fixed(words)?;
            b.extend(extra);
            Ok(b)
        };
        match self {
            E::Fib => fixed(&["123", "132", "213"]),
            E::FibAlt => fixed(&["123", "213", "312"]),
            E::Gfib => with(&["123", "213"], vec![family_q(k)?]),
            E::Gfib2 => with(&["123", "132"], vec![family_r(k)?]),
            E::Pow2 => fixed(&["123", "213"]),
            E::Pow2B => fixed(&["123", "132"]),
            E::Cat1 => with(&["123"], vec![family_r(k)?]),
            E::Cat2 => with(&["123"], vec![family_p(k)?]),
            E::Direct => with(&["123"], vec![family_p(k)?, family_r(k)?]),
            E::Pell => fixed(&["123", "2143", "3214"]),
            E::Evf1 => with(&["123", "3214"], vec![family_s(k)?]),
            E::Evf2 => with(&["123", "2143"], vec![family_w(k)?]),
            E::Catalan => fixed(&["123"]),
        }
    }

    pub fn class(self, k: Option<u32>) -> Result<AvoidanceClass, CatalogError> {
        let basis = self.basis(k)?;
        let name = match k {
            Some(k) if self.is_k_indexed() => format!("{}({k})", self.id()),
            _ => self.id().to_string(),
        };
        let cls = AvoidanceClass::new(name, basis)?;
        Ok(match k {
            Some(k) => cls.with_k(k),
            None => cls,
        })
    }

    pub fn rule(self, k: Option<u32>) -> Result<SuccessionRule, CatalogError> {
        let k = self.resolve_k(k)?;
        Ok(match self {
            E::Fib => SuccessionRule::rsfibo(),
            E::FibAlt => SuccessionRule::linear(),
            E::Gfib => SuccessionRule::gfib(k)?,
            E::Gfib2 => SuccessionRule::gfib2(k)?,
            E::Pow2 => SuccessionRule::rs2fin(),
            E::Pow2B => SuccessionRule::pow2(),
            E::Cat1 => SuccessionRule::cat1(k)?,
            E::Cat2 if k == 2 => SuccessionRule::pow2(),
            E::Cat2 => SuccessionRule::omega(k)?,
            E::Direct => SuccessionRule::direct(k)?,
            E::Pell => SuccessionRule::direct(3)?,
            E::Evf1 => SuccessionRule::evf1(k)?,
            E::Evf2 => SuccessionRule::evf2(k)?,
            E::Catalan => SuccessionRule::rscat(),
        })
    }

    pub fn gf(self, k: Option<u32>) -> Result<GfSource, CatalogError> {
        let k = self.resolve_k(k)?;
        let gf = match self {
            E::Fib => genfunc::fib_gf(),
            E::FibAlt => genfunc::linear_gf(),
            E::Gfib | E::Gfib2 => genfunc::tk_gf(k)?,
            E::Pow2 | E::Pow2B => genfunc::pow2_gf(),
            E::Cat1 => genfunc::convergent_chain(ChainKind::P, k)?,
            E::Cat2 if k == 2 => genfunc::pow2_gf(),
            E::Cat2 => genfunc::convergent_chain(ChainKind::M, k)?,
            E::Direct => genfunc::convergent_chain(ChainKind::D, k)?,
            E::Pell => genfunc::fbark_gf(3)?,
            E::Evf1 | E::Evf2 => genfunc::fbark_gf(k)?,
            E::Catalan => return Ok(GfSource::Catalan),
        };
        Ok(GfSource::Rational(gf))
    }

    /// Admissible `k` values within `range`, or `[None]` for unparameterized entries.
    pub fn ks_within(self, range: std::ops::RangeInclusive<u32>) -> Vec<Option<u32>> {
        match self.min_k() {
            None => vec![None],
            Some(min) => range.filter(|&k| k >= min && k <= MAX_K).map(Some).collect(),
        }
    }
}

impl fmt::Display for ClassCatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClassCatalogEntry {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        catalog()
            .iter()
            .copied()
            .find(|e| e.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CatalogError::UnknownClass(s.to_string()))
    }
}

/// Entry `id` with its class built for `k`.
pub fn lookup(id: &str, k: Option<u32>) -> Result<(ClassCatalogEntry, AvoidanceClass), CatalogError> {
    let entry: ClassCatalogEntry = id.parse()?;
    let cls = entry.class(k)?;
    Ok((entry, cls))
}

/// Class of a raw comma-separated basis such as `"123,213,1432"`. Patterns
/// use the digits 1-9 only.
pub fn class_from_basis(text: &str) -> Result<AvoidanceClass, CatalogError> {
    let words: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = |w: &str| w.is_empty() || w.len() > 9 || !w.bytes().all(|b| (b'1'..=b'9').contains(&b));
    if words.iter().any(|w| bad(w)) {
        return Err(CatalogError::InvalidBasis(text.to_string()));
    }
    Ok(AvoidanceClass::from_patterns(&words)?)
}

/// Tab-separated catalog (`id, k, basis, sequence`), parameterized entries
/// listed for every admissible `k` in `ks`.
pub fn catalog_tsv(ks: std::ops::RangeInclusive<u32>) -> Result<String, CatalogError> {
    let mut out = String::from("id\tk\tbasis\tsequence\n");
    for &entry in catalog() {
        for k in entry.ks_within(ks.clone()) {
            let cls = entry.class(k)?;
            let k_text = k.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                entry.id(),
                k_text,
                cls.basis_string(),
                entry.sequence_name()
            ));
        }
    }
    Ok(out)
}
