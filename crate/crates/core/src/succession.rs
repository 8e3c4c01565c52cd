//! Succession rules and the level-by-level dynamics of their generating trees.
//!
//! A rule has an axiom label and a production `(k) ⤳ (e₁)(e₂)…(eₖ)` for each
//! label. Level counts come from pushing a multiset of labels through the
//! productions; no permutations are built.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::counts::{Count, CountSeries};
use crate::perm_core::{eco_stats, AvoidanceClass, Limits, PermError};

/// A node label: its number of sons, optionally tagged with a subscript that
/// separates labels of equal value but different production, e.g. `(2₀)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    pub value: u32,
    pub subscript: Option<u32>,
}

impl Label {
    pub const fn new(value: u32) -> Self {
        Label { value, subscript: None }
    }

    pub const fn sub(value: u32, subscript: u32) -> Self {
        Label { value, subscript: Some(subscript) }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.subscript {
            None => write!(f, "({})", self.value),
            Some(j) => write!(f, "({}_{})", self.value, j),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("rule {rule} has no production for label {label}")]
    UndefinedProduction { rule: String, label: Label },
    #[error("rule {rule}: label {label} produces {sons} sons")]
    ProductionSize { rule: String, label: Label, sons: u64 },
    #[error("rule {rule} is not defined for k = {k} (needs k >= {min})")]
    InadmissibleK { rule: String, k: u32, min: u32 },
    #[error("count overflow at level {level}")]
    Overflow { level: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A production: `(label, multiplicity)` pairs in the order they are written.
pub type Production = Vec<(Label, u64)>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    /// `(k) ⤳ (2)(3)…(k)(k+1)`.
    Catalan,
    /// `(2) ⤳ (1)(2)`.
    Fibonacci,
    /// `(2) ⤳ (2)(2)`.
    Pow2Finite,
    /// `(2ⱼ) ⤳ (2₀)(2ⱼ₊₁)`, `(2_{k−2}) ⤳ (2₀)(1)`.
    Gfib(u32),
    /// `(j) ⤳ (2)…(j)(j+1)` below `k`, `(k) ⤳ (2)…(k)(k)`.
    Cat1(u32),
    /// `(h) ⤳ (1)^{h−1}(h+1)` below `k`, `(k) ⤳ (1)^{k−1}(k)`.
    Gfib2(u32),
    /// `(h) ⤳ (1)^{h−1}(h+1)`.
    Pow2,
    /// `Ωₖ`.
    Omega(u32),
    /// `(h) ⤳ (2)…(h+1)` below `k`, `(k) ⤳ (2)…(k−1)(k−1)(k)`.
    Direct(u32),
    /// `(2) ⤳ (2)(3₀)`, `(3ⱼ) ⤳ (2)(3₀)(3ⱼ₊₁)`, `(3_{k−3}) ⤳ (2)(2)(3₀)`.
    Evf1(u32),
    /// `(h) ⤳ (2)^{h−1}(h+1)` below `k`, `(k) ⤳ (2)^{k−1}(k)`.
    Evf2(u32),
    /// `(2) ⤳ (1₀)(2)`, `(1₀) ⤳ (1₀)`: one node with two sons per level.
    Linear,
    Table(BTreeMap<Label, Vec<Label>>),
}

/// A succession rule with a fixed axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessionRule {
    name: String,
    axiom: Label,
    kind: Kind,
}

/// `(a)(a+1)…(b)`, empty when `a > b`.
fn run(out: &mut Production, a: u32, b: u32) {
    for v in a..=b {
        out.push((Label::new(v), 1));
    }
}

fn check_k(rule: &str, k: u32, min: u32) -> Result<(), RuleError> {
    if k < min {
        return Err(RuleError::InadmissibleK { rule: rule.to_string(), k, min });
    }
    Ok(())
}

impl SuccessionRule {
    fn build(name: String, kind: Kind) -> Self {
        SuccessionRule { name, axiom: Label::new(1), kind }
    }

    /// `(1)`, `(1) ⤳ (2)`, `(k) ⤳ (2)(3)…(k)(k+1)`: the class `S(123)`.
    pub fn rscat() -> Self {
        Self::build("rscat".into(), Kind::Catalan)
    }

    /// `(1)`, `(1) ⤳ (2)`, `(2) ⤳ (1)(2)`: Fibonacci numbers.
    pub fn rsfibo() -> Self {
        Self::build("rsfibo".into(), Kind::Fibonacci)
    }

    /// `(1)`, `(1) ⤳ (2)`, `(2) ⤳ (2)(2)`: `2^{n−1}`.
    pub fn rs2fin() -> Self {
        Self::build("rs2fin".into(), Kind::Pow2Finite)
    }

    /// Subscripted rule for `S(123, 213, 1(k+1)k…2)`; k-generalized Fibonacci.
    pub fn gfib(k: u32) -> Result<Self, RuleError> {
        check_k("gfib", k, 2)?;
        Ok(Self::build(format!("gfib({k})"), Kind::Gfib(k)))
    }

    /// Rule of `S(123, k(k−1)…21(k+1))`.
    pub fn cat1(k: u32) -> Result<Self, RuleError> {
        check_k("cat1", k, 2)?;
        Ok(Self::build(format!("cat1({k})"), Kind::Cat1(k)))
    }

    /// Rule of `S(123, 132, k(k−1)…21(k+1))`; k-generalized Fibonacci.
    pub fn gfib2(k: u32) -> Result<Self, RuleError> {
        check_k("gfib2", k, 2)?;
        Ok(Self::build(format!("gfib2({k})"), Kind::Gfib2(k)))
    }

    /// `(h) ⤳ (1)^{h−1}(h+1)`: the class `S(123, 132)`.
    pub fn pow2() -> Self {
        Self::build("pow2".into(), Kind::Pow2)
    }

    /// `Ωₖ`, the rule of `S(123, (k−1)…21(k+1)k)`; unbounded labels.
    pub fn omega(k: u32) -> Result<Self, RuleError> {
        check_k("omega", k, 3)?;
        Ok(Self::build(format!("omega({k})"), Kind::Omega(k)))
    }

    /// Rule of `S(123, (k−1)…21(k+1)k, k(k−1)…21(k+1))`.
    pub fn direct(k: u32) -> Result<Self, RuleError> {
        check_k("direct", k, 2)?;
        Ok(Self::build(format!("direct({k})"), Kind::Direct(k)))
    }

    /// Subscripted rule for `S(123, 3214, 21(k+1)k…43)`.
    ///
    /// The special production of `(3_{k−3})` takes precedence over the generic
    /// `(3ⱼ)` line, so `k = 3` gives the Pell rule.
    pub fn evf1(k: u32) -> Result<Self, RuleError> {
        check_k("evf1", k, 3)?;
        Ok(Self::build(format!("evf1({k})"), Kind::Evf1(k)))
    }

    /// Rule of `S(123, 2143, k(k−1)…21(k+1))`.
    pub fn evf2(k: u32) -> Result<Self, RuleError> {
        check_k("evf2", k, 3)?;
        Ok(Self::build(format!("evf2({k})"), Kind::Evf2(k)))
    }

    /// Rule of `S(123, 213, 312)`, counted by `1, 1, 2, 3, 4, …`.
    pub fn linear() -> Self {
        Self::build("linear".into(), Kind::Linear)
    }

    /// A finite rule given explicitly. Labels without an entry have no
    /// production and make [`SuccessionRule::level_counts`] fail when reached.
    pub fn from_table(
        name: impl Into<String>,
        axiom: Label,
        productions: BTreeMap<Label, Vec<Label>>,
    ) -> Self {
        SuccessionRule { name: name.into(), axiom, kind: Kind::Table(productions) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn axiom(&self) -> Label {
        self.axiom
    }

    /// True when only finitely many labels can ever be reached.
    pub fn is_finite(&self) -> bool {
        !matches!(self.kind, Kind::Catalan | Kind::Pow2 | Kind::Omega(_))
    }

    fn undefined(&self, label: Label) -> RuleError {
        RuleError::UndefinedProduction { rule: self.name.clone(), label }
    }

    /// The sons of `label`, as a multiset in written order.
    pub fn produce(&self, label: Label) -> Result<Production, RuleError> {
        let mut out = Production::new();
        let h = label.value;
        let plain = label.subscript.is_none();
        let bad = || Err(self.undefined(label));
        match &self.kind {
            Kind::Catalan if plain && h >= 1 => run(&mut out, 2, h + 1),
            Kind::Fibonacci if plain && h == 1 => run(&mut out, 2, 2),
            Kind::Fibonacci if plain && h == 2 => {
                out.push((Label::new(1), 1));
                out.push((Label::new(2), 1));
            }
            Kind::Pow2Finite if plain && h == 1 => run(&mut out, 2, 2),
            Kind::Pow2Finite if plain && h == 2 => out.push((Label::new(2), 2)),
            Kind::Gfib(k) => match label.subscript {
                None if h == 1 => out.push((Label::sub(2, 0), 1)),
                Some(j) if h == 2 && j + 2 < *k => {
                    out.push((Label::sub(2, 0), 1));
                    out.push((Label::sub(2, j + 1), 1));
                }
                Some(j) if h == 2 && j + 2 == *k => {
                    out.push((Label::sub(2, 0), 1));
                    out.push((Label::new(1), 1));
                }
                _ => return bad(),
            },
            Kind::Cat1(k) if plain && h >= 1 && h < *k => run(&mut out, 2, h + 1),
            Kind::Cat1(k) if plain && h == *k => {
                run(&mut out, 2, h);
                out.push((Label::new(h), 1));
            }
            Kind::Gfib2(k) if plain && h >= 1 && h < *k => {
                if h > 1 {
                    out.push((Label::new(1), (h - 1) as u64));
                }
                out.push((Label::new(h + 1), 1));
            }
            Kind::Gfib2(k) if plain && h == *k => {
                out.push((Label::new(1), (h - 1) as u64));
                out.push((Label::new(h), 1));
            }
            Kind::Pow2 if plain && h >= 1 => {
                if h > 1 {
                    out.push((Label::new(1), (h - 1) as u64));
                }
                out.push((Label::new(h + 1), 1));
            }
            Kind::Omega(k) if plain && h >= 1 && h < *k => run(&mut out, 2, h + 1),
            Kind::Omega(k) if plain && h >= *k => {
                run(&mut out, 2, k - 2);
                out.push((Label::new(k - 1), (h + 2 - k) as u64));
                out.push((Label::new(h + 1), 1));
            }
            Kind::Direct(k) if plain && h >= 1 && h < *k => run(&mut out, 2, h + 1),
            Kind::Direct(k) if plain && h == *k => {
                run(&mut out, 2, k - 1);
                out.push((Label::new(k - 1), 1));
                out.push((Label::new(*k), 1));
            }
            Kind::Evf1(k) => match label.subscript {
                None if h == 1 => run(&mut out, 2, 2),
                None if h == 2 => {
                    out.push((Label::new(2), 1));
                    out.push((Label::sub(3, 0), 1));
                }
                Some(j) if h == 3 && j + 3 == *k => {
                    out.push((Label::new(2), 2));
                    out.push((Label::sub(3, 0), 1));
                }
                Some(j) if h == 3 && j + 3 < *k => {
                    out.push((Label::new(2), 1));
                    out.push((Label::sub(3, 0), 1));
                    out.push((Label::sub(3, j + 1), 1));
                }
                _ => return bad(),
            },
            Kind::Evf2(k) if plain && h >= 1 && h < *k => {
                if h > 1 {
                    out.push((Label::new(2), (h - 1) as u64));
                }
                out.push((Label::new(h + 1), 1));
            }
            Kind::Evf2(k) if plain && h == *k => {
                out.push((Label::new(2), (h - 1) as u64));
                out.push((Label::new(h), 1));
            }
            Kind::Linear => match (h, label.subscript) {
                (1, None) => run(&mut out, 2, 2),
                (2, None) => {
                    out.push((Label::sub(1, 0), 1));
                    out.push((Label::new(2), 1));
                }
                (1, Some(0)) => out.push((Label::sub(1, 0), 1)),
                _ => return bad(),
            },
            Kind::Table(map) => {
                let sons = map.get(&label).ok_or_else(|| self.undefined(label))?;
                for s in sons {
                    out.push((*s, 1));
                }
            }
            _ => return bad(),
        }
        Ok(out)
    }

    /// [`SuccessionRule::produce`], additionally checking that label `(k)`
    /// has exactly `k` sons.
    fn produce_checked(&self, label: Label) -> Result<Production, RuleError> {
        let prod = self.produce(label)?;
        let sons: u64 = prod.iter().map(|(_, m)| m).sum();
        if sons != label.value as u64 {
            return Err(RuleError::ProductionSize { rule: self.name.clone(), label, sons });
        }
        Ok(prod)
    }

    /// Label multisets of levels `0..=n_max`, starting from `{axiom: 1}`.
    pub fn level_distribution(&self, n_max: usize) -> Result<Vec<BTreeMap<Label, Count>>, RuleError> {
        let mut levels = Vec::with_capacity(n_max + 1);
        let mut current = BTreeMap::from([(self.axiom, 1 as Count)]);
        for level in 0..n_max {
            let mut next: BTreeMap<Label, Count> = BTreeMap::new();
            for (&label, &mult) in &current {
                for (son, times) in self.produce_checked(label)? {
                    let add = mult
                        .checked_mul(times as Count)
                        .ok_or(RuleError::Overflow { level: level + 1 })?;
                    let slot = next.entry(son).or_insert(0);
                    *slot = slot.checked_add(add).ok_or(RuleError::Overflow { level: level + 1 })?;
                }
            }
            levels.push(current);
            current = next;
        }
        levels.push(current);
        Ok(levels)
    }

    /// Number of nodes on each level `0..=n_max` of the generating tree.
    pub fn level_counts(&self, n_max: usize) -> Result<CountSeries, RuleError> {
        let levels = self.level_distribution(n_max)?;
        let mut terms = Vec::with_capacity(levels.len());
        for (n, level) in levels.iter().enumerate() {
            let total = level
                .values()
                .try_fold(0 as Count, |a, &b| a.checked_add(b))
                .ok_or(RuleError::Overflow { level: n })?;
            terms.push(total);
        }
        Ok(CountSeries::new(terms))
    }

    /// Labels occurring on levels `0..=levels`, in label order.
    pub fn reachable_labels(&self, levels: usize) -> Result<BTreeSet<Label>, RuleError> {
        let mut seen = BTreeSet::from([self.axiom]);
        let mut frontier = vec![self.axiom];
        for _ in 0..levels {
            let mut next = Vec::new();
            for label in frontier {
                for (son, _) in self.produce_checked(label)? {
                    if seen.insert(son) {
                        next.push(son);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        Ok(seen)
    }

    /// Superset of the labels reachable within `n` levels: a label's value
    /// grows by at most one per level, and subscripts count levels.
    pub fn label_bound(&self, n: usize) -> (u32, u32) {
        ((n + 2) as u32, n as u32)
    }

    /// Bracket notation, one production per line. Finite rules list every
    /// reachable label; unbounded ones are written schematically.
    pub fn display_form(&self) -> String {
        let mut lines = vec![self.name.clone(), self.axiom.to_string()];
        match &self.kind {
            Kind::Catalan => {
                lines.push("(1) ~> (2)".into());
                lines.push("(k) ~> (2)(3)...(k)(k+1)".into());
            }
            Kind::Pow2 => {
                lines.push("(1) ~> (2)".into());
                lines.push("(h) ~> (1)^(h-1)(h+1)".into());
            }
            Kind::Omega(k) => {
                let k = *k;
                lines.push("(1) ~> (2)".into());
                lines.push(format!("(h) ~> (2)...(h)(h+1)  for h < {k}"));
                let prefix: String = (2..=k.saturating_sub(2)).map(|v| format!("({v})")).collect();
                lines.push(format!("(h) ~> {prefix}({})^(h-{})(h+1)  for h >= {k}", k - 1, k - 2));
            }
            _ => match self.reachable_labels(usize::MAX) {
                Ok(labels) => {
                    for label in labels {
                        let sons = self.produce(label).map(|p| render_production(&p));
                        match sons {
                            Ok(s) => lines.push(format!("{label} ~> {s}")),
                            Err(_) => lines.push(format!("{label} ~> ?")),
                        }
                    }
                }
                Err(e) => lines.push(format!("<invalid rule: {e}>")),
            },
        }
        lines.join("\n")
    }
}

fn render_production(p: &Production) -> String {
    let mut s = String::new();
    for (label, m) in p {
        for _ in 0..*m {
            s.push_str(&label.to_string());
        }
    }
    s
}

impl fmt::Display for SuccessionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_form())
    }
}

/// Agreement between a rule and a class on one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelReport {
    pub n: usize,
    pub rule_count: Count,
    pub eco_count: Count,
    pub counts_equal: bool,
    /// Nodes per label value on this level of the rule's tree.
    pub rule_values: BTreeMap<usize, Count>,
    /// Nodes per number of active sites on this level of the class's tree.
    pub eco_sites: BTreeMap<usize, Count>,
    pub labels_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub rule: String,
    pub class: String,
    pub levels: Vec<LevelReport>,
}

impl VerifyReport {
    pub fn all_agree(&self) -> bool {
        self.levels.iter().all(|l| l.counts_equal && l.labels_equal)
    }

    pub fn first_disagreement(&self) -> Option<&LevelReport> {
        self.levels.iter().find(|l| !(l.counts_equal && l.labels_equal))
    }
}

/// Compares a rule with the generating tree of a class on levels `0..=n_max`:
/// level sizes, and the multiset of label values against the multiset of
/// active-site counts. Mismatches are reported, not raised.
pub fn verify_rule(
    rule: &SuccessionRule,
    cls: &AvoidanceClass,
    n_max: usize,
    limits: &Limits,
) -> Result<VerifyReport, RuleError> {
    let dist = rule.level_distribution(n_max)?;
    let eco = eco_stats(cls, n_max, limits)?;
    let levels = dist
        .iter()
        .enumerate()
        .map(|(n, labels)| {
            let mut rule_values: BTreeMap<usize, Count> = BTreeMap::new();
            for (label, c) in labels {
                *rule_values.entry(label.value as usize).or_insert(0) += c;
            }
            let rule_count: Count = labels.values().sum();
            let eco_count = eco.counts.terms()[n];
            let eco_sites = eco.site_histograms[n].clone();
            LevelReport {
                n,
                rule_count,
                eco_count,
                counts_equal: rule_count == eco_count,
                labels_equal: rule_values == eco_sites,
                rule_values,
                eco_sites,
            }
        })
        .collect();
    Ok(VerifyReport {
        rule: rule.name().to_string(),
        class: cls.name().to_string(),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(rule: &SuccessionRule, n: usize) -> Vec<Count> {
        rule.level_counts(n).unwrap().into_terms()
    }

    #[test]
    fn basic_rules() {
        assert_eq!(counts(&SuccessionRule::rsfibo(), 8), [1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(counts(&SuccessionRule::rs2fin(), 5), [1, 1, 2, 4, 8, 16]);
        assert_eq!(counts(&SuccessionRule::rscat(), 6), [1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn subscripted_and_k_rules() {
        assert_eq!(counts(&SuccessionRule::gfib(3).unwrap(), 6), [1, 1, 2, 4, 7, 13, 24]);
        assert_eq!(counts(&SuccessionRule::cat1(3).unwrap(), 6), [1, 1, 2, 5, 13, 34, 89]);
        assert_eq!(counts(&SuccessionRule::evf1(3).unwrap(), 6), [1, 1, 2, 5, 12, 29, 70]);
        assert_eq!(counts(&SuccessionRule::direct(3).unwrap(), 6), [1, 1, 2, 5, 12, 29, 70]);
        assert_eq!(counts(&SuccessionRule::gfib2(3).unwrap(), 6), [1, 1, 2, 4, 7, 13, 24]);
        assert_eq!(counts(&SuccessionRule::omega(3).unwrap(), 6), [1, 1, 2, 5, 13, 34, 89]);
        assert_eq!(counts(&SuccessionRule::pow2(), 5), [1, 1, 2, 4, 8, 16]);
        assert_eq!(counts(&SuccessionRule::linear(), 5), [1, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn k2_members_coincide_with_base_rules() {
        let fib = counts(&SuccessionRule::rsfibo(), 10);
        for r in [
            SuccessionRule::gfib(2).unwrap(),
            SuccessionRule::gfib2(2).unwrap(),
            SuccessionRule::direct(2).unwrap(),
        ] {
            assert_eq!(counts(&r, 10), fib, "{}", r.name());
        }
        assert_eq!(counts(&SuccessionRule::cat1(2).unwrap(), 10), counts(&SuccessionRule::rs2fin(), 10));
    }

    #[test]
    fn inadmissible_k() {
        assert!(matches!(SuccessionRule::gfib(1), Err(RuleError::InadmissibleK { min: 2, .. })));
        assert!(SuccessionRule::evf1(2).is_err());
        assert!(SuccessionRule::evf2(2).is_err());
        assert!(SuccessionRule::omega(2).is_err());
        assert!(SuccessionRule::cat1(1).is_err());
    }

    #[test]
    fn undefined_production_names_label() {
        let table = BTreeMap::from([(Label::new(1), vec![Label::new(2)])]);
        let rule = SuccessionRule::from_table("broken", Label::new(1), table);
        let err = rule.level_counts(3).unwrap_err();
        assert_eq!(
            err,
            RuleError::UndefinedProduction { rule: "broken".into(), label: Label::new(2) }
        );
        assert!(err.to_string().contains("(2)"));
    }

    #[test]
    fn production_size_must_equal_label_value() {
        let table = BTreeMap::from([
            (Label::new(1), vec![Label::new(2)]),
            (Label::new(2), vec![Label::new(2)]),
        ]);
        let rule = SuccessionRule::from_table("short", Label::new(1), table);
        assert!(matches!(rule.level_counts(3), Err(RuleError::ProductionSize { sons: 1, .. })));
    }

    #[test]
    fn overflow_is_reported() {
        // Catalan numbers leave u128 range around n = 68.
        let err = SuccessionRule::rscat().level_counts(80).unwrap_err();
        assert!(matches!(err, RuleError::Overflow { .. }));
    }

    #[test]
    fn omega_productions() {
        let r = SuccessionRule::omega(5).unwrap();
        let p = r.produce(Label::new(7)).unwrap();
        // (2)(3)(4)^4(8)
        assert_eq!(
            p,
            vec![(Label::new(2), 1), (Label::new(3), 1), (Label::new(4), 4), (Label::new(8), 1)]
        );
        assert_eq!(r.produce(Label::new(3)).unwrap().len(), 3);
    }

    #[test]
    fn evf1_special_production_overrides() {
        let r = SuccessionRule::evf1(4).unwrap();
        assert_eq!(
            r.produce(Label::sub(3, 1)).unwrap(),
            vec![(Label::new(2), 2), (Label::sub(3, 0), 1)]
        );
        assert_eq!(
            r.produce(Label::sub(3, 0)).unwrap(),
            vec![(Label::new(2), 1), (Label::sub(3, 0), 1), (Label::sub(3, 1), 1)]
        );
        assert!(r.produce(Label::sub(3, 2)).is_err());
    }

    #[test]
    fn reachable_labels_within_bound() {
        for rule in [
            SuccessionRule::rscat(),
            SuccessionRule::omega(4).unwrap(),
            SuccessionRule::gfib(5).unwrap(),
            SuccessionRule::evf1(5).unwrap(),
        ] {
            for n in 0..10 {
                let (max_value, max_sub) = rule.label_bound(n);
                for l in rule.reachable_labels(n).unwrap() {
                    assert!(l.value <= max_value && l.subscript.unwrap_or(0) <= max_sub);
                }
            }
        }
        let labels = SuccessionRule::gfib(3).unwrap().reachable_labels(100).unwrap();
        assert_eq!(
            labels.into_iter().collect::<Vec<_>>(),
            vec![Label::new(1), Label::sub(2, 0), Label::sub(2, 1)]
        );
    }

    #[test]
    fn display_forms() {
        let tri = SuccessionRule::gfib(3).unwrap().display_form();
        assert_eq!(
            tri,
            "gfib(3)\n(1)\n(1) ~> (2_0)\n(2_0) ~> (2_0)(2_1)\n(2_1) ~> (2_0)(1)"
        );
        let c3 = SuccessionRule::cat1(3).unwrap().display_form();
        assert!(c3.ends_with("(3) ~> (2)(3)(3)"));
        let om = SuccessionRule::omega(5).unwrap().display_form();
        assert!(om.contains("(h) ~> (2)(3)(4)^(h-3)(h+1)  for h >= 5"), "{om}");
    }

    #[test]
    fn verify_rule_against_fibonacci_bases() {
        let limits = Limits::default();
        let fib = AvoidanceClass::from_patterns(&["123", "132", "213"]).unwrap();
        let report = verify_rule(&SuccessionRule::rsfibo(), &fib, 8, &limits).unwrap();
        assert!(report.all_agree());
        // The other basis is not Fibonacci: first disagreement at n = 4.
        let alt = AvoidanceClass::from_patterns(&["123", "213", "312"]).unwrap();
        let report = verify_rule(&SuccessionRule::rsfibo(), &alt, 8, &limits).unwrap();
        assert!(!report.all_agree());
        let first = report.levels.iter().find(|l| !l.counts_equal).unwrap();
        assert_eq!((first.n, first.rule_count, first.eco_count), (4, 5, 4));
        assert!(verify_rule(&SuccessionRule::linear(), &alt, 8, &limits).unwrap().all_agree());
    }
}
