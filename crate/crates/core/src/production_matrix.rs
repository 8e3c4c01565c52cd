//! Production matrices: entry `(i, j)` counts label `j` among the sons of
//! label `i`. Level counts are the row sums of `e_axiom · Pⁿ`.
//!
//! Rules with unbounded labels give infinite matrices; those are cut to a
//! finite window whose counts are exact up to a guaranteed level.

use std::fmt;

use thiserror::Error;

use crate::counts::{Count, CountSeries};
use crate::succession::{Label, RuleError, SuccessionRule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("truncation to size {size} is too small; at least {required} rows are needed")]
    TruncationTooSmall { size: usize, required: usize },
    #[error("truncation size {size} cannot guarantee level {guarantee} (needs size >= level + 2)")]
    InvalidTruncation { size: usize, guarantee: usize },
    #[error("level {n} lies beyond the guaranteed level {guarantee}")]
    BeyondGuarantee { n: usize, guarantee: usize },
    #[error("{what} is not defined for k = {k} (needs k >= {min})")]
    InadmissibleK { what: &'static str, k: u32, min: u32 },
    #[error("malformed matrix: {0}")]
    Malformed(String),
    #[error("count overflow at level {n}")]
    Overflow { n: usize },
    #[error(transparent)]
    Rule(#[from] RuleError),
}

/// Window of an infinite production matrix: `size` rows and columns, exact
/// counts for levels `0..=guarantee_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    size: usize,
    guarantee_level: usize,
}

impl TruncationSpec {
    pub fn new(size: usize, guarantee_level: usize) -> Result<Self, MatrixError> {
        if size == 0 || size < guarantee_level + 2 {
            return Err(MatrixError::InvalidTruncation { size, guarantee: guarantee_level });
        }
        Ok(TruncationSpec { size, guarantee_level })
    }

    /// Smallest window guaranteeing `level`.
    pub fn for_level(level: usize) -> Self {
        TruncationSpec { size: level + 2, guarantee_level: level }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn guarantee_level(&self) -> usize {
        self.guarantee_level
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductionMatrix {
    entries: Vec<Vec<Count>>,
    labels: Vec<Label>,
    axiom_index: usize,
    /// `None` when the matrix is the whole (finite) rule.
    guarantee: Option<usize>,
}

impl ProductionMatrix {
    pub fn new(
        entries: Vec<Vec<Count>>,
        labels: Vec<Label>,
        axiom_index: usize,
        guarantee: Option<usize>,
    ) -> Result<Self, MatrixError> {
        let d = entries.len();
        if d == 0 {
            return Err(MatrixError::Malformed("empty matrix".into()));
        }
        if entries.iter().any(|row| row.len() != d) {
            return Err(MatrixError::Malformed("matrix is not square".into()));
        }
        if labels.len() != d {
            return Err(MatrixError::Malformed(format!("{} labels for dimension {d}", labels.len())));
        }
        if axiom_index >= d {
            return Err(MatrixError::Malformed(format!("axiom index {axiom_index} out of range")));
        }
        Ok(ProductionMatrix { entries, labels, axiom_index, guarantee })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<Count>] {
        &self.entries
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn axiom_index(&self) -> usize {
        self.axiom_index
    }

    pub fn guarantee(&self) -> Option<usize> {
        self.guarantee
    }

    pub fn row_sums(&self) -> Vec<Count> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    /// Top-left `size × size` block.
    pub fn window(&self, size: usize) -> Vec<Vec<Count>> {
        self.entries
            .iter()
            .take(size)
            .map(|r| r.iter().take(size).copied().collect())
            .collect()
    }

    /// `rₙ₊₁ = rₙ · P` from the axiom's unit vector; term `n` is `Σ rₙ`.
    pub fn counts(&self, n_max: usize) -> Result<CountSeries, MatrixError> {
        if let Some(g) = self.guarantee {
            if n_max > g {
                return Err(MatrixError::BeyondGuarantee { n: n_max, guarantee: g });
            }
        }
        let d = self.dim();
        let mut row = vec![0 as Count; d];
        row[self.axiom_index] = 1;
        let mut terms = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let total = row
                .iter()
                .try_fold(0 as Count, |a, &b| a.checked_add(b))
                .ok_or(MatrixError::Overflow { n })?;
            terms.push(total);
            if n == n_max {
                break;
            }
            let mut next = vec![0 as Count; d];
            for (i, &ri) in row.iter().enumerate() {
                if ri == 0 {
                    continue;
                }
                for (j, &pij) in self.entries[i].iter().enumerate() {
                    if pij == 0 {
                        continue;
                    }
                    let t = ri.checked_mul(pij).ok_or(MatrixError::Overflow { n: n + 1 })?;
                    next[j] = next[j].checked_add(t).ok_or(MatrixError::Overflow { n: n + 1 })?;
                }
            }
            row = next;
        }
        Ok(CountSeries::new(terms))
    }

    /// `[[0, uᵀ], [0, self + e·uᵀ]]` with `uᵀ = (1, 0, …, 0)`: one new leading
    /// label, every existing label shifted up by one value.
    pub fn block_extend(&self) -> ProductionMatrix {
        let d = self.dim();
        let mut entries = vec![vec![0 as Count; d + 1]; d + 1];
        entries[0][1] = 1;
        for i in 0..d {
            for j in 0..d {
                entries[i + 1][j + 1] = self.entries[i][j] + Count::from(j == 0);
            }
        }
        let labels = (1..=(d + 1) as u32).map(Label::new).collect();
        ProductionMatrix {
            entries,
            labels,
            axiom_index: 0,
            guarantee: self.guarantee.map(|g| g + 1),
        }
    }

    /// Grid with a label column, for display.
    pub fn render_with_labels(&self) -> String {
        let label_w = self.labels.iter().map(|l| l.to_string().len()).max().unwrap_or(0);
        let grid = self.to_string();
        self.labels
            .iter()
            .zip(grid.lines())
            .map(|(l, line)| format!("{:>label_w$} | {line}", l.to_string()))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for ProductionMatrix {
    /// Right-aligned integer grid, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

/// Matrix of `rule` over the labels that occur on levels
/// `0..=trunc.guarantee_level()`, in label order.
///
/// When the rule closes up (no new labels) the matrix is the complete rule
/// and carries no level guarantee.
pub fn from_rule(rule: &SuccessionRule, trunc: TruncationSpec) -> Result<ProductionMatrix, MatrixError> {
    let g = trunc.guarantee_level();
    let within = rule.reachable_labels(g)?;
    let closed = rule.reachable_labels(g + 1)?.len() == within.len();
    if within.len() > trunc.size() {
        return Err(MatrixError::TruncationTooSmall { size: trunc.size(), required: within.len() });
    }
    let labels: Vec<Label> = within.into_iter().collect();
    let d = labels.len();
    let mut entries = vec![vec![0 as Count; d]; d];
    for (i, &label) in labels.iter().enumerate() {
        for (son, m) in rule.produce(label)? {
            if let Ok(j) = labels.binary_search(&son) {
                entries[i][j] += m as Count;
            }
        }
    }
    let axiom_index = labels.binary_search(&rule.axiom()).expect("axiom is reachable");
    ProductionMatrix::new(entries, labels, axiom_index, if closed { None } else { Some(g) })
}

/// `P_k` from `P₁ = [1]` by repeated block extension.
pub fn pk_block_recursion(k: u32) -> Result<ProductionMatrix, MatrixError> {
    if k < 2 {
        return Err(MatrixError::InadmissibleK { what: "P_k block recursion", k, min: 2 });
    }
    let mut m = ProductionMatrix::new(vec![vec![1]], vec![Label::new(1)], 0, None)?;
    for _ in 1..k {
        m = m.block_extend();
    }
    Ok(m)
}

/// `M₃` cut to `size × size`: row `(1)` is `(0, 1, 0, …)` and row `(h)`,
/// `h ≥ 2`, has `h − 1` in column `(2)` and `1` in column `(h+1)`.
/// Counts are exact up to level `size − 2`.
pub fn m3_truncated(size: usize) -> Result<ProductionMatrix, MatrixError> {
    if size < 2 {
        return Err(MatrixError::TruncationTooSmall { size, required: 2 });
    }
    let mut entries = vec![vec![0 as Count; size]; size];
    entries[0][1] = 1;
    for (i, row) in entries.iter_mut().enumerate().skip(1) {
        row[1] += i as Count;
        if i + 1 < size {
            row[i + 1] += 1;
        }
    }
    let labels = (1..=size as u32).map(Label::new).collect();
    ProductionMatrix::new(entries, labels, 0, Some(size - 2))
}

/// Truncated `M_k`, built from a truncated `M₃` by `k − 3` block extensions.
pub fn mk_block_recursion(k: u32, trunc: TruncationSpec) -> Result<ProductionMatrix, MatrixError> {
    if k < 4 {
        return Err(MatrixError::InadmissibleK { what: "M_k block recursion", k, min: 4 });
    }
    let steps = (k - 3) as usize;
    if trunc.size() < k as usize || trunc.size() < steps + 2 {
        return Err(MatrixError::TruncationTooSmall { size: trunc.size(), required: k as usize });
    }
    let mut m = m3_truncated(trunc.size() - steps)?;
    for _ in 0..steps {
        m = m.block_extend();
    }
    m.guarantee = Some(trunc.guarantee_level());
    Ok(m)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    fn level(n: usize) -> TruncationSpec {
        TruncationSpec::for_level(n)
    }

    #[test]
    fn truncation_spec_invariant() {
        assert!(TruncationSpec::new(5, 4).is_err());
        assert!(TruncationSpec::new(6, 4).is_ok());
        assert!(TruncationSpec::new(0, 0).is_err());
    }

    #[test]
    fn fibonacci_matrix() {
        let m = from_rule(&SuccessionRule::rsfibo(), level(8)).unwrap();
        assert_eq!(m.entries(), &[vec![0, 1], vec![1, 1]]);
        assert_eq!(m.guarantee(), None);
        assert_eq!(m.counts(8).unwrap(), [1, 1, 2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn cat1_matrix_shape() {
        for k in 2..=6u32 {
            let m = from_rule(&SuccessionRule::cat1(k).unwrap(), level(10)).unwrap();
            assert_eq!(m.dim(), k as usize);
            let last = &m.entries()[k as usize - 1];
            assert_eq!(last[0], 0);
            assert_eq!(last[k as usize - 1], 2);
            assert!(last[1..k as usize - 1].iter().all(|&v| v == 1));
        }
        let m = from_rule(&SuccessionRule::cat1(3).unwrap(), level(6)).unwrap();
        assert_eq!(m.counts(6).unwrap(), [1, 1, 2, 5, 13, 34, 89]);
    }

    #[test]
    fn trivial_fixed_point() {
        let m = ProductionMatrix::new(vec![vec![1]], vec![Label::new(1)], 0, None).unwrap();
        assert_eq!(m.counts(5).unwrap(), [1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn pk_recursion_small_cases() {
        let p2 = pk_block_recursion(2).unwrap();
        assert_eq!(p2.entries(), &[vec![0, 1], vec![0, 2]]);
        assert_eq!(p2.counts(5).unwrap(), [1, 1, 2, 4, 8, 16]);
        assert!(pk_block_recursion(1).is_err());
    }

    #[test]
    fn m3_matches_omega3_and_displayed_rows() {
        let m3 = m3_truncated(12).unwrap();
        assert_eq!(m3.window(4), vec![
            vec![0, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 2, 0, 1],
            vec![0, 3, 0, 0],
        ]);
        assert_eq!(m3.entries()[3][4], 1);
        assert_eq!(m3.counts(9).unwrap(), [1, 1, 2, 5, 13, 34, 89, 233, 610, 1597]);
        let omega = from_rule(&SuccessionRule::omega(3).unwrap(), level(10)).unwrap();
        assert_eq!(omega.window(11), m3.window(11));
    }

    #[test]
    fn mk_recursion_agrees_with_omega() {
        for k in 4..=6u32 {
            let trunc = TruncationSpec::new(14, 10).unwrap();
            let mk = mk_block_recursion(k, trunc).unwrap();
            let rule = SuccessionRule::omega(k).unwrap();
            assert_eq!(mk.counts(10).unwrap(), rule.level_counts(10).unwrap(), "k={k}");
            let from = from_rule(&rule, level(10)).unwrap();
            assert_eq!(mk.window(from.dim()), from.window(from.dim()), "k={k}");
            assert_eq!(&mk.window(2), &[vec![0, 1], vec![0, 1]]);
        }
        assert!(mk_block_recursion(3, level(8)).is_err());
        assert!(matches!(
            mk_block_recursion(8, TruncationSpec::new(5, 3).unwrap()),
            Err(MatrixError::TruncationTooSmall { .. })
        ));
    }

    #[test]
    fn guarantee_enforced() {
        let m = from_rule(&SuccessionRule::rscat(), level(6)).unwrap();
        assert_eq!(m.counts(6).unwrap(), [1, 1, 2, 5, 14, 42, 132]);
        assert!(matches!(m.counts(7), Err(MatrixError::BeyondGuarantee { n: 7, guarantee: 6 })));
    }

    #[test]
    fn truncation_too_small_reports_minimum() {
        // (3) ~> (3_0)(3_1)(3_2) puts four labels on levels 0..=1.
        let l = |s| Label::sub(3, s);
        let table = BTreeMap::from([
            (Label::new(3), vec![l(0), l(1), l(2)]),
            (l(0), vec![l(0), l(0), l(0)]),
            (l(1), vec![l(1), l(1), l(1)]),
            (l(2), vec![l(2), l(2), l(2)]),
        ]);
        let rule = SuccessionRule::from_table("fan", Label::new(3), table);
        let trunc = TruncationSpec::new(3, 1).unwrap();
        assert_eq!(
            from_rule(&rule, trunc),
            Err(MatrixError::TruncationTooSmall { size: 3, required: 4 })
        );
        let m = from_rule(&rule, TruncationSpec::new(4, 1).unwrap()).unwrap();
        assert_eq!(m.guarantee(), None);
        assert_eq!(m.counts(3).unwrap(), [1, 3, 9, 27]);
    }

    #[test]
    fn truncation_safety() {
        for rule in [SuccessionRule::rscat(), SuccessionRule::omega(4).unwrap(), SuccessionRule::pow2()] {
            let small = from_rule(&rule, TruncationSpec::new(12, 10).unwrap()).unwrap();
            let large = from_rule(&rule, TruncationSpec::new(17, 15).unwrap()).unwrap();
            assert_eq!(small.counts(10).unwrap(), large.counts(15).unwrap().truncated(11));
        }
    }

    #[test]
    fn pretty_printer_aligns_columns() {
        let m = pk_block_recursion(3).unwrap();
        assert_eq!(m.to_string(), "0 1 0\n0 1 1\n0 1 2");
        let m3 = m3_truncated(12).unwrap();
        let text = m3.to_string();
        assert!(text.lines().all(|l| l.len() == text.lines().next().unwrap().len()));
        assert!(m.render_with_labels().starts_with("(1) | 0 1 0"));
    }
}
