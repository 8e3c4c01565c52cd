//! Exact rational generating functions over the integers, their power-series
//! expansion, and the Catalan numbers as an independent reference sequence.
//!
//! Equality of rational functions is decided by cross-multiplication, so no
//! polynomial gcd is ever taken.

use std::fmt;

use thiserror::Error;

use crate::counts::{Count, CountSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("denominator has zero constant term; no power series at 0")]
    ZeroConstantTerm,
    #[error("coefficient of x^{n} is not an integer")]
    NonIntegerCoefficient { n: usize },
    #[error("coefficient of x^{n} is negative ({value})")]
    NegativeCoefficient { n: usize, value: i128 },
    #[error("integer overflow in generating-function arithmetic")]
    Overflow,
    #[error("{what} is not defined for k = {k} (needs k >= {min})")]
    InadmissibleK { what: &'static str, k: u32, min: u32 },
}

/// Integer polynomial, coefficient `i` of `x^i`; trailing zeros are stripped
/// and the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial(Vec<i128>);

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i128>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial(coefficients)
    }

    pub fn zero() -> Self {
        IntPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        IntPolynomial(vec![1])
    }

    /// `c·x^k`.
    pub fn monomial(c: i128, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        IntPolynomial::new(v)
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i128 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, GfError> {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(GfError::Overflow))
            .collect::<Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, GfError> {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|i| self.coeff(i).checked_sub(other.coeff(i)).ok_or(GfError::Overflow))
            .collect::<Result<Vec<_>, _>>()
            .map(IntPolynomial::new)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, GfError> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(GfError::Overflow)?;
                out[i + j] = out[i + j].checked_add(t).ok_or(GfError::Overflow)?;
            }
        }
        Ok(IntPolynomial::new(out))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        IntPolynomial(v)
    }
}

impl From<Vec<i128>> for IntPolynomial {
    fn from(v: Vec<i128>) -> Self {
        IntPolynomial::new(v)
    }
}

impl fmt::Display for IntPolynomial {
    /// `1 - 2*x + x^3`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("x")?,
                (1, m) => write!(f, "{m}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, m) => write!(f, "{m}*x^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `numerator / denominator` with a denominator invertible as a power series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self, GfError> {
        if denominator.coeff(0) == 0 {
            return Err(GfError::ZeroConstantTerm);
        }
        Ok(RationalGF { numerator, denominator })
    }

    /// Shorthand from coefficient vectors.
    pub fn from_coeffs(numerator: Vec<i128>, denominator: Vec<i128>) -> Result<Self, GfError> {
        RationalGF::new(numerator.into(), denominator.into())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Signed coefficients `a₀ … a_{n_max}` of the expansion at 0, from
    /// `q₀aₙ = pₙ − Σ_{i≥1} qᵢaₙ₋ᵢ`. A remainder in the division by `q₀`
    /// means the expansion leaves the integers and is reported.
    pub fn coefficients(&self, n_max: usize) -> Result<Vec<i128>, GfError> {
        let q = self.denominator.coefficients();
        let q0 = q[0];
        let mut a: Vec<i128> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut acc = self.numerator.coeff(n);
            for i in 1..q.len().min(n + 1) {
                let t = q[i].checked_mul(a[n - i]).ok_or(GfError::Overflow)?;
                acc = acc.checked_sub(t).ok_or(GfError::Overflow)?;
            }
            if acc % q0 != 0 {
                return Err(GfError::NonIntegerCoefficient { n });
            }
            a.push(acc / q0);
        }
        Ok(a)
    }

    /// Expansion as counts; any negative coefficient is an error.
    pub fn series(&self, n_max: usize) -> Result<CountSeries, GfError> {
        self.coefficients(n_max)?
            .into_iter()
            .enumerate()
            .map(|(n, value)| {
                u128::try_from(value).map_err(|_| GfError::NegativeCoefficient { n, value })
            })
            .collect::<Result<Vec<Count>, _>>()
            .map(CountSeries::new)
    }

    /// `1 / (1 − x·f)`, i.e. `q / (q − x·p)` for `f = p/q`.
    pub fn continued_step(&self) -> Result<Self, GfError> {
        let den = self.denominator.checked_sub(&self.numerator.shift(1))?;
        RationalGF::new(self.denominator.clone(), den)
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

/// Expansion of `gf` up to `x^{n_max}`.
pub fn series(gf: &RationalGF, n_max: usize) -> Result<CountSeries, GfError> {
    gf.series(n_max)
}

/// `a.num · b.den = b.num · a.den` as polynomials.
pub fn gf_equal(a: &RationalGF, b: &RationalGF) -> bool {
    match (
        a.numerator.checked_mul(&b.denominator),
        b.numerator.checked_mul(&a.denominator),
    ) {
        (Ok(l), Ok(r)) => l == r,
        _ => false,
    }
}

fn check_k(what: &'static str, k: u32, min: u32) -> Result<(), GfError> {
    if k < min {
        return Err(GfError::InadmissibleK { what, k, min });
    }
    Ok(())
}

/// `F(x) = 1/(1 − x − x²)`.
pub fn fib_gf() -> RationalGF {
    RationalGF::from_coeffs(vec![1], vec![1, -1, -1]).expect("valid")
}

/// `t(x) = (1 − x)/(1 − 2x)`, the sequence `1, 1, 2, 4, 8, …`.
pub fn pow2_gf() -> RationalGF {
    RationalGF::from_coeffs(vec![1, -1], vec![1, -2]).expect("valid")
}

/// `F̄(x) = (1 − 2x)/(1 − 3x + x²)`, the sequence `1, 1, 2, 5, 13, 34, …`.
pub fn fbar_gf() -> RationalGF {
    RationalGF::from_coeffs(vec![1, -2], vec![1, -3, 1]).expect("valid")
}

/// `(1 − x + x²)/(1 − x)²`, the sequence `1, 1, 2, 3, 4, …`.
pub fn linear_gf() -> RationalGF {
    RationalGF::from_coeffs(vec![1, -1, 1], vec![1, -2, 1]).expect("valid")
}

/// `Tᵏ(x,1) = (1 − x)/(1 − 2x + x^{k+1})`: k-generalized Fibonacci numbers.
pub fn tk_gf(k: u32) -> Result<RationalGF, GfError> {
    check_k("tk", k, 1)?;
    let den = IntPolynomial::new(vec![1, -2]).checked_add(&IntPolynomial::monomial(1, k as usize + 1))?;
    RationalGF::new(IntPolynomial::new(vec![1, -1]), den)
}

/// `F̄ₖ(x) = (1 − 2x + xᵏ)/(1 − 3x + x² + xᵏ)`.
pub fn fbark_gf(k: u32) -> Result<RationalGF, GfError> {
    check_k("fbark", k, 3)?;
    let xk = IntPolynomial::monomial(1, k as usize);
    let num = IntPolynomial::new(vec![1, -2]).checked_add(&xk)?;
    let den = IntPolynomial::new(vec![1, -3, 1]).checked_add(&xk)?;
    RationalGF::new(num, den)
}

/// Which family of production matrices a convergent chain follows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    /// `f_{P₁} = 1/(1 − x)`.
    P,
    /// `g_{M₃} = F̄(x)`.
    M,
    /// The matrices of the direct rules; `f_{D₂} = F(x)`.
    D,
}

impl ChainKind {
    pub fn min_k(self) -> u32 {
        match self {
            ChainKind::P => 1,
            ChainKind::M => 3,
            ChainKind::D => 2,
        }
    }

    fn base(self) -> RationalGF {
        match self {
            ChainKind::P => RationalGF::from_coeffs(vec![1], vec![1, -1]).expect("valid"),
            ChainKind::M => fbar_gf(),
            ChainKind::D => fib_gf(),
        }
    }
}

/// The `k`-th iterate of `f ↦ 1/(1 − x·f)` from the chain's base case.
pub fn convergent_chain(kind: ChainKind, k: u32) -> Result<RationalGF, GfError> {
    check_k("convergent chain", k, kind.min_k())?;
    let mut gf = kind.base();
    for _ in kind.min_k()..k {
        gf = gf.continued_step()?;
    }
    Ok(gf)
}

/// Catalan numbers from the convolution `Cₙ = Σ C_{n−1−i} Cᵢ`, with the
/// closed form `binom(2n, n)/(n+1)` as a second, independent route.
pub struct CatalanOracle;

impl CatalanOracle {
    /// `C₀ … C_{n_max}` by convolution.
    pub fn terms(n_max: usize) -> Result<CountSeries, GfError> {
        let mut c: Vec<Count> = vec![1];
        for n in 1..=n_max {
            let mut sum: Count = 0;
            for i in 0..n {
                let t = c[n - 1 - i].checked_mul(c[i]).ok_or(GfError::Overflow)?;
                sum = sum.checked_add(t).ok_or(GfError::Overflow)?;
            }
            c.push(sum);
        }
        Ok(CountSeries::new(c))
    }

    /// `binom(2n, n)/(n+1)`, built from `binom(n+i, i) = binom(n+i−1, i−1)·(n+i)/i`.
    pub fn closed_form(n: usize) -> Result<Count, GfError> {
        let n = n as Count;
        let mut b: Count = 1;
        for i in 1..=n {
            b = b.checked_mul(n + i).ok_or(GfError::Overflow)? / i;
        }
        Ok(b / (n + 1))
    }
}

/// `C₀ … C_{n_max}`.
pub fn catalan_terms(n_max: usize) -> Result<CountSeries, GfError> {
    CatalanOracle::terms(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(n: Vec<i128>, d: Vec<i128>) -> RationalGF {
        RationalGF::from_coeffs(n, d).unwrap()
    }

    #[test]
    fn normalization_and_display() {
        assert_eq!(IntPolynomial::new(vec![1, 0, 0]).coefficients(), &[1]);
        assert!(IntPolynomial::new(vec![0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::new(vec![1, -2, 0, 1]).to_string(), "1 - 2*x + x^3");
        assert_eq!(IntPolynomial::new(vec![0, 3, -1]).to_string(), "3*x - x^2");
        assert_eq!(IntPolynomial::new(vec![-1]).to_string(), "-1");
        assert_eq!(tk_gf(3).unwrap().to_string(), "(1 - x)/(1 - 2*x + x^4)");
    }

    #[test]
    fn series_examples() {
        assert_eq!(series(&pow2_gf(), 5).unwrap(), [1, 1, 2, 4, 8, 16]);
        assert_eq!(series(&fib_gf(), 8).unwrap(), [1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(series(&fbar_gf(), 6).unwrap(), [1, 1, 2, 5, 13, 34, 89]);
        assert_eq!(series(&linear_gf(), 6).unwrap(), [1, 1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn series_errors() {
        assert_eq!(RationalGF::from_coeffs(vec![1], vec![0, 1]), Err(GfError::ZeroConstantTerm));
        assert_eq!(gf(vec![1], vec![2]).coefficients(0), Err(GfError::NonIntegerCoefficient { n: 0 }));
        assert_eq!(gf(vec![1], vec![1, 1]).coefficients(2).unwrap(), vec![1, -1, 1]);
        assert!(matches!(
            gf(vec![1], vec![1, 1]).series(2),
            Err(GfError::NegativeCoefficient { n: 1, value: -1 })
        ));
    }

    #[test]
    fn tk_identities() {
        assert!(gf_equal(&tk_gf(1).unwrap(), &gf(vec![1], vec![1, -1])));
        assert!(gf_equal(&tk_gf(2).unwrap(), &fib_gf()));
        assert!(gf_equal(&tk_gf(3).unwrap(), &gf(vec![1], vec![1, -1, -1, -1])));
        assert!(!gf_equal(&tk_gf(3).unwrap(), &fib_gf()));
        assert_eq!(series(&tk_gf(3).unwrap(), 6).unwrap(), [1, 1, 2, 4, 7, 13, 24]);
        assert_eq!(series(&tk_gf(2).unwrap(), 8).unwrap(), [1, 1, 2, 3, 5, 8, 13, 21, 34]);
        assert!(tk_gf(0).is_err());
    }

    #[test]
    fn fbark_identities() {
        let pell = gf(vec![1, -1, -1], vec![1, -2, -1]);
        assert!(gf_equal(&fbark_gf(3).unwrap(), &pell));
        assert_eq!(series(&fbark_gf(3).unwrap(), 6).unwrap(), [1, 1, 2, 5, 12, 29, 70]);
        assert_eq!(
            series(&fbark_gf(6).unwrap(), 5).unwrap(),
            series(&fbar_gf(), 5).unwrap()
        );
        assert!(fbark_gf(2).is_err());
    }

    #[test]
    fn convergents() {
        assert!(gf_equal(&convergent_chain(ChainKind::P, 2).unwrap(), &pow2_gf()));
        assert!(gf_equal(&convergent_chain(ChainKind::P, 3).unwrap(), &fbar_gf()));
        assert!(gf_equal(&convergent_chain(ChainKind::M, 3).unwrap(), &fbar_gf()));
        assert!(gf_equal(&convergent_chain(ChainKind::D, 2).unwrap(), &fib_gf()));
        let pell = gf(vec![1, -1, -1], vec![1, -2, -1]);
        assert!(gf_equal(&convergent_chain(ChainKind::D, 3).unwrap(), &pell));
        assert!(convergent_chain(ChainKind::M, 2).is_err());
        assert!(convergent_chain(ChainKind::P, 0).is_err());
    }

    #[test]
    fn catalan_both_routes() {
        assert_eq!(catalan_terms(6).unwrap(), [1, 1, 2, 5, 14, 42, 132]);
        assert_eq!(catalan_terms(0).unwrap(), [1]);
        assert_eq!(catalan_terms(10).unwrap().get(10), Some(16796));
        assert_eq!(CatalanOracle::closed_form(10).unwrap(), 16796);
        assert_eq!(CatalanOracle::closed_form(7).unwrap(), 429);
    }

    #[test]
    fn gf_equal_reflexive_and_scaled() {
        let f = fbark_gf(5).unwrap();
        assert!(gf_equal(&f, &f));
        let scaled = RationalGF::new(
            f.numerator().checked_mul(&IntPolynomial::new(vec![1, 1])).unwrap(),
            f.denominator().checked_mul(&IntPolynomial::new(vec![1, 1])).unwrap(),
        )
        .unwrap();
        assert!(gf_equal(&f, &scaled));
    }
}
