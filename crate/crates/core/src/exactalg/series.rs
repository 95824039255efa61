//! Power series truncated at a fixed exponent bound.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{GaussianRational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesVar {
    T,
    SqrtEps,
}

impl SeriesVar {
    fn name(self) -> &'static str {
        match self {
            SeriesVar::T => "t",
            SeriesVar::SqrtEps => "√ε",
        }
    }
}

/// Coefficients for exponents `0..=bound`; everything above is unknown.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: SeriesVar,
    coeffs: Vec<GaussianRational>,
}

impl TruncatedSeries {
    pub fn zero(var: SeriesVar, bound: usize) -> Self {
        TruncatedSeries { var, coeffs: vec![GaussianRational::zero(); bound + 1] }
    }

    pub fn one(var: SeriesVar, bound: usize) -> Self {
        Self::monomial(var, 0, GaussianRational::one(), bound)
    }

    pub fn monomial(var: SeriesVar, exp: usize, c: GaussianRational, bound: usize) -> Self {
        let mut s = Self::zero(var, bound);
        if exp <= bound {
            s.coeffs[exp] = c;
        }
        s
    }

    /// From integer coefficients starting at exponent 0; entries beyond `bound` are dropped.
    pub fn from_ints(var: SeriesVar, c: &[i64], bound: usize) -> Self {
        let mut s = Self::zero(var, bound);
        for (i, v) in c.iter().enumerate().take(bound + 1) {
            s.coeffs[i] = GaussianRational::from_int(*v);
        }
        s
    }

    /// `1 + t^{k} + t^{2k} + …`, the expansion of `(1 − t^k)^{-1}`.
    pub fn geom(var: SeriesVar, k: usize, bound: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("geometric series step must be at least 1".into()));
        }
        let mut s = Self::zero(var, bound);
        for e in (0..=bound).step_by(k) {
            s.coeffs[e] = GaussianRational::one();
        }
        Ok(s)
    }

    /// `1 + t^{step} + … + t^{last}` (empty, i.e. zero, when `first > last`).
    pub fn arithmetic_run(var: SeriesVar, first: usize, last: usize, step: usize, bound: usize) -> Self {
        let mut s = Self::zero(var, bound);
        if first <= last {
            for e in (first..=last).step_by(step.max(1)) {
                if e <= bound {
                    s.coeffs[e] += &GaussianRational::one();
                }
            }
        }
        s
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> GaussianRational {
        self.coeffs.get(e).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn truncate(&self, bound: usize) -> Self {
        let mut s = Self::zero(self.var, bound);
        for e in 0..=bound.min(self.bound()) {
            s.coeffs[e] = self.coeffs[e].clone();
        }
        s
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        TruncatedSeries { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `t^k`, keeping the bound.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.var, self.bound());
        for e in 0..=self.bound() {
            if e + k <= self.bound() {
                s.coeffs[e + k] = self.coeffs[e].clone();
            }
        }
        s
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Coefficients `0..=deg` read as integers, if they all are.
    pub fn integer_coeffs(&self, deg: usize) -> Option<Vec<i64>> {
        (0..=deg)
            .map(|e| {
                let c = self.coeff(e);
                let r = c.as_real()?;
                if !r.is_integer() {
                    return None;
                }
                i64::try_from(r.to_integer()).ok()
            })
            .collect()
    }

    /// Whether the coefficients in `0..=deg` read the same forwards and backwards.
    pub fn is_palindromic_to(&self, deg: usize) -> bool {
        (0..=deg).all(|e| self.coeff(e) == self.coeff(deg - e))
    }

    /// Whether coefficients strictly above `deg` (up to the bound) vanish.
    pub fn vanishes_above(&self, deg: usize) -> bool {
        (deg + 1..=self.bound()).all(|e| self.coeffs[e].is_zero())
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.var, o.var, "series variables differ");
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, o: &TruncatedSeries) -> TruncatedSeries {
        self.check(o);
        let bound = self.bound().min(o.bound());
        let coeffs = (0..=bound).map(|e| &self.coeffs[e] + &o.coeffs[e]).collect();
        TruncatedSeries { var: self.var, coeffs }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, o: &TruncatedSeries) -> TruncatedSeries {
        self + &(-o)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, o: &TruncatedSeries) -> TruncatedSeries {
        self.check(o);
        let bound = self.bound().min(o.bound());
        let mut out = TruncatedSeries::zero(self.var, bound);
        for i in 0..=bound {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=bound - i {
                if !o.coeffs[j].is_zero() {
                    let p = &self.coeffs[i] * &o.coeffs[j];
                    out.coeffs[i + j] += &p;
                }
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.name();
        let mut parts = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let coeff = if c.is_one() && e > 0 { String::new() } else { c.to_string() };
            parts.push(format!("{coeff}{mono}"));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{} + O({v}^{})", parts.join(" + "), self.bound() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Convenience: the rational value of an integer-valued coefficient list.
pub fn rational_coeffs(s: &TruncatedSeries) -> Vec<Rational> {
    s.coeffs().iter().map(|c| c.re.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geom_definition() {
        let g = TruncatedSeries::geom(SeriesVar::T, 4, 9).unwrap();
        assert_eq!(g, TruncatedSeries::from_ints(SeriesVar::T, &[1, 0, 0, 0, 1, 0, 0, 0, 1, 0], 9));
        let g1 = TruncatedSeries::geom(SeriesVar::T, 1, 3).unwrap();
        assert_eq!(g1.integer_coeffs(3).unwrap(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn geom_inverts_one_minus_tk() {
        for k in 1..=6usize {
            let g = TruncatedSeries::geom(SeriesVar::T, k, 12).unwrap();
            let mut f = TruncatedSeries::one(SeriesVar::T, 12);
            f = &f - &TruncatedSeries::monomial(SeriesVar::T, k, GaussianRational::one(), 12);
            assert_eq!(&f * &g, TruncatedSeries::one(SeriesVar::T, 12), "k = {k}");
        }
    }

    #[test]
    fn zero_step_rejected() {
        assert!(TruncatedSeries::geom(SeriesVar::T, 0, 4).is_err());
    }

    #[test]
    fn palindrome_check() {
        let s = TruncatedSeries::from_ints(SeriesVar::T, &[1, 0, 5, 0, 1], 8);
        assert!(s.is_palindromic_to(4));
        assert!(s.vanishes_above(4));
    }
}
