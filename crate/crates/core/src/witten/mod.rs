//! The local contribution `I_0^ε` to Witten's Gaussian integral for rank-one
//! actions, as an exact polynomial in `√ε` (with Laurent exponents allowed).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{ExpConvention, GaussianRational, LinearForm, MultiPoly, Rational};
use crate::models::{localized_terms_with, ActionModel};
use crate::residue::residue_1d_shifted;

/// Which of the two coefficient channels a term lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Channel {
    Rational,
    /// Coefficients multiplied by `√(π/2)`.
    SqrtHalfPi,
}

/// `Σ_k (a_k + b_k √(π/2)) (√ε)^k`, keyed by the integer exponent `k` of `√ε`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SqrtEpsPolynomial {
    terms: BTreeMap<(Channel, i64), GaussianRational>,
}

impl SqrtEpsPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(channel: Channel, exp: i64, c: GaussianRational) -> Self {
        let mut p = Self::zero();
        p.add_term(channel, exp, c);
        p
    }

    pub fn add_term(&mut self, channel: Channel, exp: i64, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((channel, exp)).or_insert_with(GaussianRational::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&(channel, exp));
        }
    }

    pub fn coeff(&self, channel: Channel, exp: i64) -> GaussianRational {
        self.terms.get(&(channel, exp)).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Channel, i64, &GaussianRational)> {
        self.terms.iter().map(|(&(c, e), v)| (c, e, v))
    }

    /// Sorted exponents of `√ε` carrying a nonzero coefficient in either channel.
    pub fn exponents(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|&(_, e)| e).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.exponents().first().copied()
    }

    /// True when no exponent of `√ε` is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    /// The part with odd exponents of `√ε`, i.e. half-integer powers of `ε`.
    pub fn odd_part(&self) -> SqrtEpsPolynomial {
        SqrtEpsPolynomial { terms: self.terms.iter().filter(|(k, _)| k.1 % 2 != 0).map(|(k, v)| (*k, v.clone())).collect() }
    }

    pub fn scale(&self, c: &GaussianRational) -> SqrtEpsPolynomial {
        let mut out = Self::zero();
        for (&(ch, e), v) in &self.terms {
            out.add_term(ch, e, v * c);
        }
        out
    }

    /// Multiplies by `(√ε)^k`.
    pub fn shift(&self, k: i64) -> SqrtEpsPolynomial {
        SqrtEpsPolynomial { terms: self.terms.iter().map(|(&(c, e), v)| ((c, e + k), v.clone())).collect() }
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }
}

impl Add for &SqrtEpsPolynomial {
    type Output = SqrtEpsPolynomial;
    fn add(self, o: &SqrtEpsPolynomial) -> SqrtEpsPolynomial {
        let mut out = self.clone();
        for (&(c, e), v) in &o.terms {
            out.add_term(c, e, v.clone());
        }
        out
    }
}

impl Neg for &SqrtEpsPolynomial {
    type Output = SqrtEpsPolynomial;
    fn neg(self) -> SqrtEpsPolynomial {
        self.scale(&GaussianRational::from_int(-1))
    }
}

impl Sub for &SqrtEpsPolynomial {
    type Output = SqrtEpsPolynomial;
    fn sub(self, o: &SqrtEpsPolynomial) -> SqrtEpsPolynomial {
        self + &(-o)
    }
}

impl fmt::Display for SqrtEpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(ch, e), v)| {
                let pi = if ch == Channel::SqrtHalfPi { "√(π/2)·" } else { "" };
                let pow = if e % 2 == 0 { format!("ε^{}", e / 2) } else { format!("ε^({e}/2)") };
                format!("({v})·{pi}{pow}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn double_factorial(j: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = j;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// `∫_0^∞ y^j e^{-y^2/2ε} dy`: `(j-1)!! ε^{(j+1)/2}` for odd `j`, `√(π/2) (j-1)!! ε^{(j+1)/2}` for even `j`.
pub fn gaussian_halfline_moment(j: u32) -> SqrtEpsPolynomial {
    let j = i64::from(j);
    let ch = if j % 2 == 1 { Channel::Rational } else { Channel::SqrtHalfPi };
    SqrtEpsPolynomial::monomial(ch, j + 1, GaussianRational::real(Rational::from_integer(double_factorial(j - 1))))
}

/// `∫_{-∞}^{∞} y^j e^{-y^2/2ε} dy`.
pub fn gaussian_line_moment(j: u32) -> SqrtEpsPolynomial {
    if j % 2 == 1 {
        return SqrtEpsPolynomial::zero();
    }
    gaussian_halfline_moment(j).scale(&GaussianRational::from_int(2))
}

/// The rank-one cones: the two half-lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Cone {
    Positive,
    Negative,
}

/// `∫_C p(y) e^{-y^2/2ε} dy` for a polynomial `p` in one variable.
pub fn integrate_over_cone(p: &MultiPoly, cone: Cone) -> SqrtEpsPolynomial {
    let mut out = SqrtEpsPolynomial::zero();
    for (e, c) in p.terms() {
        let j = e[0];
        let sign = if cone == Cone::Negative && j % 2 == 1 { -1 } else { 1 };
        out = &out + &gaussian_halfline_moment(j).scale(&c.scale(&Rational::from_integer(sign.into())));
    }
    out
}

/// Cones attached to a fixed component by the sign of its moment.
pub fn cones_for(moment: &Rational) -> &'static [Cone] {
    if moment.is_positive() {
        &[Cone::Positive, Cone::Negative]
    } else if moment.is_zero() {
        &[Cone::Negative]
    } else {
        &[]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WittenContribution {
    pub component: String,
    pub cone: Cone,
    /// Already multiplied by `ε^{-s/2}`.
    pub value: SqrtEpsPolynomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WittenResult {
    /// `I_0^ε / A_K`.
    pub value: SqrtEpsPolynomial,
    pub contributions: Vec<WittenContribution>,
    /// Power of `√ε` already folded in from `ε^{-s/2}`.
    pub eps_shift: i64,
}

/// `I_0^ε(η e^{iω̄}) / A_K`.
///
/// For each component `F` and each cone `C` attached to it, the polynomial
/// `p_F(y) = res_{X=0}(D(X) i_F^*(η) e^{i(μ(F)-y)X} / e_F(X))` is multiplied by
/// `D(y)` and integrated against `e^{-y^2/2ε}` over `C`. The sum is multiplied
/// by `ε^{-s/2}`.
pub fn witten_i0(model: &ActionModel, eta: &MultiPoly) -> Result<WittenResult> {
    if model.rank != 1 {
        return Err(Error::NotRankOne(model.rank));
    }
    let d = model.d_poly();
    let eps_shift = -model.constants.s;
    let terms = localized_terms_with(model, eta, &LinearForm::zero(1), true, ExpConvention::Imaginary)?;
    let mut by_component: BTreeMap<usize, MultiPoly> = BTreeMap::new();
    for t in &terms {
        let p = residue_1d_shifted(&t.term.mul_poly(&d)?)?;
        let slot = by_component.entry(t.component).or_insert_with(|| MultiPoly::zero(1));
        *slot = &*slot + &p;
    }
    let mut value = SqrtEpsPolynomial::zero();
    let mut contributions = Vec::new();
    for (idx, p) in by_component {
        let f = &model.components[idx];
        let integrand = &d * &p;
        for &cone in cones_for(f.moment_1d()) {
            let v = integrate_over_cone(&integrand, cone).shift(eps_shift);
            value = &value + &v;
            contributions.push(WittenContribution { component: f.id.clone(), cone, value: v });
        }
    }
    Ok(WittenResult { value, contributions, eps_shift })
}
