//! Laurent expansion of a localization term in one variable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linear::LinearForm;
use super::poly::MultiPoly;
use super::scalar::{factorial, GaussianRational, Rational};
use super::term::{ExpConvention, LocalizationTerm};
use crate::error::{Error, Result};

/// `term = e^{residual_exponent} / residual_denominator · Σ_k coefficients[k] X^k`,
/// where everything except `X` (the expansion variable) lives in the
/// remaining `rank − 1` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentExpansion {
    pub var: usize,
    pub coefficients: BTreeMap<i64, MultiPoly>,
    pub residual_exponent: LinearForm,
    pub residual_denominator: Vec<(LinearForm, u32)>,
    pub convention: ExpConvention,
}

impl LaurentExpansion {
    pub fn coeff(&self, k: i64) -> MultiPoly {
        self.coefficients
            .get(&k)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.residual_exponent.rank()))
    }
}

/// Expands `term` in variable `var` up to and including `X^order`.
///
/// Denominator forms must be either multiples of `X` (they produce the pole)
/// or free of `X` (they are carried along in `residual_denominator`). A form
/// like `X₁ + X₂` mixes both and cannot be expanded without first splitting
/// the term into partial fractions.
pub fn laurent_expand(term: &LocalizationTerm, var: usize, order: i64) -> Result<LaurentExpansion> {
    let rank = term.rank();
    if var >= rank {
        return Err(Error::InvalidArgument(format!("variable {var} out of range for rank {rank}")));
    }
    let mut pole: u32 = 0;
    let mut lead = Rational::one();
    let mut residual_denominator = Vec::new();
    for (b, m) in term.denominator() {
        let a = b.coeff(var);
        let rest = b.without(var);
        if a.is_zero() {
            residual_denominator.push((rest, *m));
        } else if rest.is_zero() {
            pole += m;
            for _ in 0..*m {
                lead *= a;
            }
        } else {
            return Err(Error::NonExpandablePole(format!(
                "factor {b} mixes the expansion variable with the others"
            )));
        }
    }
    let unit = term.convention().unit();
    let lambda = GaussianRational::real(term.exponent().coeff(var).clone()) * unit;
    let residual_exponent = term.exponent().without(var);
    let inv_lead = GaussianRational::real(Rational::one() / lead);

    let parts = term.numerator().coefficients_in(var);
    let mut coefficients = BTreeMap::new();
    let Some(&low) = parts.keys().next() else {
        return Ok(LaurentExpansion {
            var,
            coefficients,
            residual_exponent,
            residual_denominator,
            convention: term.convention(),
        });
    };
    let start = low as i64 - pole as i64;
    for e in start..=order {
        // coefficient of X^{e + pole} in numerator · exp(λ X)
        let target = e + pole as i64;
        let mut acc = MultiPoly::zero(rank - 1);
        for (&k, nk) in &parts {
            let m = target - k as i64;
            if m < 0 {
                continue;
            }
            let m = m as u32;
            let c = if m == 0 {
                GaussianRational::one()
            } else if lambda.is_zero() {
                continue;
            } else {
                lambda.pow(m).scale(&Rational::new(BigInt::one(), factorial(m)))
            };
            acc = &acc + &nk.scale(&c);
        }
        if !acc.is_zero() {
            coefficients.insert(e, acc.scale(&inv_lead));
        }
    }
    Ok(LaurentExpansion { var, coefficients, residual_exponent, residual_denominator, convention: term.convention() })
}
