//! Localization terms `q(X) e^{λ(X)} / ∏ β_j(X)^{m_j}`.

use std::fmt;

use num_traits::Zero;

use super::linear::LinearForm;
use super::poly::MultiPoly;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Whether the exponential factor is `e^{λ(X)}` or `e^{iλ(X)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ExpConvention {
    #[default]
    Real,
    Imaginary,
}

impl ExpConvention {
    /// The constant `c` with `e^{c λ(X)}`: 1 or i.
    pub fn unit(self) -> GaussianRational {
        match self {
            ExpConvention::Real => GaussianRational::from_int(1),
            ExpConvention::Imaginary => GaussianRational::i(),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LocalizationTerm {
    numerator: MultiPoly,
    exponent: LinearForm,
    convention: ExpConvention,
    denominator: Vec<(LinearForm, u32)>,
}

impl LocalizationTerm {
    /// Builds a term, merging equal denominator forms and dropping zero multiplicities.
    pub fn new(
        numerator: MultiPoly,
        exponent: LinearForm,
        convention: ExpConvention,
        denominator: Vec<(LinearForm, u32)>,
    ) -> Result<Self> {
        let rank = numerator.nvars();
        if exponent.rank() != rank {
            return Err(Error::VariableCount { left: rank, right: exponent.rank() });
        }
        let mut merged: Vec<(LinearForm, u32)> = Vec::new();
        for (b, m) in denominator {
            if b.rank() != rank {
                return Err(Error::VariableCount { left: rank, right: b.rank() });
            }
            if b.is_zero() {
                return Err(Error::ZeroForm);
            }
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(f, _)| *f == b) {
                Some(slot) => slot.1 += m,
                None => merged.push((b, m)),
            }
        }
        Ok(LocalizationTerm { numerator, exponent, convention, denominator: merged })
    }

    /// `q / ∏ β_j` with no exponential factor.
    pub fn rational(numerator: MultiPoly, denominator: Vec<(LinearForm, u32)>) -> Result<Self> {
        let rank = numerator.nvars();
        Self::new(numerator, LinearForm::zero(rank), ExpConvention::Real, denominator)
    }

    pub fn rank(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn exponent(&self) -> &LinearForm {
        &self.exponent
    }

    pub fn convention(&self) -> ExpConvention {
        self.convention
    }

    pub fn denominator(&self) -> &[(LinearForm, u32)] {
        &self.denominator
    }

    /// Total pole order `N = Σ m_j`.
    pub fn pole_order(&self) -> u32 {
        self.denominator.iter().map(|(_, m)| m).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn with_numerator(&self, numerator: MultiPoly) -> Result<Self> {
        Self::new(numerator, self.exponent.clone(), self.convention, self.denominator.clone())
    }

    pub fn with_exponent(&self, exponent: LinearForm, convention: ExpConvention) -> Result<Self> {
        Self::new(self.numerator.clone(), exponent, convention, self.denominator.clone())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        LocalizationTerm { numerator: self.numerator.scale(c), ..self.clone() }
    }

    /// Multiplies the numerator by a polynomial.
    pub fn mul_poly(&self, p: &MultiPoly) -> Result<Self> {
        Ok(LocalizationTerm { numerator: self.numerator.checked_mul(p)?, ..self.clone() })
    }

    /// Product of terms: numerators multiply, exponents add, denominators merge.
    pub fn mul(&self, other: &LocalizationTerm) -> Result<Self> {
        if self.convention != other.convention {
            let trivial = |t: &LocalizationTerm| t.exponent.is_zero();
            if !trivial(self) && !trivial(other) {
                return Err(Error::ConventionMismatch);
            }
        }
        let convention = if self.exponent.is_zero() { other.convention } else { self.convention };
        let mut den = self.denominator.clone();
        den.extend(other.denominator.iter().cloned());
        Self::new(
            self.numerator.checked_mul(&other.numerator)?,
            self.exponent.add(&other.exponent),
            convention,
            den,
        )
    }

    /// Denominator as a polynomial `∏ β_j^{m_j}`.
    pub fn denominator_poly(&self) -> MultiPoly {
        self.denominator
            .iter()
            .fold(MultiPoly::one(self.rank()), |acc, (b, m)| &acc * &b.to_poly().pow(*m))
    }

    pub fn has_zero_exponent(&self) -> bool {
        self.exponent.coeffs().iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for LocalizationTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if !self.exponent.is_zero() {
            let i = if self.convention == ExpConvention::Imaginary { "i" } else { "" };
            write!(f, "·exp({i}{}·X)", self.exponent)?;
        }
        if !self.denominator.is_empty() {
            let parts: Vec<String> = self
                .denominator
                .iter()
                .map(|(b, m)| if *m == 1 { format!("{b}") } else { format!("{b}^{m}") })
                .collect();
            write!(f, " / [{}]", parts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for LocalizationTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
