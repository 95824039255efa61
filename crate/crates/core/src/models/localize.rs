//! Per-component localization terms `i_F^*(η e^{ω̄ - ξ}) / e_F`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::ActionModel;
use crate::error::{Error, Result};
use crate::exactalg::scalar::binomial;
use crate::exactalg::{ExpConvention, GaussianRational, LinearForm, LocalizationTerm, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct LocalizedTerm {
    /// Index into `model.components`.
    pub component: usize,
    pub term: LocalizationTerm,
}

/// Localization terms with the real-exponential convention.
pub fn localized_terms(
    model: &ActionModel,
    eta: &MultiPoly,
    shift: &LinearForm,
    include_exponential: bool,
) -> Result<Vec<LocalizedTerm>> {
    localized_terms_with(model, eta, shift, include_exponential, ExpConvention::Real)
}

/// Localization terms for every fixed component.
///
/// Isolated points give one term each. A projective component `P^d` is
/// integrated over its fibre: with Chern roots `h + β`, `1/(h+β)^m` is
/// expanded in the nilpotent `h` and the coefficient of `h^d` is kept, so
/// the component contributes several terms sharing its index.
pub fn localized_terms_with(
    model: &ActionModel,
    eta: &MultiPoly,
    shift: &LinearForm,
    include_exponential: bool,
    convention: ExpConvention,
) -> Result<Vec<LocalizedTerm>> {
    if eta.nvars() != model.generators.len() {
        return Err(Error::VariableCount { left: model.generators.len(), right: eta.nvars() });
    }
    if shift.rank() != model.rank {
        return Err(Error::VariableCount { left: model.rank, right: shift.rank() });
    }
    let rank = model.rank;
    let mut out = Vec::new();
    for (idx, f) in model.components.iter().enumerate() {
        let exponent = if include_exponential { f.moment.sub(shift) } else { LinearForm::zero(rank) };
        let g = eta.substitute(&f.restriction)?;
        if f.fiber_dim == 0 {
            let den = f.normal_weights.iter().map(|b| (b.clone(), 1)).collect();
            let term = LocalizationTerm::new(g, exponent, convention, den)?;
            out.push(LocalizedTerm { component: idx, term });
            continue;
        }
        let mut grouped: Vec<(LinearForm, u32)> = Vec::new();
        for b in &f.normal_weights {
            match grouped.iter_mut().find(|(c, _)| c == b) {
                Some(slot) => slot.1 += 1,
                None => grouped.push((b.clone(), 1)),
            }
        }
        let by_h: BTreeMap<u32, MultiPoly> = g.coefficients_in(rank);
        let d = f.fiber_dim;
        let mut r = vec![0u32; grouped.len()];
        loop {
            let used: u32 = r.iter().sum();
            if let Some(num) = by_h.get(&(d - used)) {
                // 1/(h+β)^m = Σ_r (-1)^r C(m+r-1, r) h^r / β^{m+r}
                let mut c = BigInt::from(1);
                for ((_, m), &rk) in grouped.iter().zip(&r) {
                    let b = binomial(u64::from(m + rk - 1), u64::from(rk));
                    c *= if rk % 2 == 1 { -b } else { b };
                }
                let coeff = GaussianRational::real(Rational::from_integer(c));
                let den = grouped.iter().zip(&r).map(|((b, m), &rk)| (b.clone(), m + rk)).collect();
                let term = LocalizationTerm::new(num.scale(&coeff), exponent.clone(), convention, den)?;
                if !term.is_zero() {
                    out.push(LocalizedTerm { component: idx, term });
                }
            }
            if !next_composition(&mut r, d) {
                break;
            }
        }
    }
    Ok(out)
}

/// Steps through all vectors with entry sum at most `bound`.
fn next_composition(r: &mut [u32], bound: u32) -> bool {
    for i in 0..r.len() {
        r[i] += 1;
        if r.iter().sum::<u32>() <= bound {
            return true;
        }
        r[i] = 0;
    }
    false
}
