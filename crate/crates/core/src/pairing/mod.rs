//! Pairings on quotients: the residue formula at a regular value, its
//! abelianization at a shifted level, intersection pairings via a small
//! shift, wall-crossing jumps and the single-blow-up desingularization.

mod desing;

pub use desing::{pair_partial_desing, BlowupSpec, DesingResult};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::scalar::fmt_rational;
use crate::exactalg::{GaussianRational, LinearForm, LocalizationTerm, MultiPoly, Rational};
use crate::models::{localized_terms, ActionModel, GroupKind, LocalizedTerm};
use crate::residue::{jk_residue, residue_1d, Chamber, Perturbation};

/// `n₀ (−1)^{n₊} / (n₀^T |W|)`.
pub fn martin_factor(model: &ActionModel) -> Rational {
    let c = &model.constants;
    let sign = if c.n_plus % 2 == 0 { 1 } else { -1 };
    Rational::new(BigInt::from(sign * c.n0), BigInt::from(c.n0_t * c.weyl))
}

/// `D(X)^2` lifted into the localized terms.
fn times_d_squared(model: &ActionModel, terms: Vec<LocalizedTerm>) -> Result<Vec<LocalizedTerm>> {
    if model.positive_roots.is_empty() {
        return Ok(terms);
    }
    let d2 = model.d_squared();
    terms
        .into_iter()
        .map(|t| Ok(LocalizedTerm { component: t.component, term: t.term.mul_poly(&d2)? }))
        .collect()
}

/// A chamber vector avoiding every denominator form: `(1, t, t^2, ...)` for
/// the smallest positive integer `t` that works.
pub fn generic_chamber(rank: usize, forms: &[LinearForm]) -> Chamber {
    for t in 1i64.. {
        let v: Vec<Rational> = (0..rank as u32).map(|k| Rational::from_integer(BigInt::from(t).pow(k))).collect();
        if forms.iter().all(|f| !f.eval(&v).is_zero()) {
            return Chamber::new(v);
        }
    }
    unreachable!()
}

fn all_forms(model: &ActionModel) -> Vec<LinearForm> {
    model.components.iter().flat_map(|f| f.normal_weights.iter().cloned()).collect()
}

fn torus_residue(model: &ActionModel, terms: &[LocalizedTerm]) -> Result<GaussianRational> {
    let chamber = generic_chamber(model.rank, &all_forms(model));
    let rho = Perturbation::opposite(&chamber)?;
    let raw: Vec<LocalizationTerm> = terms.iter().map(|t| t.term.clone()).collect();
    jk_residue(&raw, &chamber, Some(&rho))
}

fn sum_residues<'a>(terms: impl Iterator<Item = &'a LocalizedTerm>) -> Result<GaussianRational> {
    let mut total = GaussianRational::zero();
    for t in terms {
        total += &residue_1d(&t.term)?;
    }
    Ok(total)
}

fn check_class(model: &ActionModel, eta: &MultiPoly) -> Result<()> {
    if eta.nvars() != model.generators.len() {
        return Err(Error::VariableCount { left: model.generators.len(), right: eta.nvars() });
    }
    Ok(())
}

/// `κ(η)[M//K]` when 0 is a regular value of the moment map.
///
/// Rank one: `−n₀ Σ_{μ(F)>0} res h_F` for `U(1)` and `(n₀/2) res((2X)^2 Σ_{μ(F)>0} h_F)`
/// for `SU(2)`, with `h_F = i_F^*(η) e^{μ(F)X} / e_F`. Generic tori use
/// `residue_scale · res^{ρ,Λ}(D^2 Σ_F h_F)`.
pub fn pair_regular(model: &ActionModel, eta: &MultiPoly) -> Result<GaussianRational> {
    check_class(model, eta)?;
    if let Some(f) = model.components.iter().find(|f| f.strictly_semistable || (model.rank == 1 && f.moment.is_zero())) {
        return Err(Error::StrictlySemistable(f.id.clone()));
    }
    let terms = times_d_squared(model, localized_terms(model, eta, &LinearForm::zero(model.rank), true)?)?;
    let n0 = Rational::from_integer(BigInt::from(model.constants.n0));
    match model.group {
        GroupKind::U1 | GroupKind::Su2 => {
            let pos = terms.iter().filter(|t| model.components[t.component].moment_1d().is_positive());
            let r = sum_residues(pos)?;
            let c = if model.group == GroupKind::U1 { -n0 } else { n0 / Rational::from_integer(2.into()) };
            Ok(r.scale(&c))
        }
        GroupKind::Torus => {
            let scale = model.constants.residue_scale.clone().unwrap_or_else(Rational::one);
            Ok(torus_residue(model, &terms)?.scale(&scale))
        }
    }
}

/// `κ^T(η D^2)[M //_ξ T]`: the abelian quotient at level `ξ`.
///
/// Rank one: `−n₀^T Σ_{μ(F)>ξ} res(D^2 i_F^*(η) e^{(μ(F)−ξ)X} / e_F)`.
pub fn pair_abelianized(model: &ActionModel, eta: &MultiPoly, shift: &LinearForm) -> Result<GaussianRational> {
    check_class(model, eta)?;
    if shift.rank() != model.rank {
        return Err(Error::VariableCount { left: model.rank, right: shift.rank() });
    }
    if model.components.iter().any(|f| f.moment == *shift) {
        return Err(Error::CriticalShift(shift.to_string()));
    }
    let terms = times_d_squared(model, localized_terms(model, eta, shift, true)?)?;
    let n0t = Rational::from_integer(BigInt::from(model.constants.n0_t));
    match model.group {
        GroupKind::U1 | GroupKind::Su2 => {
            let xi = shift.coeff(0);
            let above = terms.iter().filter(|t| model.components[t.component].moment_1d() > xi);
            Ok(sum_residues(above)?.scale(&-n0t))
        }
        GroupKind::Torus => {
            let c = &model.constants;
            let scale = c.residue_scale.clone().unwrap_or_else(Rational::one) * Rational::new(c.n0_t.into(), c.n0.into());
            Ok(torus_residue(model, &terms)?.scale(&scale))
        }
    }
}

/// Convenience for rank one: `ξ` given as a rational.
pub fn pair_abelianized_at(model: &ActionModel, eta: &MultiPoly, xi: &Rational) -> Result<GaussianRational> {
    pair_abelianized(model, eta, &LinearForm::new(vec![xi.clone()]))
}

fn require_rank_one(model: &ActionModel) -> Result<()> {
    if model.rank != 1 {
        return Err(Error::NotRankOne(model.rank));
    }
    Ok(())
}

/// The small shift used for singular quotients: the midpoint of `(0, m⁺)`.
pub fn small_shift(model: &ActionModel) -> Result<Rational> {
    require_rank_one(model)?;
    let m = model.smallest_positive_moment().ok_or(Error::EmptyChamber)?;
    Ok(m / Rational::from_integer(2.into()))
}

/// Intersection pairing `⟨κ(α), κ(β)⟩` on a possibly singular quotient.
///
/// Evaluated as `martin_factor · pair_abelianized(αβ, ε)` at `ε = m⁺/2` and
/// checked against `ε = m⁺/3`.
pub fn pair_ih(model: &ActionModel, alpha: &MultiPoly, beta: &MultiPoly) -> Result<GaussianRational> {
    require_rank_one(model)?;
    check_class(model, alpha)?;
    check_class(model, beta)?;
    let eta = alpha * beta;
    if eta.is_zero() {
        return Ok(GaussianRational::zero());
    }
    let top = model.quotient_real_dimension();
    match (model.class_degree(alpha), model.class_degree(beta)) {
        (Some(a), Some(b)) if i64::from(a + b) == top => {}
        (Some(a), Some(b)) => {
            return Err(Error::DegreeMismatch(format!("deg alpha + deg beta = {} but dim M//K = {top}", a + b)));
        }
        _ => return Err(Error::DegreeMismatch("alpha and beta must be homogeneous".into())),
    }
    let eps = small_shift(model)?;
    let v = pair_abelianized_at(model, &eta, &eps)?;
    let w = pair_abelianized_at(model, &eta, &(&eps * Rational::new(2.into(), 3.into())))?;
    if v != w {
        return Err(Error::Contract(format!("pairing depends on the shift: {v} vs {w}")));
    }
    Ok(v.scale(&martin_factor(model)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WallCrossingReport {
    pub wall: Rational,
    pub direction: Direction,
    /// `pair_abelianized` after the crossing minus before it.
    pub jump: GaussianRational,
    pub contributing: Vec<String>,
}

impl WallCrossingReport {
    pub fn reversed(&self) -> WallCrossingReport {
        WallCrossingReport {
            wall: self.wall.clone(),
            direction: match self.direction {
                Direction::Increasing => Direction::Decreasing,
                Direction::Decreasing => Direction::Increasing,
            },
            jump: -self.jump.clone(),
            contributing: self.contributing.clone(),
        }
    }
}

impl fmt::Display for WallCrossingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dir = if self.direction == Direction::Increasing { "up" } else { "down" };
        write!(f, "wall {} ({dir}): jump {} from [{}]", fmt_rational(&self.wall), self.jump, self.contributing.join(", "))
    }
}

/// Change of `pair_abelianized` when `ξ` crosses the wall `w` upwards:
/// `n₀^T Σ_{μ(F)=w} res(D^2 i_F^*(η) / e_F)`.
pub fn wall_crossing_jump(model: &ActionModel, w: &Rational, eta: &MultiPoly) -> Result<WallCrossingReport> {
    require_rank_one(model)?;
    check_class(model, eta)?;
    let terms = times_d_squared(model, localized_terms(model, eta, &LinearForm::zero(1), false)?)?;
    let on_wall: Vec<&LocalizedTerm> = terms.iter().filter(|t| model.components[t.component].moment_1d() == w).collect();
    let mut contributing: Vec<String> = on_wall.iter().map(|t| model.components[t.component].id.clone()).collect();
    contributing.dedup();
    let n0t = Rational::from_integer(BigInt::from(model.constants.n0_t));
    let jump = sum_residues(on_wall.into_iter())?.scale(&n0t);
    Ok(WallCrossingReport { wall: w.clone(), direction: Direction::Increasing, jump, contributing })
}
