//! Single-stage partial desingularization for rank-one models.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{check_class, martin_factor, pair_abelianized_at, require_rank_one, small_shift, sum_residues, times_d_squared};
use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, LinearForm, MultiPoly, Rational};
use crate::models::{localized_terms, ActionModel, FixedComponent};

/// Torus-fixed data on the exceptional divisor over one strictly semistable component.
#[derive(Clone, Debug, PartialEq)]
pub struct BlowupSpec {
    pub component: String,
    pub exceptional: Vec<FixedComponent>,
}

impl BlowupSpec {
    /// Blow-up of `P(S^n C^2)` (`n` even) along the orbit through the
    /// zero-weight point. Fixed lines in the normal directions carry the
    /// weights `-n, ..., n` with `0, -2, 2` omitted.
    pub fn su2_pn(n: u32) -> Result<BlowupSpec> {
        if n % 2 == 1 || n < 4 {
            return Err(Error::InvalidArgument(format!("su2_pn blow-up needs even n >= 4, got {n}")));
        }
        let n = n as i64;
        let fiber: Vec<i64> = (0..=n).map(|j| n - 2 * j).filter(|w| ![0, 2, -2].contains(w)).collect();
        let exceptional = fiber
            .iter()
            .map(|&w| {
                let mut normal = vec![LinearForm::from_ints(&[w])];
                normal.extend(fiber.iter().filter(|&&v| v != w).map(|&v| LinearForm::from_ints(&[v - w])));
                normal.push(LinearForm::from_ints(&[2]));
                normal.push(LinearForm::from_ints(&[-2]));
                FixedComponent {
                    id: format!("e{w}"),
                    moment: LinearForm::from_ints(&[w]),
                    normal_weights: normal,
                    restriction: vec![MultiPoly::zero(1), MultiPoly::monomial(1, &[2], GaussianRational::from_int(1))],
                    fiber_dim: 0,
                    strictly_semistable: false,
                }
            })
            .collect();
        Ok(BlowupSpec { component: format!("p{}", n / 2), exceptional })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DesingResult {
    /// `pair_abelianized` at the small shift.
    pub chamber_value: GaussianRational,
    /// Residues from exceptional fixed points of positive moment.
    pub correction: GaussianRational,
    /// `martin_factor · (chamber_value + correction)`.
    pub total: GaussianRational,
}

/// `κ(η)[M̃//K]` for a partial desingularization obtained by one blow-up.
pub fn pair_partial_desing(model: &ActionModel, eta: &MultiPoly, blowups: &[BlowupSpec]) -> Result<DesingResult> {
    require_rank_one(model)?;
    check_class(model, eta)?;
    let mut correction = GaussianRational::zero();
    let n0t = Rational::from_integer(BigInt::from(model.constants.n0_t));
    for f in model.flagged() {
        let spec = blowups.iter().find(|b| b.component == f.id).ok_or_else(|| Error::MissingBlowup(f.id.clone()))?;
        let positive: Vec<FixedComponent> =
            spec.exceptional.iter().filter(|e| e.moment_1d().is_positive()).cloned().collect();
        if positive.is_empty() {
            continue;
        }
        // The exceptional points, as a model of their own, so that restriction
        // and localization share the code path of ordinary components.
        let local = ActionModel {
            rank: 1,
            group: model.group,
            constants: model.constants.clone(),
            generators: model.generators.clone(),
            positive_roots: model.positive_roots.clone(),
            components: positive,
        };
        let terms = times_d_squared(&local, localized_terms(&local, eta, &LinearForm::zero(1), false)?)?;
        correction += &sum_residues(terms.iter())?.scale(&-n0t.clone());
    }
    let chamber_value = pair_abelianized_at(model, eta, &small_shift(model)?)?;
    let total = (&chamber_value + &correction).scale(&martin_factor(model));
    Ok(DesingResult { chamber_value, correction, total })
}
