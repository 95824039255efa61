//! The built-in example families.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::{ActionModel, FixedComponent, GroupConstants, GroupKind};
use crate::error::{Error, Result};
use crate::exactalg::{exponent, int, GaussianRational, LinearForm, MultiPoly};

fn poly_x(coeff: i64, power: u32) -> MultiPoly {
    MultiPoly::monomial(1, &[power], GaussianRational::from_int(coeff))
}

/// Linear circle action on `P^n` with the given integer weights.
///
/// Pairwise distinct weights give isolated coordinate points `p_j`. Repeated
/// weights give one projective component `F_v` per weight value, with the
/// generator `xi` restricting to `vX - h`.
pub fn model_circle_pn(weights: &[i64]) -> Result<ActionModel> {
    if weights.is_empty() {
        return Err(Error::InvalidArgument("weight list is empty".into()));
    }
    if weights.len() < 2 {
        return Err(Error::InvalidArgument("need at least two weights (n >= 1)".into()));
    }
    let mut n0 = 0i64;
    for a in weights {
        for b in weights {
            n0 = n0.gcd(&(a - b));
        }
    }
    if n0 == 0 {
        n0 = 1;
    }
    let mut mult: BTreeMap<i64, u32> = BTreeMap::new();
    for &w in weights {
        *mult.entry(w).or_default() += 1;
    }
    let distinct = mult.values().all(|&m| m == 1);

    let mut components = Vec::new();
    if distinct {
        for (j, &r) in weights.iter().enumerate() {
            components.push(FixedComponent {
                id: format!("p{j}"),
                moment: LinearForm::from_ints(&[r]),
                normal_weights: weights
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, &rk)| LinearForm::from_ints(&[rk - r]))
                    .collect(),
                restriction: vec![poly_x(r, 1), poly_x(1, 1)],
                fiber_dim: 0,
                strictly_semistable: r == 0,
            });
        }
    } else {
        // Descending weight order, matching the coordinate order in which the
        // multiplicities are usually listed.
        for (&v, &m) in mult.iter().rev() {
            let normal = weights.iter().filter(|&&w| w != v).map(|&w| LinearForm::from_ints(&[w - v])).collect();
            let (restriction, fiber_dim) = if m == 1 {
                (vec![poly_x(v, 1), poly_x(1, 1)], 0)
            } else {
                let xi = MultiPoly::from_terms(
                    2,
                    [
                        (exponent(&[1, 0]), GaussianRational::from_int(v)),
                        (exponent(&[0, 1]), GaussianRational::from_int(-1)),
                    ],
                );
                (vec![xi, MultiPoly::var(2, 0)], m - 1)
            };
            components.push(FixedComponent {
                id: format!("F{v}"),
                moment: LinearForm::from_ints(&[v]),
                normal_weights: normal,
                restriction,
                fiber_dim,
                strictly_semistable: v == 0,
            });
        }
    }
    ActionModel::new(
        1,
        GroupKind::U1,
        GroupConstants { n0, n0_t: n0, weyl: 1, s: 1, n_plus: 0, residue_scale: None },
        vec!["xi".into(), "zeta".into()],
        vec![],
        components,
    )
}

fn su2_constants() -> GroupConstants {
    GroupConstants { n0: 2, n0_t: 2, weyl: 2, s: 3, n_plus: 1, residue_scale: None }
}

/// `SU(2)` acting on `P^n = P(S^n C^2)` with torus weights `n, n-2, ..., -n`.
pub fn model_su2_pn(n: u32) -> Result<ActionModel> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("su2_pn requires n >= 2, got {n}")));
    }
    let n = n as i64;
    let components = (0..=n)
        .map(|j| FixedComponent {
            id: format!("p{j}"),
            moment: LinearForm::from_ints(&[n - 2 * j]),
            normal_weights: (0..=n).filter(|&k| k != j).map(|k| LinearForm::from_ints(&[2 * (j - k)])).collect(),
            restriction: vec![poly_x(n - 2 * j, 1), poly_x(1, 2)],
            fiber_dim: 0,
            strictly_semistable: n - 2 * j == 0,
        })
        .collect();
    ActionModel::new(
        1,
        GroupKind::Su2,
        su2_constants(),
        vec!["xi".into(), "zeta2".into()],
        vec![LinearForm::from_ints(&[2])],
        components,
    )
}

/// Diagonal `SU(2)` acting on `(P^1)^n`; fixed points are sign vectors `δ`.
pub fn model_su2_p1n(n: u32) -> Result<ActionModel> {
    if n < 1 {
        return Err(Error::InvalidArgument("su2_p1n requires n >= 1".into()));
    }
    if n > 16 {
        return Err(Error::InvalidArgument(format!("su2_p1n: 2^{n} fixed points is too many")));
    }
    let mut generators: Vec<String> = (1..=n).map(|i| format!("xi{i}")).collect();
    generators.push("zeta2".into());
    let mut components = Vec::new();
    for mask in 0u32..(1 << n) {
        // Bit i set means δ_{i+1} = -1; mask 0 is δ = (1, ..., 1).
        let delta: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let id: String = delta.iter().map(|&d| if d > 0 { '+' } else { '-' }).collect();
        let moment: i64 = delta.iter().sum();
        let mut restriction: Vec<MultiPoly> = delta.iter().map(|&d| poly_x(d, 1)).collect();
        restriction.push(poly_x(1, 2));
        components.push(FixedComponent {
            id: format!("d{id}"),
            moment: LinearForm::new(vec![int(moment)]),
            normal_weights: delta.iter().map(|&d| LinearForm::from_ints(&[d])).collect(),
            restriction,
            fiber_dim: 0,
            strictly_semistable: moment == 0,
        });
    }
    ActionModel::new(1, GroupKind::Su2, su2_constants(), generators, vec![LinearForm::from_ints(&[2])], components)
}
