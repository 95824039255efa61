//! Fixed-point data for torus, circle and SU(2) actions.

mod builtins;
pub mod config;
mod localize;

pub use builtins::{model_circle_pn, model_su2_p1n, model_su2_pn};
pub use config::{dump_model, load_model, load_model_file};
pub use localize::{localized_terms, localized_terms_with, LocalizedTerm};

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{GaussianRational, LinearForm, MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    U1,
    Su2,
    Torus,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::U1 => "u1",
            GroupKind::Su2 => "su2",
            GroupKind::Torus => "torus",
        })
    }
}

/// Orders of generic stabilizers and the Lie-theoretic counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupConstants {
    /// Order of the generic stabilizer of `K` on `μ^{-1}(0)`.
    pub n0: i64,
    /// Order of the generic stabilizer of `T`.
    pub n0_t: i64,
    pub weyl: i64,
    /// `dim K`.
    pub s: i64,
    /// Number of positive roots.
    pub n_plus: i64,
    /// Scalar multiplying the residue for generic tori (`C_K · n₀`).
    pub residue_scale: Option<Rational>,
}

/// A connected component `F` of the torus-fixed locus.
///
/// Isolated points restrict each generator to a polynomial in `X_1..X_ℓ`.
/// A component with `fiber_dim = d > 0` is a projective space `P^d` whose
/// restrictions are polynomials in `X_1..X_ℓ, h` (`h` the hyperplane class,
/// `∫ h^d = 1`), and whose normal bundle splits into line bundles with
/// equivariant Chern roots `h + β` for each listed normal weight `β`.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedComponent {
    pub id: String,
    pub moment: LinearForm,
    pub normal_weights: Vec<LinearForm>,
    pub restriction: Vec<MultiPoly>,
    pub fiber_dim: u32,
    pub strictly_semistable: bool,
}

impl FixedComponent {
    pub fn is_isolated(&self) -> bool {
        self.fiber_dim == 0
    }

    /// `e_F(X) = ∏ β_j(X)` for an isolated point.
    pub fn euler_poly(&self, rank: usize) -> MultiPoly {
        self.normal_weights.iter().fold(MultiPoly::one(rank), |acc, b| &acc * &b.to_poly())
    }

    /// The rank-one moment value.
    pub fn moment_1d(&self) -> &Rational {
        self.moment.coeff(0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ActionModel {
    pub rank: usize,
    pub group: GroupKind,
    pub constants: GroupConstants,
    pub generators: Vec<String>,
    pub positive_roots: Vec<LinearForm>,
    pub components: Vec<FixedComponent>,
}

impl ActionModel {
    /// Validates and returns the model.
    pub fn new(
        rank: usize,
        group: GroupKind,
        constants: GroupConstants,
        generators: Vec<String>,
        positive_roots: Vec<LinearForm>,
        components: Vec<FixedComponent>,
    ) -> Result<Self> {
        let m = ActionModel { rank, group, constants, generators, positive_roots, components };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |s: String| Err(Error::Model(s));
        let c = &self.constants;
        if self.rank == 0 {
            return bad("rank must be at least 1".into());
        }
        if (c.s - self.rank as i64) % 2 != 0 || c.n_plus != (c.s - self.rank as i64) / 2 {
            return bad(format!("nplus = {} but (s - rank)/2 = ({} - {})/2", c.n_plus, c.s, self.rank));
        }
        if self.positive_roots.len() as i64 != c.n_plus {
            return bad(format!("{} positive roots listed but nplus = {}", self.positive_roots.len(), c.n_plus));
        }
        match self.group {
            GroupKind::U1 | GroupKind::Su2 if self.rank != 1 => {
                return bad(format!("group {} requires rank 1", self.group));
            }
            GroupKind::U1 if c.weyl != 1 || c.n_plus != 0 => return bad("u1 requires weyl = 1 and nplus = 0".into()),
            GroupKind::Su2 if c.weyl != 2 || c.n_plus != 1 => return bad("su2 requires weyl = 2 and nplus = 1".into()),
            GroupKind::Torus if c.residue_scale.is_none() => {
                return bad("torus models require constants.residue_scale".into());
            }
            _ => {}
        }
        if c.n0 <= 0 || c.n0_t <= 0 || c.weyl <= 0 {
            return bad("n0, n0T and weyl must be positive".into());
        }
        for r in &self.positive_roots {
            if r.rank() != self.rank || r.is_zero() {
                return bad(format!("positive root {r} must be a nonzero form of rank {}", self.rank));
            }
        }
        if self.components.is_empty() {
            return bad("at least one fixed component is required".into());
        }
        for f in &self.components {
            if f.moment.rank() != self.rank {
                return bad(format!("component `{}`: moment has length {}, expected {}", f.id, f.moment.rank(), self.rank));
            }
            for b in &f.normal_weights {
                if b.rank() != self.rank {
                    return bad(format!("component `{}`: normal weight {b} has wrong length", f.id));
                }
                if b.is_zero() {
                    return bad(format!("component `{}`: zero normal weight", f.id));
                }
            }
            if f.restriction.len() != self.generators.len() {
                return bad(format!("component `{}`: restriction must list every generator", f.id));
            }
            let nv = self.rank + usize::from(f.fiber_dim > 0);
            if f.restriction.iter().any(|p| p.nvars() != nv) {
                return bad(format!("component `{}`: restrictions must be polynomials in {nv} variables", f.id));
            }
        }
        let dim = self.components[0].normal_weights.len() as u32 + self.components[0].fiber_dim;
        if let Some(f) = self.components.iter().find(|f| f.normal_weights.len() as u32 + f.fiber_dim != dim) {
            return bad(format!("component `{}`: dimension differs from the others", f.id));
        }
        Ok(())
    }

    pub fn generator_index(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// `D(X) = ∏_{γ > 0} γ(X)`.
    pub fn d_poly(&self) -> MultiPoly {
        self.positive_roots.iter().fold(MultiPoly::one(self.rank), |acc, g| &acc * &g.to_poly())
    }

    pub fn d_squared(&self) -> MultiPoly {
        self.d_poly().pow(2)
    }

    /// Complex dimension of `M`.
    pub fn complex_dimension(&self) -> u32 {
        self.components[0].normal_weights.len() as u32 + self.components[0].fiber_dim
    }

    /// Real dimension of the quotient `M//K`.
    pub fn quotient_real_dimension(&self) -> i64 {
        2 * (self.complex_dimension() as i64 - self.constants.s)
    }

    /// Real dimension of the abelian quotient `M//T`.
    pub fn torus_quotient_real_dimension(&self) -> i64 {
        2 * (self.complex_dimension() as i64 - self.rank as i64)
    }

    /// Cohomological degree of each generator, read off from its restrictions.
    pub fn generator_degrees(&self) -> Vec<u32> {
        (0..self.generators.len())
            .map(|g| {
                self.components
                    .iter()
                    .filter_map(|f| f.restriction[g].degree())
                    .max()
                    .map(|d| 2 * d)
                    .unwrap_or(2)
            })
            .collect()
    }

    /// Degree of a homogeneous class; `None` if not homogeneous, `Some(0)` for 0.
    pub fn class_degree(&self, eta: &MultiPoly) -> Option<u32> {
        let w = self.generator_degrees();
        if !eta.is_weighted_homogeneous(&w) {
            return None;
        }
        Some(eta.weighted_degree(&w).unwrap_or(0))
    }

    /// Components with `μ(F) = 0`.
    pub fn flagged(&self) -> impl Iterator<Item = &FixedComponent> {
        self.components.iter().filter(|f| f.strictly_semistable)
    }

    pub fn component(&self, id: &str) -> Option<&FixedComponent> {
        self.components.iter().find(|f| f.id == id)
    }

    /// Sorted distinct rank-one moment values.
    pub fn moment_values(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.components.iter().map(|f| f.moment_1d().clone()).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Smallest positive rank-one moment.
    pub fn smallest_positive_moment(&self) -> Option<Rational> {
        self.moment_values().into_iter().find(|m| *m > Rational::zero())
    }

    /// A class in the model's generator ring.
    pub fn generator(&self, name: &str) -> Result<MultiPoly> {
        Ok(MultiPoly::var(self.generators.len(), self.generator_index(name)?))
    }

    pub fn constant_class(&self, c: i64) -> MultiPoly {
        MultiPoly::constant(self.generators.len(), GaussianRational::from_int(c))
    }

    pub fn generator_names(&self) -> Vec<&str> {
        self.generators.iter().map(|s| s.as_str()).collect()
    }
}
