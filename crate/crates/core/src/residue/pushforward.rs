//! Integration over a projectivized vector bundle `P(E) → M`:
//! `∫_{P(E)} η = Res_{y=0} ∫_M η / p(y)`, with `p(y) = y^r + c_1 y^{r-1} + … + c_r`.

use crate::error::{Error, Result};
use crate::exactalg::{Exponent, GaussianRational, MultiPoly};
use crate::ihring::groebner::GroebnerBasis;

/// A finite graded ring `Q[x_1..x_k] / I` with a top-degree integration
/// functional `∫ p = coefficient of the fundamental monomial in normal_form(p)`.
#[derive(Clone, Debug)]
pub struct GradedRing {
    nvars: usize,
    basis: Option<GroebnerBasis>,
    fundamental: Exponent,
}

impl GradedRing {
    /// The cohomology of a point.
    pub fn point() -> Self {
        GradedRing { nvars: 0, basis: None, fundamental: Exponent::new() }
    }

    /// `Q[h]/(h^{d+1})` with `∫ h^d = 1`.
    pub fn projective_space(d: u32) -> Self {
        let rel = MultiPoly::monomial(1, &[d + 1], GaussianRational::from_int(1));
        Self::new(1, &[rel], &[d]).expect("valid presentation")
    }

    /// General presentation. The fundamental monomial must be standard.
    pub fn new(nvars: usize, relations: &[MultiPoly], fundamental: &[u32]) -> Result<Self> {
        if fundamental.len() != nvars {
            return Err(Error::VariableCount { left: nvars, right: fundamental.len() });
        }
        let basis = if relations.is_empty() { None } else { Some(GroebnerBasis::compute(relations)?) };
        if let Some(b) = &basis {
            if !b.is_standard(fundamental) {
                return Err(Error::InvalidArgument("fundamental monomial lies in the ideal".into()));
            }
        }
        Ok(GradedRing { nvars, basis, fundamental: fundamental.iter().copied().collect() })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        match &self.basis {
            Some(b) => b.normal_form(p),
            None => p.clone(),
        }
    }

    pub fn integrate(&self, p: &MultiPoly) -> GaussianRational {
        self.normal_form(p).coeff(&self.fundamental)
    }
}

/// `class[a]` is the coefficient of `y^a`; `chern[i]` is `c_{i+1}`.
pub fn pushforward_projective_bundle(
    class: &[MultiPoly],
    chern: &[MultiPoly],
    ring: &GradedRing,
) -> Result<GaussianRational> {
    let r = chern.len();
    if r == 0 {
        return Err(Error::InvalidArgument("bundle rank must be positive".into()));
    }
    for p in class.iter().chain(chern) {
        if p.nvars() != ring.nvars() {
            return Err(Error::VariableCount { left: ring.nvars(), right: p.nvars() });
        }
    }
    // 1/p(y) = Σ_j s_j y^{-r-j}, s_0 = 1, s_j = −Σ_{i=1}^{min(j,r)} c_i s_{j-i}.
    let top = class.len();
    let mut segre = vec![MultiPoly::one(ring.nvars())];
    for j in 1..top {
        let mut s = MultiPoly::zero(ring.nvars());
        for i in 1..=j.min(r) {
            s = &s - &(&chern[i - 1] * &segre[j - i]);
        }
        segre.push(ring.normal_form(&s));
    }
    let mut res = MultiPoly::zero(ring.nvars());
    for (a, eta) in class.iter().enumerate() {
        // y^a · y^{-r-j} has exponent −1 when j = a + 1 − r.
        if a + 1 >= r {
            res = &res + &(eta * &segre[a + 1 - r]);
        }
    }
    Ok(ring.integrate(&res))
}
