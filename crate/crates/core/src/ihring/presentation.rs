//! Equivariant cohomology of the semistable locus of a circle action on `P^n`,
//! the truncated subspace `V_M`, and the intersection pairing on it.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::groebner::GroebnerBasis;
use crate::error::{Error, Result};
use crate::exactalg::{exponent, GaussianRational, MultiPoly};

/// Index of `ξ` and `ρ` in the two-variable ring; lex order puts `ξ > ρ`.
pub const XI: usize = 0;
pub const RHO: usize = 1;

/// True iff there are as many positive weights as negative ones.
pub fn weakly_balanced_check(weights: &[i64]) -> bool {
    weights.iter().filter(|&&w| w > 0).count() == weights.iter().filter(|&&w| w < 0).count()
}

/// `C[ξ, ρ] / I` with `I` generated by the classes of the unstable strata.
#[derive(Clone, Debug)]
pub struct QuotientRingPresentation {
    pub weights: Vec<i64>,
    pub ideal_generators: Vec<MultiPoly>,
    pub groebner: GroebnerBasis,
}

fn xi_minus(r: i64) -> MultiPoly {
    MultiPoly::from_terms(
        2,
        [(exponent(&[1, 0]), GaussianRational::from_int(1)), (exponent(&[0, 1]), GaussianRational::from_int(-r))],
    )
}

pub fn monomial(i: u32, j: u32) -> MultiPoly {
    MultiPoly::monomial(2, &[i, j], GaussianRational::from_int(1))
}

/// Presentation of `H*_{S^1}(P^n_{ss})`.
///
/// Each nonzero weight value `m` contributes the Euler class of its unstable
/// stratum: `∏_{r_i < m} (ξ - r_i ρ)` for `m > 0` and `∏_{r_i > m} (ξ - r_i ρ)`
/// for `m < 0`.
pub fn semistable_ring(weights: &[i64]) -> Result<QuotientRingPresentation> {
    if !weights.iter().any(|&w| w > 0) || !weights.iter().any(|&w| w < 0) {
        return Err(Error::DegenerateWeights(
            "need both positive and negative weights for a nonempty semistable set".into(),
        ));
    }
    let mut values: Vec<i64> = weights.iter().copied().filter(|&w| w != 0).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    let gens: Vec<MultiPoly> = values
        .iter()
        .map(|&m| {
            weights
                .iter()
                .filter(|&&r| if m > 0 { r < m } else { r > m })
                .fold(MultiPoly::one(2), |acc, &r| &acc * &xi_minus(r))
        })
        .collect();
    let groebner = GroebnerBasis::compute(&gens)?;
    groebner.verify(&gens)?;
    Ok(QuotientRingPresentation { weights: weights.to_vec(), ideal_generators: gens, groebner })
}

impl QuotientRingPresentation {
    /// Standard monomials `ξ^i ρ^j` of cohomological degree `deg`, by increasing `i`.
    pub fn standard_monomials(&self, deg: u32) -> Vec<(u32, u32)> {
        if deg % 2 == 1 {
            return vec![];
        }
        let k = deg / 2;
        (0..=k).filter(|&i| self.groebner.is_standard(&[i, k - i])).map(|i| (i, k - i)).collect()
    }

    pub fn normal_form(&self, p: &MultiPoly) -> MultiPoly {
        self.groebner.normal_form(p)
    }
}

/// The standard monomials retained by truncation along the strata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VmBasis {
    /// Multiplicity of the zero weight.
    pub q: u32,
    /// Number of nonzero weights minus one.
    pub n_r: u32,
    pub top_degree: u32,
    /// Cohomological degree to retained monomials `(i, j)` for `ξ^i ρ^j`.
    pub by_degree: BTreeMap<u32, Vec<(u32, u32)>>,
    pub tau: (u32, u32),
}

impl VmBasis {
    pub fn degree(&self, d: u32) -> &[(u32, u32)] {
        self.by_degree.get(&d).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Graded dimensions in degrees `0, 2, ..., top`.
    pub fn betti(&self) -> Vec<usize> {
        (0..=self.top_degree).step_by(2).map(|d| self.degree(d).len()).collect()
    }

    pub fn retains(&self, i: u32, j: u32) -> bool {
        self.q == 0 || i >= self.q || 2 * j < self.n_r
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        self.degree(2 * (i + j)).contains(&(i, j))
    }
}

/// Builds the presentation and the truncated basis together.
pub fn vm_basis_with_ring(weights: &[i64]) -> Result<(QuotientRingPresentation, VmBasis)> {
    if !weakly_balanced_check(weights) {
        return Err(Error::NotWeaklyBalanced);
    }
    let ring = semistable_ring(weights)?;
    let q = weights.iter().filter(|&&w| w == 0).count() as u32;
    let n_r = weights.iter().filter(|&&w| w != 0).count() as u32 - 1;
    let top_degree = 2 * (weights.len() as u32 - 2);
    let mut by_degree = BTreeMap::new();
    let mut basis = VmBasis { q, n_r, top_degree, by_degree: BTreeMap::new(), tau: (0, 0) };
    for d in (0..=top_degree + 2).step_by(2) {
        let kept: Vec<(u32, u32)> =
            ring.standard_monomials(d).into_iter().filter(|&(i, j)| basis.retains(i, j)).collect();
        if d > top_degree {
            if !kept.is_empty() {
                return Err(Error::Contract(format!("V_M has classes above the top degree {top_degree}")));
            }
            continue;
        }
        by_degree.insert(d, kept);
    }
    basis.by_degree = by_degree;
    let top = basis.degree(top_degree);
    if top.len() != 1 {
        return Err(Error::Contract(format!("top graded piece of V_M has dimension {}", top.len())));
    }
    basis.tau = top[0];
    Ok((ring, basis))
}

pub fn vm_basis(weights: &[i64]) -> Result<VmBasis> {
    vm_basis_with_ring(weights).map(|(_, b)| b)
}

fn class_degree(p: &MultiPoly, what: &str) -> Result<Option<u32>> {
    if p.nvars() != 2 {
        return Err(Error::VariableCount { left: 2, right: p.nvars() });
    }
    if !p.is_homogeneous() {
        return Err(Error::DegreeMismatch(format!("{what} is not homogeneous")));
    }
    Ok(p.degree().map(|d| 2 * d))
}

fn pairing_in(ring: &QuotientRingPresentation, basis: &VmBasis, alpha: &MultiPoly, beta: &MultiPoly) -> Result<GaussianRational> {
    let (da, db) = (class_degree(alpha, "alpha")?, class_degree(beta, "beta")?);
    let (da, db) = match (da, db) {
        (Some(a), Some(b)) => (a, b),
        _ => return Ok(GaussianRational::zero()),
    };
    if da + db != basis.top_degree {
        return Err(Error::DegreeMismatch(format!("deg alpha + deg beta = {} but the top degree is {}", da + db, basis.top_degree)));
    }
    for (p, name) in [(alpha, "alpha"), (beta, "beta")] {
        let nf = ring.normal_form(p);
        let outside = nf.terms().map(|(e, _)| (e[XI], e[RHO])).find(|&(i, j)| !basis.contains(i, j));
        if let Some((i, j)) = outside {
            return Err(Error::Contract(format!("{name} has a component ξ^{i}ρ^{j} outside V_M")));
        }
    }
    let nf = ring.normal_form(&(alpha * beta));
    let (ti, tj) = basis.tau;
    let c = nf.coeff(&[ti, tj]);
    if nf.len() > usize::from(!c.is_zero()) {
        return Err(Error::Contract(format!("normal form {} is not a multiple of τ", nf.display_with(&["xi", "rho"]))));
    }
    Ok(c)
}

/// `c` with `NF(αβ) = c·τ`.
pub fn ih_pairing_scalar(weights: &[i64], alpha: &MultiPoly, beta: &MultiPoly) -> Result<GaussianRational> {
    let (ring, basis) = vm_basis_with_ring(weights)?;
    pairing_in(&ring, &basis, alpha, beta)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PairingMatrix {
    pub rows: Vec<(u32, u32)>,
    pub cols: Vec<(u32, u32)>,
    pub entries: Vec<Vec<GaussianRational>>,
}

impl PairingMatrix {
    pub fn transpose(&self) -> PairingMatrix {
        let entries = (0..self.cols.len()).map(|c| self.entries.iter().map(|r| r[c].clone()).collect()).collect();
        PairingMatrix { rows: self.cols.clone(), cols: self.rows.clone(), entries }
    }

    /// Determinant, for square matrices with rational entries.
    pub fn determinant(&self) -> Option<crate::exactalg::Rational> {
        let m: Option<Vec<Vec<_>>> =
            self.entries.iter().map(|r| r.iter().map(|c| c.as_real().cloned()).collect()).collect();
        let m = m?;
        if m.len() != self.cols.len() {
            return None;
        }
        Some(crate::exactalg::linalg::determinant(&m))
    }
}

/// Gram matrix between `V_M` in degree `d` (rows) and degree `top - d` (columns).
pub fn ih_pairing_matrix(weights: &[i64], d: u32) -> Result<PairingMatrix> {
    let (ring, basis) = vm_basis_with_ring(weights)?;
    if d % 2 == 1 || d > basis.top_degree {
        return Err(Error::DegreeMismatch(format!("degree {d} is not an even degree in 0..={}", basis.top_degree)));
    }
    let rows = basis.degree(d).to_vec();
    let cols = basis.degree(basis.top_degree - d).to_vec();
    let entries = rows
        .iter()
        .map(|&(a, b)| {
            cols.iter().map(|&(c, e)| pairing_in(&ring, &basis, &monomial(a, b), &monomial(c, e))).collect()
        })
        .collect::<Result<Vec<Vec<_>>>>()?;
    Ok(PairingMatrix { rows, cols, entries })
}
