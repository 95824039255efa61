//! The Jeffrey–Kirwan residue `res^{ρ,Λ}`.
//!
//! Each term is split by partial fractions until its denominator forms are
//! linearly independent. Pieces whose forms do not span `t*` vanish. A piece
//! with a basis of forms `β_1..β_ℓ` (multiplicities `m_j`) is evaluated in the
//! coordinates `u_j = β_j(X)`: only the monomial `∏ u_j^{m_j-1}` of
//! `q(X) (λ(X))^k / k!` survives, with `k = N − ℓ − deg`, and it is weighted by
//! `|det β|^{-1}` when `λ` lies inside the cone spanned by the `β_j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::linalg::{determinant, express_in, inverse, solve, transpose, Matrix};
use crate::exactalg::scalar::factorial;
use crate::exactalg::{ExpConvention, GaussianRational, LinearForm, LocalizationTerm, MultiPoly, Rational};

/// A chamber `Λ`, given by any vector `ξ ∈ t` inside it.
#[derive(Clone, PartialEq, Eq)]
pub struct Chamber {
    vector: Vec<Rational>,
}

impl Chamber {
    pub fn new(vector: Vec<Rational>) -> Self {
        Chamber { vector }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Chamber { vector: v.iter().map(|&x| Rational::from_integer(x.into())).collect() }
    }

    pub fn rank(&self) -> usize {
        self.vector.len()
    }

    pub fn vector(&self) -> &[Rational] {
        &self.vector
    }
}

impl fmt::Debug for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Chamber{}", LinearForm::new(self.vector.clone()))
    }
}

/// The direction `ρ` used to push a boundary `λ` into a cone. Requires `ρ(ξ) < 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    rho: LinearForm,
}

impl Perturbation {
    pub fn new(rho: LinearForm, chamber: &Chamber) -> Result<Self> {
        if rho.rank() != chamber.rank() {
            return Err(Error::VariableCount { left: chamber.rank(), right: rho.rank() });
        }
        if !rho.eval(chamber.vector()).is_negative() {
            return Err(Error::InvalidPerturbation(format!(
                "rho = {rho} must be negative on the chamber vector"
            )));
        }
        Ok(Perturbation { rho })
    }

    /// `ρ = −ξ` (under the standard pairing), always valid for a nonzero `ξ`.
    pub fn opposite(chamber: &Chamber) -> Result<Self> {
        Self::new(LinearForm::new(chamber.vector().to_vec()).neg(), chamber)
    }

    pub fn rho(&self) -> &LinearForm {
        &self.rho
    }
}

type Forms = BTreeMap<LinearForm, u32>;

struct Prepared {
    numerator: MultiPoly,
    exponent: LinearForm,
    convention: ExpConvention,
    pieces: BTreeMap<Forms, GaussianRational>,
}

/// Flips each form to be positive on `ξ` (sign `(−1)^m` per flip) and rescales
/// it so its first nonzero coefficient is `±1`.
fn prepare(term: &LocalizationTerm, chamber: &Chamber) -> Result<Prepared> {
    let mut coef = GaussianRational::one();
    let mut forms = Forms::new();
    for (b, m) in term.denominator() {
        let v = b.eval(chamber.vector());
        if v.is_zero() {
            return Err(Error::InvalidChamber(b.to_string()));
        }
        let b = if v.is_negative() {
            if m % 2 == 1 {
                coef = -coef;
            }
            b.neg()
        } else {
            b.clone()
        };
        let (nb, s) = b.normalize_positive();
        let s_pow = num_traits::pow(s, *m as usize);
        coef = coef.scale(&(Rational::one() / s_pow));
        *forms.entry(nb).or_insert(0) += m;
    }
    let mut pieces = BTreeMap::new();
    pieces.insert(forms, coef);
    Ok(Prepared {
        numerator: term.numerator().clone(),
        exponent: term.exponent().clone(),
        convention: term.convention(),
        pieces,
    })
}

/// Finds a linear relation `f_p = Σ a_i f_i` among the forms, scanning them
/// in lexicographic order: `f_p` is the first form dependent on its predecessors.
fn find_circuit(forms: &Forms) -> Option<(LinearForm, Vec<(LinearForm, Rational)>)> {
    let mut basis: Vec<LinearForm> = Vec::new();
    for f in forms.keys() {
        let rows: Vec<Vec<Rational>> = basis.iter().map(|b| b.coeffs().to_vec()).collect();
        match express_in(&rows, f.coeffs()) {
            Some(a) => {
                let rel = basis.iter().cloned().zip(a).filter(|(_, c)| !c.is_zero()).collect();
                return Some((f.clone(), rel));
            }
            None => basis.push(f.clone()),
        }
    }
    None
}

/// Splits all pieces until their forms are independent.
pub(crate) fn partial_fractions(pieces: BTreeMap<Forms, GaussianRational>) -> BTreeMap<Forms, GaussianRational> {
    let mut pending = pieces;
    let mut done: BTreeMap<Forms, GaussianRational> = BTreeMap::new();
    while let Some((forms, coef)) = pending.pop_first() {
        if coef.is_zero() {
            continue;
        }
        match find_circuit(&forms) {
            None => {
                let slot = done.entry(forms).or_insert_with(GaussianRational::zero);
                *slot += &coef;
            }
            Some((pivot, relation)) => {
                // 1 = Σ a_i f_i / f_p
                for (f, a) in relation {
                    let mut nf = forms.clone();
                    let m = nf.get_mut(&f).expect("relation form present");
                    *m -= 1;
                    if *m == 0 {
                        nf.remove(&f);
                    }
                    *nf.entry(pivot.clone()).or_insert(0) += 1;
                    let slot = pending.entry(nf).or_insert_with(GaussianRational::zero);
                    *slot += &coef.scale(&a);
                }
            }
        }
    }
    done.retain(|_, c| !c.is_zero());
    done
}

enum ConeMembership {
    Inside,
    Outside,
    Degenerate,
}

fn cone_membership(lam: &[Rational], rho: Option<&[Rational]>) -> ConeMembership {
    if lam.iter().any(|c| c.is_negative()) {
        return ConeMembership::Outside;
    }
    if lam.iter().all(|c| c.is_positive()) {
        return ConeMembership::Inside;
    }
    let Some(rho) = rho else { return ConeMembership::Degenerate };
    let mut degenerate = false;
    for (l, r) in lam.iter().zip(rho) {
        if l.is_zero() {
            if r.is_negative() {
                return ConeMembership::Outside;
            }
            if r.is_zero() {
                degenerate = true;
            }
        }
    }
    if degenerate {
        ConeMembership::Degenerate
    } else {
        ConeMembership::Inside
    }
}

/// Value of one basis piece (coefficient not included).
fn basis_value(
    numerator: &MultiPoly,
    exponent: &LinearForm,
    convention: ExpConvention,
    forms: &Forms,
    rho: Option<&LinearForm>,
) -> Result<GaussianRational> {
    let l = numerator.nvars();
    let b: Matrix = forms.keys().map(|f| f.coeffs().to_vec()).collect();
    let mults: Vec<u32> = forms.values().copied().collect();
    let n_total: u32 = mults.iter().sum();
    let bt = transpose(&b);
    let lam = solve(&bt, exponent.coeffs()).expect("basis forms are independent");
    let binv = inverse(&b).expect("basis forms are independent");

    // q(B^{-1} u): X_i = Σ_j binv[i][j] u_j
    let images: Vec<MultiPoly> = (0..l)
        .map(|i| LinearForm::new(binv[i].clone()).to_poly())
        .collect();
    let q = numerator.substitute(&images)?;
    let lam_u = LinearForm::new(lam.clone()).to_poly().scale(&convention.unit());
    let target: Vec<u32> = mults.iter().map(|m| m - 1).collect();

    let mut coeff = GaussianRational::zero();
    let max_deg = q.degree().unwrap_or(0);
    for d in 0..=max_deg {
        let qd = q.homogeneous_part(d);
        if qd.is_zero() {
            continue;
        }
        let k = n_total as i64 - l as i64 - d as i64;
        if k < 0 {
            continue;
        }
        let k = k as u32;
        let prod = if k == 0 { qd } else { &qd * &lam_u.pow(k) };
        let c = prod.coeff(&target);
        if !c.is_zero() {
            coeff += &c.scale(&Rational::new(BigInt::one(), factorial(k)));
        }
    }
    if coeff.is_zero() {
        return Ok(coeff);
    }
    let rho_u = rho.map(|r| solve(&bt, r.coeffs()).expect("basis forms are independent"));
    match cone_membership(&lam, rho_u.as_deref()) {
        ConeMembership::Outside => Ok(GaussianRational::zero()),
        ConeMembership::Degenerate => {
            let names: Vec<String> = forms.keys().map(|f| f.to_string()).collect();
            Err(Error::PerturbationRequired(names.join(", ")))
        }
        ConeMembership::Inside => {
            let det = determinant(&b).abs();
            Ok(coeff.scale(&(Rational::one() / det)))
        }
    }
}

/// `res^{ρ,Λ}` of a sum of terms. Denominators are sign-adjusted against the
/// chamber internally; pass geometric weights as they are.
pub fn jk_residue(
    terms: &[LocalizationTerm],
    chamber: &Chamber,
    perturbation: Option<&Perturbation>,
) -> Result<GaussianRational> {
    let mut total = GaussianRational::zero();
    for term in terms {
        if term.rank() != chamber.rank() {
            return Err(Error::VariableCount { left: chamber.rank(), right: term.rank() });
        }
        if term.is_zero() {
            continue;
        }
        let prepared = prepare(term, chamber)?;
        let rank = term.rank();
        for (forms, coef) in partial_fractions(prepared.pieces) {
            if forms.len() < rank {
                continue;
            }
            let v = basis_value(
                &prepared.numerator,
                &prepared.exponent,
                prepared.convention,
                &forms,
                perturbation.map(|p| p.rho()),
            )?;
            total += &(&coef * &v);
        }
    }
    Ok(total)
}
