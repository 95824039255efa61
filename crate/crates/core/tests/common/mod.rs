#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use quotient_pairings::exactalg::{exponent, ExpConvention, GaussianRational, LinearForm, LocalizationTerm, MultiPoly, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn g(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn fact(n: u32) -> Rational {
    (1..=n).fold(Rational::one(), |a, k| a * Rational::from_integer(k.into()))
}

/// Coefficient of `X^{-1}` in `Σ_k a_k X^k · e^{cλX} / ∏ (b_j X)^{m_j}` by direct series arithmetic.
pub fn oracle_residue_1d(
    numerator: &[GaussianRational],
    lambda: &Rational,
    imaginary: bool,
    den: &[(Rational, u32)],
) -> GaussianRational {
    let n: u32 = den.iter().map(|(_, m)| m).sum();
    let scale: Rational = den.iter().fold(Rational::one(), |a, (b, m)| a * num_traits::pow(b.clone(), *m as usize));
    let c = if imaginary { GaussianRational::i() } else { GaussianRational::from_int(1) };
    let cl = c.scale(lambda);
    let mut total = GaussianRational::zero();
    for (k, a) in numerator.iter().enumerate() {
        // X^k · (cλX)^m / m! lands on X^{N-1} when m = N - 1 - k.
        let k = k as i64;
        let m = n as i64 - 1 - k;
        if m < 0 {
            continue;
        }
        let m = m as u32;
        total += &(a * &cl.pow(m)).scale(&(Rational::one() / fact(m)));
    }
    total.scale(&(Rational::one() / scale))
}

/// The oracle applied to a rank-one term.
pub fn oracle_term(t: &LocalizationTerm) -> GaussianRational {
    assert_eq!(t.rank(), 1);
    let deg = t.numerator().degree().unwrap_or(0) as usize;
    let num: Vec<GaussianRational> = (0..=deg).map(|k| t.numerator().coeff(&[k as u32])).collect();
    let den: Vec<(Rational, u32)> = t.denominator().iter().map(|(b, m)| (b.coeff(0).clone(), *m)).collect();
    oracle_residue_1d(&num, t.exponent().coeff(0), t.convention() == ExpConvention::Imaginary, &den)
}

/// `Σ_{j: 0 < n-2j ≤ n} [X^{n-3}] q((n-2j)X, X^2) / (2^{n-2} ∏_{k≠j} (k-j))` for a class
/// `q(xi, zeta2)`: the closed residue formula for binary forms of degree `n`.
pub fn binary_forms_formula(n: i64, eta: &MultiPoly) -> GaussianRational {
    let mut total = GaussianRational::zero();
    for j in 0..=n {
        let w = n - 2 * j;
        if w <= 0 {
            continue;
        }
        let mut top = GaussianRational::zero();
        for (e, c) in eta.terms() {
            if i64::from(e[0] + 2 * e[1]) == n - 3 {
                top += &c.scale(&Rational::from_integer(BigInt::from(w).pow(e[0])));
            }
        }
        let prod: i64 = (0..=n).filter(|&k| k != j).map(|k| k - j).product();
        let den = Rational::from_integer(BigInt::from(2).pow((n - 2) as u32) * BigInt::from(prod));
        total += &top.scale(&(Rational::one() / den));
    }
    total
}

/// Monomials `xi^a zeta2^b` of X-degree `d` (i.e. `a + 2b = d`).
pub fn su2_top_monomials(d: u32) -> Vec<MultiPoly> {
    (0..=d / 2).map(|b| MultiPoly::monomial(2, &[d - 2 * b, b], g(1))).collect()
}

/// `q · e^{sλ} / ∏ β` with the exponent scaled by `s`.
pub fn scaled(t: &LocalizationTerm, s: &Rational) -> LocalizationTerm {
    t.with_exponent(t.exponent().scale(s), t.convention()).unwrap()
}

pub fn random_rank2(rng: &mut ChaCha8Rng, nforms: usize) -> (Vec<(LinearForm, u32)>, MultiPoly) {
    let mut forms: Vec<(LinearForm, u32)> = Vec::new();
    while forms.len() < nforms {
        let a = rng.gen_range(-3i64..=3);
        let b = rng.gen_range(1i64..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let f = LinearForm::from_ints(&[a, b]);
        let proportional = forms.iter().any(|(h, _)| {
            h.coeff(0) * f.coeff(1) == h.coeff(1) * f.coeff(0)
        });
        if !proportional {
            forms.push((f, 1));
        }
    }
    let mut num = MultiPoly::zero(2);
    for _ in 0..rng.gen_range(1..4) {
        // Total degree at most N - 2, where residues can be nonzero.
        let d = rng.gen_range(0..=(nforms as u32 - 2));
        let i = rng.gen_range(0..=d);
        let j = d - i;
        num.add_term(exponent(&[i, j]), g(rng.gen_range(-4..=4)));
    }
    (forms, num)
}

/// Iterated residue for `q e^{λ·X} / ∏ (a_j X_1 + b_j X_2)` with simple poles
/// and all `b_j ≠ 0`, for the chamber `(0, 1)`: residues in `X_2` at every pole
/// `X_2 = c_j X_1` when `λ_2 > 0`, then the rank-one residue in `X_1` kept when
/// the resulting exponent `λ_1 + λ_2 c_j` is positive.
pub fn iterated_oracle(num: &MultiPoly, lam: (&Rational, &Rational), den: &[(LinearForm, u32)]) -> GaussianRational {
    let (l1, l2) = lam;
    if *l2 <= Rational::zero() {
        return GaussianRational::zero();
    }
    let mut total = GaussianRational::zero();
    for (j, (bj, _)) in den.iter().enumerate() {
        let (aj, bjj) = (bj.coeff(0), bj.coeff(1));
        let c = -aj / bjj;
        let lp = l1 + l2 * &c;
        if lp <= Rational::zero() {
            continue;
        }
        // q(X_1, c X_1) as a polynomial in X_1
        let mut q1: Vec<GaussianRational> = vec![];
        for (e, v) in num.terms() {
            let k = (e[0] + e[1]) as usize;
            if q1.len() <= k {
                q1.resize(k + 1, GaussianRational::zero());
            }
            q1[k] += &v.scale(&num_traits::pow(c.clone(), e[1] as usize));
        }
        // Remaining factor: 1 / (b_j ∏_{k≠j} (a_k + b_k c) X_1^{N-1})
        let mut scale = bjj.clone();
        for (k, (bk, _)) in den.iter().enumerate() {
            if k != j {
                scale *= bk.coeff(0) + bk.coeff(1) * &c;
            }
        }
        // Pole order N - 1 in X_1: the scaled form once, then X_1^{N-2}.
        let n = den.len() as u32;
        let d1 = vec![(scale, 1), (Rational::one(), n - 2)];
        total += &oracle_residue_1d(&q1, &lp, false, &d1);
    }
    total
}
