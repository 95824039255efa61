//! Equivariant Poincaré series for `SL(2)` acting on `P^n = P(S^n C^2)` and
//! on `(P^1)^n`: the whole space, the semistable stratum, the partial
//! desingularization and intersection cohomology of the quotient.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::scalar::binomial;
use crate::exactalg::{GaussianRational, Rational, SeriesVar, TruncatedSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Binary forms of degree `n`.
    Pn,
    /// `n` points on the line.
    P1n,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StratificationSpec {
    pub family: Family,
    pub n: u32,
    /// Highest power of `t` kept.
    pub bound: usize,
}

impl StratificationSpec {
    pub fn new(family: Family, n: u32) -> Self {
        StratificationSpec { family, n, bound: 2 * n as usize + 4 }
    }

    pub fn with_bound(mut self, bound: usize) -> Result<Self> {
        if bound % 2 == 1 {
            return Err(Error::InvalidArgument(format!("series bound must be even, got {bound}")));
        }
        self.bound = bound;
        Ok(self)
    }

    /// Real dimension of the quotient, `2(n - 3)`.
    pub fn quotient_degree(&self) -> Option<usize> {
        (self.n >= 3).then(|| 2 * (self.n as usize - 3))
    }
}

fn geom(spec: &StratificationSpec, k: usize) -> TruncatedSeries {
    TruncatedSeries::geom(SeriesVar::T, k, spec.bound).expect("step is positive")
}

fn run(spec: &StratificationSpec, first: usize, last: usize) -> TruncatedSeries {
    TruncatedSeries::arithmetic_run(SeriesVar::T, first, last, 2, spec.bound)
}

fn int(c: impl Into<num_bigint::BigInt>) -> GaussianRational {
    GaussianRational::real(Rational::from_integer(c.into()))
}

/// `P_t^K(M)`: `(1 + t^2 + … + t^{2n}) / (1 - t^4)` or `(1 + t^2)^n / (1 - t^4)`.
pub fn equivariant_series_total(spec: &StratificationSpec) -> TruncatedSeries {
    let cohomology = match spec.family {
        Family::Pn => run(spec, 0, 2 * spec.n as usize),
        Family::P1n => {
            let one_plus = run(spec, 0, 2);
            (0..spec.n).fold(TruncatedSeries::one(SeriesVar::T, spec.bound), |acc, _| &acc * &one_plus)
        }
    };
    &cohomology * &geom(spec, 4)
}

/// `P_t^K(M^{ss}) = P_t^K(M) - Σ_{n/2 < j ≤ n} c_j t^{2(j-1)} / (1 - t^2)`, with
/// `c_j = 1` for binary forms and `c_j = C(n, j)` stratum components for points on the line.
pub fn semistable_series(spec: &StratificationSpec) -> TruncatedSeries {
    let n = spec.n as usize;
    let mut unstable = TruncatedSeries::zero(SeriesVar::T, spec.bound);
    for j in (n / 2 + 1)..=n {
        let c = match spec.family {
            Family::Pn => int(1),
            Family::P1n => int(binomial(n as u64, j as u64)),
        };
        let stratum = TruncatedSeries::monomial(SeriesVar::T, 2 * (j - 1), c, spec.bound);
        unstable = &unstable + &stratum;
    }
    &equivariant_series_total(spec) - &(&unstable * &geom(spec, 2))
}

fn require_even(spec: &StratificationSpec, min: u32) -> Result<()> {
    if spec.n % 2 == 1 || spec.n < min {
        return Err(Error::InvalidArgument(format!("needs even n >= {min}, got {}", spec.n)));
    }
    Ok(())
}

/// Equivariant cohomology of the blown-up orbit: the stabilizer is `N(T)` for
/// binary forms (the Weyl swap fixes `x^{n/2} y^{n/2}`) but only `T` for points
/// on the line (the swap exchanges the two clusters).
fn stabilizer_series(spec: &StratificationSpec) -> TruncatedSeries {
    match spec.family {
        Family::Pn => geom(spec, 4),
        Family::P1n => geom(spec, 2),
    }
}

/// Unstable strata of the exceptional divisor counted over the stabilizer:
/// the Weyl swap identifies the positive and negative ones only for binary forms.
fn exceptional_strata(spec: &StratificationSpec) -> GaussianRational {
    match spec.family {
        Family::Pn => int(1),
        Family::P1n => int(2),
    }
}

/// The blow-up correction's positive part `(t^2 + t^4 + … + t^{2(n-3)}) · P_t(B Stab)`.
fn exceptional_part(spec: &StratificationSpec) -> TruncatedSeries {
    let n = spec.n as usize;
    &run(spec, 2, 2 * n.saturating_sub(3)) * &stabilizer_series(spec)
}

/// Number of conjugate copies of the blown-up orbit type.
fn orbit_count(spec: &StratificationSpec) -> GaussianRational {
    match spec.family {
        Family::Pn => int(1),
        Family::P1n => {
            let n = u64::from(spec.n);
            int(binomial(n, n / 2)) * GaussianRational::from_ratio(1, 2)
        }
    }
}

/// `P_t(X̃//G) = P_t^K(M^{ss}) + (t^2 + … + t^{2(n-3)}) / (1 - t^4) - t^{n-2}(1 + t^2 + … + t^{n-4}) / (1 - t^2)`
/// for binary forms, once per blown-up orbit; points on the line use `1 / (1 - t^2)`
/// and two exceptional strata instead.
pub fn desing_series(spec: &StratificationSpec) -> Result<TruncatedSeries> {
    require_even(spec, 4)?;
    let n = spec.n as usize;
    let removed = (&run(spec, 0, n - 4).shift(n - 2) * &geom(spec, 2)).scale(&exceptional_strata(spec));
    let correction = (&exceptional_part(spec) - &removed).scale(&orbit_count(spec));
    Ok(&semistable_series(spec) + &correction)
}

/// Kernel of `H*(X̃//G) → IH*(X//G)`: the exceptional classes below the middle
/// degree, mirrored by Poincaré duality about `n - 3`.
pub fn ip_kernel_series(spec: &StratificationSpec) -> Result<TruncatedSeries> {
    require_even(spec, 6)?;
    let half = exceptional_part(spec).scale(&orbit_count(spec));
    let top = spec.n as usize - 3;
    let mut k = TruncatedSeries::zero(SeriesVar::T, spec.bound);
    for i in 0..=top {
        let c = half.coeff(2 * i.min(top - i));
        k = &k + &TruncatedSeries::monomial(SeriesVar::T, 2 * i, c, spec.bound);
    }
    Ok(k)
}

/// `IP_t(X//G) = P_t(X̃//G) - kernel`.
pub fn ip_series(spec: &StratificationSpec) -> Result<TruncatedSeries> {
    require_even(spec, 6)?;
    Ok(&desing_series(spec)? - &ip_kernel_series(spec)?)
}

fn closed_form(n: u32, f: impl Fn(usize) -> i64) -> Vec<i64> {
    let top = n as usize - 3;
    let mut out = vec![0; 2 * top + 1];
    for i in 0..=top {
        out[2 * i] = f(i.min(top - i));
    }
    out
}

/// `1 + 2t^2 + 3t^4 + … + (n/2-1)t^{n-4} + (n/2-1)t^{n-2} + … + t^{2n-6}` as a coefficient list.
pub fn desing_closed_form(n: u32) -> Vec<i64> {
    closed_form(n, |m| m as i64 + 1)
}

/// `1 + t^2 + 2t^4 + 2t^6 + … + [n/4]t^{n-4} + [n/4]t^{n-2} + … + t^{2n-8} + t^{2n-6}` as a coefficient list.
pub fn ip_closed_form(n: u32) -> Vec<i64> {
    closed_form(n, |m| m as i64 / 2 + 1)
}

/// `t^2 + t^4 + 2t^6 + … + [(n-2)/4]t^{n-4} + [(n-2)/4]t^{n-2} + … + t^{2n-8}` as a coefficient list.
pub fn ip_kernel_closed_form(n: u32) -> Vec<i64> {
    closed_form(n, |m| (m as i64 + 1) / 2)
}
