//! Rank-one residues.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::scalar::factorial;
use crate::exactalg::{laurent_expand, GaussianRational, LocalizationTerm, MultiPoly, Rational};

fn require_rank_one(term: &LocalizationTerm) -> Result<()> {
    if term.rank() != 1 {
        return Err(Error::NotRankOne(term.rank()));
    }
    Ok(())
}

/// Coefficient of `X^{-1}` in the Laurent expansion of `q(X) e^{λX} / ∏ (b_j X)^{m_j}`.
pub fn residue_1d(term: &LocalizationTerm) -> Result<GaussianRational> {
    require_rank_one(term)?;
    let l = laurent_expand(term, 0, -1)?;
    Ok(l.coeff(-1).constant_term())
}

/// `residue_1d(term)` when `mu ≥ 0`, otherwise 0.
pub fn residue_1d_plus(term: &LocalizationTerm, mu: &Rational) -> Result<GaussianRational> {
    require_rank_one(term)?;
    if mu.is_negative() {
        return Ok(GaussianRational::zero());
    }
    residue_1d(term)
}

/// Residue of `term · e^{-c y X}` as a polynomial in `y` (one variable), with
/// `c = 1` or `c = i` following the term's convention.
pub fn residue_1d_shifted(term: &LocalizationTerm) -> Result<MultiPoly> {
    require_rank_one(term)?;
    let l = laurent_expand(term, 0, -1)?;
    let minus_c = -term.convention().unit();
    let mut out = MultiPoly::zero(1);
    for (&e, coeff) in &l.coefficients {
        // X^e · (−c y X)^m / m! contributes to X^{-1} when m = −1 − e.
        let m = -1 - e;
        if m < 0 {
            continue;
        }
        let m = m as u32;
        let c = minus_c.pow(m).scale(&Rational::new(BigInt::one(), factorial(m)));
        out.add_term(smallvec::smallvec![m], &coeff.constant_term() * &c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, ExpConvention, LinearForm};

    fn x() -> LinearForm {
        LinearForm::from_ints(&[1])
    }

    fn term(num: MultiPoly, lambda: i64, pole: u32) -> LocalizationTerm {
        LocalizationTerm::new(num, x().scale(&int(lambda)), ExpConvention::Real, vec![(x(), pole)]).unwrap()
    }

    #[test]
    fn exponential_over_x() {
        assert_eq!(residue_1d(&term(MultiPoly::one(1), 1, 1)).unwrap(), GaussianRational::one());
    }

    #[test]
    fn cancellation_then_constant_term() {
        let num = MultiPoly::monomial(1, &[2], GaussianRational::from_int(4));
        assert_eq!(residue_1d(&term(num, 3, 3)).unwrap(), GaussianRational::from_int(4));
    }

    #[test]
    fn truncated_residue_branches() {
        let one = MultiPoly::one(1);
        assert_eq!(residue_1d_plus(&term(one.clone(), 2, 1), &int(2)).unwrap(), GaussianRational::one());
        assert_eq!(residue_1d_plus(&term(one.clone(), -1, 1), &int(-1)).unwrap(), GaussianRational::zero());
        assert_eq!(residue_1d_plus(&term(one, 0, 1), &int(0)).unwrap(), GaussianRational::one());
    }

    #[test]
    fn rank_two_rejected() {
        let t = LocalizationTerm::rational(MultiPoly::one(2), vec![(LinearForm::from_ints(&[1, 0]), 1)]).unwrap();
        assert_eq!(residue_1d(&t).unwrap_err(), Error::NotRankOne(2));
    }

    #[test]
    fn shifted_residue_is_a_polynomial_in_y() {
        // X^N / X^{n-1} with n = 5, N = 1: residue of e^{-iyX}/X^3 is (−iy)^2/2!
        let num = MultiPoly::var(1, 0);
        let t = LocalizationTerm::new(num, LinearForm::zero(1), ExpConvention::Imaginary, vec![(x(), 4)]).unwrap();
        let p = residue_1d_shifted(&t).unwrap();
        let expect = MultiPoly::monomial(1, &[2], GaussianRational::from_ratio(-1, 2));
        assert_eq!(p, expect);
    }
}
