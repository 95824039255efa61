//! Linear forms on the (complexified) Cartan algebra, i.e. elements of `t*`.

use std::fmt;

use num_traits::{Signed, Zero};

use super::poly::MultiPoly;
use super::scalar::{fmt_rational, int, GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        LinearForm { coeffs: c.iter().map(|&v| int(v)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        LinearForm { coeffs: vec![Rational::zero(); rank] }
    }

    /// `c · X_i` in rank `rank`.
    pub fn basis(rank: usize, i: usize, c: Rational) -> Self {
        let mut v = vec![Rational::zero(); rank];
        v[i] = c;
        LinearForm { coeffs: v }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.coeffs.len(), "rank mismatch");
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, o: &LinearForm) -> LinearForm {
        assert_eq!(self.rank(), o.rank(), "rank mismatch");
        LinearForm { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &LinearForm) -> LinearForm {
        self.add(&o.neg())
    }

    pub fn scale(&self, q: &Rational) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Drops coordinate `i`.
    pub fn without(&self, i: usize) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c.clone()).collect(),
        }
    }

    /// The same form viewed as a homogeneous degree-one polynomial.
    pub fn to_poly(&self) -> MultiPoly {
        let n = self.rank();
        let mut p = MultiPoly::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.add_term(e.into_iter().collect(), GaussianRational::real(c.clone()));
            }
        }
        p
    }

    /// First nonzero coefficient, if any.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Positive rescaling making the first nonzero coefficient `±1`.
    /// Returns the normalized form and the factor `s` with `self = s · normalized`.
    pub fn normalize_positive(&self) -> (LinearForm, Rational) {
        let s = self.leading_coeff().map(|c| c.abs()).unwrap_or_else(|| int(1));
        (self.scale(&(int(1) / &s)), s)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
