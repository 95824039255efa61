mod common;

use common::g;
use num_traits::Zero;
use proptest::prelude::*;
use quotient_pairings::exactalg::{GaussianRational, MultiPoly};
use quotient_pairings::models::{model_circle_pn, model_su2_p1n, model_su2_pn};
use quotient_pairings::witten::{
    gaussian_halfline_moment, gaussian_line_moment, integrate_over_cone, witten_i0, Channel, Cone, SqrtEpsPolynomial,
};

/// `∫_0^∞ y^j e^{-y^2/2} dy` by the trapezoid rule on `[0, 40]`.
fn quadrature(j: u32) -> f64 {
    let steps = 400_000;
    let h = 40.0 / steps as f64;
    let f = |y: f64| y.powi(j as i32) * (-y * y / 2.0).exp();
    let inner: f64 = (1..steps).map(|k| f(k as f64 * h)).sum();
    h * (inner + (f(0.0) + f(40.0)) / 2.0)
}

fn at_eps_one(p: &SqrtEpsPolynomial) -> f64 {
    let sqrt_half_pi = (std::f64::consts::PI / 2.0).sqrt();
    p.terms()
        .map(|(ch, _, c)| {
            let re = c.re.numer().to_string().parse::<f64>().unwrap() / c.re.denom().to_string().parse::<f64>().unwrap();
            if ch == Channel::SqrtHalfPi { re * sqrt_half_pi } else { re }
        })
        .sum()
}

#[test]
fn halfline_moments_match_quadrature() {
    for j in 0..=8 {
        let exact = at_eps_one(&gaussian_halfline_moment(j));
        let num = quadrature(j);
        assert!((exact - num).abs() < 1e-6 * num.max(1.0), "j = {j}: {exact} vs {num}");
        assert_eq!(gaussian_halfline_moment(j).exponents(), vec![j as i64 + 1]);
    }
}

fn poly_1d() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(-5i64..=5, 1..8).prop_map(|c| {
        let mut p = MultiPoly::zero(1);
        for (k, v) in c.into_iter().enumerate() {
            p = &p + &MultiPoly::monomial(1, &[k as u32], g(v));
        }
        p
    })
}

proptest! {
    #[test]
    fn two_cones_make_the_line(p in poly_1d()) {
        let both = &integrate_over_cone(&p, Cone::Positive) + &integrate_over_cone(&p, Cone::Negative);
        let mut line = SqrtEpsPolynomial::zero();
        for (e, c) in p.terms() {
            line = &line + &gaussian_line_moment(e[0]).scale(c);
        }
        prop_assert_eq!(both, line);
    }
}

// Positive-moment components are integrated over the whole line, so odd powers
// of y cancel and only the √(π/2) channel survives.
#[test]
fn positive_moment_contributions_are_even() {
    let models = [model_circle_pn(&[0, 1, 2, 3]).unwrap(), model_su2_pn(5).unwrap(), model_su2_p1n(4).unwrap()];
    for m in &models {
        for gname in &m.generators {
            let eta = m.generator(gname).unwrap();
            let r = witten_i0(m, &eta).unwrap();
            for f in m.components.iter().filter(|f| f.moment_1d() > &Zero::zero()) {
                let total = r
                    .contributions
                    .iter()
                    .filter(|c| c.component == f.id)
                    .fold(SqrtEpsPolynomial::zero(), |a, c| &a + &c.value);
                assert!(total.terms().all(|(ch, _, _)| ch == Channel::SqrtHalfPi), "{}: {total}", f.id);
            }
        }
    }
}

// The zero-moment point of a circle action with weights 0, 1, ..., n and
// restriction X^N contributes a single monomial in √ε of exponent n - N - 1.
#[test]
fn zero_moment_point_power() {
    for n in [3u32, 4, 5] {
        let weights: Vec<i64> = (0..=n as i64).collect();
        let m = model_circle_pn(&weights).unwrap();
        let zeta = m.generator("zeta").unwrap();
        for big_n in 0..n {
            let r = witten_i0(&m, &zeta.pow(big_n)).unwrap();
            let p0: Vec<_> = r.contributions.iter().filter(|c| c.component == "p0").collect();
            assert_eq!(p0.len(), 1);
            assert_eq!(p0[0].cone, Cone::Negative);
            let v = &p0[0].value;
            assert_eq!(v.exponents(), vec![i64::from(n - big_n) - 1], "n = {n}, N = {big_n}: {v}");
            assert!(!v.is_zero());
            // A half-integer power of ε exactly when n - N is even.
            let half_integer = (n - big_n - 1) % 2 == 1;
            assert_eq!(half_integer, (n - big_n) % 2 == 0);
        }
    }
}

#[test]
fn circle_values() {
    let m = model_circle_pn(&[0, 1, 2, 3]).unwrap();
    let r = witten_i0(&m, &m.constant_class(1)).unwrap();
    assert_eq!(r.value, SqrtEpsPolynomial::monomial(Channel::SqrtHalfPi, 2, GaussianRational::from_ratio(1, 12)));
    let r = witten_i0(&m, &m.generator("zeta").unwrap()).unwrap();
    assert_eq!(r.value, SqrtEpsPolynomial::monomial(Channel::Rational, 1, GaussianRational::new(Zero::zero(), common::q(1, 6))));
    assert!(witten_i0(&m, &MultiPoly::zero(2)).unwrap().value.is_zero());
}

#[test]
fn low_degree_classes_give_polynomials() {
    for w in [vec![0, 1, 2, 3], vec![-1, 0, 2], vec![1, 2, 3, 0, -2]] {
        let m = model_circle_pn(&w).unwrap();
        let xi = m.generator("xi").unwrap();
        let zeta = m.generator("zeta").unwrap();
        for d in 0..w.len() as u32 - 1 {
            for eta in [xi.pow(d), zeta.pow(d)] {
                let r = witten_i0(&m, &eta).unwrap();
                assert!(r.value.min_exponent().is_none_or(|e| e >= 0), "{w:?}, degree {d}: {}", r.value);
            }
        }
    }
}

#[test]
fn rank_two_rejected() {
    let doc = r#"{
      "rank": 2, "group": "torus",
      "constants": {"n0": 1, "n0T": 1, "weyl": 1, "s": 2, "nplus": 0, "residue_scale": [1, 1]},
      "generators": ["u"],
      "positive_roots": [],
      "components": [
        {"id": "a", "moment": [[1, 2], [0, 1]], "normal_weights": [[[1,1],[0,1]], [[0,1],[1,1]]],
         "restriction": {"u": {"1,0": [1, 1]}}},
        {"id": "b", "moment": [[-1, 3], [2, 1]], "normal_weights": [[[-1,1],[0,1]], [[0,1],[1,1]]],
         "restriction": {"u": {"0,1": [1, 1]}}}
      ]
    }"#;
    let m = quotient_pairings::models::load_model(doc).unwrap();
    assert!(witten_i0(&m, &m.constant_class(1)).is_err());
}
