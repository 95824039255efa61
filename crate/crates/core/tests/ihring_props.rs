use num_traits::Zero;
use proptest::prelude::*;
use quotient_pairings::exactalg::{GaussianRational, MultiPoly};
use quotient_pairings::ihring::groebner::s_polynomial;
use quotient_pairings::ihring::{
    ih_pairing_matrix, monomial, semistable_ring, vm_basis, vm_basis_with_ring, GroebnerBasis,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P7: [i64; 8] = [1, 1, 1, 0, 0, -1, -1, -1];

fn random_balanced(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let k = rng.gen_range(1..=3);
    let q = rng.gen_range(1..=3);
    let mut w: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
    w.extend((0..k).map(|_| -rng.gen_range(1..=3)));
    w.extend(std::iter::repeat_n(0, q));
    w
}

fn buchberger_postconditions(gens: &[MultiPoly], b: &GroebnerBasis) {
    for g in gens {
        assert!(b.normal_form(g).is_zero(), "generator does not reduce to 0");
    }
    for (i, p) in b.polys().iter().enumerate() {
        for r in &b.polys()[i + 1..] {
            assert!(b.normal_form(&s_polynomial(p, r)).is_zero(), "S-polynomial does not reduce to 0");
        }
        assert!(b.contains(p));
    }
}

#[test]
fn groebner_postconditions_on_presentations() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut sets = vec![P7.to_vec(), vec![2, 1, 0, -1, -2], vec![3, 1, -1, -2]];
    sets.extend((0..10).map(|_| random_balanced(&mut rng)));
    for w in sets {
        let r = semistable_ring(&w).unwrap();
        buchberger_postconditions(&r.ideal_generators, &r.groebner);
    }
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -3i64..=3), 1..5).prop_map(|ts| {
        let mut p = MultiPoly::zero(2);
        for ((i, j), c) in ts {
            p = &p + &MultiPoly::monomial(2, &[i, j], GaussianRational::from_int(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn normal_form_idempotent_and_ideal_sound(a in small_poly(), b in small_poly(), p in small_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let gb = GroebnerBasis::compute(&[a.clone(), b.clone()]).unwrap();
        buchberger_postconditions(&[a.clone(), b.clone()], &gb);
        let nf = gb.normal_form(&p);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        prop_assert!(gb.normal_form(&(&p - &nf)).is_zero());
        prop_assert!(gb.contains(&(&(&p * &a) + &(&nf * &b))));
    }
}

#[test]
fn vm_dimensions_palindromic_random_balanced() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let w = random_balanced(&mut rng);
        let b = vm_basis(&w).unwrap();
        let betti = b.betti();
        let rev: Vec<usize> = betti.iter().rev().copied().collect();
        assert_eq!(betti, rev, "{w:?}");
        assert_eq!(betti[0], 1);
    }
}

#[test]
fn pairing_matrices_transpose_and_nondegenerate() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut sets = vec![P7.to_vec(), vec![2, 1, 0, -1, -2]];
    sets.extend((0..6).map(|_| random_balanced(&mut rng)));
    for w in sets {
        let b = vm_basis(&w).unwrap();
        for d in (0..=b.top_degree).step_by(2) {
            let m = ih_pairing_matrix(&w, d).unwrap();
            assert_eq!(ih_pairing_matrix(&w, b.top_degree - d).unwrap(), m.transpose(), "{w:?}, d = {d}");
            let det = m.determinant().expect("square rational matrix");
            assert!(!det.is_zero(), "{w:?}, d = {d}: degenerate");
        }
    }
}

#[test]
fn p7_standard_monomials() {
    let (ring, b) = vm_basis_with_ring(&P7).unwrap();
    assert_eq!(b.q, 2);
    assert_eq!(b.n_r, 5);
    assert_eq!(b.top_degree, 12);
    assert_eq!(b.degree(6), &[(1, 2), (2, 1), (3, 0)]);
    assert_eq!(b.betti(), vec![1, 2, 3, 3, 3, 2, 1]);
    // ρ^3 is standard but dropped by the truncation.
    assert!(ring.standard_monomials(6).contains(&(0, 3)));
    assert!(!b.contains(0, 3));
    let tau = monomial(b.tau.0, b.tau.1);
    assert_eq!(ring.normal_form(&tau), tau);
}
