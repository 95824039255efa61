//! Integration over a projectivized bundle by a residue in the tautological class.

use quotient_pairings::exactalg::{GaussianRational, MultiPoly};
use quotient_pairings::residue::{pushforward_projective_bundle, GradedRing};

fn main() -> quotient_pairings::Result<()> {
    // P(O ⊕ O(1)) over P^1: c_1 = h, c_2 = 0.
    let base = GradedRing::projective_space(1);
    let h = MultiPoly::var(1, 0);
    let chern = vec![h.clone(), MultiPoly::zero(1)];
    let y = |k: usize| {
        let mut v = vec![MultiPoly::zero(1); k + 1];
        v[k] = MultiPoly::one(1);
        v
    };
    println!("∫ y^2 = {}", pushforward_projective_bundle(&y(2), &chern, &base)?);
    println!("∫ y h = {}", pushforward_projective_bundle(&[MultiPoly::zero(1), h.clone()], &chern, &base)?);

    // Rank-3 bundle over P^2 with c = (2h, h^2, 0).
    let base = GradedRing::projective_space(2);
    let h = MultiPoly::var(1, 0);
    let chern = vec![h.scale(&GaussianRational::from_int(2)), h.pow(2), MultiPoly::zero(1)];
    for k in 2..=4 {
        println!("rank 3 over P^2, ∫ y^{k} = {}", pushforward_projective_bundle(&y(k), &chern, &base)?);
    }
    Ok(())
}
