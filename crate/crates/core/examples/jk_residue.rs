//! Jeffrey-Kirwan residues in rank one and two, and how the perturbation matters on walls.

use quotient_pairings::exactalg::{ExpConvention, GaussianRational, LinearForm, LocalizationTerm, MultiPoly};
use quotient_pairings::residue::{jk_residue, residue_1d, residue_1d_plus, Chamber, Perturbation};

fn main() -> quotient_pairings::Result<()> {
    // e^{3X} / X^2: ordinary residue 3.
    let t = LocalizationTerm::new(
        MultiPoly::one(1),
        LinearForm::from_ints(&[3]),
        ExpConvention::Real,
        vec![(LinearForm::from_ints(&[1]), 2)],
    )?;
    println!("res e^(3X)/X^2 = {}", residue_1d(&t)?);
    let ch = Chamber::from_ints(&[1]);
    println!("res+ at lambda=3: {}", residue_1d_plus(&t, &quotient_pairings::exactalg::int(3))?);
    println!("JK (chamber 1)  : {}", jk_residue(&[t], &ch, Some(&Perturbation::opposite(&ch)?))?);

    // e^{λ·X} / (X1 (X1 + X2) X2) for λ on either side of the wall spanned by (1,1).
    let den = vec![
        (LinearForm::from_ints(&[1, 0]), 1),
        (LinearForm::from_ints(&[1, 1]), 1),
        (LinearForm::from_ints(&[0, 1]), 1),
    ];
    let ch2 = Chamber::from_ints(&[1, 2]);
    let rho = Perturbation::new(LinearForm::from_ints(&[-1, -2]), &ch2)?;
    for lam in [[2, 1], [1, 1], [1, 2], [-1, 2]] {
        let num = MultiPoly::constant(2, GaussianRational::from_int(1));
        let t = LocalizationTerm::new(num, LinearForm::from_ints(&lam), ExpConvention::Real, den.clone())?;
        println!("lambda = {lam:?}: JK = {}", jk_residue(&[t], &ch2, Some(&rho))?);
    }
    Ok(())
}
