//! Intersection numbers on quotients where 0 is a regular value, and the
//! agreement with the abelian quotient through the Martin factor.

use quotient_pairings::models::{model_circle_pn, model_su2_p1n, model_su2_pn};
use quotient_pairings::pairing::{martin_factor, pair_abelianized_at, pair_regular, small_shift};

fn main() -> quotient_pairings::Result<()> {
    let line = model_circle_pn(&[1, -1])?;
    println!("P^1 // C*, eta = 1: {}", pair_regular(&line, &line.constant_class(1))?);

    let p3 = model_circle_pn(&[2, 1, -1, -2])?;
    let xi = p3.generator("xi")?;
    println!("P^3 // C* weights (2,1,-1,-2), eta = xi^2: {}", pair_regular(&p3, &xi.pow(2))?);

    let forms = model_su2_pn(5)?;
    for (name, eta) in [("xi^2", forms.generator("xi")?.pow(2)), ("zeta2", forms.generator("zeta2")?)] {
        println!("binary quintics, eta = {name}: {}", pair_regular(&forms, &eta)?);
    }

    let points = model_su2_p1n(5)?;
    let eta = &points.generator("xi1")? * &points.generator("xi2")?;
    let eps = small_shift(&points)?;
    let reg = pair_regular(&points, &eta)?;
    let ab = pair_abelianized_at(&points, &eta, &eps)?;
    println!("five points, eta = xi1 xi2: regular {reg}, abelian {ab}, martin {}", martin_factor(&points));
    Ok(())
}
