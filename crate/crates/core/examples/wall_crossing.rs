//! Abelian quotients of `P^4` under weights `(2,1,0,-1,-2)` chamber by chamber,
//! and the jumps across each wall.

use quotient_pairings::exactalg::{int, rat};
use quotient_pairings::models::model_circle_pn;
use quotient_pairings::pairing::{pair_abelianized_at, wall_crossing_jump};

fn main() -> quotient_pairings::Result<()> {
    let m = model_circle_pn(&[2, 1, 0, -1, -2])?;
    let eta = m.generator("xi")?.pow(3);
    for xi in [rat(-5, 2), rat(-3, 2), rat(-1, 2), rat(1, 2), rat(3, 2), rat(5, 2)] {
        println!("xi = {:>4}: {}", xi.to_string(), pair_abelianized_at(&m, &eta, &xi)?);
    }
    for w in [-2, -1, 0, 1, 2] {
        let r = wall_crossing_jump(&m, &int(w), &eta)?;
        println!("{r}");
        println!("{}", r.reversed());
    }
    Ok(())
}
