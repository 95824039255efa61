//! Local Witten integrals `I_0^ε` for circle actions on `P^3` and for `SU(2)` on `(P^1)^4`.

use quotient_pairings::models::{model_circle_pn, model_su2_p1n};
use quotient_pairings::witten::{gaussian_halfline_moment, witten_i0};

fn main() -> quotient_pairings::Result<()> {
    for j in 0..5 {
        println!("∫_0^∞ y^{j} e^(-y²/2ε) dy = {}", gaussian_halfline_moment(j));
    }

    let circle = model_circle_pn(&[0, 1, 2, 3])?;
    for name in ["1", "zeta"] {
        let eta = if name == "1" { circle.constant_class(1) } else { circle.generator("zeta")? };
        let r = witten_i0(&circle, &eta)?;
        println!("\ncircle (0,1,2,3), eta = {name}: I_0 / A_K = {}", r.value);
        for c in &r.contributions {
            println!("  {} {:?}: {}", c.component, c.cone, c.value);
        }
    }

    let p1 = model_su2_p1n(4)?;
    let one = p1.constant_class(1);
    let r = witten_i0(&p1, &one)?;
    println!("\n(P^1)^4, eta = 1: I_0 / A_K = {}", r.value);
    println!("  odd part: {}", r.value.odd_part());
    Ok(())
}
