//! Pairings on the partial desingularization of binary forms of even degree:
//! the exceptional correction vanishes and the value is a residue in the chamber next to 0.

use quotient_pairings::models::model_su2_pn;
use quotient_pairings::pairing::{pair_ih, pair_partial_desing, BlowupSpec};

fn main() -> quotient_pairings::Result<()> {
    for n in [4u32, 6, 8] {
        let m = model_su2_pn(n)?;
        let blowup = BlowupSpec::su2_pn(n)?;
        let ids: Vec<&str> = blowup.exceptional.iter().map(|e| e.id.as_str()).collect();
        println!("n = {n}: blow up {} with exceptional points {}", blowup.component, ids.join(", "));
        let xi = m.generator("xi")?;
        let eta = xi.pow(n - 3);
        let r = pair_partial_desing(&m, &eta, &[blowup])?;
        println!("  xi^{}: chamber {}, correction {}, total {}", n - 3, r.chamber_value, r.correction, r.total);
        if n == 6 {
            println!("  <xi, xi^2> on the singular quotient: {}", pair_ih(&m, &xi, &xi.pow(2))?);
        }
    }
    Ok(())
}
