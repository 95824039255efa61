//! Loads a model from JSON, here the shipped `P^7` circle action with repeated
//! weights, and evaluates pairings on its singular quotient.

use quotient_pairings::models::{dump_model, load_model_file};
use quotient_pairings::pairing::pair_ih;

fn main() -> quotient_pairings::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/models/p7_circle.json");
    let m = load_model_file(path)?;
    println!("{} components, quotient of real dimension {}", m.components.len(), m.quotient_real_dimension());
    for f in &m.components {
        println!("  {} moment {} fiber P^{} flagged {}", f.id, f.moment, f.fiber_dim, f.strictly_semistable);
    }
    let xi = m.generator("xi")?;
    let zeta = m.generator("zeta")?;
    let basis = [&xi * &zeta.pow(2), &xi.pow(2) * &zeta, xi.pow(3)];
    for a in &basis {
        let row: Vec<String> = basis.iter().map(|b| pair_ih(&m, a, b).map(|v| v.to_string())).collect::<Result<_, _>>()?;
        println!("  [{}]", row.join(", "));
    }
    let json = dump_model(&m)?;
    println!("document size: {} bytes", json.len());
    Ok(())
}
