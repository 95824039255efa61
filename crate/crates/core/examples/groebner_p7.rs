//! Truncated equivariant cohomology of `P^7 // C*` with weights `(1,1,1,0,0,-1,-1,-1)`:
//! Gröbner basis, graded dimensions and the middle-degree pairing matrix.

use quotient_pairings::ihring::{ih_pairing_matrix, vm_basis_with_ring};

fn main() -> quotient_pairings::Result<()> {
    let weights = [1, 1, 1, 0, 0, -1, -1, -1];
    let (ring, basis) = vm_basis_with_ring(&weights)?;
    let names = ["xi", "rho"];
    println!("ideal generators:");
    for g in &ring.ideal_generators {
        println!("  {}", g.display_with(&names));
    }
    println!("reduced Groebner basis (lex, xi > rho):");
    for g in ring.groebner.polys() {
        println!("  {}", g.display_with(&names));
    }
    println!("graded dimensions of V_M: {:?}", basis.betti());
    for (d, monos) in &basis.by_degree {
        let shown: Vec<String> = monos.iter().map(|(i, j)| format!("xi^{i} rho^{j}")).collect();
        println!("  degree {d:>2}: {}", shown.join(", "));
    }
    println!("tau = xi^{} rho^{}", basis.tau.0, basis.tau.1);
    let m = ih_pairing_matrix(&weights, 6)?;
    println!("pairing in degree 6 on {:?}:", m.rows);
    for row in &m.entries {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
    Ok(())
}
