//! Poincaré series of SL(2) quotients of binary forms and of points on the line.

use quotient_pairings::stratify::{
    desing_series, equivariant_series_total, ip_kernel_series, ip_series, semistable_series, Family, StratificationSpec,
};

fn main() -> quotient_pairings::Result<()> {
    for n in [5u32, 7] {
        let s = StratificationSpec::new(Family::Pn, n);
        println!("binary forms n={n}: total  {}", equivariant_series_total(&s));
        println!("binary forms n={n}: ss     {}", semistable_series(&s));
    }
    for family in [Family::Pn, Family::P1n] {
        for n in [6u32, 8] {
            let s = StratificationSpec::new(family, n);
            println!("{family:?} n={n}:");
            println!("  desing  {}", desing_series(&s)?);
            println!("  kernel  {}", ip_kernel_series(&s)?);
            println!("  IH      {}", ip_series(&s)?);
        }
    }
    Ok(())
}
