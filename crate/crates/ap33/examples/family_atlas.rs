//! Walk the atlas of extreme-point families: multiplicities, parameter
//! intervals, vanishing determinant, endpoint limits, and a midpoint sample
//! of each family.
//!
//! Run with: cargo run --example family_atlas

use ap33::families::list_families;

fn main() {
    println!(
        "{:<12} {:<10} {:>12} {:>12}  {:<9} {:<10} {:<10} midpoint (a, b)",
        "family", "pattern", "c_lo", "c_hi", "active", "lim lo", "lim hi"
    );
    for f in list_families() {
        let c = 0.5 * (f.c_lo + f.c_hi);
        let levels = f.eval_levels(c).expect("midpoint is inside");
        println!(
            "{:<12} ({},{},{})    {:>12.9} {:>12.9}  {:<9} {:<10} {:<10} a = {:.6}, b = {:.6}{}",
            f.id.compact(),
            f.id.mu_a,
            f.id.mu_b,
            f.id.mu_c,
            f.c_lo,
            f.c_hi,
            format!("{:?}", f.active),
            f.limit_lo.compact(),
            f.limit_hi.compact(),
            levels.a,
            levels.b,
            if f.extreme { "" } else { "   <- not extreme" },
        );
    }
}
