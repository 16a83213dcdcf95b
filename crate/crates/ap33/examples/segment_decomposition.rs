//! The non-extreme branch nu{1,5,3} is exactly the open segment between the
//! anchors zeta1 and zeta6: recover the mixing weight x in closed form and
//! construct an explicit midpoint witness by perturbation.
//!
//! Run with: cargo run --example segment_decomposition

use ap33::families::{find_families, nu153_decompose};
use ap33::oracle::perturbation_decompose;
use ap33::Tolerances;

fn main() {
    let family = &find_families(1, 5, 3, None)[0];
    println!("c          x          residual");
    for i in 1..=9 {
        let c = family.c_lo + (family.c_hi - family.c_lo) * i as f64 / 10.0;
        let s = family.eval(c).expect("inside the interval");
        let d = nu153_decompose(&s).expect("on the branch");
        println!("{c:.6}   {:.6}   {:.2e}", d.x, d.residual);
    }

    // constructive witness: s = (alpha + beta)/2 with both endpoints inside
    let s = family.eval(0.07).expect("inside the interval");
    let mut t = [15.0, -6.0, -6.0, -6.0, -6.0, -6.0, 5.0, 5.0, 5.0];
    let norm = t.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in t.iter_mut() {
        *x /= norm;
    }
    let w = perturbation_decompose(&s, &t, 1e-2, &Tolerances::default())
        .expect("admissible direction")
        .expect("the branch admits a segment");
    println!("\nwitness at c = 0.07 with eps = {:.3e}:", w.eps);
    println!("  alpha = {}", w.alpha);
    println!("  beta  = {}", w.beta);
}
