//! Certify extremality through the t-system rank test and inspect the
//! constraint rows. The nu{1,5,3} branch is the one boundary family that
//! fails, with a one-dimensional escape direction.
//!
//! Run with: cargo run --example extremality_certificate

use ap33::extremality::{build_t_system, extremality_test, ExtremalityKind};
use ap33::families::find_families;
use ap33::Tolerances;

fn main() {
    let tols = Tolerances::default();

    let extreme = &find_families(1, 2, 6, None)[0];
    let s = extreme.eval(0.087).expect("inside the interval");
    let system = build_t_system(&s, &tols).expect("boundary point");
    println!("nu126 @ 0.087: {} constraint rows", system.rows.len());
    for tag in &system.provenance {
        print!("{tag:?} ");
    }
    let verdict = extremality_test(&s, &tols);
    println!("\n=> {:?}: {}\n", verdict.kind, verdict.reason);

    let flagged = &find_families(1, 5, 3, None)[0];
    let s = flagged.eval(0.07).expect("inside the interval");
    let verdict = extremality_test(&s, &tols);
    assert_eq!(verdict.kind, ExtremalityKind::NotExtreme);
    println!("nu153 @ 0.07 => {:?}: {}", verdict.kind, verdict.reason);
    let t = verdict.null_basis[0];
    println!("escape direction (x 1/norm):");
    println!("  {:?}", t.map(|x| (x * 1e4).round() / 1e4));
    // the direction is proportional to (15, -6, -6, -6, -6, -6, 5, 5, 5)
    println!("  t1/t9 = {:.12} (exactly 3 in closed form)", t[0] / t[8]);
}
