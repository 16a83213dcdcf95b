//! Classify the eight two-eigenvalue anchor states, the maximally mixed
//! state, and a spiked non-member; print the full diagnostic verdicts.
//!
//! Run with: cargo run --example classify_anchors

use ap33::families::{zeta, ZetaId};
use ap33::{classify, extremality_test, Spectrum, Tolerances};

fn show(name: &str, s: &Spectrum) {
    let tols = Tolerances::default();
    let m = classify(s, tols.det).expect("criterion is consistent");
    let e = extremality_test(s, &tols);
    println!(
        "{name:>8}: {:?} (active {:?}, l1 = {:+.3e}, l2 = {:+.3e}, min eigs = {:+.3e}/{:+.3e}{}) -> {:?}",
        m.kind,
        m.active,
        m.l1,
        m.l2,
        m.min_eig_l1,
        m.min_eig_l2,
        if m.rank_deficient { ", rank-deficient" } else { "" },
        e.kind,
    );
}

fn main() {
    for id in ZetaId::all() {
        show(&id.to_string(), &zeta(id));
    }
    show("uniform", &Spectrum::uniform());

    let mut spiked = [0.5 / 8.0; 9];
    spiked[0] = 0.5;
    show("spiked", &Spectrum::new(spiked).expect("valid spectrum"));
}
