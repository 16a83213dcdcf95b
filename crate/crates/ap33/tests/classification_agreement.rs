//! Large-scale randomized consistency of the classifier: no internal
//! inconsistencies over 1e5 random spectra, the corner inequality wherever
//! both matrices are near-PSD, and a Monte-Carlo spot check that interior
//! verdicts are never falsified by random partial transposes.

use ap33::ap::{classify, corner_inequality, MembershipKind};
use ap33::oracle::mc_ppt_scan;
use ap33::spectrum::Spectrum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_spectrum(rng: &mut ChaCha8Rng) -> Spectrum {
    let mut v = [0.0f64; 9];
    let mut sum = 0.0;
    for x in v.iter_mut() {
        // mixture of flat and spiked draws to cover all three verdicts
        let base: f64 = rng.gen();
        *x = if rng.gen_bool(0.2) {
            base.powi(4)
        } else {
            base + 0.3
        };
        sum += *x;
    }
    for x in v.iter_mut() {
        *x /= sum;
    }
    Spectrum::new(v).expect("normalized")
}

#[test]
fn classifier_is_consistent_over_100k_random_spectra() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut counts = [0usize; 3];
    let mut interior_samples = Vec::new();
    for i in 0..100_000 {
        let s = random_spectrum(&mut rng);
        let v = classify(&s, 1e-10).unwrap_or_else(|e| panic!("spectrum #{i}: {e}"));
        match v.kind {
            MembershipKind::NotAp => counts[0] += 1,
            MembershipKind::Boundary => counts[1] += 1,
            MembershipKind::Interior => {
                counts[2] += 1;
                // the corner value is a principal minor of L1, so near-PSD
                // matrices keep it nonnegative up to tolerance
                assert!(
                    corner_inequality(&s) >= -1e-10,
                    "interior spectrum #{i} violates the corner inequality"
                );
                if interior_samples.len() < 300 {
                    interior_samples.push(s);
                }
            }
        }
    }
    println!(
        "verdicts over 100k: not_ap={}, boundary={}, interior={}",
        counts[0], counts[1], counts[2]
    );
    assert!(
        counts[0] > 1000 && counts[2] > 1000,
        "population too one-sided"
    );

    // interior members must never be falsified by random unitary probing
    for (j, s) in interior_samples.iter().enumerate() {
        let report = mc_ppt_scan(s, 50, 1234 + j as u64);
        assert!(
            report.min_pt_eigenvalue >= -1e-8,
            "interior sample #{j} falsified: {:e}",
            report.min_pt_eigenvalue
        );
    }
}
