//! Property tests for the core invariants.

use ap33::ap::classify;
use ap33::oracle::{haar_unitary, partial_transpose, DenseHermitian9};
use ap33::spectrum::{Spectrum, ThreeLevel};
use proptest::prelude::*;

fn raw_values() -> impl Strategy<Value = [f64; 9]> {
    prop::array::uniform9(0.0f64..1.0).prop_filter("nonzero sum", |v| v.iter().sum::<f64>() > 1e-3)
}

fn normalized(v: [f64; 9]) -> [f64; 9] {
    let sum: f64 = v.iter().sum();
    v.map(|x| x / sum)
}

proptest! {
    #[test]
    fn constructor_sorts_and_is_idempotent(v in raw_values()) {
        let s1 = Spectrum::new_renormalized(normalized(v)).unwrap();
        prop_assert!(s1.lambda().windows(2).all(|w| w[0] >= w[1]));
        prop_assert!((s1.sum() - 1.0).abs() <= 1e-14);
        let s2 = Spectrum::new(*s1.lambda()).unwrap();
        prop_assert_eq!(s1.lambda(), s2.lambda());
    }

    #[test]
    fn classification_is_permutation_invariant(v in raw_values(), rot in 0usize..9) {
        let n = normalized(v);
        let mut permuted = [0.0; 9];
        for i in 0..9 {
            permuted[i] = n[(i + rot) % 9];
        }
        let a = classify(&Spectrum::new_renormalized(n).unwrap(), 1e-10).unwrap();
        let b = classify(&Spectrum::new_renormalized(permuted).unwrap(), 1e-10).unwrap();
        prop_assert_eq!(a.kind, b.kind);
        prop_assert!((a.l1 - b.l1).abs() <= 1e-15);
        prop_assert!((a.l2 - b.l2).abs() <= 1e-15);
    }

    #[test]
    fn three_level_pattern_recovery(
        mu_a in 1usize..=7,
        frac in 0.05f64..0.95,
        gap_a in 1e-3f64..0.05,
        gap_b in 1e-3f64..0.05,
        c in 0.01f64..0.08,
    ) {
        let mu_b = 1 + ((7 - mu_a) as f64 * frac) as usize;
        let mu_c = 9 - mu_a - mu_b;
        prop_assume!(mu_c >= 1);
        let b = c + gap_b;
        // solve a from the trace; keep the ordering assumption honest
        let a = (1.0 - mu_b as f64 * b - mu_c as f64 * c) / mu_a as f64;
        prop_assume!(a > b + gap_a);
        let t = ThreeLevel::new(a, b, c, mu_a, mu_b, mu_c).unwrap();
        let s = t.to_spectrum().unwrap();
        let counts = s.pattern(1e-12).counts();
        prop_assert_eq!(counts, vec![mu_a, mu_b, mu_c]);
        prop_assert!((s.sum() - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn partial_transpose_is_an_involution(seed in 0u64..1000) {
        let u = haar_unitary(seed);
        let rho = DenseHermitian9::from_spectrum_diag(&Spectrum::uniform()).conjugate_by(&u);
        let back = partial_transpose(&partial_transpose(&rho));
        for i in 0..9 {
            for j in 0..9 {
                prop_assert!((back.entries()[i][j] - rho.entries()[i][j]).norm() <= 1e-15);
            }
        }
    }
}
