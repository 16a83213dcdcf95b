//! Real-root extraction for the cubic eigenvalue equations of the family
//! tables. Roots come from the closed trigonometric/Cardano formulas and are
//! polished by Newton iteration against the original coefficients, so "the
//! k-th real root in ascending order" is reproducible across platforms.

use std::f64::consts::PI;

/// Evaluate `c[0] x^3 + c[1] x^2 + c[2] x + c[3]` (descending coefficients).
pub fn eval_cubic(c: &[f64; 4], x: f64) -> f64 {
    ((c[0] * x + c[1]) * x + c[2]) * x + c[3]
}

fn eval_cubic_deriv(c: &[f64; 4], x: f64) -> f64 {
    (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2]
}

/// Newton-polish `x` as a root of the cubic `c`.
pub fn polish_cubic_root(c: &[f64; 4], mut x: f64) -> f64 {
    for _ in 0..60 {
        let f = eval_cubic(c, x);
        let d = eval_cubic_deriv(c, x);
        if d == 0.0 {
            break;
        }
        let step = f / d;
        x -= step;
        if step.abs() <= 2.0 * f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }
    x
}

/// All real roots of the cubic, ascending. Coefficients descending; the
/// leading coefficient must be nonzero.
pub fn real_roots_cubic(c: &[f64; 4]) -> Vec<f64> {
    assert!(c[0] != 0.0, "leading cubic coefficient must be nonzero");
    let p = c[1] / c[0];
    let q = c[2] / c[0];
    let r = c[3] / c[0];
    // depressed cubic t^3 + a t + b with x = t - p/3
    let a = q - p * p / 3.0;
    let b = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    let shift = -p / 3.0;

    let disc = -4.0 * a * a * a - 27.0 * b * b;
    let mut roots = if disc >= 0.0 && a <= 0.0 {
        if a == 0.0 {
            vec![shift] // triple root t = 0
        } else {
            let m = 2.0 * (-a / 3.0).sqrt();
            let arg = (3.0 * b / (a * m)).clamp(-1.0, 1.0);
            let theta = arg.acos() / 3.0;
            (0..3)
                .map(|k| shift + m * (theta - 2.0 * PI * k as f64 / 3.0).cos())
                .collect()
        }
    } else {
        // one real root (Cardano)
        let half_b = b / 2.0;
        let inner = half_b * half_b + a * a * a / 27.0;
        let t = if inner >= 0.0 {
            let s = inner.sqrt();
            (-half_b + s).cbrt() + (-half_b - s).cbrt()
        } else {
            // numerically disc ~ 0; fall back to the trig branch
            let m = 2.0 * (-a / 3.0).sqrt();
            let arg = (3.0 * b / (a * m)).clamp(-1.0, 1.0);
            m * (arg.acos() / 3.0).cos()
        };
        vec![shift + t]
    };

    for x in roots.iter_mut() {
        *x = polish_cubic_root(c, *x);
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// The unique root of the cubic inside `(lo, hi)`, found by bisection and
/// polished by Newton. Panics if the bracket does not straddle a sign change.
pub fn cubic_root_in(c: &[f64; 4], lo: f64, hi: f64) -> f64 {
    let (mut lo, mut hi) = (lo, hi);
    let flo = eval_cubic(c, lo);
    let fhi = eval_cubic(c, hi);
    assert!(
        flo * fhi < 0.0,
        "bracket ({lo}, {hi}) must straddle a sign change"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = eval_cubic(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if flo * fm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        if hi - lo <= f64::EPSILON * hi.abs().max(1.0) {
            break;
        }
    }
    polish_cubic_root(c, 0.5 * (lo + hi))
}
