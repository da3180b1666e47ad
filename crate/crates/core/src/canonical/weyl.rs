use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use super::InteractionContent;
use crate::config::Tolerances;

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
const EVEN_SIGNS: [[f64; 3]; 4] = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];

/// Chamber membership:
/// `π/4 ≥ α₁ ≥ α₂ ≥ α₃ ≥ 0`, or `π/2 ≥ α₁ > π/4` with `π/2 − α₁ ≥ α₂ ≥ α₃ ≥ 0`.
pub fn in_chamber(a: [f64; 3], tol: f64) -> bool {
    let ordered = a[1] <= a[0] + tol && a[2] <= a[1] + tol && a[2] >= -tol;
    let upper = if a[0] <= FRAC_PI_4 + tol {
        true
    } else {
        a[0] <= FRAC_PI_2 + tol && a[1] <= FRAC_PI_2 - a[0] + tol
    };
    ordered && upper
}

fn reduce(x: f64, tol: f64) -> f64 {
    let r = x.rem_euclid(FRAC_PI_2);
    if FRAC_PI_2 - r < tol {
        0.0
    } else {
        r
    }
}

fn chamber_violation(a: [f64; 3]) -> f64 {
    let upper = if a[0] <= FRAC_PI_4 {
        0.0
    } else {
        (a[1] - (FRAC_PI_2 - a[0])).max(0.0)
    };
    (a[1] - a[0]).max(0.0) + (a[2] - a[1]).max(0.0) + (-a[2]).max(0.0) + upper
}

/// Representative of `α` in the Weyl chamber.
///
/// The orbit is generated by permutations, sign flips of two components and
/// shifts of single components by `π/2`. Points on the `α₃ = 0` face have
/// two chamber images `(x, y, 0)` and `(π/2 − x, y, 0)`; the one with
/// `α₁ ≤ π/4` is returned, otherwise the lexicographically largest.
pub fn weyl_canonicalize(alpha: [f64; 3]) -> InteractionContent {
    let tol = Tolerances::DEFAULT.chamber;
    let mut best: Option<([f64; 3], bool)> = None;
    let mut fallback: Option<([f64; 3], f64)> = None;
    for perm in PERMUTATIONS {
        for signs in EVEN_SIGNS {
            let cand = [0, 1, 2].map(|k| reduce(signs[k] * alpha[perm[k]], tol));
            if in_chamber(cand, tol) {
                let low = cand[0] <= FRAC_PI_4 + tol;
                let better = match best {
                    None => true,
                    Some((b, b_low)) => (low && !b_low) || (low == b_low && lex_greater(cand, b, tol)),
                };
                if better {
                    best = Some((cand, low));
                }
            } else {
                let v = chamber_violation(cand);
                if fallback.map_or(true, |(_, fv)| v < fv) {
                    fallback = Some((cand, v));
                }
            }
        }
    }
    let alpha = match (best, fallback) {
        (Some((a, _)), _) => a,
        (None, Some((a, _))) => a,
        (None, None) => unreachable!("orbit is never empty"),
    };
    InteractionContent {
        alpha,
        canonical: true,
    }
}

fn lex_greater(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
    for k in 0..3 {
        if a[k] > b[k] + tol {
            return true;
        }
        if a[k] < b[k] - tol {
            return false;
        }
    }
    false
}
