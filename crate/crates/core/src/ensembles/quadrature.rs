//! Gauss–Legendre rules and the chamber volume integrals.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_8, PI};

use serde::Serialize;

use super::density::pdf_alpha_chamber;
use crate::error::{Error, Result};

/// `n`-point Gauss–Legendre rule on `[−1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..(n + 1) / 2 {
            // Chebyshev guess, then Newton on P_n.
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            let w = 2.0 / ((1.0 - x * x) * d * d);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let (h, m) = ((b - a) / 2.0, (a + b) / 2.0);
        if h == 0.0 {
            return 0.0;
        }
        self.nodes.iter().zip(&self.weights).map(|(x, w)| w * f(m + h * x)).sum::<f64>() * h
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let (h, m) = ((b - a) / 2.0, (a + b) / 2.0);
        self.nodes.iter().zip(&self.weights).map(move |(x, w)| (m + h * x, w * h))
    }
}

fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

/// `∫ f` over the chamber `α₂ ≤ min(α₁, π/2 − α₁)`, `α₃ ≤ α₂`.
pub fn integrate_chamber(rule: &GaussLegendre, f: impl Fn([f64; 3]) -> f64) -> f64 {
    let inner = |a1: f64, a2_hi: f64| {
        rule.integrate(0.0, a2_hi, |a2| rule.integrate(0.0, a2, |a3| f([a1, a2, a3])))
    };
    rule.integrate(0.0, FRAC_PI_4, |a1| inner(a1, a1)) + rule.integrate(FRAC_PI_4, FRAC_PI_2, |a1| inner(a1, FRAC_PI_2 - a1))
}

/// `∫ f` over the perfect-entangler part of the chamber,
/// `α₁+α₂ ≥ π/4`, `α₁−α₂ ≤ π/4`, `α₂+α₃ ≤ π/4`.
pub fn integrate_pe(rule: &GaussLegendre, f: impl Fn([f64; 3]) -> f64) -> f64 {
    let over_a3 = |a1: f64, a2: f64| rule.integrate(0.0, a2.min(FRAC_PI_4 - a2), |a3| f([a1, a2, a3]));
    // The α₃ limit has a kink at α₂ = π/8.
    let over_a2 = |a1: f64, lo: f64, hi: f64| {
        let mut s = 0.0;
        if lo < FRAC_PI_8 && hi > FRAC_PI_8 {
            s += rule.integrate(lo, FRAC_PI_8, |a2| over_a3(a1, a2));
            s += rule.integrate(FRAC_PI_8, hi, |a2| over_a3(a1, a2));
        } else {
            s += rule.integrate(lo, hi, |a2| over_a3(a1, a2));
        }
        s
    };
    rule.integrate(FRAC_PI_8, FRAC_PI_4, |a1| over_a2(a1, FRAC_PI_4 - a1, a1))
        + rule.integrate(FRAC_PI_4, 3.0 * FRAC_PI_8, |a1| over_a2(a1, a1 - FRAC_PI_4, FRAC_PI_2 - a1))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Volumes {
    pub v_w: f64,
    pub v_pe: f64,
    pub ratio: f64,
}

fn volumes_with(n: usize) -> Volumes {
    let rule = GaussLegendre::new(n);
    let v_w = integrate_chamber(&rule, pdf_alpha_chamber);
    let v_pe = integrate_pe(&rule, pdf_alpha_chamber);
    Volumes {
        v_w,
        v_pe,
        ratio: v_pe / v_w,
    }
}

/// Chamber and perfect-entangler volumes under the Haar-induced density,
/// at 64 points per axis, checked against the 32-point result.
pub fn integrate_volumes() -> Result<Volumes> {
    let coarse = volumes_with(32);
    let fine = volumes_with(64);
    let diff = (coarse.v_w - fine.v_w).abs().max((coarse.v_pe - fine.v_pe).abs());
    if diff > 1e-4 {
        return Err(Error::Convergence(format!("volume quadrature changed by {diff:e} under refinement")));
    }
    Ok(fine)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_is_exact_for_polynomials() {
        let rule = GaussLegendre::new(5);
        let w: f64 = rule.weights.iter().sum();
        assert!((w - 2.0).abs() < 1e-14);
        // Degree 9 is integrated exactly by five points.
        let v = rule.integrate(0.0, 2.0, |x| x.powi(9));
        assert!((v - 2f64.powi(10) / 10.0).abs() < 1e-10);
        for n in [1, 2, 16, 64] {
            let r = GaussLegendre::new(n);
            assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
            assert!((r.weights.iter().sum::<f64>() - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn chamber_volume_in_flat_measure() {
        // Two pieces of volume (π/4)³/6 each.
        let rule = GaussLegendre::new(8);
        let v = integrate_chamber(&rule, |_| 1.0);
        assert!((v - PI.powi(3) / 192.0).abs() < 1e-12, "{v}");
    }

    #[test]
    fn volume_ratio() {
        let v = integrate_volumes().unwrap();
        assert!((v.v_w - 1.0).abs() < 1e-6, "{v:?}");
        assert!((v.ratio - 8.0 / (3.0 * PI)).abs() < 1e-3, "{v:?}");
    }

    #[test]
    fn alpha3_face_has_less_volume() {
        let rule = GaussLegendre::new(32);
        let full = integrate_pe(&rule, pdf_alpha_chamber);
        let slab = integrate_pe(&rule, |a| if a[2] < FRAC_PI_8 / 2.0 { pdf_alpha_chamber(a) } else { 0.0 });
        assert!(slab < full);
    }
}
