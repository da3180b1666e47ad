//! Densities induced by the Haar measure on `SU(4)`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use super::quadrature::GaussLegendre;
use crate::channels::DampingVector;
use crate::error::{Error, Result};

fn sine_product(a: [f64; 3]) -> f64 {
    let s = |x: f64| (2.0 * x).sin().abs();
    s(a[0] + a[1]) * s(a[0] + a[2]) * s(a[1] + a[2]) * s(a[0] - a[1]) * s(a[0] - a[2]) * s(a[1] - a[2])
}

/// Joint density of the interaction content, normalized to one over the
/// cube `[−π/2, π/2]³`.
pub fn pdf_alpha(alpha: [f64; 3]) -> f64 {
    2.0 / PI * sine_product(alpha)
}

/// The same density normalized over the Weyl chamber, which tiles the cube
/// 192 times.
pub fn pdf_alpha_chamber(alpha: [f64; 3]) -> f64 {
    384.0 / PI * sine_product(alpha)
}

/// Density of the damping vector of a Haar-random two-qubit gate, obtained
/// from [`pdf_alpha_chamber`] through `η = (c₂c₃, c₁c₃, c₁c₂)`,
/// `c_k = cos 2α_k`, whose Jacobian is `16 Π|s_k c_k|`.
pub fn pdf_eta(eta: &DampingVector) -> Result<f64> {
    let e = eta.eta;
    let outside = || Error::Domain(format!("{e:?} is not strictly inside the unistochastic set"));
    if e.iter().any(|x| x.abs() < 1e-300) || e[0] * e[1] * e[2] <= 0.0 {
        return Err(outside());
    }
    let mut c2 = [0.0; 3];
    for k in 0..3 {
        c2[k] = e[(k + 1) % 3] * e[(k + 2) % 3] / e[k];
        if !(c2[k] > 0.0 && c2[k] < 1.0) {
            return Err(outside());
        }
    }
    let vandermonde = (c2[0] - c2[1]).abs() * (c2[0] - c2[2]).abs() * (c2[1] - c2[2]).abs();
    let jac: f64 = c2.iter().map(|c| (c * (1.0 - c)).sqrt()).product::<f64>() * 16.0;
    Ok(384.0 / PI * vandermonde / jac)
}

fn chord(a: f64, b: f64) -> f64 {
    2.0 * ((a - b) / 2.0).sin().abs()
}

/// Six-factor product of the eigenphase repulsions with `Θ₄ = −Θ₁−Θ₂−Θ₃`.
pub fn coe4_repulsion(t: [f64; 3]) -> f64 {
    let t4 = -(t[0] + t[1] + t[2]);
    chord(t4, t[2]) * chord(t4, t[1]) * chord(t4, t[0]) * chord(t[2], t[1]) * chord(t[2], t[0]) * chord(t[1], t[0])
}

/// Composite Gauss–Legendre integral over `[−π, π]³`.
pub fn integrate_phase_cube(panels: usize, points: usize, f: impl Fn([f64; 3]) -> f64) -> f64 {
    let rule = GaussLegendre::new(points);
    let h = 2.0 * PI / panels as f64;
    let axis: Vec<(f64, f64)> = (0..panels)
        .flat_map(|p| {
            let a = -PI + p as f64 * h;
            rule.mapped(a, a + h).collect::<Vec<_>>()
        })
        .collect();
    let mut total = 0.0;
    for &(x, wx) in &axis {
        for &(y, wy) in &axis {
            let mut inner = 0.0;
            for &(z, wz) in &axis {
                inner += wz * f([x, y, z]);
            }
            total += wx * wy * inner;
        }
    }
    total
}

fn coe4_normalization() -> f64 {
    static NORM: OnceLock<f64> = OnceLock::new();
    *NORM.get_or_init(|| integrate_phase_cube(48, 4, coe4_repulsion))
}

/// Marginal density of three eigenphases of an `SCOE(4)` matrix on
/// `[−π, π]³`, normalized numerically.
pub fn pdf_coe4_marginal(theta: [f64; 3]) -> f64 {
    coe4_repulsion(theta) / coe4_normalization()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::eta_from_alpha;
    use crate::ensembles::quadrature::integrate_chamber;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    #[test]
    fn alpha_density_values() {
        assert_eq!(pdf_alpha([FRAC_PI_8; 3]), 0.0);
        // (2/π)·(√2/2)⁴
        assert!((pdf_alpha([FRAC_PI_4, FRAC_PI_8, 0.0]) - 0.5 / PI).abs() < 1e-14);
        assert_eq!(pdf_alpha([0.3, 0.3, 0.1]), 0.0);
        assert_eq!(pdf_alpha([0.3, -0.3, 0.1]), 0.0);
    }

    #[test]
    fn normalizations() {
        let rule = GaussLegendre::new(48);
        assert!((integrate_chamber(&rule, pdf_alpha_chamber) - 1.0).abs() < 1e-8);
        // The cube integral has kinks on α_i = ±α_j, so use many panels.
        let cube = integrate_phase_cube(80, 4, |t| pdf_alpha(t.map(|x| x / 2.0))) / 8.0;
        assert!((cube - 1.0).abs() < 1e-3, "{cube}");
    }

    #[test]
    fn eta_density_matches_jacobian() {
        // Compare with |det ∂η/∂α| from central differences at chamber points.
        for alpha in [[0.5, 0.3, 0.1], [0.2, 0.15, 0.05], [0.9, 0.4, 0.2]] {
            let h = 1e-6;
            let mut jac = [[0.0; 3]; 3];
            for j in 0..3 {
                let (mut p, mut m) = (alpha, alpha);
                p[j] += h;
                m[j] -= h;
                let (ep, em) = (eta_from_alpha(p), eta_from_alpha(m));
                for i in 0..3 {
                    jac[i][j] = (ep[i] - em[i]) / (2.0 * h);
                }
            }
            let det = jac[0][0] * (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1])
                - jac[0][1] * (jac[1][0] * jac[2][2] - jac[1][2] * jac[2][0])
                + jac[0][2] * (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]);
            let expected = pdf_alpha_chamber(alpha) / det.abs();
            let got = pdf_eta(&DampingVector::new(eta_from_alpha(alpha)).unwrap()).unwrap();
            assert!((got / expected - 1.0).abs() < 1e-6, "{alpha:?}: {got} vs {expected}");
        }
    }

    #[test]
    fn eta_density_domain_and_symmetry() {
        let dv = |e| DampingVector::new(e).unwrap();
        assert!(pdf_eta(&dv([-1.0 / 3.0; 3])).is_err());
        assert!(pdf_eta(&dv([0.5, 0.0, 0.2])).is_err());
        assert!(pdf_eta(&dv([0.9, 0.9, 0.5])).is_err());
        let e = [0.6, 0.5, 0.4];
        let base = pdf_eta(&dv(e)).unwrap();
        for p in [[1, 0, 2], [2, 1, 0], [1, 2, 0]] {
            let q = pdf_eta(&dv([e[p[0]], e[p[1]], e[p[2]]])).unwrap();
            assert!((q - base).abs() < 1e-12 * base);
        }
        // Divergence like 1/α₃ on the face α₃ → 0, i.e. η₃ → η₁η₂.
        let at = |a3: f64| pdf_eta(&dv(eta_from_alpha([0.12, 0.08, a3]))).unwrap();
        let (a, b, c) = (at(1e-2), at(1e-4), at(1e-6));
        assert!(b > 50.0 * a && c > 50.0 * b, "{a} {b} {c}");
    }

    #[test]
    fn coe_marginal() {
        assert_eq!(pdf_coe4_marginal([0.4, 0.4, -1.0]), 0.0);
        let total = integrate_phase_cube(24, 4, pdf_coe4_marginal);
        assert!((total - 1.0).abs() < 1e-3, "{total}");
    }

    #[test]
    fn coe_marginal_maps_to_alpha_density() {
        // Θ_k = 2δ_k turns the repulsion product into the sine product of α.
        for alpha in [[0.5, 0.3, 0.1], [0.2, 0.15, 0.05], [0.9, 0.4, 0.2], [0.7, 0.6, 0.1]] {
            let d = crate::canonical::alpha_to_delta(alpha);
            let theta = [2.0 * d[0], 2.0 * d[1], 2.0 * d[2]];
            let ratio = coe4_repulsion(theta) / sine_product(alpha);
            assert!((ratio - 64.0).abs() < 1e-9, "{ratio}");
        }
    }
}
