//! Two-qubit canonical form `U ∼ exp(i Σ α_k σ_k⊗σ_k)` and the invariants
//! derived from the interaction content `α`.

mod pe;
mod weyl;

pub use pe::{classify_pe, classify_pe_gate, hull_distance, in_pe_polytope, is_special_pe, PEClass, PEKind};
pub use weyl::{in_chamber, weyl_canonicalize};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::channels::DampingVector;
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{normal_eigenvalues, ComplexMatrix};
use crate::schmidt::{schmidt_spectrum, SchmidtSpectrum};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InteractionContent {
    pub alpha: [f64; 3],
    /// Whether `alpha` is the Weyl-chamber representative.
    pub canonical: bool,
}

/// Eigenphases `δ` of the canonical gate, `Σδ = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HamiltonianSpectrum {
    pub delta: [f64; 4],
}

/// Rows are the Bell states `−iΨ⁺, Φ⁺, −iΦ⁻, Ψ⁻`.
pub fn magic_basis() -> ComplexMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (o, z, mi, i) = (
        Complex64::new(h, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, -h),
        Complex64::new(0.0, h),
    );
    ComplexMatrix::new(
        4,
        4,
        vec![
            z, mi, mi, z, //
            o, z, z, o, //
            mi, z, z, i, //
            z, o, -o, z,
        ],
    )
    .expect("4x4")
}

pub fn alpha_to_delta(a: [f64; 3]) -> [f64; 4] {
    [
        a[0] + a[1] - a[2],
        a[0] - a[1] + a[2],
        -a[0] + a[1] + a[2],
        -a[0] - a[1] - a[2],
    ]
}

pub fn delta_to_alpha(d: [f64; 4]) -> Result<[f64; 3]> {
    let sum: f64 = d.iter().sum();
    if sum.abs() > 1e-10 {
        return Err(Error::Domain(format!("Hamiltonian eigenvalues must sum to zero, got {sum:e}")));
    }
    Ok(alpha_from_delta_unchecked(d))
}

// Invariant under a common shift of all δ_k.
fn alpha_from_delta_unchecked(d: [f64; 4]) -> [f64; 3] {
    [
        (d[0] + d[1] - d[2] - d[3]) / 4.0,
        (d[0] - d[1] + d[2] - d[3]) / 4.0,
        (-d[0] + d[1] + d[2] - d[3]) / 4.0,
    ]
}

/// `exp(i Σ α_k σ_k⊗σ_k) = M† diag(e^{iδ}) M`.
pub fn canonical_gate(alpha: [f64; 3]) -> ComplexMatrix {
    let m = magic_basis();
    let phases: Vec<Complex64> = alpha_to_delta(alpha).iter().map(|&d| Complex64::from_polar(1.0, d)).collect();
    let u = &(&m.adjoint() * &ComplexMatrix::diagonal(&phases)) * &m;
    u.with_dims(2, 2).expect("4x4")
}

/// Interaction content of a two-qubit unitary, Weyl-canonicalized.
pub fn interaction_content(u: &ComplexMatrix) -> Result<(InteractionContent, HamiltonianSpectrum)> {
    interaction_content_with(u, &Tolerances::DEFAULT)
}

pub fn interaction_content_with(
    u: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<(InteractionContent, HamiltonianSpectrum)> {
    if u.rows() != 4 || u.cols() != 4 {
        return Err(Error::Dimension(format!(
            "canonical form needs a 4x4 gate, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    let residual = u.unitarity_residual();
    if residual > tol.unitary {
        return Err(Error::NotUnitary(residual));
    }

    let chi = u.determinant()?.arg();
    let special = u.scale(Complex64::from_polar(1.0, -chi / 4.0));
    let m = magic_basis();
    let w = &(&m * &special) * &m.adjoint();
    let y = &w * &w.transpose();
    let eig = normal_eigenvalues(&y)?;
    if eig.len() != 4 {
        return Err(Error::Convergence("expected four eigenvalues of W·Wᵀ".into()));
    }
    let mut delta = [0.0; 4];
    for (d, z) in delta.iter_mut().zip(&eig) {
        *d = z.arg() / 2.0;
    }
    resolve_branch(&mut delta, tol.chamber);

    let ic = weyl_canonicalize(alpha_from_delta_unchecked(delta));

    let expected = lambda_from_alpha(ic.alpha);
    let svd = schmidt_spectrum(u, Some((2, 2)))?;
    let scale = 4.0 / svd.total();
    let mismatch = expected
        .lambda_raw
        .iter()
        .zip(&svd.lambda_raw)
        .map(|(a, b)| (a - b * scale).abs())
        .fold(0.0, f64::max);
    if mismatch > tol.self_check {
        return Err(Error::SelfCheck(format!(
            "Schmidt vector from alpha {:?} differs from the SVD by {mismatch:e}",
            ic.alpha
        )));
    }
    Ok((
        ic,
        HamiltonianSpectrum {
            delta: alpha_to_delta(ic.alpha),
        },
    ))
}

// Principal phases give Σδ ∈ {−π, 0, π, 2π}; shifting single phases by π
// moves between equivalent branches.
fn resolve_branch(delta: &mut [f64; 4], tol: f64) {
    for _ in 0..2 {
        let sum: f64 = delta.iter().sum();
        if sum.abs() <= tol.max(1e-8) {
            return;
        }
        let cmp = |a: &&mut f64, b: &&mut f64| a.total_cmp(b);
        if sum > 0.0 {
            *delta.iter_mut().max_by(cmp).expect("four phases") -= PI;
        } else {
            *delta.iter_mut().min_by(cmp).expect("four phases") += PI;
        }
    }
}

/// `η = (cos2α₂·cos2α₃, cos2α₁·cos2α₃, cos2α₁·cos2α₂)`.
pub fn eta_from_alpha(alpha: [f64; 3]) -> [f64; 3] {
    let c = alpha.map(|a| (2.0 * a).cos());
    [c[1] * c[2], c[0] * c[2], c[0] * c[1]]
}

/// The four Schmidt coefficients `1 + η₁ + η₂ + η₃`, ..., sorted descending.
pub fn lambda_from_eta(eta: [f64; 3]) -> [f64; 4] {
    let [a, b, c] = eta;
    let mut l = [1.0 + a + b + c, 1.0 + a - b - c, 1.0 - a + b - c, 1.0 - a - b + c];
    l.sort_by(|x, y| y.total_cmp(x));
    l
}

pub fn lambda_from_alpha(alpha: [f64; 3]) -> SchmidtSpectrum {
    let l = lambda_from_eta(eta_from_alpha(alpha)).map(|x| x.max(0.0));
    SchmidtSpectrum::from_coefficients(l.to_vec(), (2, 2)).expect("coefficients sum to 4")
}

/// A preimage `α` of the damping vector under `eta_from_alpha`.
///
/// The result is not Weyl-canonicalized; it reproduces `η` exactly, not just
/// up to symmetry.
pub fn alpha_from_eta(eta: &DampingVector) -> Result<InteractionContent> {
    let e = eta.eta;
    if !crate::channels::satisfies_unistochastic_bound(e, Tolerances::DEFAULT.unistochastic) {
        return Err(Error::NotUnistochastic(format!("{e:?}")));
    }
    let zero = |x: f64| x.abs() < 1e-14;
    let zeros: Vec<usize> = (0..3).filter(|&k| zero(e[k])).collect();
    let c: [f64; 3] = match zeros.len() {
        0 => {
            let c1 = (e[1] * e[2] / e[0]).clamp(0.0, 1.0).sqrt();
            [c1, e[2] / c1, e[1] / c1]
        }
        2 => {
            // η_k = c_i·c_j is the only nonzero entry: c_k = 0.
            let k = (0..3).find(|k| !zeros.contains(k)).expect("one nonzero");
            let mut c = [1.0; 3];
            c[k] = 0.0;
            let i = (0..3).find(|&i| i != k).expect("other index");
            c[i] = e[k];
            c
        }
        3 => [0.0, 0.0, 1.0],
        _ => {
            return Err(Error::NotUnistochastic(format!(
                "{e:?}: exactly one vanishing component cannot be realized"
            )))
        }
    };
    let alpha = c.map(|x| 0.5 * x.clamp(-1.0, 1.0).acos());
    let back = eta_from_alpha(alpha);
    let err = back.iter().zip(&e).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if err > 1e-8 {
        return Err(Error::SelfCheck(format!("alpha {alpha:?} reproduces eta only to {err:e}")));
    }
    Ok(InteractionContent { alpha, canonical: false })
}

/// Inverts the Schmidt coefficients of a two-qubit gate to its interaction
/// content. The maximally mixed vector `(1,1,1,1)` has no unique preimage.
pub fn alpha_from_lambda(spec: &SchmidtSpectrum) -> Result<InteractionContent> {
    if spec.lambda_raw.len() != 4 {
        return Err(Error::Dimension("alpha_from_lambda needs four Schmidt coefficients".into()));
    }
    let scale = 4.0 / spec.total();
    let l: Vec<f64> = spec.lambda_raw.iter().map(|x| x * scale).collect();
    if l.iter().all(|x| (x - 1.0).abs() < 1e-9) {
        return Err(Error::Degenerate("all Schmidt coefficients equal, alpha is ill defined".into()));
    }
    let eta = [(l[0] + l[1] - 2.0) / 2.0, (l[0] + l[2] - 2.0) / 2.0, (l[0] + l[3] - 2.0) / 2.0];
    if eta.iter().all(|x| x.abs() > 1e-12) {
        for k in 0..3 {
            let w = eta[(k + 1) % 3] * eta[(k + 2) % 3] / eta[k];
            if !(-1e-10..=1.0 + 1e-10).contains(&w) {
                return Err(Error::NotRealizable(format!("w{} = {w} outside [0, 1]", k + 1)));
            }
        }
    }
    // |cos 2α_k| = √w_k; alpha_from_eta also fixes the signs.
    let dv = DampingVector::new(eta).map_err(|e| Error::NotRealizable(e.to_string()))?;
    let alpha = alpha_from_eta(&dv).map_err(|e| Error::NotRealizable(e.to_string()))?.alpha;
    let ic = weyl_canonicalize(alpha);
    let back = lambda_from_alpha(ic.alpha);
    let err = back.lambda_raw.iter().zip(&l).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    if err > 1e-8 {
        return Err(Error::NotRealizable(format!("no interaction content reproduces {l:?} (residual {err:e})")));
    }
    Ok(ic)
}

/// Whether two 4×4 unitaries share their Weyl-canonical interaction content.
pub fn locally_equivalent(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<bool> {
    let tol = Tolerances::DEFAULT.local_equivalence;
    let (a, _) = interaction_content(u)?;
    let (b, _) = interaction_content(v)?;
    Ok(a.alpha.iter().zip(&b.alpha).all(|(x, y)| (x - y).abs() <= tol))
}
