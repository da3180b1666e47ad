//! Operator Schmidt decomposition and functionals of the Schmidt vector.

use num_complex::Complex64;
use serde::Serialize;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{reshuffle, svd, ComplexMatrix};

/// Descending Schmidt coefficients `Λ_k` (squared singular values of the
/// reshuffled operator) together with their normalized form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchmidtSpectrum {
    /// Unnormalized coefficients; they sum to `dA·dB` for a unitary.
    #[serde(rename = "Lambda")]
    pub lambda_raw: Vec<f64>,
    /// `Λ_k / ΣΛ`, a probability vector.
    pub lambda: Vec<f64>,
    pub dims: (usize, usize),
}

impl SchmidtSpectrum {
    /// Builds a spectrum from unnormalized coefficients (sorted here).
    pub fn from_coefficients(mut raw: Vec<f64>, dims: (usize, usize)) -> Result<Self> {
        if raw.is_empty() || raw.iter().any(|x| !x.is_finite() || *x < -1e-12) {
            return Err(Error::Domain("Schmidt coefficients must be finite and nonnegative".into()));
        }
        for x in raw.iter_mut() {
            *x = x.max(0.0);
        }
        raw.sort_by(|a, b| b.total_cmp(a));
        let total: f64 = raw.iter().sum();
        if total <= 0.0 {
            return Err(Error::Domain("Schmidt coefficients sum to zero".into()));
        }
        let lambda = raw.iter().map(|x| x / total).collect();
        Ok(Self {
            lambda_raw: raw,
            lambda,
            dims,
        })
    }

    pub fn total(&self) -> f64 {
        self.lambda_raw.iter().sum()
    }

    /// Number of coefficients above `rank_tol` relative to their sum.
    pub fn rank_with(&self, rank_tol: f64) -> usize {
        self.lambda.iter().filter(|&&l| l > rank_tol).count()
    }

    pub fn rank(&self) -> usize {
        self.rank_with(Tolerances::DEFAULT.rank)
    }
}

/// `U = Σ_k √Λ_k A_k ⊗ B_k` with Hilbert–Schmidt orthonormal `A_k`, `B_k`.
#[derive(Debug, Clone)]
pub struct SchmidtDecomposition {
    pub spectrum: SchmidtSpectrum,
    /// Operators on the first factor.
    pub left_ops: Vec<ComplexMatrix>,
    /// Operators on the second factor.
    pub right_ops: Vec<ComplexMatrix>,
}

impl SchmidtDecomposition {
    /// `Σ_k √Λ_k A_k ⊗ B_k`.
    pub fn reconstruct(&self) -> Result<ComplexMatrix> {
        let (da, db) = self.spectrum.dims;
        let d = da * db;
        let mut out = ComplexMatrix::zeros(d, d);
        for ((l, a), b) in self.spectrum.lambda_raw.iter().zip(&self.left_ops).zip(&self.right_ops) {
            if *l == 0.0 {
                continue;
            }
            let term = crate::linalg::tensor_product(a, b)?.scale_real(l.sqrt());
            out = &out + &term;
        }
        out.with_dims(da, db)
    }
}

fn resolve_dims(u: &ComplexMatrix, dims: Option<(usize, usize)>) -> Result<(usize, usize)> {
    dims.or(u.dims())
        .ok_or(Error::MissingDims("operator Schmidt decomposition needs (dA, dB)"))
}

/// Schmidt vector of a bipartite operator.
pub fn schmidt_spectrum(u: &ComplexMatrix, dims: Option<(usize, usize)>) -> Result<SchmidtSpectrum> {
    let dims = resolve_dims(u, dims)?;
    let r = reshuffle(u, dims)?;
    let sv = crate::linalg::singular_values(&r)?;
    SchmidtSpectrum::from_coefficients(sv.iter().map(|s| s * s).collect(), dims)
}

/// Full operator Schmidt decomposition with orthonormal operator bases.
pub fn schmidt_decomposition(u: &ComplexMatrix, dims: Option<(usize, usize)>) -> Result<SchmidtDecomposition> {
    let dims = resolve_dims(u, dims)?;
    let (da, db) = dims;
    let r = reshuffle(u, dims)?;
    let s = svd(&r)?;
    let k = s.singular_values.len();
    // X^R = Σ σ_k u_k v_k†, so A_k = reshape(u_k) and B_k = reshape(conj(v_k)).
    let left_ops = (0..k)
        .map(|j| ComplexMatrix::unvectorize(&s.u.column(j), da, da))
        .collect::<Result<Vec<_>>>()?;
    let right_ops = (0..k)
        .map(|j| {
            let v: Vec<Complex64> = s.v.column(j).iter().map(|z| z.conj()).collect();
            ComplexMatrix::unvectorize(&v, db, db)
        })
        .collect::<Result<Vec<_>>>()?;
    let spectrum =
        SchmidtSpectrum::from_coefficients(s.singular_values.iter().map(|x| x * x).collect(), dims)?;
    Ok(SchmidtDecomposition {
        spectrum,
        left_ops,
        right_ops,
    })
}

/// Rényi entropy `S_q` of the normalized Schmidt vector.
///
/// `q = 1` is the Shannon (entanglement) entropy and `q = 0` the logarithm
/// of the Schmidt rank at the default rank tolerance.
pub fn renyi_entropy(s: &SchmidtSpectrum, q: f64) -> Result<f64> {
    if !(q >= 0.0) || !q.is_finite() {
        return Err(Error::Domain(format!("Rényi order must be a finite q >= 0, got {q}")));
    }
    Ok(renyi_of_probabilities(&s.lambda, q))
}

pub(crate) fn renyi_of_probabilities(p: &[f64], q: f64) -> f64 {
    if q == 0.0 {
        let rank = p.iter().filter(|&&x| x > Tolerances::DEFAULT.rank).count();
        return (rank as f64).ln();
    }
    if (q - 1.0).abs() < 1e-12 {
        return -p.iter().filter(|&&x| x > 0.0).map(|x| x * x.ln()).sum::<f64>();
    }
    let moment: f64 = p.iter().filter(|&&x| x > 0.0).map(|x| x.powf(q)).sum();
    moment.ln() / (1.0 - q)
}

/// Shannon entropy of the Schmidt vector.
pub fn entanglement_entropy(s: &SchmidtSpectrum) -> f64 {
    renyi_of_probabilities(&s.lambda, 1.0)
}

/// Purity-type functionals of the Schmidt vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Purity {
    /// `r = Σ λ_k²`
    pub r: f64,
    /// `E = 1 − r`
    pub linear_entropy: f64,
    /// Inverse participation ratio `R = 1/r`.
    pub ipr: f64,
}

pub fn purity(s: &SchmidtSpectrum) -> Purity {
    let r: f64 = s.lambda.iter().map(|x| x * x).sum();
    Purity {
        r,
        linear_entropy: 1.0 - r,
        ipr: 1.0 / r,
    }
}

/// Splits a product operator into `(U_a, U_b)` with `U_a ⊗ U_b = U`.
///
/// Returns `None` when the Schmidt rank exceeds one. The phase is fixed by
/// making the largest-modulus entry of `U_a` real and positive; for a
/// unitary input both factors are then unitary.
pub fn factor_product(
    u: &ComplexMatrix,
    dims: Option<(usize, usize)>,
) -> Result<Option<(ComplexMatrix, ComplexMatrix)>> {
    let dec = schmidt_decomposition(u, dims)?;
    let spec = &dec.spectrum;
    if spec.lambda.len() > 1 && spec.lambda[1] >= Tolerances::DEFAULT.rank {
        return Ok(None);
    }
    let (da, db) = spec.dims;
    let s1 = spec.lambda_raw[0].sqrt();
    // Split the weight so that a unitary input yields unitary factors.
    let wa = (s1 * da as f64 / db as f64).sqrt();
    let wb = s1 / wa;
    let mut ua = dec.left_ops[0].scale_real(wa);
    let mut ub = dec.right_ops[0].scale_real(wb);
    let pivot = ua
        .data()
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    if pivot.norm() > 0.0 {
        let phase = pivot / pivot.norm();
        ua = ua.scale(phase.conj());
        ub = ub.scale(phase);
    }
    Ok(Some((ua, ub)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{build, GateId};
    use crate::linalg::{pauli, tensor_product};
    use std::f64::consts::{LN_2, SQRT_2};

    fn spectrum_of(id: GateId) -> SchmidtSpectrum {
        schmidt_spectrum(&build(&id).unwrap(), None).unwrap()
    }

    fn assert_vec_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < tol, "{a:?} vs {b:?}");
        }
    }

    fn hadamard() -> ComplexMatrix {
        ComplexMatrix::from_real(2, 2, &[1.0, 1.0, 1.0, -1.0]).unwrap().scale_real(1.0 / SQRT_2)
    }

    #[test]
    fn table_spectra() {
        assert_vec_close(&spectrum_of(GateId::Cnot).lambda_raw, &[2.0, 2.0, 0.0, 0.0], 1e-12);
        let local = GateId::Local(hadamard(), pauli(2));
        assert_vec_close(&spectrum_of(local).lambda_raw, &[4.0, 0.0, 0.0, 0.0], 1e-12);
        assert_vec_close(
            &spectrum_of(GateId::SqrtCnot).lambda_raw,
            &[2.0 + SQRT_2, 2.0 - SQRT_2, 0.0, 0.0],
            1e-12,
        );
    }

    #[test]
    fn missing_dims_is_an_error() {
        let m = ComplexMatrix::identity(4);
        assert!(matches!(schmidt_spectrum(&m, None), Err(Error::MissingDims(_))));
    }

    #[test]
    fn decomposition_reconstructs_and_is_orthonormal() {
        for id in [GateId::Cnot, GateId::Swap(2), GateId::SqrtSwap, GateId::Fourier(3)] {
            let u = build(&id).unwrap();
            let dec = schmidt_decomposition(&u, None).unwrap();
            assert!(dec.reconstruct().unwrap().approx_eq(&u, 1e-8));
            for (ops, label) in [(&dec.left_ops, "left"), (&dec.right_ops, "right")] {
                for (j, a) in ops.iter().enumerate() {
                    for (k, b) in ops.iter().enumerate() {
                        let expected = if j == k { 1.0 } else { 0.0 };
                        assert!((a.hs_inner(b) - Complex64::new(expected, 0.0)).norm() < 1e-8, "{label}");
                    }
                }
            }
        }
    }

    #[test]
    fn cnot_has_two_terms_on_diagonal_projectors() {
        let dec = schmidt_decomposition(&build(&GateId::Cnot).unwrap(), None).unwrap();
        assert_eq!(dec.spectrum.rank(), 2);
        for a in &dec.left_ops[..2] {
            // Each left operator lies in span{|0⟩⟨0|, |1⟩⟨1|}.
            assert!(a[(0, 1)].norm() < 1e-12 && a[(1, 0)].norm() < 1e-12);
        }
    }

    #[test]
    fn swap_has_four_unit_terms() {
        let s = spectrum_of(GateId::Swap(2));
        assert_vec_close(&s.lambda_raw, &[1.0; 4], 1e-12);
    }

    #[test]
    fn product_gate_has_a_single_term() {
        let (a, b) = (hadamard(), pauli(1));
        let u = tensor_product(&a, &b).unwrap();
        let dec = schmidt_decomposition(&u, None).unwrap();
        assert!((dec.spectrum.lambda_raw[0].sqrt() - 2.0).abs() < 1e-12);
        // A_1 is proportional to U_a.
        let overlap = dec.left_ops[0].hs_inner(&a).norm();
        assert!((overlap - a.frobenius_norm()).abs() < 1e-12);
    }

    #[test]
    fn renyi_edge_cases() {
        let pure = SchmidtSpectrum::from_coefficients(vec![4.0, 0.0, 0.0, 0.0], (2, 2)).unwrap();
        for q in [0.0, 0.5, 1.0, 2.0, 8.0] {
            assert_eq!(renyi_entropy(&pure, q).unwrap(), 0.0);
        }
        let swap = spectrum_of(GateId::Swap(2));
        assert!((renyi_entropy(&swap, 1.0).unwrap() - 2.0 * LN_2).abs() < 1e-12);
        assert!(renyi_entropy(&swap, -0.5).is_err());
        let gxor = spectrum_of(GateId::GxorPlus(3));
        assert!((entanglement_entropy(&gxor) - 3f64.ln()).abs() < 1e-10);
    }

    #[test]
    fn purity_values() {
        let local = spectrum_of(GateId::Local(hadamard(), pauli(3)));
        assert!((purity(&local).r - 1.0).abs() < 1e-12);
        // Λ = (2±√2, 0, 0)/4 → r = ((2+√2)² + (2−√2)²)/16 = 12/16
        let root = spectrum_of(GateId::SqrtCnot);
        assert!((purity(&root).r - 0.75).abs() < 1e-12);
        let f = purity(&spectrum_of(GateId::Fourier(2)));
        assert!((f.r - 0.25).abs() < 1e-12 && (f.ipr - 4.0).abs() < 1e-10);
    }

    #[test]
    fn linear_entropy_matches_second_renyi() {
        for id in [GateId::SqrtSwap, GateId::BGate, GateId::SqrtCnot] {
            let s = spectrum_of(id);
            let s2 = renyi_entropy(&s, 2.0).unwrap();
            assert!((purity(&s).linear_entropy - (1.0 - (-s2).exp())).abs() < 1e-12);
        }
    }

    #[test]
    fn factor_product_recovers_factors() {
        let (a, b) = (pauli(1), hadamard());
        let u = tensor_product(&a, &b).unwrap();
        let (ua, ub) = factor_product(&u, None).unwrap().expect("product gate");
        assert!(tensor_product(&ua, &ub).unwrap().approx_eq(&u, 1e-8));
        assert!(ua.is_unitary(1e-10) && ub.is_unitary(1e-10));
        let pivot = ua.data().iter().max_by(|x, y| x.norm().total_cmp(&y.norm())).unwrap();
        assert!(pivot.im.abs() < 1e-12 && pivot.re > 0.0);
        assert!(factor_product(&build(&GateId::Cnot).unwrap(), None).unwrap().is_none());
    }
}
