//! Channels induced by coupling to a maximally mixed environment,
//! `ρ ↦ Tr_env[U (ρ ⊗ I/M) U†]`, and their one-qubit invariants.

use num_complex::Complex64;
use serde::Serialize;

use crate::canonical::{alpha_from_eta, canonical_gate};
use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::gates::eta_orbit_key;
use crate::linalg::{hermitian_eigen, partial_trace, pauli, reshuffle, tensor_product, ComplexMatrix, MatrixFile, Subsystem};
use crate::schmidt::{renyi_of_probabilities, schmidt_decomposition};

/// Diagonal of the Bloch-ball contraction of a one-qubit bistochastic map.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DampingVector {
    pub eta: [f64; 3],
}

impl DampingVector {
    pub fn new(eta: [f64; 3]) -> Result<Self> {
        if eta.iter().any(|x| !x.is_finite() || x.abs() > 1.0 + 1e-12) {
            return Err(Error::Domain(format!("damping vector {eta:?} leaves [-1, 1]³")));
        }
        Ok(Self { eta })
    }

    /// Pauli weights `λ_μ` of the channel with this damping vector.
    pub fn pauli_weights(&self) -> [f64; 4] {
        let [a, b, c] = self.eta;
        [
            (1.0 + a + b + c) / 4.0,
            (1.0 + a - b - c) / 4.0,
            (1.0 - a + b - c) / 4.0,
            (1.0 - a - b + c) / 4.0,
        ]
    }
}

/// Mixture weights of `ρ ↦ Σ λ_μ σ_μ ρ σ_μ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PauliWeights {
    pub weights: [f64; 4],
}

impl PauliWeights {
    pub fn new(weights: [f64; 4]) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|w| !w.is_finite() || *w < -1e-12) || (sum - 1.0).abs() > 1e-10 {
            return Err(Error::Domain(format!("Pauli weights {weights:?} are not a probability vector")));
        }
        Ok(Self { weights })
    }

    pub fn eta(&self) -> [f64; 3] {
        let [l0, l1, l2, l3] = self.weights;
        [l0 + l1 - l2 - l3, l0 - l1 + l2 - l3, l0 - l1 - l2 + l3]
    }
}

/// Affine Bloch representation of a one-qubit bistochastic channel.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlochMap {
    /// `t_ij = Tr[σ_i Φ(σ_j)] / 2`.
    pub t: [[f64; 3]; 3],
    /// Signed singular values of `t`, `|η₁| ≥ |η₂| ≥ |η₃|`, with the sign of
    /// `det t` carried by `η₃`.
    pub eta: DampingVector,
}

/// CP map on `N×N` matrices with its Choi matrix and a Kraus family.
#[derive(Debug, Clone)]
pub struct QubitChannel {
    pub n: usize,
    /// `D[(m,n),(μ,ν)]` with `Φ(ρ)_{mμ} = Σ D[(m,n),(μ,ν)] ρ_{nν}`.
    pub choi: ComplexMatrix,
    pub kraus: Vec<ComplexMatrix>,
    /// Present for bistochastic qubit channels.
    pub bloch: Option<BlochMap>,
}

impl QubitChannel {
    pub fn from_kraus(kraus: Vec<ComplexMatrix>) -> Result<Self> {
        let n = kraus.first().map(|k| k.rows()).ok_or_else(|| Error::Dimension("empty Kraus family".into()))?;
        if kraus.iter().any(|k| k.rows() != n || k.cols() != n) {
            return Err(Error::Dimension("Kraus operators must all be N×N".into()));
        }
        let mut choi = ComplexMatrix::zeros(n * n, n * n);
        for a in &kraus {
            let v = a.vectorize();
            for i in 0..n * n {
                for j in 0..n * n {
                    choi[(i, j)] += v[i] * v[j].conj();
                }
            }
        }
        let mut ch = Self {
            n,
            choi,
            kraus,
            bloch: None,
        };
        if n == 2 && ch.is_bistochastic(1e-8) {
            ch.bloch = Some(bloch_map(&ch)?);
        }
        Ok(ch)
    }

    /// `Σ A_i ρ A_i†`.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_operand(rho)?;
        let mut out = ComplexMatrix::zeros(self.n, self.n);
        for a in &self.kraus {
            out = &out + &(&(a * rho) * &a.adjoint());
        }
        Ok(out)
    }

    /// Same map evaluated through the Choi matrix.
    pub fn apply_choi(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.check_operand(rho)?;
        let n = self.n;
        Ok(ComplexMatrix::from_fn(n, n, |m, mu| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..n {
                for nu in 0..n {
                    acc += self.choi[(m * n + k, mu * n + nu)] * rho[(k, nu)];
                }
            }
            acc
        }))
    }

    fn check_operand(&self, rho: &ComplexMatrix) -> Result<()> {
        if rho.rows() != self.n || rho.cols() != self.n {
            return Err(Error::Dimension(format!(
                "channel acts on {}x{} matrices, got {}x{}",
                self.n,
                self.n,
                rho.rows(),
                rho.cols()
            )));
        }
        Ok(())
    }

    /// `Σ A_i†A_i − I`, Frobenius norm.
    pub fn completeness_residual(&self) -> f64 {
        let mut s = ComplexMatrix::zeros(self.n, self.n);
        for a in &self.kraus {
            s = &s + &(&a.adjoint() * a);
        }
        s.distance(&ComplexMatrix::identity(self.n))
    }

    pub fn is_bistochastic(&self, tol: f64) -> bool {
        let mixed = ComplexMatrix::identity(self.n).scale_real(1.0 / self.n as f64);
        self.apply(&mixed).map(|out| out.distance(&mixed) <= tol).unwrap_or(false)
    }

    /// Eigenvalues of the Choi matrix, descending.
    pub fn choi_spectrum(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eigen(&self.choi)?.eigenvalues)
    }

    /// Shannon entropy of the normalized Choi spectrum.
    pub fn choi_entropy(&self) -> Result<f64> {
        let ev = self.choi_spectrum()?;
        let total: f64 = ev.iter().sum();
        let p: Vec<f64> = ev.iter().map(|x| (x / total).max(0.0)).collect();
        Ok(renyi_of_probabilities(&p, 1.0))
    }

    pub fn export(&self) -> ChannelExport {
        ChannelExport {
            n: self.n,
            choi: MatrixFile::from(&self.choi),
            kraus: self.kraus.iter().map(MatrixFile::from).collect(),
            eta: self.bloch.as_ref().map(|b| b.eta.eta),
        }
    }
}

/// JSON form `{N, choi, kraus, eta}`.
#[derive(Debug, Clone, Serialize)]
pub struct ChannelExport {
    #[serde(rename = "N")]
    pub n: usize,
    pub choi: MatrixFile,
    pub kraus: Vec<MatrixFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<[f64; 3]>,
}

fn check_env_unitary(u: &ComplexMatrix, dims: (usize, usize)) -> Result<()> {
    let (n, m) = dims;
    if n == 0 || m == 0 || u.rows() != n * m || u.cols() != n * m {
        return Err(Error::Dimension(format!(
            "a {}x{} unitary does not act on {n}⊗{m}",
            u.rows(),
            u.cols()
        )));
    }
    let r = u.unitarity_residual();
    if r > Tolerances::DEFAULT.unitary {
        return Err(Error::NotUnitary(r));
    }
    Ok(())
}

/// Checks Hermiticity, unit trace and positivity to the state tolerance.
pub fn validate_state(rho: &ComplexMatrix) -> Result<()> {
    let tol = Tolerances::DEFAULT.state;
    if !rho.is_square() {
        return Err(Error::InvalidState("not square".into()));
    }
    if rho.hermiticity_residual() > tol {
        return Err(Error::InvalidState("not Hermitian".into()));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
        return Err(Error::InvalidState(format!("trace {tr}")));
    }
    let min = hermitian_eigen(rho)?.eigenvalues.last().copied().unwrap_or(0.0);
    if min < -tol {
        return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
    }
    Ok(())
}

/// `ρ′ = Tr_env[U (ρ ⊗ I_M/M) U†]` for a density matrix `ρ` on the first factor.
pub fn env_channel_apply(u: &ComplexMatrix, rho: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    if rho.rows() != dims.0 || rho.cols() != dims.0 {
        return Err(Error::Dimension(format!("state must be {0}x{0}", dims.0)));
    }
    validate_state(rho)?;
    env_channel_apply_linear(u, rho, dims)
}

/// The same map extended linearly to arbitrary `N×N` operators.
pub fn env_channel_apply_linear(u: &ComplexMatrix, x: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    check_env_unitary(u, dims)?;
    let (n, m) = dims;
    if x.rows() != n || x.cols() != n {
        return Err(Error::Dimension(format!("operand must be {n}x{n}")));
    }
    let env = ComplexMatrix::identity(m).scale_real(1.0 / m as f64);
    let joint = tensor_product(x, &env)?;
    let evolved = &(u * &joint) * &u.adjoint();
    partial_trace(&evolved, dims, Subsystem::B)
}

/// `D = U^R (U^R)† / M`; for `M = N` its eigenvalues are `Λ_k / N`.
pub fn choi_from_unitary(u: &ComplexMatrix, dims: (usize, usize)) -> Result<ComplexMatrix> {
    check_env_unitary(u, dims)?;
    let r = reshuffle(u, dims)?;
    Ok((&r * &r.adjoint()).scale_real(1.0 / dims.1 as f64))
}

/// `A_k = √(Λ_k/M) · A′_k` from the operator Schmidt decomposition.
pub fn kraus_from_unitary(u: &ComplexMatrix, dims: (usize, usize)) -> Result<Vec<ComplexMatrix>> {
    check_env_unitary(u, dims)?;
    let dec = schmidt_decomposition(u, Some(dims))?;
    let total = dec.spectrum.total();
    Ok(dec
        .spectrum
        .lambda_raw
        .iter()
        .zip(dec.left_ops)
        .filter(|(l, _)| **l > 1e-14 * total)
        .map(|(l, a)| a.scale_real((l / dims.1 as f64).sqrt()))
        .collect())
}

/// Channel induced by `U` with a maximally mixed environment of size `M`.
pub fn unistochastic_channel(u: &ComplexMatrix, dims: (usize, usize)) -> Result<QubitChannel> {
    let mut ch = QubitChannel::from_kraus(kraus_from_unitary(u, dims)?)?;
    ch.choi = choi_from_unitary(u, dims)?;
    Ok(ch)
}

pub fn pauli_channel(w: &PauliWeights) -> QubitChannel {
    let kraus = w
        .weights
        .iter()
        .enumerate()
        .filter(|(_, l)| **l > 0.0)
        .map(|(k, l)| pauli(k).scale_real(l.sqrt()))
        .collect();
    QubitChannel::from_kraus(kraus).expect("Pauli Kraus family")
}

/// Bloch matrix `t` and signed singular values of a bistochastic qubit channel.
pub fn bloch_map(ch: &QubitChannel) -> Result<BlochMap> {
    if ch.n != 2 {
        return Err(Error::Dimension("Bloch representation needs a qubit channel".into()));
    }
    if !ch.is_bistochastic(1e-8) {
        return Err(Error::Domain("channel is not bistochastic".into()));
    }
    let mut t = [[0.0; 3]; 3];
    let mut tm = ComplexMatrix::zeros(3, 3);
    for j in 0..3 {
        let out = ch.apply(&pauli(j + 1))?;
        for i in 0..3 {
            t[i][j] = (&pauli(i + 1) * &out).trace().re / 2.0;
            tm[(i, j)] = Complex64::new(t[i][j], 0.0);
        }
    }
    // Singular values from tᵀt; the orientation of t fixes the overall sign.
    let gram = &tm.transpose() * &tm;
    let mut s: Vec<f64> = hermitian_eigen(&gram)?.eigenvalues.iter().map(|x| x.max(0.0).sqrt()).collect();
    s.sort_by(|a, b| b.total_cmp(a));
    if det3(&t) < 0.0 {
        s[2] = -s[2];
    }
    Ok(BlochMap {
        t,
        eta: DampingVector::new([s[0], s[1], s[2]].map(|x| x.clamp(-1.0, 1.0)))?,
    })
}

fn det3(t: &[[f64; 3]; 3]) -> f64 {
    t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) - t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0])
        + t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0])
}

/// Complete positivity of the Pauli channel with damping `η`:
/// `(1 ± η₃)² ≥ (η₁ ± η₂)²`.
pub fn is_cp(eta: &DampingVector) -> bool {
    let tol = Tolerances::DEFAULT.cp;
    eta.pauli_weights().iter().all(|w| *w >= -tol / 4.0)
}

/// `η₁η₂ ≤ η₃`, `η₂η₃ ≤ η₁`, `η₃η₁ ≤ η₂`, evaluated on the representative of
/// `η` whose moduli decrease and whose last entry carries the sign of the
/// product. The inequalities are not invariant under pairwise sign flips,
/// while the set of unistochastic damping vectors is.
pub fn satisfies_unistochastic_bound(eta: [f64; 3], tol: f64) -> bool {
    let [a, b, c] = eta_orbit_key(eta);
    a * b <= c + tol && b * c <= a + tol && c * a <= b + tol
}

#[derive(Debug, Clone)]
pub struct UnistochasticVerdict {
    pub unistochastic: bool,
    /// A two-qubit gate whose channel has this damping vector.
    pub witness: Option<ComplexMatrix>,
    pub alpha: Option<[f64; 3]>,
}

pub fn is_unistochastic(eta: &DampingVector) -> Result<UnistochasticVerdict> {
    if !is_cp(eta) {
        return Err(Error::Domain(format!("{:?} is not completely positive", eta.eta)));
    }
    if !satisfies_unistochastic_bound(eta.eta, Tolerances::DEFAULT.unistochastic) {
        return Ok(UnistochasticVerdict {
            unistochastic: false,
            witness: None,
            alpha: None,
        });
    }
    let alpha = alpha_from_eta(eta)?.alpha;
    let witness = canonical_gate(alpha);
    let ch = unistochastic_channel(&witness, (2, 2))?;
    let got = ch.bloch.as_ref().map(|b| b.eta.eta).ok_or_else(|| Error::SelfCheck("witness channel not bistochastic".into()))?;
    let (x, y) = (eta_orbit_key(got), eta_orbit_key(eta.eta));
    let err = x.iter().zip(&y).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max);
    if err > 1e-8 {
        return Err(Error::SelfCheck(format!("witness damping {got:?} differs from {:?}", eta.eta)));
    }
    Ok(UnistochasticVerdict {
        unistochastic: true,
        witness: Some(witness),
        alpha: Some(alpha),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{eta_from_alpha, locally_equivalent};
    use crate::ensembles::{sample_unitary, EnsembleKind, EnsembleSpec};
    use crate::gates::{build, GateId};
    use crate::schmidt::{entanglement_entropy, schmidt_spectrum};

    fn haar(dim: usize, seed: u64, index: u64) -> ComplexMatrix {
        sample_unitary(&EnsembleSpec::new(EnsembleKind::Cue, dim, index + 1, seed), index)
    }

    fn random_state(seed: u64, index: u64) -> ComplexMatrix {
        let g = haar(2, seed, index);
        let w = [0.8, 0.2];
        let d = ComplexMatrix::diagonal(&w.map(|x| Complex64::new(x, 0.0)));
        &(&g * &d) * &g.adjoint()
    }

    fn mixed() -> ComplexMatrix {
        ComplexMatrix::identity(2).scale_real(0.5)
    }

    fn keys_close(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
        eta_orbit_key(a).iter().zip(&eta_orbit_key(b)).all(|(x, y)| (x - y).abs() < tol)
    }

    #[test]
    fn depolarizing_gates() {
        for id in [GateId::Swap(2), GateId::Fourier(2)] {
            let u = build(&id).unwrap();
            for i in 0..5 {
                let out = env_channel_apply(&u, &random_state(5, i), (2, 2)).unwrap();
                assert!(out.approx_eq(&mixed(), 1e-12));
            }
        }
    }

    #[test]
    fn local_gate_is_a_unitary_channel() {
        let (a, b) = (haar(2, 6, 0), haar(2, 6, 1));
        let u = tensor_product(&a, &b).unwrap();
        let rho = random_state(6, 2);
        let out = env_channel_apply(&u, &rho, (2, 2)).unwrap();
        assert!(out.approx_eq(&(&(&a * &rho) * &a.adjoint()), 1e-12));
        let kraus = kraus_from_unitary(&u, (2, 2)).unwrap();
        assert_eq!(kraus.len(), 1);
        let ev = hermitian_eigen(&choi_from_unitary(&u, (2, 2)).unwrap()).unwrap().eigenvalues;
        assert!((ev[0] - 2.0).abs() < 1e-10 && ev[1].abs() < 1e-10);
    }

    #[test]
    fn cnot_channel() {
        let u = build(&GateId::Cnot).unwrap();
        let ch = unistochastic_channel(&u, (2, 2)).unwrap();
        let ev = ch.choi_spectrum().unwrap();
        for (x, y) in ev.iter().zip([1.0, 1.0, 0.0, 0.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert_eq!(ch.kraus.len(), 2);
        assert!(ch.completeness_residual() < 1e-12);
    }

    #[test]
    fn three_representations_agree() {
        for i in 0..10 {
            let u = haar(4, 7, i);
            let ch = unistochastic_channel(&u, (2, 2)).unwrap();
            assert!(ch.completeness_residual() < 1e-10);
            for j in 0..3 {
                let rho = random_state(8, 10 * i + j);
                let a = env_channel_apply(&u, &rho, (2, 2)).unwrap();
                assert!(ch.apply(&rho).unwrap().approx_eq(&a, 1e-10));
                assert!(ch.apply_choi(&rho).unwrap().approx_eq(&a, 1e-10));
            }
            let s = entanglement_entropy(&schmidt_spectrum(&u, Some((2, 2))).unwrap());
            assert!((ch.choi_entropy().unwrap() - s).abs() < 1e-10);
            assert!((ch.choi.trace().re - 2.0).abs() < 1e-10);
        }
    }

    #[test]
    fn k_unistochastic_choi_matches_partial_trace() {
        let u = haar(8, 9, 0);
        let dims = (2, 4);
        let choi = choi_from_unitary(&u, dims).unwrap();
        let mut direct = ComplexMatrix::zeros(4, 4);
        for n in 0..2 {
            for nu in 0..2 {
                let mut e = ComplexMatrix::zeros(2, 2);
                e[(n, nu)] = Complex64::new(1.0, 0.0);
                let out = env_channel_apply_linear(&u, &e, dims).unwrap();
                for m in 0..2 {
                    for mu in 0..2 {
                        direct[(m * 2 + n, mu * 2 + nu)] = out[(m, mu)];
                    }
                }
            }
        }
        assert!(choi.approx_eq(&direct, 1e-10));
        assert!((choi.trace().re - 2.0).abs() < 1e-10);
        let ch = unistochastic_channel(&u, dims).unwrap();
        let rho = random_state(9, 1);
        assert!(ch.apply(&rho).unwrap().approx_eq(&env_channel_apply(&u, &rho, dims).unwrap(), 1e-10));
    }

    #[test]
    fn invalid_states_are_rejected() {
        let u = build(&GateId::Cnot).unwrap();
        let bad = ComplexMatrix::identity(2);
        assert!(matches!(env_channel_apply(&u, &bad, (2, 2)), Err(Error::InvalidState(_))));
        let neg = ComplexMatrix::from_real(2, 2, &[1.5, 0.0, 0.0, -0.5]).unwrap();
        assert!(matches!(env_channel_apply(&u, &neg, (2, 2)), Err(Error::InvalidState(_))));
        assert!(matches!(env_channel_apply(&u, &mixed(), (2, 3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn pauli_channels() {
        let id = pauli_channel(&PauliWeights::new([1.0, 0.0, 0.0, 0.0]).unwrap());
        let b = id.bloch.clone().unwrap();
        assert_eq!(b.eta.eta, [1.0, 1.0, 1.0]);
        assert_eq!(b.t, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

        let third = 1.0 / 3.0;
        let sym = PauliWeights::new([0.0, third, third, third]).unwrap();
        for x in sym.eta() {
            assert!((x + third).abs() < 1e-15);
        }
        let ev = pauli_channel(&sym).choi_spectrum().unwrap();
        for (x, y) in ev.iter().zip([2.0 * third, 2.0 * third, 2.0 * third, 0.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert_eq!(PauliWeights::new([0.25; 4]).unwrap().eta(), [0.0; 3]);

        let rot = pauli_channel(&PauliWeights::new([0.0, 0.0, 0.0, 1.0]).unwrap());
        assert!(keys_close(rot.bloch.unwrap().eta.eta, [-1.0, -1.0, 1.0], 1e-12));
        assert!(PauliWeights::new([0.5, 0.6, 0.0, -0.1]).is_err());
    }

    #[test]
    fn cp_examples() {
        let dv = |e| DampingVector::new(e).unwrap();
        assert!(is_cp(&dv([1.0, 1.0, 1.0])));
        assert!(!is_cp(&dv([1.0, 1.0, -1.0])));
        assert!(is_cp(&dv([-1.0 / 3.0; 3])));
        assert!(DampingVector::new([1.5, 0.0, 0.0]).is_err());
    }

    #[test]
    fn unistochastic_examples() {
        let dv = |e| DampingVector::new(e).unwrap();
        let v = is_unistochastic(&dv([0.0; 3])).unwrap();
        assert!(v.unistochastic);
        assert!(locally_equivalent(&v.witness.unwrap(), &build(&GateId::Dcnot).unwrap()).unwrap());
        assert!(!is_unistochastic(&dv([-1.0 / 3.0; 3])).unwrap().unistochastic);
        let v = is_unistochastic(&dv([1.0; 3])).unwrap();
        assert!(v.witness.unwrap().approx_eq(&ComplexMatrix::identity(4), 1e-12));
        assert!(is_unistochastic(&dv([1.0, 1.0, -1.0])).is_err());
    }

    #[test]
    fn canonical_gate_damping() {
        for alpha in [[0.1, 0.2, 0.3], [0.7, 0.1, -0.4], [1.2, 0.9, 0.05]] {
            let ch = unistochastic_channel(&canonical_gate(alpha), (2, 2)).unwrap();
            assert!(keys_close(ch.bloch.unwrap().eta.eta, eta_from_alpha(alpha), 1e-10));
        }
    }

    #[test]
    fn haar_channels_are_bistochastic_and_unistochastic() {
        for i in 0..200 {
            let ch = unistochastic_channel(&haar(4, 10, i), (2, 2)).unwrap();
            assert!(ch.is_bistochastic(1e-10));
            assert!(satisfies_unistochastic_bound(ch.bloch.unwrap().eta.eta, 1e-10));
        }
    }

    #[test]
    fn export_shape() {
        let ch = unistochastic_channel(&build(&GateId::Cnot).unwrap(), (2, 2)).unwrap();
        let json = serde_json::to_value(ch.export()).unwrap();
        assert_eq!(json["N"], 2);
        assert_eq!(json["kraus"].as_array().unwrap().len(), 2);
        assert_eq!(json["eta"].as_array().unwrap().len(), 3);
    }
}
