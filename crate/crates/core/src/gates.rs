//! Named bipartite gates.
//!
//! Basis ordering is `|00⟩, |01⟩, |10⟩, |11⟩` with the first factor acting as
//! the control.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::canonical::{
    alpha_to_delta, canonical_gate, classify_pe, delta_to_alpha, eta_from_alpha, interaction_content,
    weyl_canonicalize,
};
use crate::error::{Error, Result};
use crate::linalg::{fourier_matrix, tensor_product, ComplexMatrix};
use crate::schmidt::schmidt_spectrum;

#[derive(Debug, Clone, PartialEq)]
pub enum GateId {
    Local(ComplexMatrix, ComplexMatrix),
    Cnot,
    /// Control and target exchanged: `|a,b⟩ ↦ |a⊕b, b⟩`.
    CnotPrime,
    Dcnot,
    Swap(usize),
    SqrtCnot,
    SqrtSwap,
    BGate,
    /// Fourier matrix of size `N²` on `N ⊗ N`.
    Fourier(usize),
    /// `|i,j⟩ ↦ |i, i⊖j⟩`, a symmetric involution.
    GxorPlus(usize),
    /// `|i,j⟩ ↦ |i, i⊕j⟩`, the controlled rotation with `U^N = I`.
    GxorMinus(usize),
    /// Column `j` is mapped to row `perm[j]`; the length must be a square `N²`.
    Permutation(Vec<usize>),
    /// `exp(i Σ α_k σ_k⊗σ_k)`.
    Canonical([f64; 3]),
}

impl GateId {
    pub fn name(&self) -> String {
        match self {
            GateId::Local(..) => "local".into(),
            GateId::Cnot => "cnot".into(),
            GateId::CnotPrime => "cnot-prime".into(),
            GateId::Dcnot => "dcnot".into(),
            GateId::Swap(n) => format!("swap:{n}"),
            GateId::SqrtCnot => "sqrt-cnot".into(),
            GateId::SqrtSwap => "sqrt-swap".into(),
            GateId::BGate => "b-gate".into(),
            GateId::Fourier(n) => format!("fourier:{n}"),
            GateId::GxorPlus(n) => format!("gxor+:{n}"),
            GateId::GxorMinus(n) => format!("gxor-:{n}"),
            GateId::Permutation(p) => format!("permutation:{}", p.len()),
            GateId::Canonical([a, b, c]) => format!("canonical:{a},{b},{c}"),
        }
    }
}

impl fmt::Display for GateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for GateId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s.as_str(), None),
        };
        let size = |default: usize| -> Result<usize> {
            let n = match arg {
                None => default,
                Some(a) => a.parse().map_err(|_| Error::InvalidGate(format!("bad size in '{s}'")))?,
            };
            if n < 2 {
                return Err(Error::InvalidGate(format!("'{s}': N must be at least 2")));
            }
            Ok(n)
        };
        let no_arg = |id: GateId| -> Result<GateId> {
            match arg {
                None => Ok(id),
                Some(_) => Err(Error::InvalidGate(format!("'{s}' takes no parameter"))),
            }
        };
        match head {
            "cnot" => no_arg(GateId::Cnot),
            "cnot-prime" => no_arg(GateId::CnotPrime),
            "dcnot" => no_arg(GateId::Dcnot),
            "sqrt-cnot" => no_arg(GateId::SqrtCnot),
            "sqrt-swap" => no_arg(GateId::SqrtSwap),
            "b-gate" => no_arg(GateId::BGate),
            "swap" => Ok(GateId::Swap(size(2)?)),
            "fourier" => Ok(GateId::Fourier(size(2)?)),
            "gxor+" => Ok(GateId::GxorPlus(size(2)?)),
            "gxor-" => Ok(GateId::GxorMinus(size(2)?)),
            "canonical" => {
                let parts: Vec<f64> = arg
                    .unwrap_or("")
                    .split(',')
                    .map(|x| x.trim().parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::InvalidGate(format!("bad angles in '{s}'")))?;
                match parts[..] {
                    [a, b, c] => Ok(GateId::Canonical([a, b, c])),
                    _ => Err(Error::InvalidGate(format!("'{s}' needs three angles"))),
                }
            }
            _ => Err(Error::InvalidGate(format!("unknown gate '{s}'"))),
        }
    }
}

fn permutation_gate(n: usize, map: impl Fn(usize, usize) -> (usize, usize)) -> ComplexMatrix {
    let d = n * n;
    let mut u = ComplexMatrix::zeros(d, d);
    for i in 0..n {
        for j in 0..n {
            let (a, b) = map(i, j);
            u[(a * n + b, i * n + j)] = Complex64::new(1.0, 0.0);
        }
    }
    u.with_dims(n, n).expect("square permutation")
}

/// `√NOT` chosen so that its square is the NOT gate.
pub fn sqrt_not() -> ComplexMatrix {
    let p = Complex64::new(0.5, 0.5);
    let m = Complex64::new(0.5, -0.5);
    ComplexMatrix::new(2, 2, vec![m, p, p, m]).expect("2x2")
}

fn embed_block(block: &ComplexMatrix, at: usize) -> ComplexMatrix {
    let mut u = ComplexMatrix::identity(4);
    for i in 0..2 {
        for j in 0..2 {
            u[(at + i, at + j)] = block[(i, j)];
        }
    }
    u.with_dims(2, 2).expect("4x4")
}

pub fn build(id: &GateId) -> Result<ComplexMatrix> {
    let u = match id {
        GateId::Local(a, b) => {
            if !a.is_square() || !b.is_square() {
                return Err(Error::InvalidGate("local factors must be square".into()));
            }
            tensor_product(a, b)?
        }
        GateId::Cnot => permutation_gate(2, |a, b| (a, a ^ b)),
        GateId::CnotPrime => permutation_gate(2, |a, b| (a ^ b, b)),
        GateId::Dcnot => ComplexMatrix::from_real(
            4,
            4,
            &[
                1.0, 0.0, 0.0, 0.0, //
                0.0, 0.0, 0.0, 1.0, //
                0.0, 1.0, 0.0, 0.0, //
                0.0, 0.0, 1.0, 0.0,
            ],
        )?
        .with_dims(2, 2)?,
        GateId::Swap(n) => permutation_gate(check_n(*n)?, |a, b| (b, a)),
        GateId::SqrtCnot => embed_block(&sqrt_not(), 2),
        GateId::SqrtSwap => embed_block(&sqrt_not(), 1),
        GateId::BGate => canonical_gate([PI / 4.0, PI / 8.0, 0.0]),
        GateId::Fourier(n) => {
            let n = check_n(*n)?;
            fourier_matrix(n * n)?.with_dims(n, n)?
        }
        GateId::GxorPlus(n) => {
            let n = check_n(*n)?;
            permutation_gate(n, move |i, j| (i, (i + n - j) % n))
        }
        GateId::GxorMinus(n) => {
            let n = check_n(*n)?;
            permutation_gate(n, move |i, j| (i, (i + j) % n))
        }
        GateId::Permutation(p) => {
            let d = p.len();
            let n = (d as f64).sqrt().round() as usize;
            if n < 2 || n * n != d {
                return Err(Error::InvalidGate(format!("permutation length {d} is not a square N² with N ≥ 2")));
            }
            let mut seen = vec![false; d];
            for &k in p {
                if k >= d || std::mem::replace(&mut seen[k], true) {
                    return Err(Error::InvalidGate(format!("{p:?} is not a permutation of 0..{d}")));
                }
            }
            permutation_gate(n, |i, j| {
                let k = p[i * n + j];
                (k / n, k % n)
            })
        }
        GateId::Canonical(alpha) => canonical_gate(*alpha),
    };
    Ok(u)
}

fn check_n(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidGate(format!("N = {n}, need N ≥ 2")));
    }
    Ok(n)
}

/// Canonical gate whose interaction content is `α(U)/k`; its `k`-th power is
/// locally equivalent to `U`.
pub fn kth_root(u: &ComplexMatrix, k: u32) -> Result<ComplexMatrix> {
    if k == 0 {
        return Err(Error::Domain("root order must be positive".into()));
    }
    let (ic, _) = interaction_content(u)?;
    Ok(canonical_gate(ic.alpha.map(|a| a / k as f64)))
}

/// One printed row of the reference gate table.
#[derive(Debug, Clone, Serialize)]
pub struct ReferenceRow {
    pub alpha: [f64; 3],
    pub delta: [f64; 4],
    #[serde(rename = "Lambda")]
    pub lambda: [f64; 4],
    pub schmidt_rank: usize,
    pub eta: [f64; 3],
    pub pe_class: &'static str,
}

/// Invariants of one gate computed from its matrix, next to the printed row.
#[derive(Debug, Clone, Serialize)]
pub struct GateReport {
    pub gate: String,
    pub alpha: [f64; 3],
    pub delta: [f64; 4],
    #[serde(rename = "Lambda")]
    pub lambda: Vec<f64>,
    pub schmidt_rank: usize,
    pub eta: [f64; 3],
    pub pe_class: &'static str,
    pub reference: ReferenceRow,
    /// Names of the cells where computed and printed values disagree.
    pub flags: Vec<String>,
}

const TABLE_TOL: f64 = 1e-8;

fn reference_rows() -> Vec<(&'static str, GateId, ReferenceRow)> {
    let p = PI / 8.0;
    let s = 2f64.sqrt();
    let t = 1.0 / s;
    let row = |alpha: [f64; 3], delta: [f64; 4], lambda, rank, eta, pe| ReferenceRow {
        alpha: alpha.map(|x| x * p),
        delta: delta.map(|x| x * p),
        lambda,
        schmidt_rank: rank,
        eta,
        pe_class: pe,
    };
    let hadamard = ComplexMatrix::from_real(2, 2, &[t, t, t, -t]).expect("2x2");
    let phase = ComplexMatrix::diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]);
    vec![
        (
            "local gate",
            GateId::Local(hadamard, phase),
            row([0., 0., 0.], [0., 0., 0., 0.], [4., 0., 0., 0.], 1, [1., 1., 1.], "N"),
        ),
        (
            "sqrt-CNOT",
            GateId::SqrtCnot,
            row([1., 0., 0.], [1., 1., -1., -1.], [2. + s, 2. - s, 0., 0.], 2, [1., t, t], "N"),
        ),
        ("CNOT", GateId::Cnot, row([2., 0., 0.], [2., 2., -2., -2.], [2., 2., 0., 0.], 2, [1., 0., 0.], "B")),
        (
            "B-gate",
            GateId::BGate,
            row([2., 1., 0.], [3., 1., -1., -3.], [1.5, 1.5, 0.5, 0.5], 4, [0.5, 0., 0.], "Y"),
        ),
        ("DCNOT", GateId::Dcnot, row([2., 2., 0.], [4., 0., 0., -4.], [1.; 4], 4, [0.; 3], "B")),
        (
            "sqrt-SWAP",
            GateId::SqrtSwap,
            row([1., 1., 1.], [1., 1., 1., -3.], [2.5, 0.5, 0.5, 0.5], 4, [0.5; 3], "B"),
        ),
        ("SWAP", GateId::Swap(2), row([2., 2., 2.], [2., 2., 2., -6.], [1.; 4], 4, [0.; 3], "N")),
        ("Fourier", GateId::Fourier(2), row([2., 2., -1.], [5., -1., -1., -3.], [1.; 4], 4, [0.; 3], "N")),
    ]
}

/// Representative of `η` under permutations and pairwise sign flips:
/// moduli sorted descending, overall sign on the last entry.
pub(crate) fn eta_orbit_key(eta: [f64; 3]) -> [f64; 3] {
    let mut m = eta.map(f64::abs);
    m.sort_by(|a, b| b.total_cmp(a));
    if eta.iter().filter(|x| **x < 0.0).count() % 2 == 1 {
        m[2] = -m[2];
    }
    m
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= TABLE_TOL)
}

/// Computes every row of the gate table from the constructed matrices and
/// flags the cells that disagree with the printed values.
pub fn table1() -> Result<Vec<GateReport>> {
    reference_rows()
        .into_iter()
        .map(|(name, id, reference)| {
            let u = build(&id)?;
            let (ic, ham) = interaction_content(&u)?;
            let spec = schmidt_spectrum(&u, Some((2, 2)))?;
            let eta = eta_from_alpha(ic.alpha);
            let pe = classify_pe(ic.alpha);

            let mut flags = Vec::new();
            // α and δ are only defined up to the Weyl symmetries, so compare
            // canonical representatives.
            if !close(&weyl_canonicalize(reference.alpha).alpha, &ic.alpha) {
                flags.push("alpha".to_string());
            }
            let ref_from_delta = weyl_canonicalize(delta_to_alpha(reference.delta)?).alpha;
            if !close(&ref_from_delta, &ic.alpha) || !close(&alpha_to_delta(ic.alpha), &ham.delta) {
                flags.push("delta".to_string());
            }
            if !close(&reference.lambda, &spec.lambda_raw) {
                flags.push("Lambda".to_string());
            }
            if reference.schmidt_rank != spec.rank() {
                flags.push("schmidt_rank".to_string());
            }
            if !close(&eta_orbit_key(reference.eta), &eta_orbit_key(eta)) {
                flags.push("eta".to_string());
            }
            if reference.pe_class != pe.kind.code() {
                flags.push("pe_class".to_string());
            }
            Ok(GateReport {
                gate: name.to_string(),
                alpha: ic.alpha,
                delta: ham.delta,
                lambda: spec.lambda_raw.clone(),
                schmidt_rank: spec.rank(),
                eta,
                pe_class: pe.kind.code(),
                reference,
                flags,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::locally_equivalent;
    use crate::linalg::pauli;
    use crate::schmidt::{entanglement_entropy, schmidt_spectrum};

    fn gate(s: &str) -> ComplexMatrix {
        build(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cnot_is_the_printed_matrix() {
        let expected = ComplexMatrix::from_real(
            4,
            4,
            &[1., 0., 0., 0., 0., 1., 0., 0., 0., 0., 0., 1., 0., 0., 1., 0.],
        )
        .unwrap();
        assert_eq!(gate("cnot").data(), expected.data());
    }

    #[test]
    fn cnot_compositions() {
        let (c, cp) = (gate("cnot"), gate("cnot-prime"));
        assert_eq!((&c * &cp).data(), gate("dcnot").data());
        assert_eq!((&(&cp * &c) * &cp).data(), gate("swap").data());
    }

    #[test]
    fn every_gate_is_unitary() {
        for name in [
            "cnot", "cnot-prime", "dcnot", "swap:3", "sqrt-cnot", "sqrt-swap", "b-gate", "fourier:3", "gxor+:4",
            "gxor-:5",
        ] {
            assert!(gate(name).unitarity_residual() < 1e-12, "{name}");
        }
    }

    #[test]
    fn square_roots_square_exactly() {
        let r = gate("sqrt-cnot");
        assert_eq!((&r * &r).data(), gate("cnot").data());
        let r = gate("sqrt-swap");
        assert_eq!((&r * &r).data(), gate("swap").data());
        assert_eq!((&sqrt_not() * &sqrt_not()).data(), pauli(1).data());
    }

    #[test]
    fn gxor_orders() {
        assert_eq!(gate("gxor+:2").data(), gate("cnot").data());
        assert_eq!(gate("gxor-:2").data(), gate("cnot").data());
        for n in 2..=5 {
            let plus = gate(&format!("gxor+:{n}"));
            let minus = gate(&format!("gxor-:{n}"));
            let id = ComplexMatrix::identity(n * n);
            assert_eq!(plus.pow(2).data(), id.data());
            assert_eq!(plus.transpose().data(), plus.data());
            assert_eq!(minus.pow(n as u32).data(), id.data());
            if n > 2 {
                assert_ne!(minus.pow(2).data(), id.data());
            }
        }
    }

    #[test]
    fn structured_entropies() {
        for n in 2..=6usize {
            let ln = (n as f64).ln();
            for (name, expected) in [("swap", 2.0 * ln), ("fourier", 2.0 * ln), ("gxor+", ln), ("gxor-", ln)] {
                let s = entanglement_entropy(&schmidt_spectrum(&gate(&format!("{name}:{n}")), None).unwrap());
                assert!((s - expected).abs() < 1e-10, "{name}:{n} gave {s}");
            }
        }
    }

    #[test]
    fn canonical_swap_point_is_swap() {
        let c = build(&GateId::Canonical([PI / 4.0; 3])).unwrap();
        assert!(locally_equivalent(&c, &gate("swap")).unwrap());
    }

    #[test]
    fn kth_roots() {
        let root = kth_root(&gate("swap"), 2).unwrap();
        assert!(locally_equivalent(&root, &gate("sqrt-swap")).unwrap());
        let root = kth_root(&gate("cnot"), 2).unwrap();
        let s = schmidt_spectrum(&root, None).unwrap();
        let r2 = 2f64.sqrt();
        for (x, y) in s.lambda_raw.iter().zip([2.0 + r2, 2.0 - r2, 0.0, 0.0]) {
            assert!((x - y).abs() < 1e-10);
        }
        let u = gate("b-gate");
        assert!(locally_equivalent(&kth_root(&u, 1).unwrap(), &u).unwrap());
        assert!(kth_root(&u, 0).is_err());
    }

    #[test]
    fn parser() {
        assert_eq!("swap".parse::<GateId>().unwrap(), GateId::Swap(2));
        assert_eq!("Fourier:3".parse::<GateId>().unwrap(), GateId::Fourier(3));
        assert_eq!("gxor-:4".parse::<GateId>().unwrap(), GateId::GxorMinus(4));
        assert!("gxor+:1".parse::<GateId>().is_err());
        assert!("cnot:2".parse::<GateId>().is_err());
        assert!("toffoli".parse::<GateId>().is_err());
        for id in [GateId::Cnot, GateId::BGate, GateId::Fourier(4), GateId::GxorPlus(3)] {
            assert_eq!(id.name().parse::<GateId>().unwrap(), id);
        }
    }

    #[test]
    fn permutation_validation() {
        assert!(build(&GateId::Permutation(vec![0, 1, 3, 2])).is_ok());
        assert!(build(&GateId::Permutation(vec![0, 1, 1, 2])).is_err());
        assert!(build(&GateId::Permutation(vec![0, 1, 2])).is_err());
        let u = build(&GateId::Permutation(vec![0, 2, 1, 3])).unwrap();
        assert_eq!(u.data(), gate("swap").data());
    }

    #[test]
    fn table_rows_and_flags() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 8);
        for r in &rows {
            if r.gate == "B-gate" {
                assert_eq!(r.flags, vec!["Lambda", "eta"]);
            } else {
                assert!(r.flags.is_empty(), "{}: {:?}", r.gate, r.flags);
            }
        }
    }
}
