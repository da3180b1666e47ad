use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::rng::SampleRng;
use crate::error::{Error, Result};
use crate::linalg::{normal_eigenvalues, qr, ComplexMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    /// Haar measure on `U(d)`.
    Cue,
    /// Haar measure on `SU(d)`.
    Scue,
    /// `Y = U Uᵀ` with `U` from SCUE.
    Coe,
}

impl FromStr for EnsembleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cue" => Ok(Self::Cue),
            "scue" => Ok(Self::Scue),
            "coe" => Ok(Self::Coe),
            _ => Err(Error::Parse(format!("unknown ensemble '{s}' (expected cue, scue or coe)"))),
        }
    }
}

impl fmt::Display for EnsembleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Cue => "cue",
            Self::Scue => "scue",
            Self::Coe => "coe",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnsembleSpec {
    pub kind: EnsembleKind,
    pub dim: usize,
    pub count: u64,
    pub seed: u64,
}

impl EnsembleSpec {
    pub fn new(kind: EnsembleKind, dim: usize, count: u64, seed: u64) -> Self {
        Self { kind, dim, count, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::Domain(format!("ensemble dimension {} < 2", self.dim)));
        }
        if self.count == 0 {
            return Err(Error::Domain("sample count must be positive".into()));
        }
        Ok(())
    }
}

/// Haar-random unitary: QR of a complex Ginibre matrix with the phases of
/// `diag R` moved into `Q`.
pub fn haar_unitary(dim: usize, rng: &mut SampleRng) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(dim, dim, |_, _| rng.complex_normal());
    let (q, r) = qr(&g).expect("square Ginibre matrix");
    let phases: Vec<Complex64> = (0..dim)
        .map(|j| {
            let d = r[(j, j)];
            if d.norm() > 0.0 {
                d / d.norm()
            } else {
                Complex64::new(1.0, 0.0)
            }
        })
        .collect();
    &q * &ComplexMatrix::diagonal(&phases)
}

fn special(u: ComplexMatrix) -> ComplexMatrix {
    let chi = u.determinant().expect("square").arg();
    let d = u.rows() as f64;
    u.scale(Complex64::from_polar(1.0, -chi / d))
}

fn with_square_dims(u: ComplexMatrix) -> ComplexMatrix {
    let d = u.rows();
    let n = (d as f64).sqrt().round() as usize;
    if n * n == d {
        u.with_dims(n, n).expect("square split")
    } else {
        u
    }
}

fn draw(kind: EnsembleKind, dim: usize, rng: &mut SampleRng) -> ComplexMatrix {
    let u = haar_unitary(dim, rng);
    let u = match kind {
        EnsembleKind::Cue => u,
        EnsembleKind::Scue => special(u),
        EnsembleKind::Coe => {
            let s = special(u);
            &s * &s.transpose()
        }
    };
    with_square_dims(u)
}

/// Sample `index` of the ensemble; depends only on `(seed, index)`.
pub fn sample_unitary(spec: &EnsembleSpec, index: u64) -> ComplexMatrix {
    draw(spec.kind, spec.dim, &mut SampleRng::new(spec.seed, index))
}

/// Three of the four eigenphases of a COE(4) sample, in `[−π, π)`, chosen in
/// uniformly random order so that their joint law is the symmetric marginal.
pub fn coe_eigenphase_triple(seed: u64, index: u64) -> Result<[f64; 3]> {
    let mut rng = SampleRng::new(seed, index);
    let y = draw(EnsembleKind::Coe, 4, &mut rng);
    let mut phases: Vec<f64> = normal_eigenvalues(&y)?.iter().map(|z| z.arg()).collect();
    // Fisher–Yates on the continuation of the same stream.
    for i in (1..phases.len()).rev() {
        let j = rng.below(i + 1);
        phases.swap(i, j);
    }
    Ok([phases[0], phases[1], phases[2]])
}
