//! JSON report of the nonlocal invariants of one gate.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::canonical::{classify_pe, eta_from_alpha, interaction_content, is_special_pe};
use crate::channels::{is_unistochastic, unistochastic_channel};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::schmidt::{purity, renyi_entropy, schmidt_spectrum};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Entropies {
    #[serde(rename = "S")]
    pub s1: f64,
    #[serde(rename = "S2")]
    pub s2: f64,
    #[serde(rename = "S4")]
    pub s4: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelSummary {
    /// Eigenvalues of the Choi matrix of the channel on the first factor,
    /// descending.
    pub choi_eigenvalues: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unistochastic: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GateAnalysis {
    pub dims: [usize; 2],
    pub unitarity_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<[f64; 4]>,
    #[serde(rename = "Lambda")]
    pub lambda: Vec<f64>,
    pub schmidt_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<[f64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pe_class: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spe: Option<bool>,
    pub entropy: Entropies,
    pub purity: f64,
    pub channel: ChannelSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

/// Analyzes a unitary on `dA ⊗ dB`. The two-qubit fields are filled only
/// for 2⊗2 gates.
pub fn analyze(u: &ComplexMatrix, dims: (usize, usize)) -> Result<GateAnalysis> {
    let residual = u.unitarity_residual();
    if residual > 1e-8 {
        return Err(Error::NotUnitary(residual));
    }
    let u = u.clone().with_dims(dims.0, dims.1)?;
    let spec = schmidt_spectrum(&u, Some(dims))?;
    let channel = unistochastic_channel(&u, dims)?;
    let mut report = GateAnalysis {
        dims: [dims.0, dims.1],
        unitarity_residual: residual,
        alpha: None,
        delta: None,
        lambda: spec.lambda_raw.clone(),
        schmidt_rank: spec.rank(),
        eta: None,
        pe_class: None,
        spe: None,
        entropy: Entropies {
            s1: renyi_entropy(&spec, 1.0)?,
            s2: renyi_entropy(&spec, 2.0)?,
            s4: renyi_entropy(&spec, 4.0)?,
        },
        purity: purity(&spec).r,
        channel: ChannelSummary {
            choi_eigenvalues: channel.choi_spectrum()?,
            eta: None,
            unistochastic: None,
        },
        warning: None,
        generated_at: None,
    };
    if dims == (2, 2) {
        let (ic, ham) = interaction_content(&u)?;
        let eta = eta_from_alpha(ic.alpha);
        report.alpha = Some(ic.alpha);
        report.delta = Some(ham.delta);
        report.eta = Some(eta);
        report.pe_class = Some(classify_pe(ic.alpha).kind.code());
        report.spe = Some(is_special_pe(ic.alpha));
        if let Some(b) = &channel.bloch {
            report.channel.eta = Some(b.eta.eta);
            report.channel.unistochastic = Some(is_unistochastic(&b.eta)?.unistochastic);
        }
    } else {
        report.warning = Some(format!(
            "canonical form needs a 2⊗2 gate; {}⊗{} report is limited to Schmidt and entropy fields",
            dims.0, dims.1
        ));
    }
    Ok(report)
}

impl GateAnalysis {
    /// Stamps the report with the current Unix time.
    pub fn stamp(&mut self) {
        self.generated_at = SystemTime::now().duration_since(UNIX_EPOCH).ok().map(|d| d.as_secs());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gates::{build, GateId};
    use crate::linalg::fourier_matrix;

    #[test]
    fn cnot_report() {
        let r = analyze(&build(&GateId::Cnot).unwrap(), (2, 2)).unwrap();
        assert_eq!(r.pe_class, Some("B"));
        let eta = r.eta.unwrap();
        assert!((eta[0] - 1.0).abs() < 1e-12 && eta[1].abs() < 1e-12 && eta[2].abs() < 1e-12);
        assert_eq!(r.schmidt_rank, 2);
        assert_eq!(r.channel.unistochastic, Some(true));
        let json = serde_json::to_value(&r).unwrap();
        for key in ["alpha", "delta", "Lambda", "schmidt_rank", "eta", "pe_class", "spe", "entropy", "purity"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert!(json["entropy"].get("S4").is_some());
        assert!(json.get("generated_at").is_none());
    }

    #[test]
    fn larger_gates_skip_canonical_fields() {
        let r = analyze(&fourier_matrix(9).unwrap(), (3, 3)).unwrap();
        assert!(r.alpha.is_none() && r.pe_class.is_none());
        assert!(r.warning.is_some());
        assert!((r.entropy.s1 - 2.0 * 3f64.ln()).abs() < 1e-10);
        assert_eq!(r.channel.choi_eigenvalues.len(), 9);
    }

    #[test]
    fn rejects_non_unitary() {
        let m = ComplexMatrix::identity(4).scale_real(1.1);
        assert!(matches!(analyze(&m, (2, 2)), Err(Error::NotUnitary(_))));
    }
}
