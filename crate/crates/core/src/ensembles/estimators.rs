//! Monte Carlo and quadrature estimators over the Haar ensembles.
//!
//! Every estimator maps sample indices to values in parallel, collects them
//! in index order and reduces sequentially, so results do not depend on the
//! worker count.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::density::{pdf_alpha_chamber, pdf_coe4_marginal};
use super::gof::{chi_square_gof, ChiSquareTest};
use super::quadrature::GaussLegendre;
use super::sampler::{coe_eigenphase_triple, sample_unitary, EnsembleKind, EnsembleSpec};
use crate::canonical::{classify_pe, eta_from_alpha, in_chamber, interaction_content, PEKind};
use crate::error::{Error, Result};
use crate::linalg::{reshuffle, singular_values, ComplexMatrix};
use crate::schmidt::{purity, renyi_entropy, schmidt_spectrum};

/// Runs `f` over `0..count` on a pool of `threads` workers (0 picks the
/// rayon default) and returns the results in index order.
pub fn parallel_map<T, F>(count: u64, threads: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| (0..count).into_par_iter().map(&f).collect()))
}

/// Pairwise (cascade) summation in a fixed order.
pub fn pairwise_sum(x: &[f64]) -> f64 {
    if x.len() <= 8 {
        return x.iter().sum();
    }
    let (a, b) = x.split_at(x.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstimateWithCI {
    pub mean: f64,
    /// `sample_std / √samples`
    pub std_error: f64,
    pub samples: u64,
}

impl EstimateWithCI {
    pub fn from_values(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("no samples".into()));
        }
        let n = values.len() as f64;
        let mean = pairwise_sum(values) / n;
        let dev: Vec<f64> = values.iter().map(|x| (x - mean) * (x - mean)).collect();
        let var = if values.len() > 1 { pairwise_sum(&dev) / (n - 1.0) } else { 0.0 };
        Ok(Self {
            mean,
            std_error: (var / n).sqrt(),
            samples: values.len() as u64,
        })
    }

    /// Half-width of the 95% normal interval.
    pub fn ci95(&self) -> f64 {
        1.96 * self.std_error
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub bins: usize,
    pub counts: Vec<u64>,
    pub density: Vec<f64>,
}

impl Histogram {
    /// Values outside `[lo, hi]` are not recorded; `hi` itself falls in the
    /// last bin.
    pub fn from_values(values: &[f64], lo: f64, hi: f64, bins: usize) -> Result<Self> {
        if bins == 0 || !(hi > lo) {
            return Err(Error::Domain(format!("bad histogram range [{lo}, {hi}] with {bins} bins")));
        }
        let mut counts = vec![0u64; bins];
        let width = (hi - lo) / bins as f64;
        for &v in values {
            if v < lo || v > hi || !v.is_finite() {
                continue;
            }
            let k = (((v - lo) / width) as usize).min(bins - 1);
            counts[k] += 1;
        }
        let total: u64 = counts.iter().sum();
        let density = counts
            .iter()
            .map(|&c| if total == 0 { 0.0 } else { c as f64 / (total as f64 * width) })
            .collect();
        Ok(Self {
            lo,
            hi,
            bins,
            counts,
            density,
        })
    }

    pub fn width(&self) -> f64 {
        (self.hi - self.lo) / self.bins as f64
    }

    pub fn edges(&self, k: usize) -> (f64, f64) {
        let w = self.width();
        (self.lo + k as f64 * w, self.lo + (k + 1) as f64 * w)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["bin_lo", "bin_hi", "count", "density"]).map_err(csv_err)?;
        for k in 0..self.bins {
            let (a, b) = self.edges(k);
            w.write_record([a.to_string(), b.to_string(), self.counts[k].to_string(), self.density[k].to_string()])
                .map_err(csv_err)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        other => Error::Parse(format!("{other:?}")),
    }
}

/// One row of the sample stream. Two-qubit fields are present only for
/// 4×4 samples.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    pub index: u64,
    pub r: f64,
    pub s1: f64,
    pub s2: f64,
    pub alpha: Option<[f64; 3]>,
    pub eta: Option<[f64; 3]>,
    pub pe: Option<PEKind>,
}

pub fn sample_record(u: &ComplexMatrix, index: u64) -> Result<SampleRecord> {
    let s = schmidt_spectrum(u, u.dims())?;
    let (alpha, eta, pe) = if u.rows() == 4 && u.cols() == 4 {
        let alpha = interaction_content(u)?.0.alpha;
        (Some(alpha), Some(eta_from_alpha(alpha)), Some(classify_pe(alpha).kind))
    } else {
        (None, None, None)
    };
    Ok(SampleRecord {
        index,
        r: purity(&s).r,
        s1: renyi_entropy(&s, 1.0)?,
        s2: renyi_entropy(&s, 2.0)?,
        alpha,
        eta,
        pe,
    })
}

pub fn sample_records(spec: &EnsembleSpec, threads: usize) -> Result<Vec<SampleRecord>> {
    spec.validate()?;
    parallel_map(spec.count, threads, |i| sample_record(&sample_unitary(spec, i), i))?
        .into_iter()
        .collect()
}

pub const SAMPLE_HEADER: [&str; 11] = ["index", "r", "S1", "S2", "alpha1", "alpha2", "alpha3", "eta1", "eta2", "eta3", "pe"];

pub fn write_samples_csv<W: Write>(records: &[SampleRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SAMPLE_HEADER).map_err(csv_err)?;
    let triple = |t: Option<[f64; 3]>| match t {
        Some(t) => t.map(|x| x.to_string()),
        None => [String::new(), String::new(), String::new()],
    };
    for rec in records {
        let [a1, a2, a3] = triple(rec.alpha);
        let [e1, e2, e3] = triple(rec.eta);
        let pe = rec.pe.map(|p| p.code().to_string()).unwrap_or_default();
        w.write_record([
            rec.index.to_string(),
            rec.r.to_string(),
            rec.s1.to_string(),
            rec.s2.to_string(),
            a1,
            a2,
            a3,
            e1,
            e2,
            e3,
            pe,
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Two-qubit purity from the damping vector, `r = (1 + |η|²)/4`.
pub fn purity_from_eta(eta: [f64; 3]) -> f64 {
    (1.0 + eta.iter().map(|x| x * x).sum::<f64>()) / 4.0
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PurityEstimate {
    pub mean: EstimateWithCI,
    pub hist: Histogram,
}

/// Purity of the Schmidt vector over SCUE(4) for `n = 2` and CUE(n²)
/// otherwise, with a 50-bin histogram on `[1/n², 1]`.
pub fn mc_purity(n: usize, samples: u64, seed: u64, threads: usize) -> Result<PurityEstimate> {
    if n < 2 {
        return Err(Error::Domain(format!("N = {n} < 2")));
    }
    let kind = if n == 2 { EnsembleKind::Scue } else { EnsembleKind::Cue };
    let spec = EnsembleSpec::new(kind, n * n, samples, seed);
    spec.validate()?;
    let r: Vec<f64> = parallel_map(samples, threads, |i| -> Result<f64> {
        let u = sample_unitary(&spec, i);
        if n == 2 {
            let alpha = interaction_content(&u)?.0.alpha;
            Ok(purity_from_eta(eta_from_alpha(alpha)))
        } else {
            Ok(purity(&schmidt_spectrum(&u, u.dims())?).r)
        }
    })?
    .into_iter()
    .collect::<Result<_>>()?;
    Ok(PurityEstimate {
        mean: EstimateWithCI::from_values(&r)?,
        hist: Histogram::from_values(&r, 1.0 / (n * n) as f64, 1.0, 50)?,
    })
}

/// Density of `r = (1 + |η|²)/4` for Haar two-qubit gates, obtained by
/// binning a fine midpoint grid over the chamber weighted with the α
/// density. Returns bin centers and densities on `[1/4, 1]`.
pub fn purity_curve(bins: usize, grid: usize) -> Result<Vec<(f64, f64)>> {
    if bins == 0 || grid == 0 {
        return Err(Error::Domain("purity curve needs positive bins and grid".into()));
    }
    let (lo, hi) = (0.25, 1.0);
    let width = (hi - lo) / bins as f64;
    let mut mass = vec![0.0; bins];
    let (h1, h) = (FRAC_PI_2 / grid as f64, FRAC_PI_4 / grid as f64);
    for i in 0..grid {
        let a1 = (i as f64 + 0.5) * h1;
        for j in 0..grid {
            let a2 = (j as f64 + 0.5) * h;
            if a2 > a1.min(FRAC_PI_2 - a1) {
                continue;
            }
            for k in 0..grid {
                let a3 = (k as f64 + 0.5) * h;
                if a3 > a2 {
                    break;
                }
                let a = [a1, a2, a3];
                let r = purity_from_eta(eta_from_alpha(a));
                let b = (((r - lo) / width) as usize).min(bins - 1);
                mass[b] += pdf_alpha_chamber(a) * h1 * h * h;
            }
        }
    }
    let total: f64 = mass.iter().sum();
    Ok((0..bins)
        .map(|b| (lo + (b as f64 + 0.5) * width, mass[b] / (total * width)))
        .collect())
}

pub fn write_curve_csv<W: Write>(curve: &[(f64, f64)], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["r", "density"]).map_err(csv_err)?;
    for (r, d) in curve {
        w.write_record([r.to_string(), d.to_string()]).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeFraction {
    /// Fraction of perfect entanglers (boundary or interior).
    pub estimate: EstimateWithCI,
    pub boundary: u64,
    pub interior: u64,
}

/// Fraction of SCUE(4) samples that are perfect entanglers.
pub fn mc_pe_fraction(samples: u64, seed: u64, threads: usize) -> Result<PeFraction> {
    let spec = EnsembleSpec::new(EnsembleKind::Scue, 4, samples, seed);
    spec.validate()?;
    let kinds: Vec<PEKind> = parallel_map(samples, threads, |i| {
        interaction_content(&sample_unitary(&spec, i)).map(|(ic, _)| classify_pe(ic.alpha).kind)
    })?
    .into_iter()
    .collect::<Result<_>>()?;
    let hits: Vec<f64> = kinds.iter().map(|k| if k.is_perfect_entangler() { 1.0 } else { 0.0 }).collect();
    Ok(PeFraction {
        estimate: EstimateWithCI::from_values(&hits)?,
        boundary: kinds.iter().filter(|k| **k == PEKind::BoundaryPE).count() as u64,
        interior: kinds.iter().filter(|k| **k == PEKind::InteriorPE).count() as u64,
    })
}

const ENTROPY_ORDERS: [f64; 5] = [0.0, 1.0, 2.0, 4.0, 8.0];

/// Mean Rényi entropies of CUE(n²) samples for several orders at once.
pub fn mc_mean_entropies(n: usize, qs: &[f64], samples: u64, seed: u64, threads: usize) -> Result<Vec<EstimateWithCI>> {
    if !(2..=8).contains(&n) {
        return Err(Error::Domain(format!("N = {n} outside 2..=8")));
    }
    if let Some(q) = qs.iter().find(|q| !ENTROPY_ORDERS.contains(q)) {
        return Err(Error::Domain(format!("Rényi order {q} not in {{0, 1, 2, 4, 8}}")));
    }
    let spec = EnsembleSpec::new(EnsembleKind::Cue, n * n, samples, seed);
    spec.validate()?;
    let rows: Vec<Vec<f64>> = parallel_map(samples, threads, |i| -> Result<Vec<f64>> {
        let u = sample_unitary(&spec, i);
        let s = schmidt_spectrum(&u, u.dims())?;
        qs.iter().map(|&q| renyi_entropy(&s, q)).collect()
    })?
    .into_iter()
    .collect::<Result<_>>()?;
    (0..qs.len())
        .map(|j| EstimateWithCI::from_values(&rows.iter().map(|r| r[j]).collect::<Vec<_>>()))
        .collect()
}

pub fn mc_mean_entropy(n: usize, q: f64, samples: u64, seed: u64, threads: usize) -> Result<EstimateWithCI> {
    Ok(mc_mean_entropies(n, &[q], samples, seed, threads)?[0])
}

/// Mean entropy of a random pure state of dimension `N²`,
/// `Σ_{k=2}^{N²} 1/k`.
pub fn random_vector_mean_entropy(n: usize) -> f64 {
    (2..=n * n).map(|k| 1.0 / k as f64).sum()
}

/// Offset `c_q` in `⟨S_q⟩ ≈ 2 ln N − c_q` for large `N`.
pub fn entropy_offset(q: f64) -> Option<f64> {
    match q {
        q if q == 1.0 => Some(0.5),
        q if q == 2.0 => Some(2f64.ln()),
        q if q == 4.0 => Some(14f64.ln() / 3.0),
        _ => None,
    }
}

/// Histogram of the singular values of the reshuffled CUE(n²) samples,
/// i.e. `√Λ_k`, on `[0, n]`.
pub fn singular_value_histogram(n: usize, samples: u64, seed: u64, threads: usize, bins: usize) -> Result<Histogram> {
    let spec = EnsembleSpec::new(EnsembleKind::Cue, n * n, samples, seed);
    spec.validate()?;
    let per: Vec<Vec<f64>> = parallel_map(samples, threads, |i| {
        singular_values(&reshuffle(&sample_unitary(&spec, i), (n, n))?)
    })?
    .into_iter()
    .collect::<Result<_>>()?;
    let flat: Vec<f64> = per.into_iter().flatten().collect();
    Histogram::from_values(&flat, 0.0, n as f64, bins)
}

const GOF_BINS: usize = 20;

fn bin_of(x: f64, lo: f64, hi: f64) -> Option<usize> {
    let t = (x - lo) / (hi - lo);
    if !(0.0..=1.0).contains(&t) {
        return None;
    }
    Some(((t * GOF_BINS as f64) as usize).min(GOF_BINS - 1))
}

fn flat_index(b: [usize; 3]) -> usize {
    (b[0] * GOF_BINS + b[1]) * GOF_BINS + b[2]
}

/// Expected bin masses of the α density on the 20³ grid over
/// `[0, π/2] × [0, π/4] × [0, π/4]`, by midpoint sums with the chamber
/// indicator.
pub fn alpha_bin_masses(sub: usize) -> Vec<f64> {
    let (w1, w) = (FRAC_PI_2 / GOF_BINS as f64, FRAC_PI_4 / GOF_BINS as f64);
    let (h1, h) = (w1 / sub as f64, w / sub as f64);
    let mut out = vec![0.0; GOF_BINS.pow(3)];
    for b0 in 0..GOF_BINS {
        for b1 in 0..GOF_BINS {
            for b2 in 0..GOF_BINS {
                let mut m = 0.0;
                for i in 0..sub {
                    let a1 = b0 as f64 * w1 + (i as f64 + 0.5) * h1;
                    for j in 0..sub {
                        let a2 = b1 as f64 * w + (j as f64 + 0.5) * h;
                        for k in 0..sub {
                            let a3 = b2 as f64 * w + (k as f64 + 0.5) * h;
                            let a = [a1, a2, a3];
                            if in_chamber(a, 0.0) {
                                m += pdf_alpha_chamber(a);
                            }
                        }
                    }
                }
                out[flat_index([b0, b1, b2])] = m * h1 * h * h;
            }
        }
    }
    out
}

/// χ² test of sampled SCUE(4) interaction contents against the α density
/// on 20³ bins.
pub fn alpha_gof(samples: u64, seed: u64, threads: usize) -> Result<ChiSquareTest> {
    let spec = EnsembleSpec::new(EnsembleKind::Scue, 4, samples, seed);
    spec.validate()?;
    let alphas: Vec<[f64; 3]> = parallel_map(samples, threads, |i| {
        interaction_content(&sample_unitary(&spec, i)).map(|(ic, _)| ic.alpha)
    })?
    .into_iter()
    .collect::<Result<_>>()?;
    let mut counts = vec![0u64; GOF_BINS.pow(3)];
    for a in &alphas {
        let b = [bin_of(a[0], 0.0, FRAC_PI_2), bin_of(a[1], 0.0, FRAC_PI_4), bin_of(a[2], 0.0, FRAC_PI_4)];
        if let [Some(x), Some(y), Some(z)] = b {
            counts[flat_index([x, y, z])] += 1;
        }
    }
    chi_square_gof(&counts, &alpha_bin_masses(6), 0)
}

/// Expected bin masses of the COE(4) eigenphase-triple density on 20³
/// bins over `[−π, π]³`.
pub fn coe_bin_masses(points: usize) -> Vec<f64> {
    let rule = GaussLegendre::new(points);
    let w = 2.0 * PI / GOF_BINS as f64;
    let axes: Vec<Vec<(f64, f64)>> = (0..GOF_BINS)
        .map(|b| {
            let a = -PI + b as f64 * w;
            rule.mapped(a, a + w).collect()
        })
        .collect();
    let mut out = vec![0.0; GOF_BINS.pow(3)];
    for b0 in 0..GOF_BINS {
        for b1 in 0..GOF_BINS {
            for b2 in 0..GOF_BINS {
                let mut m = 0.0;
                for &(x, wx) in &axes[b0] {
                    for &(y, wy) in &axes[b1] {
                        for &(z, wz) in &axes[b2] {
                            m += wx * wy * wz * pdf_coe4_marginal([x, y, z]);
                        }
                    }
                }
                out[flat_index([b0, b1, b2])] = m;
            }
        }
    }
    out
}

/// χ² test of sampled COE(4) eigenphase triples against their marginal
/// density on 20³ bins.
pub fn coe_gof(samples: u64, seed: u64, threads: usize) -> Result<ChiSquareTest> {
    if samples == 0 {
        return Err(Error::Domain("sample count must be positive".into()));
    }
    let triples: Vec<[f64; 3]> = parallel_map(samples, threads, |i| coe_eigenphase_triple(seed, i))?
        .into_iter()
        .collect::<Result<_>>()?;
    let mut counts = vec![0u64; GOF_BINS.pow(3)];
    for t in &triples {
        if let [Some(x), Some(y), Some(z)] = t.map(|v| bin_of(v, -PI, PI)) {
            counts[flat_index([x, y, z])] += 1;
        }
    }
    chi_square_gof(&counts, &coe_bin_masses(4), 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_sum_matches_naive() {
        let x: Vec<f64> = (0..1000).map(|i| (i as f64).sqrt()).collect();
        let naive: f64 = x.iter().sum();
        assert!((pairwise_sum(&x) - naive).abs() < 1e-9);
        assert_eq!(pairwise_sum(&[]), 0.0);
    }

    #[test]
    fn estimate_of_known_values() {
        let e = EstimateWithCI::from_values(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(e.mean, 2.5);
        // Sample variance 5/3.
        assert!((e.std_error - (5.0f64 / 3.0 / 4.0).sqrt()).abs() < 1e-15);
        assert!(EstimateWithCI::from_values(&[]).is_err());
    }

    #[test]
    fn histogram_counts_and_density() {
        let v = [0.0, 0.1, 0.5, 0.99, 1.0, 1.5, -0.1];
        let h = Histogram::from_values(&v, 0.0, 1.0, 4).unwrap();
        assert_eq!(h.counts, vec![2, 0, 1, 2]);
        let integral: f64 = h.density.iter().map(|d| d * h.width()).sum();
        assert!((integral - 1.0).abs() < 1e-12);
        let mut buf = Vec::new();
        h.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("bin_lo,bin_hi,count,density\n0,0.25,2,"));
    }

    #[test]
    fn results_do_not_depend_on_threads() {
        let spec = EnsembleSpec::new(EnsembleKind::Scue, 4, 64, 9);
        let one = sample_records(&spec, 1).unwrap();
        let four = sample_records(&spec, 4).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn fast_purity_path_agrees() {
        let spec = EnsembleSpec::new(EnsembleKind::Cue, 4, 50, 2);
        for i in 0..50 {
            let rec = sample_record(&sample_unitary(&spec, i), i).unwrap();
            assert!((rec.r - purity_from_eta(rec.eta.unwrap())).abs() < 1e-10);
        }
    }

    #[test]
    fn csv_layout() {
        let spec = EnsembleSpec::new(EnsembleKind::Cue, 9, 2, 1);
        let recs = sample_records(&spec, 1).unwrap();
        let mut buf = Vec::new();
        write_samples_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "index,r,S1,S2,alpha1,alpha2,alpha3,eta1,eta2,eta3,pe");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].ends_with(",,,,,,,"));
    }

    #[test]
    fn random_vector_entropy() {
        assert!((random_vector_mean_entropy(2) - 13.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn entropy_order_zero_is_full_rank() {
        let e = mc_mean_entropy(3, 0.0, 20, 5, 2).unwrap();
        assert!((e.mean - 9f64.ln()).abs() < 1e-12);
        assert!(mc_mean_entropy(3, 3.0, 20, 5, 2).is_err());
        assert!(mc_mean_entropy(9, 1.0, 20, 5, 2).is_err());
    }

    #[test]
    fn purity_curve_is_normalized() {
        let c = purity_curve(30, 60).unwrap();
        let w = 0.75 / 30.0;
        let total: f64 = c.iter().map(|(_, d)| d * w).sum();
        assert!((total - 1.0).abs() < 1e-12);
        // Mean of r under the curve is close to 2/5.
        let mean: f64 = c.iter().map(|(r, d)| r * d * w).sum();
        assert!((mean - 0.4).abs() < 0.01, "{mean}");
    }

    #[test]
    fn bin_masses_sum_to_one() {
        let a: f64 = alpha_bin_masses(4).iter().sum();
        assert!((a - 1.0).abs() < 0.01, "{a}");
        let c: f64 = coe_bin_masses(3).iter().sum();
        assert!((c - 1.0).abs() < 0.01, "{c}");
    }
}
