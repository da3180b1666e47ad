//! Pearson χ² tests.

use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiSquareTest {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Bins remaining after pooling.
    pub bins: usize,
}

fn p_value(statistic: f64, dof: usize) -> Result<f64> {
    if dof == 0 {
        return Err(Error::Domain("χ² test with zero degrees of freedom".into()));
    }
    let dist = ChiSquared::new(dof as f64).map_err(|e| Error::Domain(e.to_string()))?;
    Ok(dist.sf(statistic))
}

/// Goodness of fit of observed counts to expected counts.
///
/// Consecutive bins are pooled until each pooled bin expects at least 5
/// events. The expected counts are rescaled to the observed total, which
/// costs one degree of freedom; `fitted` removes further ones.
pub fn chi_square_gof(observed: &[u64], expected: &[f64], fitted: usize) -> Result<ChiSquareTest> {
    if observed.len() != expected.len() || observed.is_empty() {
        return Err(Error::Dimension("observed and expected bin counts differ".into()));
    }
    let n_obs: f64 = observed.iter().map(|&c| c as f64).sum();
    let n_exp: f64 = expected.iter().sum();
    if n_exp <= 0.0 || expected.iter().any(|e| *e < 0.0 || !e.is_finite()) {
        return Err(Error::Domain("expected counts must be nonnegative with a positive sum".into()));
    }
    let scale = n_obs / n_exp;

    let mut pooled: Vec<(f64, f64)> = Vec::new();
    let (mut o, mut e) = (0.0, 0.0);
    for (&c, &x) in observed.iter().zip(expected) {
        o += c as f64;
        e += x * scale;
        if e >= 5.0 {
            pooled.push((o, e));
            o = 0.0;
            e = 0.0;
        }
    }
    if e > 0.0 || o > 0.0 {
        match pooled.last_mut() {
            Some(last) => {
                last.0 += o;
                last.1 += e;
            }
            None => pooled.push((o, e)),
        }
    }
    let statistic = pooled.iter().map(|(o, e)| (o - e) * (o - e) / e).sum();
    let dof = pooled.len().saturating_sub(1 + fitted);
    Ok(ChiSquareTest {
        statistic,
        dof,
        p_value: p_value(statistic, dof)?,
        bins: pooled.len(),
    })
}

/// Homogeneity of two histograms over the same bins.
pub fn chi_square_two_sample(a: &[u64], b: &[u64]) -> Result<ChiSquareTest> {
    if a.len() != b.len() {
        return Err(Error::Dimension("histograms have different bin counts".into()));
    }
    let (na, nb) = (a.iter().sum::<u64>() as f64, b.iter().sum::<u64>() as f64);
    if na == 0.0 || nb == 0.0 {
        return Err(Error::Domain("empty histogram".into()));
    }
    let (ka, kb) = ((nb / na).sqrt(), (na / nb).sqrt());
    let mut statistic = 0.0;
    let mut bins = 0usize;
    for (&x, &y) in a.iter().zip(b) {
        let (x, y) = (x as f64, y as f64);
        if x + y == 0.0 {
            continue;
        }
        bins += 1;
        statistic += (ka * x - kb * y).powi(2) / (x + y);
    }
    let dof = bins.saturating_sub(1);
    Ok(ChiSquareTest {
        statistic,
        dof,
        p_value: p_value(statistic, dof)?,
        bins,
    })
}
