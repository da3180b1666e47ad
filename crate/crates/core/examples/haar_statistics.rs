//! Monte Carlo estimates over Haar-random gates: mean purity and the share
//! of perfect entanglers.

use std::f64::consts::PI;

use unistoch::ensembles::{mc_pe_fraction, mc_purity};

fn main() -> unistoch::Result<()> {
    let seed = 7;
    for n in [2, 3] {
        let p = mc_purity(n, 20_000, seed, 0)?;
        println!(
            "N = {n}: <r> = {:.4} ± {:.4}  (2/(N²+1) = {:.4})",
            p.mean.mean,
            p.mean.ci95(),
            2.0 / ((n * n + 1) as f64)
        );
    }
    let pe = mc_pe_fraction(20_000, seed, 0)?;
    println!(
        "perfect entanglers: {:.4} ± {:.4}  (8/(3π) = {:.4}), {} on the boundary",
        pe.estimate.mean,
        pe.estimate.ci95(),
        8.0 / (3.0 * PI),
        pe.boundary
    );
    Ok(())
}
