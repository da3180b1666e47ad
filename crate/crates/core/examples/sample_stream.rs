//! Writes the per-sample CSV and a purity histogram for a small SCUE(4) run.

use std::io;

use unistoch::ensembles::{sample_records, write_samples_csv, EnsembleKind, EnsembleSpec, Histogram};

fn main() -> unistoch::Result<()> {
    let spec = EnsembleSpec::new(EnsembleKind::Scue, 4, 5, 1);
    let recs = sample_records(&spec, 0)?;
    write_samples_csv(&recs, io::stdout())?;
    let r: Vec<f64> = recs.iter().map(|x| x.r).collect();
    Histogram::from_values(&r, 0.25, 1.0, 3)?.write_csv(io::stdout())?;
    Ok(())
}
