//! Command-line front end. Summaries go to stdout as `key=value` lines.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::channels::{is_cp, is_unistochastic, unistochastic_channel, validate_state, DampingVector};
use crate::ensembles::{
    entropy_offset, integrate_volumes, mc_mean_entropies, mc_pe_fraction, purity_curve, random_vector_mean_entropy,
    sample_records, singular_value_histogram, write_curve_csv, write_samples_csv, EnsembleKind, EnsembleSpec,
    EstimateWithCI, Histogram,
};
use crate::error::{Error, Result};
use crate::gates::{build, table1, GateId};
use crate::linalg::{matrix_to_json, read_matrix, write_matrix, ComplexMatrix};
use crate::report::analyze;

#[derive(Debug, Parser)]
#[command(name = "unistoch", version, about = "Nonlocal invariants of bipartite gates and unistochastic channels")]
pub struct Cli {
    /// Omit timestamps so that repeated runs give identical files.
    #[arg(long, global = true)]
    pub deterministic: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// JSON report of the invariants of one gate.
    Analyze(AnalyzeArgs),
    /// Recompute the reference table of two-qubit gates.
    Table1(Table1Args),
    /// Draw ensemble samples and write the per-sample CSV.
    Sample(SampleArgs),
    /// Relative volume of perfect entanglers, Monte Carlo and quadrature.
    PeVolume(PeVolumeArgs),
    /// Mean Rényi entropies of CUE(N²) gates.
    MeanEntropy(MeanEntropyArgs),
    /// Decide whether a damping vector comes from a two-qubit unitary.
    CheckUnistochastic(CheckArgs),
    /// Apply the channel induced by a gate to a density matrix.
    ChannelApply(ChannelApplyArgs),
    /// Histogram of singular values of reshuffled CUE(N²) gates.
    SvHist(SvHistArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Matrix file (JSON).
    #[arg(long, conflicts_with = "gate", required_unless_present = "gate")]
    pub input: Option<PathBuf>,
    /// Named gate instead of a file, e.g. `cnot` or `fourier:3`.
    #[arg(long)]
    pub gate: Option<String>,
    /// Bipartite split `A,B`; defaults to the file's dims or a square split.
    #[arg(long)]
    pub dims: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value = "scue")]
    pub ensemble: String,
    #[arg(long, default_value_t = 4)]
    pub dim: usize,
    #[arg(long, visible_alias = "samples")]
    pub count: u64,
    #[arg(long)]
    pub seed: u64,
    /// Worker threads (0 = all cores). Does not change the output.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long)]
    pub output: PathBuf,
    /// Histogram of the purity `r`.
    #[arg(long)]
    pub hist: Option<PathBuf>,
    #[arg(long, default_value_t = 50)]
    pub bins: usize,
    /// Quadrature curve of the two-qubit purity density.
    #[arg(long)]
    pub curve: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PeVolumeArgs {
    #[arg(long, visible_alias = "count")]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct MeanEntropyArgs {
    /// `2..5` or a list `2,3,4`.
    #[arg(long, default_value = "2..5")]
    pub n: String,
    /// Rényi orders from {0, 1, 2, 4, 8}.
    #[arg(long, default_value = "1,2")]
    pub q: String,
    #[arg(long, visible_alias = "count")]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// `η₁,η₂,η₃`
    #[arg(long, allow_hyphen_values = true)]
    pub eta: String,
    /// Where to write the witness gate.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ChannelApplyArgs {
    #[arg(long, conflicts_with = "gate", required_unless_present = "gate")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub gate: Option<String>,
    /// `N,M`: system and environment sizes.
    #[arg(long)]
    pub dims: Option<String>,
    /// Density matrix file; the maximally mixed state when absent.
    #[arg(long)]
    pub state: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also write `{N, choi, kraus, eta}`.
    #[arg(long)]
    pub export: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SvHistArgs {
    /// Local dimension `N`; samples are CUE(N²).
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, visible_alias = "count")]
    pub samples: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    #[arg(long, default_value_t = 40)]
    pub bins: usize,
    #[arg(long)]
    pub output: PathBuf,
}

/// Process exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Dimension(_)
        | Error::MissingDims(_)
        | Error::Domain(_)
        | Error::InvalidGate(_)
        | Error::InvalidState(_) => 2,
        Error::NotUnitary(_) => 3,
        Error::Io(_) => 4,
        _ => 1,
    }
}

pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<()> {
    match &cli.command {
        Command::Analyze(a) => cmd_analyze(a, cli.deterministic, out),
        Command::Table1(a) => cmd_table1(a, out),
        Command::Sample(a) => cmd_sample(a, out),
        Command::PeVolume(a) => cmd_pe_volume(a, out),
        Command::MeanEntropy(a) => cmd_mean_entropy(a, out),
        Command::CheckUnistochastic(a) => cmd_check_unistochastic(a, out),
        Command::ChannelApply(a) => cmd_channel_apply(a, out),
        Command::SvHist(a) => cmd_sv_hist(a, out),
    }
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad {what} '{x}' in '{s}'"))))
        .collect()
}

pub fn parse_dims(s: &str) -> Result<(usize, usize)> {
    match parse_list::<usize>(s, "dimension")?[..] {
        [a, b] if a > 0 && b > 0 => Ok((a, b)),
        _ => Err(Error::Parse(format!("--dims expects A,B with positive sizes, got '{s}'"))),
    }
}

/// `2..5` (inclusive) or a comma-separated list.
pub fn parse_n_range(s: &str) -> Result<Vec<usize>> {
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad range '{s}'")))?;
        let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| Error::Parse(format!("bad range '{s}'")))?;
        if a > b {
            return Err(Error::Parse(format!("empty range '{s}'")));
        }
        return Ok((a..=b).collect());
    }
    parse_list(s, "N")
}

fn square_split(rows: usize) -> Option<(usize, usize)> {
    let n = (rows as f64).sqrt().round() as usize;
    (n * n == rows).then_some((n, n))
}

fn load_gate(input: &Option<PathBuf>, gate: &Option<String>, dims: &Option<String>) -> Result<(ComplexMatrix, (usize, usize))> {
    let u = match (input, gate) {
        (Some(p), _) => read_matrix(p)?,
        (None, Some(g)) => build(&g.parse::<GateId>()?)?,
        (None, None) => return Err(Error::Parse("either --input or --gate is required".into())),
    };
    let dims = match dims {
        Some(d) => parse_dims(d)?,
        None => u
            .dims()
            .or_else(|| square_split(u.rows()))
            .ok_or(Error::MissingDims("pass --dims A,B for a gate of non-square size"))?,
    };
    if !u.is_square() || dims.0 * dims.1 != u.rows() {
        return Err(Error::Dimension(format!("{}x{} matrix does not split as {}⊗{}", u.rows(), u.cols(), dims.0, dims.1)));
    }
    Ok((u, dims))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path)?))
}

fn join(x: &[f64]) -> String {
    x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn write_estimate(out: &mut impl Write, key: &str, e: &EstimateWithCI) -> Result<()> {
    writeln!(out, "{key}={}", e.mean)?;
    writeln!(out, "{key}_std_error={}", e.std_error)?;
    writeln!(out, "{key}_ci95={}", e.ci95())?;
    Ok(())
}

fn cmd_analyze(a: &AnalyzeArgs, deterministic: bool, out: &mut impl Write) -> Result<()> {
    let (u, dims) = load_gate(&a.input, &a.gate, &a.dims)?;
    let mut report = analyze(&u, dims)?;
    if !deterministic {
        report.stamp();
    }
    let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Parse(e.to_string()))?;
    match &a.output {
        Some(p) => {
            let mut f = create(p)?;
            writeln!(f, "{json}")?;
            f.flush()?;
            writeln!(out, "report={}", p.display())?;
            writeln!(out, "schmidt_rank={}", report.schmidt_rank)?;
            writeln!(out, "entropy={}", report.entropy.s1)?;
            if let Some(pe) = report.pe_class {
                writeln!(out, "pe_class={pe}")?;
            }
        }
        None => writeln!(out, "{json}")?,
    }
    Ok(())
}

fn cmd_table1(a: &Table1Args, out: &mut impl Write) -> Result<()> {
    let rows = table1()?;
    for r in &rows {
        let flags = if r.flags.is_empty() { "none".to_string() } else { r.flags.join(",") };
        writeln!(
            out,
            "gate={} alpha={} Lambda={} schmidt_rank={} eta={} pe_class={} flags={}",
            r.gate.replace(' ', "-"),
            join(&r.alpha),
            join(&r.lambda),
            r.schmidt_rank,
            join(&r.eta),
            r.pe_class,
            flags
        )?;
    }
    if let Some(p) = &a.output {
        let mut f = create(p)?;
        serde_json::to_writer_pretty(&mut f, &rows).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(f)?;
        f.flush()?;
    }
    Ok(())
}

fn cmd_sample(a: &SampleArgs, out: &mut impl Write) -> Result<()> {
    let kind: EnsembleKind = a.ensemble.parse()?;
    let spec = EnsembleSpec::new(kind, a.dim, a.count, a.seed);
    let records = sample_records(&spec, a.threads)?;
    let mut f = create(&a.output)?;
    write_samples_csv(&records, &mut f)?;
    f.flush()?;
    let r: Vec<f64> = records.iter().map(|x| x.r).collect();
    let s1: Vec<f64> = records.iter().map(|x| x.s1).collect();
    writeln!(out, "samples={}", records.len())?;
    write_estimate(out, "mean_r", &EstimateWithCI::from_values(&r)?)?;
    write_estimate(out, "mean_S1", &EstimateWithCI::from_values(&s1)?)?;
    if let Some(p) = &a.hist {
        let h = Histogram::from_values(&r, 1.0 / a.dim as f64, 1.0, a.bins)?;
        let mut f = create(p)?;
        h.write_csv(&mut f)?;
        writeln!(out, "histogram={}", p.display())?;
    }
    if let Some(p) = &a.curve {
        if a.dim != 4 {
            return Err(Error::Domain("the purity curve is available for two-qubit gates (--dim 4)".into()));
        }
        let mut f = create(p)?;
        write_curve_csv(&purity_curve(a.bins, 200)?, &mut f)?;
        writeln!(out, "curve={}", p.display())?;
    }
    writeln!(out, "output={}", a.output.display())?;
    Ok(())
}

fn cmd_pe_volume(a: &PeVolumeArgs, out: &mut impl Write) -> Result<()> {
    let mc = mc_pe_fraction(a.samples, a.seed, a.threads)?;
    let q = integrate_volumes()?;
    write_estimate(out, "pe_fraction", &mc.estimate)?;
    writeln!(out, "boundary={}", mc.boundary)?;
    writeln!(out, "interior={}", mc.interior)?;
    writeln!(out, "quadrature_v_w={}", q.v_w)?;
    writeln!(out, "quadrature_v_pe={}", q.v_pe)?;
    writeln!(out, "quadrature_ratio={}", q.ratio)?;
    writeln!(out, "exact={}", 8.0 / (3.0 * std::f64::consts::PI))?;
    Ok(())
}

fn cmd_mean_entropy(a: &MeanEntropyArgs, out: &mut impl Write) -> Result<()> {
    let ns = parse_n_range(&a.n)?;
    let qs: Vec<f64> = parse_list(&a.q, "q")?;
    let mut rows = Vec::new();
    for &n in &ns {
        let est = mc_mean_entropies(n, &qs, a.samples, a.seed, a.threads)?;
        for (q, e) in qs.iter().zip(est) {
            let asym = entropy_offset(*q).map(|c| 2.0 * (n as f64).ln() - c);
            writeln!(out, "N={n} q={q} mean={} std_error={}", e.mean, e.std_error)?;
            rows.push((n, *q, e, asym));
        }
    }
    if let Some(p) = &a.output {
        let mut w = csv::Writer::from_writer(create(p)?);
        let io_err = |e: csv::Error| Error::Io(io::Error::other(e));
        w.write_record(["N", "q", "mean", "std_error", "samples", "asymptote", "random_vector"]).map_err(io_err)?;
        for (n, q, e, asym) in rows {
            w.write_record([
                n.to_string(),
                q.to_string(),
                e.mean.to_string(),
                e.std_error.to_string(),
                e.samples.to_string(),
                asym.map(|x| x.to_string()).unwrap_or_default(),
                random_vector_mean_entropy(n).to_string(),
            ])
            .map_err(io_err)?;
        }
        w.flush()?;
        writeln!(out, "output={}", p.display())?;
    }
    Ok(())
}

fn cmd_check_unistochastic(a: &CheckArgs, out: &mut impl Write) -> Result<()> {
    let v: Vec<f64> = parse_list(&a.eta, "η component")?;
    let [x, y, z] = v[..] else {
        return Err(Error::Parse(format!("--eta expects three numbers, got '{}'", a.eta)));
    };
    let eta = DampingVector::new([x, y, z])?;
    if !is_cp(&eta) {
        writeln!(out, "cp=no")?;
        writeln!(out, "verdict=not-CP")?;
        return Ok(());
    }
    writeln!(out, "cp=yes")?;
    let v = is_unistochastic(&eta)?;
    writeln!(out, "unistochastic={}", if v.unistochastic { "yes" } else { "no" })?;
    if let (Some(alpha), Some(w)) = (v.alpha, &v.witness) {
        writeln!(out, "alpha={}", join(&alpha))?;
        match &a.output {
            Some(p) => {
                write_matrix(p, w)?;
                writeln!(out, "witness={}", p.display())?;
            }
            None => writeln!(out, "witness={}", matrix_to_json(w))?,
        }
    }
    Ok(())
}

fn cmd_channel_apply(a: &ChannelApplyArgs, out: &mut impl Write) -> Result<()> {
    let (u, dims) = load_gate(&a.input, &a.gate, &a.dims)?;
    let ch = unistochastic_channel(&u, dims)?;
    let rho = match &a.state {
        Some(p) => read_matrix(p)?,
        None => ComplexMatrix::identity(dims.0).scale_real(1.0 / dims.0 as f64),
    };
    validate_state(&rho)?;
    if rho.rows() != dims.0 {
        return Err(Error::Dimension(format!("state is {}x{}, system has dimension {}", rho.rows(), rho.cols(), dims.0)));
    }
    let image = ch.apply(&rho)?;
    match &a.output {
        Some(p) => {
            write_matrix(p, &image)?;
            writeln!(out, "output={}", p.display())?;
        }
        None => writeln!(out, "state={}", matrix_to_json(&image))?,
    }
    writeln!(out, "kraus_rank={}", ch.kraus.len())?;
    writeln!(out, "choi_entropy={}", ch.choi_entropy()?)?;
    if let Some(b) = &ch.bloch {
        writeln!(out, "eta={}", join(&b.eta.eta))?;
    }
    if let Some(p) = &a.export {
        let mut f = create(p)?;
        serde_json::to_writer_pretty(&mut f, &ch.export()).map_err(|e| Error::Parse(e.to_string()))?;
        writeln!(f)?;
        f.flush()?;
        writeln!(out, "export={}", p.display())?;
    }
    Ok(())
}

fn cmd_sv_hist(a: &SvHistArgs, out: &mut impl Write) -> Result<()> {
    let h = singular_value_histogram(a.dim, a.samples, a.seed, a.threads, a.bins)?;
    let mut f = create(&a.output)?;
    h.write_csv(&mut f)?;
    writeln!(out, "values={}", h.counts.iter().sum::<u64>())?;
    writeln!(out, "output={}", a.output.display())?;
    Ok(())
}
