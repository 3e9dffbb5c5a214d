//! Command-line front-end: evaluate bounds, run experiments, reproduce the
//! reference tables and figure data. Emits one CSV or JSON document per run.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{
    avg_punctures_list_bounds, avg_punctures_unique, avg_punctures_unique_exact,
    coverage_fraction_lower_bound, crs_min_snr, crs_upper_bound, random_chordal_bound,
    random_hamming_bound, tau_max_search, CodebookSize, SnrMode,
};
use crate::code::{weight_distribution, CrsCode, GrsCode};
use crate::cover::{CoverConfig, DecodeMode, RadiusPolicy};
use crate::decoder::{tau_gs, BwMode, DEFAULT_S_MAX};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};
use crate::numeric::is_prime;
use crate::report::{Cell, Report};
use crate::sim::{
    estimate_chordal, estimate_hamming, ChordalAlgorithm, EstimateReport, HammingAlgorithm,
    TrialRecord, DEFAULT_EXHAUSTIVE_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "rscover",
    version,
    about = "Covering algorithms and bounds for GRS/CRS codes"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for Monte Carlo runs; never affects the results.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a closed-form bound.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Run a Monte Carlo experiment; emits the per-trial log.
    #[command(subcommand)]
    Sim(SimCmd),
    /// Code-structure quantities.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Reproduce reference tables and figure data.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Args, Debug, Clone)]
struct FieldArgs {
    /// Field size q = p^m (prime or prime power).
    #[arg(long)]
    q: Option<u64>,
    /// Characteristic, when q is not given directly.
    #[arg(long)]
    p: Option<u64>,
    /// Extension degree, default 1.
    #[arg(long)]
    m: Option<u32>,
}

impl FieldArgs {
    fn build(&self) -> Result<Field> {
        match (self.q, self.p) {
            (Some(q), None) => {
                let (p, m) = factor_prime_power(q)?;
                Field::new(p, m)
            }
            (None, Some(p)) => Field::new(p, self.m.unwrap_or(1)),
            (Some(q), Some(p)) => {
                let m = self.m.unwrap_or(1);
                let field = Field::new(p, m)?;
                if field.q() != q {
                    return Err(Error::InvalidParameter(format!(
                        "q={q} inconsistent with p^m = {}",
                        field.q()
                    )));
                }
                Ok(field)
            }
            (None, None) => Err(Error::InvalidParameter("give --q or --p [--m]".into())),
        }
    }
}

fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "q={q} is not a prime power"
        )));
    }
    let mut p = q;
    for d in 2..=q {
        if d * d > q {
            break;
        }
        if q % d == 0 {
            p = d;
            break;
        }
    }
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!(
            "q={q} is not a prime power"
        )));
    }
    let mut m = 0u32;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(Error::InvalidParameter(format!(
            "q={q} is not a prime power"
        )));
    }
    Ok((p, m))
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// Expected average covering radius of a random q-ary code (Hamming).
    RandomHamming {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long = "M")]
        m: f64,
    },
    /// Expected average covering radius of a random line code (chordal).
    RandomChordal {
        #[arg(long)]
        n: u64,
        #[arg(long = "M")]
        m: Option<f64>,
        /// Natural log of the codebook size, for sizes beyond f64 range.
        #[arg(long = "logM", conflicts_with = "m")]
        log_m: Option<f64>,
    },
    /// Closed-form average puncture count (unique-decoder model).
    PuncturesUnique {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Also emit the exact rational value.
        #[arg(long)]
        exact: bool,
    },
    /// Lower/upper bounds on the average puncture count (list-decoder model).
    PuncturesList {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Per-level decoding radii tau_0..tau_{d-2}; default tau_gs(n-i, k).
        #[arg(long, value_delimiter = ',')]
        radii: Option<Vec<f64>>,
        /// Per-level maximum list sizes; default n - i.
        #[arg(long, value_delimiter = ',')]
        caps: Option<Vec<u64>>,
    },
    /// Coverage-fraction lower bound for radius-tau balls.
    Coverage {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        tau: u64,
        /// Also emit the exact rational value.
        #[arg(long)]
        exact: bool,
    },
    /// Radius in (d/2, d) maximizing the coverage-fraction bound.
    TauMax {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Upper bound on the average chordal covering radius of a CRS code.
    CrsUpper {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        #[arg(long, default_value_t = 0.0)]
        sigma: f64,
    },
    /// SNR threshold for CRS codes to meet the random-coding bound.
    CrsMinSnr {
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum)]
        mode: SnrModeArg,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SnrModeArg {
    FiniteN,
    Asymptotic,
    #[value(name = "rate-to-1")]
    RateTo1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Unique,
    List,
}

impl From<ModeArg> for DecodeMode {
    fn from(m: ModeArg) -> DecodeMode {
        match m {
            ModeArg::Unique => DecodeMode::Unique,
            ModeArg::List => DecodeMode::List,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct SimCommon {
    #[arg(long, default_value_t = 500)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Record the exhaustive nearest-codeword distance per trial.
    #[arg(long)]
    oracle: bool,
}

#[derive(Subcommand, Debug)]
enum SimCmd {
    /// Cover uniform random vectors with a GRS code.
    GrsCover {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::List)]
        mode: ModeArg,
        /// Fixed list-decoding radius (clamped per level); default tau_gs.
        #[arg(long)]
        tau: Option<usize>,
        /// Cap on the interpolation multiplicity.
        #[arg(long, default_value_t = DEFAULT_S_MAX)]
        gs_smax: usize,
        /// Skip the verify-then-accept distance check in the unique decoder.
        #[arg(long)]
        bw_raw: bool,
        #[command(flatten)]
        common: SimCommon,
    },
    /// Cover random complex-Gaussian lines with a CRS code.
    CrsCover {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        beta: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::List)]
        mode: ModeArg,
        #[arg(long = "best-of-n", default_value_t = 1)]
        best_of_n: usize,
        #[arg(long, default_value_t = DEFAULT_S_MAX)]
        gs_smax: usize,
        #[arg(long)]
        bw_raw: bool,
        #[command(flatten)]
        common: SimCommon,
    },
    /// Exhaustive nearest-codeword (MAP) quantization.
    Exhaustive {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Chordal experiment on the CRS code instead of Hamming on GRS.
        #[arg(long)]
        chordal: bool,
        #[arg(long, default_value_t = 1)]
        beta: u64,
        #[command(flatten)]
        common: SimCommon,
    },
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// CRS code size via the rank of the trace map, with bounds.
    CrsSize {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        beta: u64,
    },
    /// MDS weight distribution A_w.
    Weights {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Single weight; all of 0..=n when omitted.
        #[arg(long)]
        w: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum ReproCmd {
    /// Average punctures for unique (BW) and list (GS) covering.
    Table1 {
        #[arg(long, default_value_t = 7)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        bw_raw: bool,
    },
    /// Average Hamming covering radius vs the random-coding bound.
    Fig1 {
        #[arg(long, default_value_t = 7)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Include the exhaustive MAP series.
        #[arg(long)]
        map: bool,
    },
    /// Fixed-rate sweep over prime fields with the GS list decoder.
    Fig2 {
        #[arg(long, value_delimiter = ',', default_values_t = [5u64, 7, 11, 13, 17, 19, 23, 29, 31])]
        primes: Vec<u64>,
        #[arg(long, default_value_t = 300)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Multiplicity cap; keeps the interpolation systems desk-sized at
        /// the cost of a sub-maximal decoding radius on the larger codes.
        #[arg(long, default_value_t = 4)]
        gs_smax: usize,
    },
    /// Average chordal covering radius of a CRS code vs bounds.
    Fig5 {
        #[arg(long, default_value_t = 7)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1.0)]
        mu: f64,
        /// Amplitude standard deviation; default is the mean-1 Rayleigh value
        /// sqrt(4/pi - 1).
        #[arg(long)]
        sigma: Option<f64>,
        #[arg(long = "best-of-n", default_value_t = 1)]
        best_of_n: usize,
    },
    /// High-rate bound-ratio property over a prime sweep.
    Fig6Property {
        #[arg(long, value_delimiter = ',', default_values_t = [31u64, 101, 1009])]
        primes: Vec<u64>,
    },
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        // best effort; a pool may already exist in tests
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global();
    }
    let format = cli.format;
    let out = cli.out.clone();
    match execute(cli.command) {
        Ok((report, seed)) => match emit(&report, format, out.as_deref(), seed) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => 1,
                _ => 2,
            }
        }
    }
}

fn emit(
    report: &Report,
    format: Format,
    out: Option<&std::path::Path>,
    seed: Option<u64>,
) -> Result<()> {
    let body = match format {
        Format::Csv => report.to_csv(),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json(seed))
                .map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    match out {
        Some(path) => {
            let mut file = std::fs::File::create(path)?;
            file.write_all(body.as_bytes())?;
        }
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
        }
    }
    Ok(())
}

fn execute(cmd: Command) -> Result<(Report, Option<u64>)> {
    match cmd {
        Command::Bound(b) => bound_command(b).map(|r| (r, None)),
        Command::Sim(s) => sim_command(s),
        Command::Code(c) => code_command(c).map(|r| (r, None)),
        Command::Repro(r) => repro_command(r),
    }
}

fn bound_command(cmd: BoundCmd) -> Result<Report> {
    match cmd {
        BoundCmd::RandomHamming { q, n, m } => {
            let value = random_hamming_bound(q, n, m)?;
            let mut rep = Report::new("bound random-hamming");
            rep.param("q", q).param("n", n).param("M", m);
            rep.columns = vec!["q".into(), "n".into(), "M".into(), "value".into()];
            rep.rows.push(vec![
                Cell::UInt(q as u128),
                Cell::UInt(n as u128),
                Cell::Float(m),
                Cell::Float(value),
            ]);
            Ok(rep)
        }
        BoundCmd::RandomChordal { n, m, log_m } => {
            let size = match (m, log_m) {
                (Some(m), None) => CodebookSize::Count(m),
                (None, Some(l)) => CodebookSize::LnCount(l),
                _ => {
                    return Err(Error::InvalidParameter(
                        "give exactly one of --M, --logM".into(),
                    ))
                }
            };
            let value = random_chordal_bound(n, size)?;
            let mut rep = Report::new("bound random-chordal");
            rep.param("n", n);
            match size {
                CodebookSize::Count(v) => rep.param("M", v),
                CodebookSize::LnCount(v) => rep.param("logM", v),
            };
            rep.columns = vec!["n".into(), "M_or_lnM".into(), "value".into()];
            let mcell = match size {
                CodebookSize::Count(v) => Cell::Float(v),
                CodebookSize::LnCount(v) => Cell::Float(v),
            };
            rep.rows
                .push(vec![Cell::UInt(n as u128), mcell, Cell::Float(value)]);
            Ok(rep)
        }
        BoundCmd::PuncturesUnique { q, n, k, exact } => {
            let value = avg_punctures_unique(q, n, k)?;
            let mut rep = Report::new("bound punctures-unique");
            rep.param("q", q)
                .param("n", n)
                .param("k", k)
                .param("exact", exact);
            rep.columns = vec![
                "q".into(),
                "n".into(),
                "k".into(),
                "value".into(),
                "exact".into(),
            ];
            let exact_cell = if exact {
                Cell::Str(avg_punctures_unique_exact(q, n, k)?.to_string())
            } else {
                Cell::Empty
            };
            rep.rows.push(vec![
                Cell::UInt(q as u128),
                Cell::UInt(n as u128),
                Cell::UInt(k as u128),
                Cell::Float(value),
                exact_cell,
            ]);
            Ok(rep)
        }
        BoundCmd::PuncturesList {
            q,
            n,
            k,
            radii,
            caps,
        } => {
            let levels = (n - k) as usize;
            let radii = radii.unwrap_or_else(|| {
                (0..levels)
                    .map(|i| tau_gs(n as usize - i, k as usize) as f64)
                    .collect()
            });
            let caps = caps.unwrap_or_else(|| (0..levels).map(|i| n - i as u64).collect());
            let (lower, upper) = avg_punctures_list_bounds(q, n, k, &radii, &caps)?;
            let mut rep = Report::new("bound punctures-list");
            rep.param("q", q).param("n", n).param("k", k);
            rep.param(
                "radii",
                radii
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            rep.param(
                "caps",
                caps.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            rep.columns = vec![
                "q".into(),
                "n".into(),
                "k".into(),
                "lower".into(),
                "upper".into(),
            ];
            rep.rows.push(vec![
                Cell::UInt(q as u128),
                Cell::UInt(n as u128),
                Cell::UInt(k as u128),
                Cell::Float(lower),
                Cell::Float(upper),
            ]);
            Ok(rep)
        }
        BoundCmd::Coverage {
            q,
            n,
            k,
            tau,
            exact,
        } => {
            let b = coverage_fraction_lower_bound(q, n, k, tau)?;
            let mut rep = Report::new("bound coverage");
            rep.param("q", q)
                .param("n", n)
                .param("k", k)
                .param("tau", tau)
                .param("exact", exact);
            rep.columns = vec![
                "q".into(),
                "n".into(),
                "k".into(),
                "tau".into(),
                "value".into(),
                "clamped".into(),
                "exact".into(),
            ];
            let exact_cell = if exact {
                Cell::Str(b.raw.to_string())
            } else {
                Cell::Empty
            };
            rep.rows.push(vec![
                Cell::UInt(q as u128),
                Cell::UInt(n as u128),
                Cell::UInt(k as u128),
                Cell::UInt(tau as u128),
                Cell::Float(b.value),
                Cell::Float(b.clamped),
                exact_cell,
            ]);
            Ok(rep)
        }
        BoundCmd::TauMax { q, n, k } => {
            let tau = tau_max_search(q, n, k)?;
            let mut rep = Report::new("bound tau-max");
            rep.param("q", q).param("n", n).param("k", k);
            rep.columns = vec!["q".into(), "n".into(), "k".into(), "tau_max".into()];
            rep.rows.push(vec![
                Cell::UInt(q as u128),
                Cell::UInt(n as u128),
                Cell::UInt(k as u128),
                Cell::UInt(tau as u128),
            ]);
            Ok(rep)
        }
        BoundCmd::CrsUpper { p, n, k, mu, sigma } => {
            let b = crs_upper_bound(p, n, k, mu, sigma)?;
            let mut rep = Report::new("bound crs-upper");
            rep.param("p", p)
                .param("n", n)
                .param("k", k)
                .param("mu", mu)
                .param("sigma", sigma);
            rep.columns = vec![
                "p".into(),
                "n".into(),
                "k".into(),
                "coarse".into(),
                "refined".into(),
                "min".into(),
                "valid".into(),
                "reason".into(),
            ];
            rep.rows.push(vec![
                Cell::UInt(p as u128),
                Cell::UInt(n as u128),
                Cell::UInt(k as u128),
                Cell::Float(b.coarse),
                Cell::Float(b.refined),
                Cell::Float(b.min),
                Cell::Bool(b.valid),
                b.reason.map_or(Cell::Empty, Cell::Str),
            ]);
            Ok(rep)
        }
        BoundCmd::CrsMinSnr { p, mode, n, k } => {
            let rate = match (n, k) {
                (Some(n), Some(k)) => Some(k as f64 / n as f64),
                _ => None,
            };
            let (smode, quantity) = match mode {
                SnrModeArg::FiniteN => (SnrMode::FiniteN, "mu2_over_mu2_plus_sigma2"),
                SnrModeArg::Asymptotic => (SnrMode::Asymptotic, "mu2_over_sigma2"),
                SnrModeArg::RateTo1 => (SnrMode::RateToOne, "mu2_over_sigma2"),
            };
            let value = crs_min_snr(p, n, rate, smode)?;
            let mut rep = Report::new("bound crs-min-snr");
            rep.param("p", p).param("mode", format!("{mode:?}"));
            if let Some(n) = n {
                rep.param("n", n);
            }
            if let Some(k) = k {
                rep.param("k", k);
            }
            rep.columns = vec!["p".into(), "quantity".into(), "threshold".into()];
            rep.rows.push(vec![
                Cell::UInt(p as u128),
                Cell::Str(quantity.into()),
                Cell::Float(value),
            ]);
            Ok(rep)
        }
    }
}

fn trial_columns() -> Vec<String> {
    [
        "trial",
        "distance",
        "punctures",
        "oracle_distance",
        "seed_offset",
    ]
    .map(String::from)
    .to_vec()
}

fn trial_rows(records: &[TrialRecord], integer_distance: bool) -> Vec<Vec<Cell>> {
    records
        .iter()
        .map(|r| {
            vec![
                Cell::UInt(r.trial as u128),
                if integer_distance {
                    Cell::Int(r.distance as i128)
                } else {
                    Cell::Float(r.distance)
                },
                Cell::UInt(r.punctures as u128),
                match r.oracle_distance {
                    Some(o) if integer_distance => Cell::Int(o as i128),
                    Some(o) => Cell::Float(o),
                    None => Cell::Empty,
                },
                Cell::UInt(r.seed_offset as u128),
            ]
        })
        .collect()
}

fn attach_summary(rep: &mut Report, est: &EstimateReport) {
    rep.summary
        .push(("estimator".into(), est.estimator.clone()));
    rep.summary.push(("trials".into(), est.trials.to_string()));
    rep.summary.push((
        "mean_distance".into(),
        crate::report::format_float(est.mean_distance),
    ));
    rep.summary.push((
        "stderr_distance".into(),
        crate::report::format_float(est.stderr_distance),
    ));
    rep.summary.push((
        "mean_punctures".into(),
        crate::report::format_float(est.mean_punctures),
    ));
    rep.summary.push((
        "stderr_punctures".into(),
        crate::report::format_float(est.stderr_punctures),
    ));
    if let Some(m) = est.oracle_matches {
        rep.summary.push(("oracle_matches".into(), m.to_string()));
    }
}

fn sim_command(cmd: SimCmd) -> Result<(Report, Option<u64>)> {
    match cmd {
        SimCmd::GrsCover {
            field,
            n,
            k,
            mode,
            tau,
            gs_smax,
            bw_raw,
            common,
        } => {
            let f = field.build()?;
            let code = GrsCode::canonical(f, n, k)?;
            let config = CoverConfig {
                bw_mode: if bw_raw { BwMode::Raw } else { BwMode::Bounded },
                radius: tau.map_or(RadiusPolicy::TauGs, RadiusPolicy::Fixed),
                s_max: gs_smax,
            };
            let (est, records) = estimate_hamming(
                &code,
                HammingAlgorithm::Cover { mode: mode.into() },
                &config,
                common.trials,
                common.seed,
                common.oracle,
                DEFAULT_EXHAUSTIVE_CAP,
            )?;
            let mut rep = Report::new("sim grs-cover");
            rep.param("q", code.field().q())
                .param("n", n)
                .param("k", k)
                .param("mode", format!("{:?}", DecodeMode::from(mode)))
                .param("bw_raw", bw_raw)
                .param("gs_smax", gs_smax)
                .param("trials", common.trials)
                .param("seed", common.seed);
            if let Some(t) = tau {
                rep.param("tau", t);
            }
            attach_summary(&mut rep, &est);
            rep.columns = trial_columns();
            rep.rows = trial_rows(&records, true);
            Ok((rep, Some(common.seed)))
        }
        SimCmd::CrsCover {
            field,
            n,
            k,
            beta,
            mode,
            best_of_n,
            gs_smax,
            bw_raw,
            common,
        } => {
            let f = field.build()?;
            let beta = FieldElem(beta);
            let code = CrsCode::canonical(f, n, k, beta)?;
            let config = CoverConfig {
                bw_mode: if bw_raw { BwMode::Raw } else { BwMode::Bounded },
                radius: RadiusPolicy::TauGs,
                s_max: gs_smax,
            };
            let (est, records) = estimate_chordal(
                &code,
                ChordalAlgorithm::Cover {
                    mode: mode.into(),
                    best_of_n,
                },
                &config,
                common.trials,
                common.seed,
                common.oracle,
                DEFAULT_EXHAUSTIVE_CAP,
            )?;
            let mut rep = Report::new("sim crs-cover");
            rep.param("q", code.field().q())
                .param("n", n)
                .param("k", k)
                .param("beta", beta.0)
                .param("mode", format!("{:?}", DecodeMode::from(mode)))
                .param("best_of_n", best_of_n)
                .param("trials", common.trials)
                .param("seed", common.seed);
            attach_summary(&mut rep, &est);
            rep.columns = trial_columns();
            rep.rows = trial_rows(&records, false);
            Ok((rep, Some(common.seed)))
        }
        SimCmd::Exhaustive {
            field,
            n,
            k,
            chordal,
            beta,
            common,
        } => {
            let f = field.build()?;
            let mut rep = Report::new("sim exhaustive");
            rep.param("q", f.q())
                .param("n", n)
                .param("k", k)
                .param("chordal", chordal)
                .param("trials", common.trials)
                .param("seed", common.seed);
            let (est, records, integer) = if chordal {
                let code = CrsCode::canonical(f, n, k, FieldElem(beta))?;
                let (est, records) = estimate_chordal(
                    &code,
                    ChordalAlgorithm::Exhaustive,
                    &CoverConfig::default(),
                    common.trials,
                    common.seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                (est, records, false)
            } else {
                let code = GrsCode::canonical(f, n, k)?;
                let (est, records) = estimate_hamming(
                    &code,
                    HammingAlgorithm::Exhaustive,
                    &CoverConfig::default(),
                    common.trials,
                    common.seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                (est, records, true)
            };
            attach_summary(&mut rep, &est);
            rep.columns = trial_columns();
            rep.rows = trial_rows(&records, integer);
            Ok((rep, Some(common.seed)))
        }
    }
}

fn code_command(cmd: CodeCmd) -> Result<Report> {
    match cmd {
        CodeCmd::CrsSize { field, n, k, beta } => {
            let f = field.build()?;
            let code = CrsCode::canonical(f.clone(), n, k, FieldElem(beta))?;
            let report = code.size_report();
            let mut rep = Report::new("code crs-size");
            rep.param("p", f.p())
                .param("m", f.m())
                .param("q", f.q())
                .param("n", n)
                .param("k", k)
                .param("beta", beta);
            rep.columns = vec![
                "p".into(),
                "m".into(),
                "q".into(),
                "n".into(),
                "k".into(),
                "beta".into(),
                "rank".into(),
                "size".into(),
                "lower_bound".into(),
                "upper_bound".into(),
            ];
            rep.rows.push(vec![
                Cell::UInt(f.p() as u128),
                Cell::UInt(f.m() as u128),
                Cell::UInt(f.q() as u128),
                Cell::UInt(n as u128),
                Cell::UInt(k as u128),
                Cell::UInt(beta as u128),
                Cell::UInt(report.rank as u128),
                Cell::Str(report.size.to_string()),
                Cell::Str(report.lower_bound.to_string()),
                Cell::Str(report.upper_bound.to_string()),
            ]);
            Ok(rep)
        }
        CodeCmd::Weights { q, n, k, w } => {
            let mut rep = Report::new("code weights");
            rep.param("q", q).param("n", n).param("k", k);
            rep.columns = vec!["q".into(), "n".into(), "k".into(), "w".into(), "A_w".into()];
            let ws: Vec<usize> = match w {
                Some(w) => vec![w],
                None => (0..=n).collect(),
            };
            for w in ws {
                let a = weight_distribution(n, k, q, w)?;
                rep.rows.push(vec![
                    Cell::UInt(q as u128),
                    Cell::UInt(n as u128),
                    Cell::UInt(k as u128),
                    Cell::UInt(w as u128),
                    Cell::Str(a.to_string()),
                ]);
            }
            Ok(rep)
        }
    }
}

fn repro_command(cmd: ReproCmd) -> Result<(Report, Option<u64>)> {
    match cmd {
        ReproCmd::Table1 {
            q,
            n,
            trials,
            seed,
            bw_raw,
        } => {
            let field = Field::new(q, 1)?;
            let mut rep = Report::new("repro table1");
            rep.param("q", q)
                .param("n", n)
                .param("trials", trials)
                .param("seed", seed)
                .param("bw_raw", bw_raw);
            rep.columns = vec!["k".into(), "bw_punctures".into(), "gs_punctures".into()];
            for k in 1..n {
                let code = GrsCode::canonical(field.clone(), n, k)?;
                let bw_config = CoverConfig {
                    bw_mode: if bw_raw { BwMode::Raw } else { BwMode::Bounded },
                    ..CoverConfig::default()
                };
                let (bw, _) = estimate_hamming(
                    &code,
                    HammingAlgorithm::Cover {
                        mode: DecodeMode::Unique,
                    },
                    &bw_config,
                    trials,
                    seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                let (gs, _) = estimate_hamming(
                    &code,
                    HammingAlgorithm::Cover {
                        mode: DecodeMode::List,
                    },
                    &CoverConfig::default(),
                    trials,
                    seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                rep.rows.push(vec![
                    Cell::UInt(k as u128),
                    Cell::Float(bw.mean_punctures),
                    Cell::Float(gs.mean_punctures),
                ]);
            }
            Ok((rep, Some(seed)))
        }
        ReproCmd::Fig1 {
            q,
            n,
            trials,
            seed,
            map,
        } => {
            let field = Field::new(q, 1)?;
            let mut rep = Report::new("repro fig1");
            rep.param("q", q)
                .param("n", n)
                .param("trials", trials)
                .param("seed", seed)
                .param("map", map);
            rep.columns = vec![
                "k".into(),
                "upper_bound".into(),
                "random_thm1".into(),
                "alg1_bw".into(),
                "alg1_gs".into(),
            ];
            if map {
                rep.columns.push("alg1_map".into());
            }
            for k in 1..n {
                let code = GrsCode::canonical(field.clone(), n, k)?;
                let random = random_hamming_bound(q, n as u64, (q as f64).powi(k as i32))?;
                let (bw, _) = estimate_hamming(
                    &code,
                    HammingAlgorithm::Cover {
                        mode: DecodeMode::Unique,
                    },
                    &CoverConfig::default(),
                    trials,
                    seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                let (gs, _) = estimate_hamming(
                    &code,
                    HammingAlgorithm::Cover {
                        mode: DecodeMode::List,
                    },
                    &CoverConfig::default(),
                    trials,
                    seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                let mut row = vec![
                    Cell::UInt(k as u128),
                    Cell::Int((n - k) as i128),
                    Cell::Float(random),
                    Cell::Float(bw.mean_distance),
                    Cell::Float(gs.mean_distance),
                ];
                if map {
                    let (m, _) = estimate_hamming(
                        &code,
                        HammingAlgorithm::Exhaustive,
                        &CoverConfig::default(),
                        trials,
                        seed,
                        false,
                        DEFAULT_EXHAUSTIVE_CAP,
                    )?;
                    row.push(Cell::Float(m.mean_distance));
                }
                rep.rows.push(row);
            }
            Ok((rep, Some(seed)))
        }
        ReproCmd::Fig2 {
            primes,
            trials,
            seed,
            gs_smax,
        } => {
            let mut rep = Report::new("repro fig2");
            rep.param(
                "primes",
                primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            )
            .param("trials", trials)
            .param("seed", seed)
            .param("gs_smax", gs_smax);
            rep.columns = vec![
                "rate".into(),
                "q".into(),
                "n".into(),
                "k".into(),
                "worst_case".into(),
                "avg_covering_radius".into(),
                "avg_punctures".into(),
            ];
            let rates = [(1u64, 3u64), (1, 2), (2, 3)];
            for (num, den) in rates {
                for &q in &primes {
                    if !is_prime(q) {
                        return Err(Error::NotPrime(q));
                    }
                    let n = (q - 1) as usize;
                    let k = ((n as u64 * num) / den).max(1) as usize;
                    if k >= n {
                        continue;
                    }
                    let field = Field::new(q, 1)?;
                    let code = GrsCode::canonical(field, n, k)?;
                    let config = CoverConfig {
                        radius: RadiusPolicy::MultiplicityCap,
                        s_max: gs_smax,
                        ..CoverConfig::default()
                    };
                    let (est, _) = estimate_hamming(
                        &code,
                        HammingAlgorithm::Cover {
                            mode: DecodeMode::List,
                        },
                        &config,
                        trials,
                        seed,
                        false,
                        DEFAULT_EXHAUSTIVE_CAP,
                    )?;
                    rep.rows.push(vec![
                        Cell::Str(format!("{num}/{den}")),
                        Cell::UInt(q as u128),
                        Cell::UInt(n as u128),
                        Cell::UInt(k as u128),
                        Cell::UInt((n - k) as u128),
                        Cell::Float(est.mean_distance),
                        Cell::Float(est.mean_punctures),
                    ]);
                }
            }
            Ok((rep, Some(seed)))
        }
        ReproCmd::Fig5 {
            q,
            n,
            trials,
            seed,
            mu,
            sigma,
            best_of_n,
        } => {
            let sigma = sigma.unwrap_or_else(|| (4.0 / std::f64::consts::PI - 1.0).sqrt());
            let field = Field::new(q, 1)?;
            let mut rep = Report::new("repro fig5");
            rep.param("q", q)
                .param("n", n)
                .param("trials", trials)
                .param("seed", seed)
                .param("mu", mu)
                .param("sigma", sigma)
                .param("best_of_n", best_of_n);
            rep.columns = vec![
                "k".into(),
                "coarse_upper".into(),
                "refined_upper".into(),
                "upper_valid".into(),
                "alg2_bw".into(),
                "alg2_gs".into(),
                "random_thm2".into(),
            ];
            for k in 1..n {
                let code = CrsCode::canonical(field.clone(), n, k, FieldElem(1))?;
                let upper = crs_upper_bound(q, n as u64, k as u64, mu, sigma)?;
                let random =
                    random_chordal_bound(n as u64, CodebookSize::Count((q as f64).powi(k as i32)))?;
                let (bw, _) = estimate_chordal(
                    &code,
                    ChordalAlgorithm::Cover {
                        mode: DecodeMode::Unique,
                        best_of_n,
                    },
                    &CoverConfig::default(),
                    trials,
                    seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                let (gs, _) = estimate_chordal(
                    &code,
                    ChordalAlgorithm::Cover {
                        mode: DecodeMode::List,
                        best_of_n,
                    },
                    &CoverConfig::default(),
                    trials,
                    seed,
                    false,
                    DEFAULT_EXHAUSTIVE_CAP,
                )?;
                rep.rows.push(vec![
                    Cell::UInt(k as u128),
                    Cell::Float(upper.coarse),
                    Cell::Float(upper.refined),
                    Cell::Bool(upper.valid),
                    Cell::Float(bw.mean_distance),
                    Cell::Float(gs.mean_distance),
                    Cell::Float(random),
                ]);
            }
            Ok((rep, Some(seed)))
        }
        ReproCmd::Fig6Property { primes } => {
            let mut rep = Report::new("repro fig6-property");
            rep.param(
                "primes",
                primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            rep.columns = vec![
                "p".into(),
                "n".into(),
                "k".into(),
                "crs_upper_min".into(),
                "random_chordal".into(),
                "ratio".into(),
            ];
            for &p in &primes {
                let n = p - 1;
                let k = n - 1;
                let upper = crs_upper_bound(p, n, k, n as f64, 1.0)?;
                let random =
                    random_chordal_bound(n, CodebookSize::LnCount(k as f64 * (p as f64).ln()))?;
                rep.rows.push(vec![
                    Cell::UInt(p as u128),
                    Cell::UInt(n as u128),
                    Cell::UInt(k as u128),
                    Cell::Float(upper.min),
                    Cell::Float(random),
                    Cell::Float(upper.min / random),
                ]);
            }
            Ok((rep, None))
        }
    }
}
