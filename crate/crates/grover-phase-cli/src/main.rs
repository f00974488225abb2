//! Command-line front end: point queries, figure sweeps, tolerance solving
//! and self-verification for phase-error analysis of Grover search.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical/degeneracy diagnostic,
//! 3 I/O error.

mod angle;
mod sweep;
mod verify;

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use grover_phase::probability::{m_min_general, m_min_matched, p_max_exact, success_probability};
use grover_phase::spectral::spectral_params;
use grover_phase::approx::{tolerated_delta, ToleranceQuery};
use grover_phase::PhaseConfig;

#[derive(Parser)]
#[command(name = "grover-phase", version, about = "Phase-error analysis of Grover search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Success probability after a given number of iterations
    Prob {
        #[command(flatten)]
        geometry: GeometryArgs,
        /// Iteration count
        #[arg(long)]
        m: u64,
    },
    /// Iteration counts that maximize the success probability
    Mmin {
        #[command(flatten)]
        geometry: GeometryArgs,
    },
    /// Sweep database sizes; write a CSV and a plot script
    Figure {
        /// Which sweep: 1 (delta = 0.01) or 2 (delta = 0.001)
        #[arg(long)]
        id: u8,
        /// Smallest qubit count (default 4 for id 1, 8 for id 2)
        #[arg(long)]
        n_min: Option<u32>,
        /// Largest qubit count (default 30 for id 1, 40 for id 2)
        #[arg(long)]
        n_max: Option<u32>,
        /// Output CSV path; the plot script lands next to it
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest tolerable phase error for a target success probability
    Tolerance {
        /// Target maximum success probability, strictly between 0 and 1
        #[arg(long)]
        p_target: f64,
        /// Uniform-state rotation theta in radians (pi tokens accepted)
        #[arg(long, value_parser = angle::parse_angle, allow_hyphen_values = true)]
        theta: f64,
        /// Qubit count n, with sin(beta) = 2^(-n/2)
        #[arg(long)]
        n: Option<u32>,
        /// Overlap angle beta in radians
        #[arg(long, value_parser = angle::parse_angle, allow_hyphen_values = true)]
        beta: Option<f64>,
    },
    /// Run the cross-module self-verification suite
    Verify {
        /// RNG seed; identical seeds give byte-identical reports
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of random configurations per check
        #[arg(long, default_value_t = 200)]
        trials: u64,
        /// Test-only override of the ceiling-estimate coefficient
        #[arg(long, default_value_t = 16.0, hide = true)]
        ceiling_coefficient: f64,
    },
}

/// Search geometry shared by the point-query commands. Exactly one of
/// `--n`/`--beta` picks the database, and exactly one of `--phi`/`--delta`
/// picks the marked-state rotation.
#[derive(Args)]
struct GeometryArgs {
    /// Qubit count n, with sin(beta) = 2^(-n/2)
    #[arg(long)]
    n: Option<u32>,
    /// Overlap angle beta in radians (pi tokens accepted, e.g. pi/6)
    #[arg(long, value_parser = angle::parse_angle, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Marked-state rotation phi in radians
    #[arg(long, value_parser = angle::parse_angle, allow_hyphen_values = true)]
    phi: Option<f64>,
    /// Uniform-state rotation theta in radians
    #[arg(long, value_parser = angle::parse_angle, allow_hyphen_values = true)]
    theta: f64,
    /// Phase error delta = phi - theta, an alternative to --phi
    #[arg(long, value_parser = angle::parse_angle, allow_hyphen_values = true)]
    delta: Option<f64>,
}

impl GeometryArgs {
    fn to_config(&self) -> Result<PhaseConfig, CliError> {
        let phi = match (self.phi, self.delta) {
            (Some(phi), None) => phi,
            (None, Some(delta)) => self.theta + delta,
            (Some(_), Some(_)) => {
                return Err(CliError::Usage("--phi conflicts with --delta".into()))
            }
            (None, None) => {
                return Err(CliError::Usage("one of --phi or --delta is required".into()))
            }
        };
        let cfg = match (self.n, self.beta) {
            (Some(n), None) => PhaseConfig::from_qubits(n, phi, self.theta),
            (None, Some(beta)) => PhaseConfig::new(beta, phi, self.theta),
            _ => {
                return Err(CliError::Usage(
                    "exactly one of --n or --beta is required".into(),
                ))
            }
        };
        cfg.map_err(|err| CliError::Usage(err.to_string()))
    }
}

enum CliError {
    Usage(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(msg) | CliError::Numerical(msg) | CliError::Io(msg) => msg,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Prob { geometry, m } => cmd_prob(&geometry, m),
        Command::Mmin { geometry } => cmd_mmin(&geometry),
        Command::Figure {
            id,
            n_min,
            n_max,
            out,
        } => cmd_figure(id, n_min, n_max, out),
        Command::Tolerance {
            p_target,
            theta,
            n,
            beta,
        } => cmd_tolerance(p_target, theta, n, beta),
        Command::Verify {
            seed,
            trials,
            ceiling_coefficient,
        } => cmd_verify(seed, trials, ceiling_coefficient),
    }
}

fn print_geometry(cfg: &PhaseConfig) {
    match cfg.qubits() {
        Some(n) => println!("beta     = {} rad  (n = {n})", cfg.beta()),
        None => println!("beta     = {} rad", cfg.beta()),
    }
    println!("phi      = {} rad", cfg.phi());
    println!("theta    = {} rad", cfg.theta());
    println!("delta    = {} rad", cfg.delta());
}

fn cmd_prob(geometry: &GeometryArgs, m: u64) -> Result<(), CliError> {
    let cfg = geometry.to_config()?;
    print_geometry(&cfg);
    match spectral_params(cfg) {
        Ok(sp) => {
            println!("w        = {} rad", sp.w);
            println!("x        = {} rad", sp.x);
        }
        Err(err) => println!("w, x     : undefined ({err})"),
    }
    println!("m        = {m}");
    println!("P(m)     = {}", success_probability(cfg, m));
    let best = p_max_exact(cfg);
    let note = if best.m == m {
        "m is the integer optimum"
    } else {
        "m is not the integer optimum"
    };
    println!("optimum  : m* = {}, P(m*) = {}  [{note}]", best.m, best.p);
    Ok(())
}

fn cmd_mmin(geometry: &GeometryArgs) -> Result<(), CliError> {
    let cfg = geometry.to_config()?;
    print_geometry(&cfg);
    let mm = m_min_general(cfg).map_err(|err| CliError::Numerical(err.to_string()))?;
    println!("m_real   = {}", mm.m_real);
    if let Ok(matched) = m_min_matched(cfg) {
        println!("matched  = {matched}  (phi = theta closed form)");
    }
    let best = p_max_exact(cfg);
    println!("m*       = {}", best.m);
    println!("P(m*)    = {}", best.p);
    Ok(())
}

fn cmd_figure(
    id: u8,
    n_min: Option<u32>,
    n_max: Option<u32>,
    out: Option<PathBuf>,
) -> Result<(), CliError> {
    let (delta, lo_default, hi_default) = match id {
        1 => (0.01, 4, 30),
        2 => (0.001, 8, 40),
        _ => return Err(CliError::Usage("--id must be 1 or 2".into())),
    };
    let lo = n_min.unwrap_or(lo_default);
    let hi = n_max.unwrap_or(hi_default);
    if lo == 0 || lo > hi {
        return Err(CliError::Usage(format!(
            "invalid qubit range {lo}..{hi} (need 1 <= n-min <= n-max)"
        )));
    }

    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        rows.push(
            sweep::SweepRow::compute(n, PI, delta)
                .map_err(|err| CliError::Numerical(format!("n = {n}: {err}")))?,
        );
    }

    let csv_path = out.unwrap_or_else(|| PathBuf::from(format!("figure{id}.csv")));
    sweep::write_csv(&rows, &csv_path)
        .map_err(|err| CliError::Io(format!("writing {}: {err}", csv_path.display())))?;
    let script = sweep::script_path(&csv_path);
    sweep::write_plot_script(&csv_path, &script)
        .map_err(|err| CliError::Io(format!("writing {}: {err}", script.display())))?;

    println!("wrote {} ({} rows)", csv_path.display(), rows.len());
    println!("wrote {}", script.display());
    Ok(())
}

fn cmd_tolerance(
    p_target: f64,
    theta: f64,
    n: Option<u32>,
    beta: Option<f64>,
) -> Result<(), CliError> {
    let beta = match (n, beta) {
        (Some(n), None) => (-f64::from(n) / 2.0).exp2().asin(),
        (None, Some(beta)) => beta,
        _ => {
            return Err(CliError::Usage(
                "exactly one of --n or --beta is required".into(),
            ))
        }
    };
    let query = ToleranceQuery::new(p_target, theta, beta)
        .map_err(|err| CliError::Usage(err.to_string()))?;
    let delta_tol = tolerated_delta(query);

    println!("p_target  = {p_target}");
    println!("theta     = {theta} rad");
    println!("beta      = {beta} rad");
    println!("delta_tol = {delta_tol}");
    if let Some(n) = n {
        // comparison scale 2 / sqrt(N p_target) for an N = 2^n database
        let scale = 2.0 / (2f64.powf(f64::from(n)) * p_target).sqrt();
        println!("long_scale = {scale}  (2 / sqrt(N p_target))");
        println!("ratio      = {}", delta_tol / scale);
    }
    Ok(())
}

fn cmd_verify(seed: u64, trials: u64, ceiling_coefficient: f64) -> Result<(), CliError> {
    let options = verify::VerifyOptions {
        seed,
        trials,
        ceiling_coefficient,
    };
    if verify::run(&options) {
        Ok(())
    } else {
        Err(CliError::Numerical("self-verification failed".into()))
    }
}
