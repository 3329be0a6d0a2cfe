use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use commands::VerifyArgs;
use render::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

/// Continued fractions, approximation coefficients and their bounds, with
/// exact arithmetic throughout.
#[derive(Parser, Debug)]
#[command(name = "thetabound", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    format: OutputFormat,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Digits and convergents of `p/q`, `surd:(p,r,d,q)` or `digits:a1,a2,…`.
    Expand {
        x: String,
        /// Digits to compute; defaults to the full expansion for rationals
        /// and 20 otherwise.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Approximation coefficients Θ_n over an inclusive range `n0..n1`.
    Theta {
        x: String,
        #[arg(long, default_value = "1..10")]
        range: String,
    },
    /// Natural-extension orbit points (t_k, v_k).
    Orbit {
        x: String,
        #[arg(long)]
        steps: Option<usize>,
    },
    /// Bounds from the catalog: vahlen, borel, borel-improved A, tong A,
    /// hancl Q, hancl-nair Q, easy M m, difficult M m, k-only K.
    Bounds {
        kind: String,
        params: Vec<u64>,
    },
    /// Exact regions of the triangle: V a, H a, I M m, V1k k, I1 M m, delta.
    Region {
        kind: String,
        params: Vec<u64>,
    },
    /// μ-measure of a region (same kinds as `region`, plus full-delta and
    /// empty).
    Measure {
        kind: String,
        params: Vec<u64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Run a verification sweep; exits 1 on any violation.
    Verify {
        #[arg(long, value_parser = ["rationals", "surds", "streams", "prop31"], default_value = "rationals")]
        family: String,
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 100)]
        max_q: u64,
        #[arg(long, default_value_t = 30)]
        max_d: u64,
        #[arg(long, default_value_t = 10)]
        max_coeff: u64,
        #[arg(long, default_value_t = 200)]
        depth: usize,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 20)]
        max_digit: u64,
        #[arg(long, default_value_t = 60)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "1..1000")]
        d_range: String,
        /// Defaults to the number of available cores.
        #[arg(long)]
        workers: Option<usize>,
        /// Also check every rational under its twin expansion.
        #[arg(long)]
        twin: bool,
        #[arg(long)]
        legendre_max_b: Option<u64>,
        #[arg(long, default_value_t = 50)]
        finding_cap: usize,
    },
}

fn run(cli: &Cli) -> thetabound::Result<(Output, bool)> {
    let out = match &cli.command {
        Command::Expand { x, depth } => commands::expand(x, *depth)?,
        Command::Theta { x, range } => commands::theta(x, range)?,
        Command::Orbit { x, steps } => commands::orbit_cmd(x, *steps)?,
        Command::Bounds { kind, params } => commands::bounds(kind, params)?,
        Command::Region { kind, params } => commands::region(kind, params)?,
        Command::Measure { kind, params, tol } => commands::measure(kind, params, *tol)?,
        Command::Verify {
            family,
            checks,
            max_q,
            max_d,
            max_coeff,
            depth,
            count,
            max_digit,
            length,
            seed,
            d_range,
            workers,
            twin,
            legendre_max_b,
            finding_cap,
        } => {
            let args = VerifyArgs {
                family: family.clone(),
                checks: checks.clone(),
                max_q: *max_q,
                max_d: *max_d,
                max_coeff: *max_coeff,
                depth: *depth,
                count: *count,
                max_digit: *max_digit,
                length: *length,
                seed: *seed,
                d_range: d_range.clone(),
                workers: workers.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
                twin: *twin,
                legendre_max_b: *legendre_max_b,
                finding_cap: *finding_cap,
            };
            let (out, rep) = commands::verify(&args)?;
            return Ok((out, rep.passed));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, passed) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut text = match cli.format {
        OutputFormat::Human => out.human,
        OutputFormat::Json => serde_json::to_string_pretty(&out.json).expect("json"),
        OutputFormat::Csv => out.table.to_csv(),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
