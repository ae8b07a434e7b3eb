use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

#[derive(Parser, Debug)]
#[command(name = "ffec", version, about = "Elliptic curves over F_q(t)")]
struct Cli {
    /// Tolerance for floating-point checks.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Reduction data, conductor and L-function of a curve file.
    Analyze {
        #[arg(long)]
        curve: PathBuf,
        /// Largest place degree in the Euler product (default N + 4).
        #[arg(long)]
        max_place_deg: Option<usize>,
    },
    /// L-functions along F_d = F_q(t^{1/d}) or K_d = F_q(μ_d)(t^{1/d}).
    Tower {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, conflicts_with = "scan", required_unless_present = "scan")]
        d: Option<u32>,
        /// Scan d = q^n + 1 for n = 1..=N.
        #[arg(long)]
        scan: Option<u32>,
        /// Work over K_d instead of F_d.
        #[arg(long)]
        mu: bool,
    },
    /// Explicit points, heights and the Gram matrix of a family.
    Points {
        #[arg(long, default_value = "legendre")]
        family: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        f: u32,
        #[arg(long, default_value_t = 6)]
        iters: u32,
    },
    /// Berger data: genus, c1, c2 and catalog curves.
    Berger(BergerArgs),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "source")]
pub struct BergerSource {
    /// One of berger-L4, first-example, second-example, legendre.
    #[arg(long)]
    catalog: Option<String>,
    /// A data file with `f:` and `g:` lines.
    #[arg(long)]
    data: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BergerArgs {
    #[command(flatten)]
    source: BergerSource,
    #[arg(long, default_value_t = 5)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    f: u32,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<i64>,
    #[arg(long)]
    d: Option<u32>,
}

fn run(cli: Cli, argv: &[String]) -> Result<report::Report> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().context("thread pool")?;
    }
    let read = |p: &PathBuf| std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()));
    match cli.cmd {
        Cmd::Analyze { curve, max_place_deg } => {
            let text = read(&curve)?;
            commands::analyze(argv, &text, max_place_deg, cli.tol)
        }
        Cmd::Tower { curve, d, scan, mu } => {
            let text = read(&curve)?;
            commands::tower(argv, &text, d, scan, mu)
        }
        Cmd::Points { family, p, f, iters } => {
            if family != "legendre" {
                bail!("unknown family {family:?}; only legendre is available");
            }
            if iters == 0 {
                bail!("--iters must be positive");
            }
            commands::points(argv, p, f, iters, cli.tol)
        }
        Cmd::Berger(b) => {
            let data = b.source.data.as_ref().map(read).transpose()?;
            commands::berger(argv, b.source.catalog.as_deref(), data.as_deref(), b.p, b.f, b.a, b.d)
        }
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli, &argv) {
        Ok(r) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = r.write(&mut out, start.elapsed().as_millis()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if r.failures().is_empty() {
                ExitCode::SUCCESS
            } else {
                eprintln!("failed checks: {}", r.failures().join(", "));
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
