mod commands;
mod report;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use amc_core::Error;

#[derive(Parser)]
#[command(name = "amc", version, about = "Generalized Artin-Mumford curves L1(X) L2(Y) = 1 over finite fields")]
struct Cli {
    /// Worker threads for counting and search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Omit the timestamp so identical runs give identical bytes.
    #[arg(long, global = true)]
    deterministic: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Construction, validation and invariants of a curve.
    Curve {
        #[command(subcommand)]
        cmd: CurveCmd,
    },
    /// The automorphism group and its oracles.
    Aut {
        #[command(subcommand)]
        cmd: AutCmd,
    },
    /// Quotient curves and the y/z characterization families.
    Quotient {
        #[command(subcommand)]
        cmd: QuotientCmd,
    },
}

#[derive(Args, Clone, Debug, Default)]
pub struct CurveArgs {
    /// Curve file (amc-curve/1).
    #[arg(long)]
    pub curve: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Integer coefficients of L1 (of T, T^q̄, T^q̄², ...).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub l1: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub l2: Option<Vec<i64>>,
    /// L1 = L2 = T^p - T.
    #[arg(long)]
    pub classical: bool,
}

#[derive(Args, Clone, Debug, Default)]
pub struct QuotientArgs {
    /// Quotient curve file (amc-qcurve/1).
    #[arg(long)]
    pub qcurve: Option<PathBuf>,
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    /// Integer coefficients of L.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub l: Option<Vec<i64>>,
    /// The constant a (y family) or b (z family).
    #[arg(long, allow_hyphen_values = true)]
    pub constant: Option<i64>,
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Build a curve and print its file.
    New {
        #[command(flatten)]
        src: CurveArgs,
        #[arg(long)]
        curve_out: Option<PathBuf>,
    },
    Validate {
        #[command(flatten)]
        src: CurveArgs,
    },
    Genus {
        #[command(flatten)]
        src: CurveArgs,
    },
    /// Rational places over GF(Q0^k).
    Count {
        #[command(flatten)]
        src: CurveArgs,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// L-polynomial from N_1..N_2g (genus at most 4).
    Zeta {
        #[command(flatten)]
        src: CurveArgs,
    },
    /// p-rank by Deuring-Shafarevich, with the Nakajima check.
    Prank {
        #[command(flatten)]
        src: CurveArgs,
        /// Also run the zeta oracle.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand)]
enum AutCmd {
    /// The predicted group, every element verified.
    Claim {
        #[command(flatten)]
        src: CurveArgs,
    },
    /// Verify maps from a file, or the group generators.
    Verify {
        #[command(flatten)]
        src: CurveArgs,
        #[arg(long)]
        maps: Option<PathBuf>,
    },
    Structure {
        #[command(flatten)]
        src: CurveArgs,
    },
    /// Brute-force affine-linear search over GF(p^D).
    Search {
        #[command(flatten)]
        src: CurveArgs,
        #[arg(long)]
        ambient: usize,
        #[arg(long, default_value_t = amc_core::autgroup::DEFAULT_BUDGET)]
        budget: u64,
    },
    Orbits {
        #[command(flatten)]
        src: CurveArgs,
    },
}

#[derive(Subcommand)]
enum QuotientCmd {
    SigmaX {
        #[command(flatten)]
        src: CurveArgs,
    },
    SigmaY {
        #[command(flatten)]
        src: CurveArgs,
    },
    Diagonal {
        #[command(flatten)]
        src: CurveArgs,
        #[arg(long)]
        curve_out: Option<PathBuf>,
    },
    Ycurve {
        #[command(flatten)]
        src: QuotientArgs,
        #[arg(long)]
        zeta: bool,
        #[arg(long)]
        curve_out: Option<PathBuf>,
    },
    Zcurve {
        #[command(flatten)]
        src: QuotientArgs,
        #[arg(long)]
        zeta: bool,
        #[arg(long)]
        curve_out: Option<PathBuf>,
    },
    /// The group of order 4q, the fixed places of μ, and optionally a search.
    Yaut {
        #[command(flatten)]
        src: QuotientArgs,
        /// Search over GF(p^D).
        #[arg(long)]
        ambient: Option<usize>,
        #[arg(long, default_value_t = amc_core::autgroup::DEFAULT_BUDGET)]
        budget: u64,
    },
}

pub enum Failure {
    Usage(String),
    Refused(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Budget { .. } | Error::DeskScaleLimit(_) => Failure::Refused(e.to_string()),
            Error::Inconsistency(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<report::Report, Failure> {
    use commands::{aut, curve, quotient};
    match cli.command {
        Group::Curve { cmd } => match cmd {
            CurveCmd::New { src, curve_out } => curve::new(&src, curve_out.as_deref()),
            CurveCmd::Validate { src } => curve::validate(&src),
            CurveCmd::Genus { src } => curve::genus(&src),
            CurveCmd::Count { src, k } => curve::count(&src, k),
            CurveCmd::Zeta { src } => curve::zeta(&src),
            CurveCmd::Prank { src, oracle } => curve::prank(&src, oracle),
        },
        Group::Aut { cmd } => match cmd {
            AutCmd::Claim { src } => aut::claim(&src),
            AutCmd::Verify { src, maps } => aut::verify(&src, maps.as_deref()),
            AutCmd::Structure { src } => aut::structure(&src),
            AutCmd::Search { src, ambient, budget } => aut::search(&src, ambient, budget),
            AutCmd::Orbits { src } => aut::orbits(&src),
        },
        Group::Quotient { cmd } => match cmd {
            QuotientCmd::SigmaX { src } => quotient::sigma(&src, false),
            QuotientCmd::SigmaY { src } => quotient::sigma(&src, true),
            QuotientCmd::Diagonal { src, curve_out } => quotient::diagonal(&src, curve_out.as_deref()),
            QuotientCmd::Ycurve { src, zeta, curve_out } => quotient::ycurve(&src, zeta, curve_out.as_deref()),
            QuotientCmd::Zcurve { src, zeta, curve_out } => quotient::zcurve(&src, zeta, curve_out.as_deref()),
            QuotientCmd::Yaut { src, ambient, budget } => quotient::yaut(&src, ambient, budget),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let deterministic = cli.deterministic;
    let out = cli.out.clone();
    match run(cli) {
        Ok(report) => {
            let text = report.render(deterministic);
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &text) {
                        eprintln!("error: writing {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Refused(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(1)
        }
    }
}
