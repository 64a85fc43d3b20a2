//! Command-line front end: poset files in, machine-readable reports out.

mod pipeline;
mod report;
mod sweep;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ocpoly::{GammaKind, TieBreak};

use pipeline::{delta_report, verify_report, VerifyOptions};
use report::load_poset;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad input: exit code 2.
    #[error("{0}")]
    Input(String),
    /// A verified property failed (or an internal stage broke): exit code 1.
    #[error("{0}")]
    Property(String),
}

#[derive(Parser)]
#[command(
    name = "ocpoly",
    version,
    about = "Exact workbench for reflexive polytopes built from poset pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute Ehrhart counts and the delta-vector of the chosen polytope.
    Delta(DeltaArgs),
    /// Run the full verification pipeline; exit 0 only if every check holds.
    Verify(VerifyArgs),
    /// Write a CSV over all labeled poset pairs of a given size.
    Sweep(SweepArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum KindArg {
    /// order polytope of P with negated chain polytope of Q
    Oc,
    /// order polytope of P with negated order polytope of Q
    Oo,
    /// chain polytope of P with negated chain polytope of Q
    Cc,
}

impl From<KindArg> for GammaKind {
    fn from(kind: KindArg) -> GammaKind {
        match kind {
            KindArg::Oc => GammaKind::OrderMinusChain,
            KindArg::Oo => GammaKind::OrderMinusOrder,
            KindArg::Cc => GammaKind::ChainMinusChain,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum TieArg {
    /// same-cardinality ideals ordered by ascending mask
    A,
    /// same-cardinality ideals ordered by descending mask
    B,
}

impl From<TieArg> for TieBreak {
    fn from(tie: TieArg) -> TieBreak {
        match tie {
            TieArg::A => TieBreak::MaskAscending,
            TieArg::B => TieBreak::MaskDescending,
        }
    }
}

#[derive(Args)]
struct DeltaArgs {
    /// Poset file for P: {"size": d, "covers": [[a, b], ...]}
    #[arg(long = "poset-p", value_name = "FILE")]
    poset_p: PathBuf,
    /// Poset file for Q, same format and size
    #[arg(long = "poset-q", value_name = "FILE")]
    poset_q: PathBuf,
    /// Which polytope to build from the pair
    #[arg(long, value_enum, default_value_t = KindArg::Oc)]
    kind: KindArg,
    /// Add per-stage wall times to the report (gives up byte-for-byte
    /// determinism)
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "poset-p", value_name = "FILE")]
    poset_p: PathBuf,
    #[arg(long = "poset-q", value_name = "FILE")]
    poset_q: PathBuf,
    #[arg(long, value_enum, default_value_t = KindArg::Oc)]
    kind: KindArg,
    /// Check the integer decomposition property up to this dilation
    #[arg(long, default_value_t = 3)]
    nmax: usize,
    /// Cross-check monomial counts up to this degree
    #[arg(long = "hilbert-depth", default_value_t = 3)]
    hilbert_depth: usize,
    /// Variable-order tie-break variant
    #[arg(long = "tie-break", value_enum, default_value_t = TieArg::A)]
    tie_break: TieArg,
    /// Write the Groebner diagnostics dump (variable order, binomials,
    /// S-pair outcomes) to this file
    #[arg(long, value_name = "FILE")]
    diagnostics: Option<PathBuf>,
    /// Self-test hook: swap the sides of one generator binomial before
    /// verification; the run must then fail
    #[arg(long)]
    corrupt_generators: bool,
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Poset size d
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value_t = KindArg::Oc)]
    kind: KindArg,
    /// Output CSV path
    #[arg(long, value_name = "FILE")]
    out: PathBuf,
    /// Refuse sweeps beyond this size
    #[arg(long, default_value_t = 4)]
    bound: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| dispatch(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(e @ CliError::Property(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Ok(Err(e @ CliError::Input(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(_) => {
            // the panic hook has already printed the assertion message
            eprintln!("error: internal assertion failure");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Delta(args) => {
            let p = load_poset(&args.poset_p)?;
            let q = load_poset(&args.poset_q)?;
            let report = delta_report(&p, &q, args.kind.into(), args.timing)?;
            print_json(&report)
        }
        Command::Verify(args) => {
            let p = load_poset(&args.poset_p)?;
            let q = load_poset(&args.poset_q)?;
            let opts = VerifyOptions {
                kind: args.kind.into(),
                n_max: args.nmax,
                hilbert_depth: args.hilbert_depth,
                tie_break: args.tie_break.into(),
                corrupt_generators: args.corrupt_generators,
                timing: args.timing,
                want_diagnostics: args.diagnostics.is_some(),
            };
            let outcome = verify_report(&p, &q, &opts)?;
            if let (Some(path), Some(diag)) = (&args.diagnostics, &outcome.diagnostics) {
                let body = serde_json::to_string_pretty(diag)
                    .expect("diagnostics serialize cleanly");
                fs::write(path, body + "\n")
                    .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
            }
            print_json(&outcome.report)?;
            if let Some(first) = outcome.failures.first() {
                return Err(CliError::Property(format!(
                    "first failing property: {first}"
                )));
            }
            Ok(())
        }
        Command::Sweep(args) => sweep::run_sweep(args.d, args.kind.into(), &args.out, args.bound),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    let body = serde_json::to_string_pretty(value).expect("reports serialize cleanly");
    println!("{body}");
    Ok(())
}
