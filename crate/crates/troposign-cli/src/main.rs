//! `troposign` — command-line interface to the signed tropical algebra
//! library: matrix-cone checks, polar membership and separation, signed
//! optimization, the 3-SAT encoder, monomial-lift verification harnesses,
//! plot data, and a deterministic test-corpus generator.
//!
//! Exit codes: 0 on success/positive verdicts, 1 on negative verdicts
//! (non-member, infeasible, inconsistent, separator-free), 2 on input or
//! usage errors.

mod cone_cmd;
mod gen_cmd;
mod inputs;
mod lift_cmd;
mod opt_cmd;
mod plot_cmd;
mod polar_cmd;
mod sat_cmd;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

/// Fixed default RNG seed; override with --seed or TROPOSIGN_SEED.
pub const DEFAULT_SEED: u64 = 1729;

#[derive(Parser)]
#[command(name = "troposign", version, about = "Exact signed tropical algebra toolkit")]
struct Cli {
    /// RNG seed for sampling subcommands
    #[arg(long, global = true, env = "TROPOSIGN_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matrix-cone membership and factorization
    Cone {
        #[command(subcommand)]
        cmd: cone_cmd::ConeCmd,
    },
    /// Signed polars: membership, separation, bend-cone axioms
    Polar {
        #[command(subcommand)]
        cmd: polar_cmd::PolarCmd,
    },
    /// Optimization over signed tropical numbers
    Opt {
        #[command(subcommand)]
        cmd: opt_cmd::OptCmd,
    },
    /// 3-SAT ↔ tropical quadratic feasibility
    Sat {
        #[command(subcommand)]
        cmd: sat_cmd::SatCmd,
    },
    /// Monomial Puiseux lifts and valuation-commutation harnesses
    Lift {
        #[command(subcommand)]
        cmd: lift_cmd::LiftCmd,
    },
    /// Plot-data emission
    Plot {
        #[command(subcommand)]
        cmd: plot_cmd::PlotCmd,
    },
    /// Deterministic test-corpus generation
    Gen {
        #[command(subcommand)]
        cmd: gen_cmd::GenCmd,
    },
}

/// A negative verdict (exit 1) as opposed to an input error (exit 2).
pub enum Outcome {
    Affirmative,
    Negative,
}

impl Outcome {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Outcome::Affirmative
        } else {
            Outcome::Negative
        }
    }
}

pub type CmdResult = Result<Outcome, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Cone { cmd } => cone_cmd::run(cmd),
        Command::Polar { cmd } => polar_cmd::run(cmd, cli.seed),
        Command::Opt { cmd } => opt_cmd::run(cmd),
        Command::Sat { cmd } => sat_cmd::run(cmd),
        Command::Lift { cmd } => lift_cmd::run(cmd, cli.seed),
        Command::Plot { cmd } => plot_cmd::run(cmd),
        Command::Gen { cmd } => gen_cmd::run(cmd, cli.seed),
    };
    match result {
        Ok(Outcome::Affirmative) => ExitCode::from(0),
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
