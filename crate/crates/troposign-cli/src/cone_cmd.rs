//! `cone check` and `cone factorize`.

use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use troposign::cones;

use crate::inputs::{print_json, read_signed_matrix, read_trop_matrix, VerdictDto};
use crate::{CmdResult, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum ConeKind {
    /// Tropical PSD over 𝕋 (unsigned entries)
    Psd,
    /// Signed tropical PSD
    PsdSigned,
    /// Signed tropical PD (strict)
    Pd,
    /// Tropical completely positive
    Cp,
    /// Tropical completely positive semidefinite
    Cpsd,
    /// Tropical copositive (signed entries)
    Copositive,
}

#[derive(Subcommand)]
pub enum ConeCmd {
    /// Decide cone membership; exit 1 on non-members
    Check {
        #[arg(long, value_enum)]
        cone: ConeKind,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Emit a Gram witness Y with Y⊙Yᵀ = X for a CP member
    Factorize {
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the witness here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub fn run(cmd: ConeCmd) -> CmdResult {
    match cmd {
        ConeCmd::Check { cone, input } => {
            let verdict =
                match cone {
                    ConeKind::Psd => {
                        cones::is_psd_trop(&read_trop_matrix(&input)?).map_err(|e| e.to_string())?
                    }
                    ConeKind::Cp => {
                        cones::is_cp(&read_trop_matrix(&input)?).map_err(|e| e.to_string())?
                    }
                    ConeKind::Cpsd => {
                        cones::is_cpsd(&read_trop_matrix(&input)?).map_err(|e| e.to_string())?
                    }
                    ConeKind::PsdSigned => cones::is_psd_signed(&read_signed_matrix(&input)?)
                        .map_err(|e| e.to_string())?,
                    ConeKind::Pd => cones::is_pd_signed(&read_signed_matrix(&input)?)
                        .map_err(|e| e.to_string())?,
                    ConeKind::Copositive => cones::is_copositive(&read_signed_matrix(&input)?)
                        .map_err(|e| e.to_string())?,
                };
            print_json(&VerdictDto::from(&verdict))?;
            Ok(Outcome::from_bool(verdict.member))
        }
        ConeCmd::Factorize { input, out } => {
            let x = read_trop_matrix(&input)?;
            let y = cones::cp_factorize(&x).map_err(|e| e.to_string())?;
            let json = serde_json::json!({ "matrix": y });
            match out {
                Some(path) => {
                    let text = serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?;
                    std::fs::write(&path, text).map_err(|e| e.to_string())?;
                }
                None => print_json(&json)?,
            }
            Ok(Outcome::Affirmative)
        }
    }
}
