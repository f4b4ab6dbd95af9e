//! `lift verify-polar|verify-collapse|psd`.

use std::path::PathBuf;

use clap::Subcommand;
use serde::Deserialize;
use troposign::lift::{
    lift_psd, verify_collapse, verify_polar_commutation, RationalLift, VerifyReport,
};
use troposign::linalg::TropVec;

use crate::inputs::{
    parse_rat_arg, point_set, print_json, rat_string, read_json, read_signed_matrix,
};
use crate::{CmdResult, Outcome};

#[derive(Subcommand)]
pub enum LiftCmd {
    /// Sample-verify that taking polars commutes with signed valuation
    VerifyPolar {
        #[arg(long = "A", alias = "a")]
        a: PathBuf,
        #[arg(long, default_value = "1000000")]
        t: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Sample-verify the CP/CPSD/PSD∩NN collapse under valuation
    VerifyCollapse {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1000000")]
        t: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Lift a PSD_n(𝕊) member to an exactly certified rational PSD matrix
    Psd {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "1000000")]
        t: String,
    },
}

#[derive(Deserialize)]
struct PointsInput {
    #[serde(rename = "A")]
    a: Vec<TropVec>,
}

fn lift_from_arg(t: &str) -> Result<RationalLift, String> {
    RationalLift::new(parse_rat_arg(t)?).map_err(|e| e.to_string())
}

fn report_json(report: &VerifyReport) -> serde_json::Value {
    serde_json::json!({
        "status": if report.consistent() { "consistent" } else { "counterexamples" },
        "checked": report.checked,
        "counterexamples": report
            .counterexamples
            .iter()
            .map(|c| serde_json::json!({ "direction": c.direction, "detail": c.detail }))
            .collect::<Vec<_>>(),
    })
}

pub fn run(cmd: LiftCmd, seed: u64) -> CmdResult {
    match cmd {
        LiftCmd::VerifyPolar { a, t, samples } => {
            let data: PointsInput = read_json(&a)?;
            let a = point_set(data.a)?;
            let lift = lift_from_arg(&t)?;
            let report =
                verify_polar_commutation(&a, &lift, samples, seed).map_err(|e| e.to_string())?;
            print_json(&report_json(&report))?;
            Ok(Outcome::from_bool(report.consistent()))
        }
        LiftCmd::VerifyCollapse { n, t, samples } => {
            let lift = lift_from_arg(&t)?;
            let report = verify_collapse(n, &lift, samples, seed).map_err(|e| e.to_string())?;
            print_json(&report_json(&report))?;
            Ok(Outcome::from_bool(report.consistent()))
        }
        LiftCmd::Psd { input, t } => {
            let a = read_signed_matrix(&input)?;
            let lift = lift_from_arg(&t)?;
            let lifted = lift_psd(&a, &lift).map_err(|e| e.to_string())?;
            let matrix: Vec<Vec<String>> =
                lifted.matrix.iter().map(|row| row.iter().map(rat_string).collect()).collect();
            let attempts: Vec<_> = lifted
                .attempts
                .iter()
                .map(|at| {
                    serde_json::json!({
                        "t": rat_string(&at.t),
                        "failed_minor": at.failed_minor.as_ref().map(|(idx, d)| {
                            serde_json::json!({
                                "indices": idx.iter().map(|i| i + 1).collect::<Vec<_>>(),
                                "determinant": rat_string(d),
                            })
                        }),
                    })
                })
                .collect();
            print_json(&serde_json::json!({
                "matrix": matrix,
                "t_used": rat_string(&lifted.t_used),
                "attempts": attempts,
                "psd_certified": true,
            }))?;
            Ok(Outcome::Affirmative)
        }
    }
}
