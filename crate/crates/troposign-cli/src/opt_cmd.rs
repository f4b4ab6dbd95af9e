//! `opt poly|quad|copositive-qp`.

use std::path::PathBuf;

use clap::Subcommand;
use serde::Deserialize;
use troposign::linalg::{SignedMat, SignedVec};
use troposign::opt::{
    copositive_qp_value, minimize_poly, poly_roots, solve_quadratic, Attainment, QuadProblem,
    SignedPoly,
};
use troposign::signed::SignedTrop;

use crate::inputs::{print_json, read_json, read_signed_matrix};
use crate::{CmdResult, Outcome};

#[derive(Subcommand)]
pub enum OptCmd {
    /// Minimize a univariate signed polynomial
    Poly {
        #[arg(long)]
        coeffs: PathBuf,
    },
    /// Solve the tropical quadratic program inf xᵀAx ⊕ bᵀx (A positive definite)
    Quad {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Copositivity as a quadratic program: value 𝟘 or ⊥ with a witness
    CopositiveQp {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Deserialize)]
struct PolyInput {
    coeffs: Vec<SignedTrop>,
}

#[derive(Deserialize)]
struct QuadInput {
    #[serde(rename = "A")]
    a: SignedMat,
    b: SignedVec,
}

pub fn run(cmd: OptCmd) -> CmdResult {
    match cmd {
        OptCmd::Poly { coeffs } => {
            let data: PolyInput = read_json(&coeffs)?;
            let f = SignedPoly::new(data.coeffs).map_err(|e| e.to_string())?;
            let result = minimize_poly(&f);
            let roots = poly_roots(&f);
            let (attainment, root, side) = match &result.attainment {
                Attainment::AttainedAt(at) => (format!("at {at}"), None, None),
                Attainment::OneSidedLimitAt { root, side } => {
                    (format!("limit at {root}"), Some(root.clone()), Some(*side))
                }
                Attainment::Unbounded => ("unbounded".to_string(), None, None),
            };
            print_json(&serde_json::json!({
                "value": result.value,
                "attainment": attainment,
                "root": root,
                "side": side,
                "roots": roots,
            }))?;
            Ok(Outcome::Affirmative)
        }
        OptCmd::Quad { input } => {
            let data: QuadInput = read_json(&input)?;
            let sol = solve_quadratic(&QuadProblem { a: data.a, b: data.b })
                .map_err(|e| e.to_string())?;
            let xstar = match &sol.xstar {
                Some(x) => serde_json::to_value(x).map_err(|e| e.to_string())?,
                None => serde_json::Value::String("non-generic".into()),
            };
            print_json(&serde_json::json!({
                "value": sol.value,
                "xbar": sol.xbar,
                "xstar": xstar,
            }))?;
            Ok(Outcome::Affirmative)
        }
        OptCmd::CopositiveQp { input } => {
            let a = read_signed_matrix(&input)?;
            let r = copositive_qp_value(&a).map_err(|e| e.to_string())?;
            let copositive = r.value == SignedTrop::Zero;
            print_json(&serde_json::json!({
                "value": r.value,
                "witness": r.witness,
            }))?;
            Ok(Outcome::from_bool(copositive))
        }
    }
}
