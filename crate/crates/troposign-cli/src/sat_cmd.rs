//! `sat encode|check`.

use std::fs;
use std::path::PathBuf;

use clap::Subcommand;
use troposign::sat::{
    decode_assignment, domain01, encode_3sat, feasibility_bruteforce, parse_dimacs,
};

use crate::inputs::{print_json, read_json, QuadSystemDto};
use crate::{CmdResult, Outcome};

#[derive(Subcommand)]
pub enum SatCmd {
    /// Encode a DIMACS 3-CNF as a tropical quadratic feasibility system
    Encode {
        #[arg(long)]
        cnf: PathBuf,
        /// Write the system here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check feasibility of a system over a finite domain
    Check {
        #[arg(long)]
        system: PathBuf,
        /// Per-variable domain; `01` is the tropical {0, 1} domain
        #[arg(long, default_value = "01")]
        domain: String,
    },
}

pub fn run(cmd: SatCmd) -> CmdResult {
    match cmd {
        SatCmd::Encode { cnf, out } => {
            let text = fs::read_to_string(&cnf).map_err(|e| format!("{}: {e}", cnf.display()))?;
            let parsed = parse_dimacs(&text).map_err(|e| e.to_string())?;
            let sys = encode_3sat(&parsed).map_err(|e| e.to_string())?;
            let dto = QuadSystemDto::from_system(&sys);
            match out {
                Some(path) => {
                    let json = serde_json::to_string_pretty(&dto).map_err(|e| e.to_string())?;
                    fs::write(&path, json).map_err(|e| e.to_string())?;
                }
                None => print_json(&dto)?,
            }
            Ok(Outcome::Affirmative)
        }
        SatCmd::Check { system, domain } => {
            let dto: QuadSystemDto = read_json(&system)?;
            let sys = dto.into_system()?;
            let domains = match domain.as_str() {
                "01" => domain01(sys.num_vars),
                other => return Err(format!("unknown domain {other:?}; expected \"01\"")),
            };
            let r = feasibility_bruteforce(&sys, &domains).map_err(|e| e.to_string())?;
            let assignment = r.witness.as_ref().and_then(|w| decode_assignment(&sys, w));
            print_json(&serde_json::json!({
                "feasible": r.feasible,
                "witness": r.witness,
                "assignment": assignment,
                "nodes_visited": r.nodes_visited,
            }))?;
            Ok(Outcome::from_bool(r.feasible))
        }
    }
}
