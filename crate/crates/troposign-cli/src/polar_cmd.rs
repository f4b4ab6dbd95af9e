//! `polar member|two-sided|one-sided|axioms|separate`.

use std::path::PathBuf;

use clap::Subcommand;
use serde::Deserialize;
use troposign::linalg::{SignedVec, TropVec};
use troposign::polar::{
    check_bend_axioms, one_sided_contains, polar_contains, separate, two_sided_contains,
    AxiomStatus, PairConeSpec, Separation, SignedPair,
};
use troposign::sample::{rand_polar_member, rng_from_seed, MagnitudeGrid};

use crate::inputs::{pair_set, point_set, print_json, read_json, PairSetDto};
use crate::{CmdResult, Outcome};

#[derive(Subcommand)]
pub enum PolarCmd {
    /// Signed polar membership: is the query in A°?
    Member {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Two-sided polar membership: is the query pair in A^▷?
    TwoSided {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// One-sided polar membership: is the query vector in B^◁?
    OneSided {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Check the signed-bend-cone axioms on sampled data
    Axioms {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Project the query onto hull(A) and build a verified separator
    Separate {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Deserialize)]
struct MemberInput {
    #[serde(rename = "A")]
    a: Vec<TropVec>,
    query: SignedVec,
}

#[derive(Deserialize)]
struct TwoSidedInput {
    #[serde(rename = "A")]
    a: Vec<TropVec>,
    query: SignedPair,
}

#[derive(Deserialize)]
struct OneSidedInput {
    #[serde(rename = "B")]
    b: Vec<SignedPair>,
    query: TropVec,
}

#[derive(Deserialize)]
struct AxiomsInput {
    set: PairSetDto,
}

#[derive(Deserialize)]
struct SeparateInput {
    #[serde(rename = "A")]
    a: Vec<TropVec>,
    query: TropVec,
}

pub fn run(cmd: PolarCmd, seed: u64) -> CmdResult {
    match cmd {
        PolarCmd::Member { input } => {
            let data: MemberInput = read_json(&input)?;
            let a = point_set(data.a)?;
            let member = polar_contains(&a, &data.query).map_err(|e| e.to_string())?;
            print_json(&serde_json::json!({ "member": member }))?;
            Ok(Outcome::from_bool(member))
        }
        PolarCmd::TwoSided { input } => {
            let data: TwoSidedInput = read_json(&input)?;
            let a = point_set(data.a)?;
            let member = two_sided_contains(&a, &data.query).map_err(|e| e.to_string())?;
            print_json(&serde_json::json!({ "member": member }))?;
            Ok(Outcome::from_bool(member))
        }
        PolarCmd::OneSided { input } => {
            let data: OneSidedInput = read_json(&input)?;
            let dim = data.query.dim();
            let b = pair_set(dim, data.b)?;
            let member = one_sided_contains(&b, &data.query).map_err(|e| e.to_string())?;
            print_json(&serde_json::json!({ "member": member }))?;
            Ok(Outcome::from_bool(member))
        }
        PolarCmd::Axioms { input, samples } => {
            let data: AxiomsInput = read_json(&input)?;
            let report = match data.set {
                PairSetDto::List { pairs } => {
                    let dim = pairs.first().map(|p| p.dim()).ok_or("empty pair list")?;
                    let set = pair_set(dim, pairs)?;
                    check_bend_axioms(&PairConeSpec::List(&set), &set, samples, seed)
                        .map_err(|e| e.to_string())?
                }
                PairSetDto::Polar { a, seeds } => {
                    let a = point_set(a)?;
                    let seeds = if seeds.is_empty() {
                        // rejection-sample members of A° as seeds
                        let mut rng = rng_from_seed(seed);
                        let grid = MagnitudeGrid::default();
                        (0..20)
                            .map(|_| {
                                SignedPair::from_signed_vec(&rand_polar_member(
                                    &mut rng, &a, &grid, 40,
                                ))
                                .map_err(|e| e.to_string())
                            })
                            .collect::<Result<Vec<_>, _>>()?
                    } else {
                        seeds
                    };
                    let seeds = pair_set(a.dim(), seeds)?;
                    check_bend_axioms(&PairConeSpec::PolarOf(&a), &seeds, samples, seed)
                        .map_err(|e| e.to_string())?
                }
            };
            let consistent = report.is_consistent();
            let json = match &report.status {
                AxiomStatus::Consistent => serde_json::json!({
                    "status": "consistent",
                    "samples_run": report.samples_run,
                }),
                AxiomStatus::Violation(v) => serde_json::json!({
                    "status": "violation",
                    "axiom": v.axiom,
                    "counterexample": {
                        "inputs": v.inputs,
                        "lambda": v.lambda,
                        "index": v.index.map(|i| i + 1),
                        "derived": v.derived,
                    },
                    "samples_run": report.samples_run,
                }),
            };
            print_json(&json)?;
            Ok(Outcome::from_bool(consistent))
        }
        PolarCmd::Separate { input } => {
            let data: SeparateInput = read_json(&input)?;
            let a = point_set(data.a)?;
            match separate(&a, &data.query).map_err(|e| e.to_string())? {
                Separation::InHull { projection } => {
                    print_json(&serde_json::json!({
                        "separator": null,
                        "in_hull": true,
                        "projection": projection,
                    }))?;
                    Ok(Outcome::Negative)
                }
                Separation::Separated { separator, projection } => {
                    print_json(&serde_json::json!({
                        "separator": separator,
                        "in_hull": false,
                        "projection": projection,
                    }))?;
                    Ok(Outcome::Affirmative)
                }
            }
        }
    }
}
