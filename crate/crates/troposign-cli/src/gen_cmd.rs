//! `gen corpus`: deterministic files of members and non-members with
//! certificates, for acceptance runs and downstream consumers. Identical
//! (argv, seed) produce bit-identical files.

use std::fs;
use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use rand::Rng;
use troposign::cones::{cp_factorize, is_copositive, is_cp, is_psd_signed};
use troposign::opt::copositive_qp_value;
use troposign::polar::SignedPair;
use troposign::sample::{
    rand_copositive_member, rand_cp_member, rand_point_set, rand_polar_member,
    rand_psd_signed_member, rand_symmetric_signed, rand_symmetric_trop, rng_from_seed,
    MagnitudeGrid,
};
use troposign::sat::{to_dimacs, Cnf};

use crate::inputs::VerdictDto;
use crate::{CmdResult, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum CorpusKind {
    Psd,
    Cp,
    Copositive,
    Polar,
    Sat,
}

#[derive(Subcommand)]
pub enum GenCmd {
    /// Generate `count` corpus files under `out`
    Corpus {
        #[arg(long, value_enum)]
        kind: CorpusKind,
        /// Matrix/vector dimension (Boolean variable count for `sat`)
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

pub fn run(cmd: GenCmd, seed: u64) -> CmdResult {
    let GenCmd::Corpus { kind, n, count, out } = cmd;
    if n == 0 || n > 6 {
        return Err("dimension must be in 1..=6".into());
    }
    fs::create_dir_all(&out).map_err(|e| e.to_string())?;
    let mut rng = rng_from_seed(seed);
    let grid = MagnitudeGrid::default();

    for idx in 0..count {
        // even indices are members by construction, odd ones are sampled
        // until a non-member appears (certificates recorded either way)
        let want_member = idx % 2 == 0;
        let (stem, json) = match kind {
            CorpusKind::Psd => {
                let m = loop {
                    let cand = if want_member {
                        rand_psd_signed_member(&mut rng, n, &grid)
                    } else {
                        rand_symmetric_signed(&mut rng, n, &grid)
                    };
                    if is_psd_signed(&cand).map_err(|e| e.to_string())?.member == want_member {
                        break cand;
                    }
                };
                let verdict = is_psd_signed(&m).map_err(|e| e.to_string())?;
                (
                    format!("psd_n{n}_{idx:03}"),
                    serde_json::json!({
                        "matrix": m,
                        "expect": VerdictDto::from(&verdict),
                    }),
                )
            }
            CorpusKind::Cp => {
                let m = loop {
                    let cand = if want_member {
                        rand_cp_member(&mut rng, n, &grid)
                    } else {
                        rand_symmetric_trop(&mut rng, n, &grid)
                    };
                    if is_cp(&cand).map_err(|e| e.to_string())?.member == want_member {
                        break cand;
                    }
                };
                let verdict = is_cp(&m).map_err(|e| e.to_string())?;
                let factorization = if verdict.member {
                    Some(cp_factorize(&m).map_err(|e| e.to_string())?)
                } else {
                    None
                };
                (
                    format!("cp_n{n}_{idx:03}"),
                    serde_json::json!({
                        "matrix": m,
                        "expect": VerdictDto::from(&verdict),
                        "factorization": factorization,
                    }),
                )
            }
            CorpusKind::Copositive => {
                let m = loop {
                    let cand = if want_member {
                        rand_copositive_member(&mut rng, n, &grid)
                    } else {
                        rand_symmetric_signed(&mut rng, n, &grid)
                    };
                    if is_copositive(&cand).map_err(|e| e.to_string())?.member == want_member {
                        break cand;
                    }
                };
                let verdict = is_copositive(&m).map_err(|e| e.to_string())?;
                let witness = copositive_qp_value(&m).map_err(|e| e.to_string())?.witness;
                (
                    format!("copositive_n{n}_{idx:03}"),
                    serde_json::json!({
                        "matrix": m,
                        "expect": VerdictDto::from(&verdict),
                        "negative_witness": witness,
                    }),
                )
            }
            CorpusKind::Polar => {
                let gens = rng.gen_range(1..=3);
                let a = rand_point_set(&mut rng, n, gens, &grid);
                let members: Vec<SignedPair> = (0..5)
                    .map(|_| {
                        SignedPair::from_signed_vec(&rand_polar_member(&mut rng, &a, &grid, 40))
                            .map_err(|e| e.to_string())
                    })
                    .collect::<Result<_, _>>()?;
                (
                    format!("polar_n{n}_{idx:03}"),
                    serde_json::json!({
                        "A": a.points(),
                        "members": members,
                    }),
                )
            }
            CorpusKind::Sat => {
                let clauses: Vec<Vec<i64>> = (0..rng.gen_range(1..=3 * n))
                    .map(|_| {
                        (0..3)
                            .map(|_| {
                                let v = rng.gen_range(1..=n) as i64;
                                if rng.gen_bool(0.5) {
                                    v
                                } else {
                                    -v
                                }
                            })
                            .collect()
                    })
                    .collect();
                let cnf = Cnf { num_vars: n, clauses };
                let sat = cnf.satisfiable_exhaustive().is_some();
                let text = to_dimacs(&cnf, &[format!("satisfiable = {sat}")]);
                let path = out.join(format!("sat_m{n}_{idx:03}.cnf"));
                fs::write(&path, text).map_err(|e| e.to_string())?;
                continue;
            }
        };
        let path = out.join(format!("{stem}.json"));
        let text = serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?;
        fs::write(&path, text).map_err(|e| e.to_string())?;
    }
    println!("wrote {count} files to {}", out.display());
    Ok(Outcome::Affirmative)
}
