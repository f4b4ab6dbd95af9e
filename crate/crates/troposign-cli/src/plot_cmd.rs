//! `plot poly`: piecewise data of a univariate signed polynomial on a
//! magnitude grid, swept in ascending `⪯` order (negative branch down,
//! then `𝟘`, then the positive branch up).

use std::path::PathBuf;

use clap::{Subcommand, ValueEnum};
use serde::Deserialize;
use troposign::opt::{poly_plot_data, SignedPoly};
use troposign::signed::SignedTrop;

use crate::inputs::{parse_rat_arg, print_json, read_json};
use crate::{CmdResult, Outcome};

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
pub enum PlotCmd {
    /// Tabulate f(x) over both signed branches of a magnitude range
    Poly {
        #[arg(long)]
        coeffs: PathBuf,
        /// Magnitude range `lo:hi`
        #[arg(long, default_value = "-6:6", allow_hyphen_values = true)]
        range: String,
        #[arg(long, default_value = "0.25", allow_hyphen_values = true)]
        step: String,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

#[derive(Deserialize)]
struct PolyInput {
    coeffs: Vec<SignedTrop>,
}

pub fn run(cmd: PlotCmd) -> CmdResult {
    match cmd {
        PlotCmd::Poly { coeffs, range, step, format } => {
            let data: PolyInput = read_json(&coeffs)?;
            let f = SignedPoly::new(data.coeffs).map_err(|e| e.to_string())?;
            let (lo, hi) = range
                .split_once(':')
                .ok_or_else(|| format!("bad range {range:?}; expected lo:hi"))?;
            let lo = parse_rat_arg(lo)?;
            let hi = parse_rat_arg(hi)?;
            let step = parse_rat_arg(&step)?;
            let rows = poly_plot_data(&f, &lo, &hi, &step).map_err(|e| e.to_string())?;
            match format {
                Format::Tsv => {
                    println!("# x\tf(x)");
                    for (x, fx) in &rows {
                        println!("{x}\t{fx}");
                    }
                }
                Format::Json => {
                    let rows: Vec<_> =
                        rows.iter().map(|(x, fx)| serde_json::json!({ "x": x, "f": fx })).collect();
                    print_json(&rows)?;
                }
            }
            Ok(Outcome::Affirmative)
        }
    }
}
