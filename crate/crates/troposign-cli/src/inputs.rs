//! Input file schemas and small helpers shared by the subcommands.
//!
//! Indices in all CLI-facing JSON are 1-based; the library is 0-based and
//! the conversion happens here.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use troposign::cones::{Certificate, ConeVerdict};
use troposign::linalg::{SignedMat, SignedVec, TropMat, TropVec};
use troposign::polar::{FinitePairSet, FinitePointSet, SignedPair};
use troposign::sat::{Constraint, QuadForm, QuadSystem, RelTag};
use troposign::signed::SignedTrop;
use troposign::trop::{format_rat, parse_rat, Rat};

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn print_json<T: Serialize>(value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{text}");
    Ok(())
}

/// Matrices are accepted either bare or wrapped in `{"matrix": …}`.
#[derive(Deserialize)]
#[serde(untagged)]
pub enum MatrixFile<M> {
    Wrapped { matrix: M },
    Bare(M),
}

impl<M> MatrixFile<M> {
    pub fn into_inner(self) -> M {
        match self {
            MatrixFile::Wrapped { matrix } => matrix,
            MatrixFile::Bare(m) => m,
        }
    }
}

pub fn read_signed_matrix(path: &Path) -> Result<SignedMat, String> {
    Ok(read_json::<MatrixFile<SignedMat>>(path)?.into_inner())
}

pub fn read_trop_matrix(path: &Path) -> Result<TropMat, String> {
    Ok(read_json::<MatrixFile<TropMat>>(path)?.into_inner())
}

pub fn point_set(points: Vec<TropVec>) -> Result<FinitePointSet, String> {
    FinitePointSet::new(points).map_err(|e| e.to_string())
}

/// A cone verdict with 1-based certificate indices.
#[derive(Serialize)]
pub struct VerdictDto {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateDto>,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum CertificateDto {
    InequalitiesHold {
        checked: usize,
    },
    Violation {
        kind: troposign::cones::ViolationKind,
        i: usize,
        j: usize,
        lhs: SignedTrop,
        rhs: SignedTrop,
    },
    Factorization {
        matrix: TropMat,
    },
}

impl From<&ConeVerdict> for VerdictDto {
    fn from(v: &ConeVerdict) -> Self {
        let certificate = match &v.certificate {
            Certificate::InequalitiesHold { checked } => {
                Some(CertificateDto::InequalitiesHold { checked: *checked })
            }
            Certificate::Violation(viol) => Some(CertificateDto::Violation {
                kind: viol.kind.clone(),
                i: viol.i + 1,
                j: viol.j + 1,
                lhs: viol.lhs.clone(),
                rhs: viol.rhs.clone(),
            }),
            Certificate::Factorization(m) => {
                Some(CertificateDto::Factorization { matrix: m.clone() })
            }
        };
        VerdictDto { member: v.member, certificate }
    }
}

/// Sparse JSON form of a quadratic system (1-based indices).
#[derive(Serialize, Deserialize)]
pub struct QuadSystemDto {
    pub num_vars: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bool_vars: Option<usize>,
    pub constraints: Vec<ConstraintDto>,
}

#[derive(Serialize, Deserialize)]
pub struct ConstraintDto {
    pub rel: RelTag,
    pub label: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub quad: Vec<QuadTermDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lin: Vec<LinTermDto>,
    pub c: SignedTrop,
}

#[derive(Serialize, Deserialize)]
pub struct QuadTermDto {
    pub i: usize,
    pub j: usize,
    pub coeff: SignedTrop,
}

#[derive(Serialize, Deserialize)]
pub struct LinTermDto {
    pub i: usize,
    pub coeff: SignedTrop,
}

impl QuadSystemDto {
    pub fn from_system(sys: &QuadSystem) -> Self {
        let n = sys.num_vars;
        let constraints = sys
            .constraints
            .iter()
            .map(|c| {
                let mut quad = Vec::new();
                let mut lin = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if !c.form.a.at(i, j).is_zero() {
                            quad.push(QuadTermDto {
                                i: i + 1,
                                j: j + 1,
                                coeff: c.form.a.at(i, j).clone(),
                            });
                        }
                    }
                    if !c.form.b.get(i).is_zero() {
                        lin.push(LinTermDto { i: i + 1, coeff: c.form.b.get(i).clone() });
                    }
                }
                ConstraintDto { rel: c.rel, label: c.label.clone(), quad, lin, c: c.form.c.clone() }
            })
            .collect();
        QuadSystemDto { num_vars: n, bool_vars: sys.bool_vars, constraints }
    }

    pub fn into_system(self) -> Result<QuadSystem, String> {
        let n = self.num_vars;
        if n == 0 {
            return Err("num_vars must be positive".into());
        }
        let mut constraints = Vec::new();
        for (idx, c) in self.constraints.into_iter().enumerate() {
            let mut a = SignedMat::fill(n, n, SignedTrop::Zero);
            let mut b = SignedVec::zero(n);
            for t in c.quad {
                if t.i == 0 || t.i > n || t.j == 0 || t.j > n {
                    return Err(format!("constraint {}: index out of range", idx + 1));
                }
                a.set(t.i - 1, t.j - 1, t.coeff);
            }
            for t in c.lin {
                if t.i == 0 || t.i > n {
                    return Err(format!("constraint {}: index out of range", idx + 1));
                }
                b.set(t.i - 1, t.coeff);
            }
            constraints.push(Constraint {
                form: QuadForm { a, b, c: c.c },
                rel: c.rel,
                label: c.label,
            });
        }
        Ok(QuadSystem { num_vars: n, constraints, bool_vars: self.bool_vars })
    }
}

/// Pair-set description used by `polar axioms`.
#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum PairSetDto {
    /// A literal finite list of signed pairs.
    List { pairs: Vec<SignedPair> },
    /// The signed part of `A°`, with optional seed members (sampled when
    /// absent).
    Polar {
        #[serde(rename = "A")]
        a: Vec<TropVec>,
        #[serde(default)]
        seeds: Vec<SignedPair>,
    },
}

pub fn pair_set(dim: usize, pairs: Vec<SignedPair>) -> Result<FinitePairSet, String> {
    FinitePairSet::new(dim, pairs).map_err(|e| e.to_string())
}

/// Parse an exact rational CLI argument such as `1000000` or `5/2`.
pub fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s)
}

pub fn rat_string(r: &Rat) -> String {
    format_rat(r)
}
