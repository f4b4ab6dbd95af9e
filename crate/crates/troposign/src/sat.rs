//! The 3-SAT ↔ tropical quadratic feasibility encoder and its exhaustive
//! checker, plus DIMACS CNF parsing and writing.
//!
//! A CNF over `m` Boolean variables becomes a system over `2m` signed
//! unknowns `x₁..x_m, y₁..y_m` interpreted over the tropical numbers
//! `0` and `1` (that is, `Pos(0)` and `Pos(1)`):
//!
//! - domain constraints `s² ⊖ 1s ⊕ 1 ∇ 𝟘` forcing each unknown into
//!   `{0, 1}` (the form factors as `(s ⊖ 0)(s ⊖ 1)`),
//! - negation links `xᵢ ⊙ yᵢ ∇ 1`,
//! - one linear constraint `ℓ₁ ⊕ ℓ₂ ⊕ ℓ₃ ∇ 1` per clause, with `yⱼ`
//!   standing in for `¬xⱼ`.
//!
//! Every balance constraint is emitted as the pair of inequalities
//! `⪯ 𝟘` / `⪰ 𝟘`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::linalg::{LinalgError, SignedMat, SignedVec};
use crate::opt::{quad_form, OptError};
use crate::signed::SignedTrop;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("malformed clause {index}: {reason}")]
    MalformedClause { index: usize, reason: String },
    #[error("bad DIMACS input: {0}")]
    BadDimacs(String),
    #[error("variable domain {0} is empty")]
    EmptyDomain(usize),
    #[error("domain count {0} does not match variable count {1}")]
    DomainCount(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("constraint evaluation failed: {0}")]
    Eval(String),
}

/// A CNF formula with clauses of one to three literals; literals are
/// DIMACS-style signed variable indices (1-based, negative = negated).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

impl Cnf {
    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|clause| {
            clause.iter().any(|&lit| {
                let v = assignment[(lit.unsigned_abs() as usize) - 1];
                if lit > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }

    /// Exhaustive satisfiability check; first satisfying assignment in
    /// lexicographic order (false < true), or `None`.
    pub fn satisfiable_exhaustive(&self) -> Option<Vec<bool>> {
        let m = self.num_vars;
        for bits in 0u64..(1u64 << m) {
            let assignment: Vec<bool> = (0..m).map(|i| bits >> (m - 1 - i) & 1 == 1).collect();
            if self.eval(&assignment) {
                return Some(assignment);
            }
        }
        None
    }
}

/// Parse DIMACS CNF text. Clauses longer than three literals are rejected
/// (this is a 3-SAT encoder).
pub fn parse_dimacs(text: &str) -> Result<Cnf, SatError> {
    let mut num_vars = None;
    let mut declared_clauses = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let mut parts = rest.split_whitespace();
            if parts.next() != Some("cnf") {
                return Err(SatError::BadDimacs("expected 'p cnf <vars> <clauses>'".into()));
            }
            num_vars = Some(
                parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| SatError::BadDimacs("bad variable count".into()))?,
            );
            declared_clauses = Some(
                parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| SatError::BadDimacs("bad clause count".into()))?,
            );
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i64 =
                tok.parse().map_err(|_| SatError::BadDimacs(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                if !current.is_empty() {
                    clauses.push(std::mem::take(&mut current));
                }
            } else {
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    let num_vars = num_vars.ok_or_else(|| SatError::BadDimacs("missing problem line".into()))?;
    if let Some(d) = declared_clauses {
        if d != clauses.len() {
            return Err(SatError::BadDimacs(format!(
                "declared {d} clauses, found {}",
                clauses.len()
            )));
        }
    }
    let cnf = Cnf { num_vars, clauses };
    validate_cnf(&cnf)?;
    Ok(cnf)
}

pub fn to_dimacs(cnf: &Cnf, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p cnf {} {}", cnf.num_vars, cnf.clauses.len());
    for clause in &cnf.clauses {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        let _ = writeln!(out, "0");
    }
    out
}

fn validate_cnf(cnf: &Cnf) -> Result<(), SatError> {
    for (index, clause) in cnf.clauses.iter().enumerate() {
        if clause.is_empty() || clause.len() > 3 {
            return Err(SatError::MalformedClause {
                index,
                reason: format!("clause must have 1..=3 literals, got {}", clause.len()),
            });
        }
        for &lit in clause {
            let v = lit.unsigned_abs() as usize;
            if lit == 0 || v > cnf.num_vars {
                return Err(SatError::MalformedClause {
                    index,
                    reason: format!("literal {lit} out of range 1..={}", cnf.num_vars),
                });
            }
        }
    }
    Ok(())
}

/// Relation tag of a constraint `f(x) ⟨rel⟩ 𝟘`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelTag {
    Leq0,
    Geq0,
    Bal0,
}

/// A quadratic form `f(x) = xᵀAx ⊕ bᵀx ⊕ c` over `𝕊`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadForm {
    pub a: SignedMat,
    pub b: SignedVec,
    pub c: SignedTrop,
}

impl QuadForm {
    pub fn eval(&self, x: &SignedVec) -> Result<SignedTrop, OptError> {
        let quad = quad_form(&self.a, x)?;
        let lin = self.b.dot_signed(x)?;
        Ok(&(&quad + &lin) + &self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub form: QuadForm,
    pub rel: RelTag,
    /// Human-readable provenance, e.g. `domain(x2)` or `clause 3`.
    pub label: String,
}

impl Constraint {
    pub fn satisfied_by(&self, x: &SignedVec) -> Result<bool, SatError> {
        let v = self.form.eval(x).map_err(|e| SatError::Eval(e.to_string()))?;
        Ok(match self.rel {
            RelTag::Leq0 => v.leq(&SignedTrop::Zero),
            RelTag::Geq0 => v.geq(&SignedTrop::Zero),
            RelTag::Bal0 => v.is_balanced_class(),
        })
    }

    /// Largest variable index with a nonzero coefficient, for prefix
    /// pruning during enumeration.
    fn max_involved_var(&self) -> Option<usize> {
        let mut best = None;
        let n = self.form.b.dim();
        for i in 0..n {
            let mut involved = !self.form.b.get(i).is_zero();
            for j in 0..n {
                involved =
                    involved || !self.form.a.at(i, j).is_zero() || !self.form.a.at(j, i).is_zero();
            }
            if involved {
                best = Some(i);
            }
        }
        best
    }
}

/// A conjunction of tagged quadratic constraints over `num_vars` unknowns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSystem {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    /// Number of original Boolean variables when the system came from a
    /// CNF (`num_vars = 2·bool_vars`), for decoding witnesses.
    pub bool_vars: Option<usize>,
}

impl QuadSystem {
    pub fn satisfied_by(&self, x: &SignedVec) -> Result<bool, SatError> {
        for c in &self.constraints {
            if !c.satisfied_by(x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Encode a 3-CNF as a tropical quadratic feasibility system over `2m`
/// unknowns, emitting each balance constraint as an inequality pair.
pub fn encode_3sat(cnf: &Cnf) -> Result<QuadSystem, SatError> {
    validate_cnf(cnf)?;
    let m = cnf.num_vars;
    let n = 2 * m;
    let one = SignedTrop::pos_int(1);
    let mut constraints = Vec::new();

    let mut emit_balance = |a: SignedMat, b: SignedVec, c: SignedTrop, label: String| {
        let form = QuadForm { a, b, c };
        constraints.push(Constraint {
            form: form.clone(),
            rel: RelTag::Leq0,
            label: label.clone(),
        });
        constraints.push(Constraint { form, rel: RelTag::Geq0, label });
    };

    // domain: s² ⊖ 1s ⊕ 1 ∇ 𝟘 for every unknown s
    for s in 0..n {
        let mut a = SignedMat::fill(n, n, SignedTrop::Zero);
        a.set(s, s, SignedTrop::one());
        let mut b = SignedVec::zero(n);
        b.set(s, SignedTrop::neg_int(1));
        let name = if s < m { format!("x{}", s + 1) } else { format!("y{}", s - m + 1) };
        emit_balance(a, b, one.clone(), format!("domain({name})"));
    }

    // negation links: x_i ⊙ y_i ⊖ 1 ∇ 𝟘
    for i in 0..m {
        let mut a = SignedMat::fill(n, n, SignedTrop::Zero);
        a.set(i, m + i, SignedTrop::one());
        a.set(m + i, i, SignedTrop::one());
        let b = SignedVec::zero(n);
        emit_balance(a, b, SignedTrop::neg_int(1), format!("link(x{0},y{0})", i + 1));
    }

    // clauses: ℓ₁ ⊕ ℓ₂ ⊕ ℓ₃ ⊖ 1 ∇ 𝟘
    for (index, clause) in cnf.clauses.iter().enumerate() {
        let a = SignedMat::fill(n, n, SignedTrop::Zero);
        let mut b = SignedVec::zero(n);
        for &lit in clause {
            let v = (lit.unsigned_abs() as usize) - 1;
            let idx = if lit > 0 { v } else { m + v };
            b.set(idx, SignedTrop::one());
        }
        emit_balance(a, b, SignedTrop::neg_int(1), format!("clause {}", index + 1));
    }

    Ok(QuadSystem { num_vars: n, constraints, bool_vars: Some(m) })
}

/// The `{0, 1}` domain (tropical `Pos(0)`, `Pos(1)`) for every unknown.
pub fn domain01(num_vars: usize) -> Vec<Vec<SignedTrop>> {
    vec![vec![SignedTrop::pos_int(0), SignedTrop::pos_int(1)]; num_vars]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    pub witness: Option<SignedVec>,
    /// Number of (partial) assignments visited by the search.
    pub nodes_visited: usize,
}

/// Exhaustive feasibility over finite per-variable domains.
///
/// The search enumerates assignments depth-first in lexicographic order
/// and prunes on any constraint whose variables are all assigned, so the
/// first witness found is the lexicographically first one. Over the
/// `{0,1}` domain of a SAT encoding this is exact; over user-supplied
/// finite domains it is exhaustive for those domains only (a sound
/// sampler when the intended domain is infinite).
pub fn feasibility_bruteforce(
    sys: &QuadSystem,
    domains: &[Vec<SignedTrop>],
) -> Result<Feasibility, SatError> {
    if domains.len() != sys.num_vars {
        return Err(SatError::DomainCount(domains.len(), sys.num_vars));
    }
    if let Some(i) = domains.iter().position(|d| d.is_empty()) {
        return Err(SatError::EmptyDomain(i));
    }

    // sparse views of the constraints: only the nonzero terms matter, and
    // SAT encodings have at most a handful per constraint
    struct SparseConstraint<'a> {
        quad: Vec<(usize, usize, &'a SignedTrop)>,
        lin: Vec<(usize, &'a SignedTrop)>,
        c: &'a SignedTrop,
        rel: RelTag,
    }
    impl SparseConstraint<'_> {
        fn satisfied_by(&self, x: &SignedVec) -> bool {
            let mut acc = self.c.clone();
            for &(i, j, coeff) in &self.quad {
                acc = &acc + &(&(coeff * x.get(i)) * x.get(j));
            }
            for &(i, coeff) in &self.lin {
                acc = &acc + &(coeff * x.get(i));
            }
            match self.rel {
                RelTag::Leq0 => acc.leq(&SignedTrop::Zero),
                RelTag::Geq0 => acc.geq(&SignedTrop::Zero),
                RelTag::Bal0 => acc.is_balanced_class(),
            }
        }
    }
    let sparse: Vec<SparseConstraint<'_>> = sys
        .constraints
        .iter()
        .map(|c| {
            let n = sys.num_vars;
            let mut quad = Vec::new();
            let mut lin = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if !c.form.a.at(i, j).is_zero() {
                        quad.push((i, j, c.form.a.at(i, j)));
                    }
                }
                if !c.form.b.get(i).is_zero() {
                    lin.push((i, c.form.b.get(i)));
                }
            }
            SparseConstraint { quad, lin, c: &c.form.c, rel: c.rel }
        })
        .collect();

    // constraints grouped by the depth at which they become checkable
    let mut by_depth: Vec<Vec<usize>> = vec![Vec::new(); sys.num_vars + 1];
    for (ci, c) in sys.constraints.iter().enumerate() {
        match c.max_involved_var() {
            Some(v) => by_depth[v + 1].push(ci),
            None => by_depth[0].push(ci),
        }
    }

    let mut x = SignedVec::zero(sys.num_vars);
    let mut nodes = 0usize;

    // constant constraints first
    for &ci in &by_depth[0] {
        if !sparse[ci].satisfied_by(&x) {
            return Ok(Feasibility { feasible: false, witness: None, nodes_visited: 0 });
        }
    }

    fn dfs(
        depth: usize,
        num_vars: usize,
        domains: &[Vec<SignedTrop>],
        sparse: &[SparseConstraint<'_>],
        by_depth: &[Vec<usize>],
        x: &mut SignedVec,
        nodes: &mut usize,
    ) -> Option<SignedVec> {
        if depth == num_vars {
            return Some(x.clone());
        }
        for v in &domains[depth] {
            *nodes += 1;
            x.set(depth, v.clone());
            let ok = by_depth[depth + 1].iter().all(|&ci| sparse[ci].satisfied_by(x));
            if ok {
                if let Some(w) = dfs(depth + 1, num_vars, domains, sparse, by_depth, x, nodes) {
                    return Some(w);
                }
            }
        }
        x.set(depth, SignedTrop::Zero);
        None
    }

    let witness = dfs(0, sys.num_vars, domains, &sparse, &by_depth, &mut x, &mut nodes);
    Ok(Feasibility { feasible: witness.is_some(), witness, nodes_visited: nodes })
}

/// Decode a feasibility witness of a SAT encoding back to a Boolean
/// assignment (`xᵢ = 1` means true).
pub fn decode_assignment(sys: &QuadSystem, witness: &SignedVec) -> Option<Vec<bool>> {
    let m = sys.bool_vars?;
    Some((0..m).map(|i| witness.get(i) == &SignedTrop::pos_int(1)).collect())
}
