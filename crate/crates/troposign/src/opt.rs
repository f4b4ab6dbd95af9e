//! Optimization over signed tropical numbers: univariate polynomial
//! infima, root finding, tropical quadratic programs in closed form, and
//! copositivity as a quadratic program.
//!
//! Infima are taken with respect to `⪯` on `𝕊^∨ ∪ {⊤,⊥}`, restricted to
//! points where the objective is signed; balanced objective values are
//! infeasible by definition, which is what keeps `⪯` an order on the
//! values being compared.

use thiserror::Error;

use crate::cones::{is_copositive, is_pd_signed, ConeError, ViolationKind};
use crate::linalg::{comatrix, det_signed, LinalgError, SignedMat, SignedVec};
use crate::signed::{SignedTrop, TropError};
use crate::trop::{rat, Rat, TropNum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Trop(#[from] TropError),
    #[error("coefficient of degree {0} is not signed")]
    UnsignedCoefficient(usize),
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("polynomial evaluation requires a signed point, got {0}")]
    UnsignedPoint(String),
    #[error("quadratic solver requires a positive definite matrix")]
    NotPositiveDefinite,
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("plot step must be positive")]
    BadStep,
}

/// A formal univariate polynomial `⊕ₖ aₖ xᵏ` with signed coefficients and
/// nonzero leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPoly {
    coeffs: Vec<SignedTrop>,
}

impl SignedPoly {
    /// Build from coefficients in ascending degree order; trailing zero
    /// coefficients are trimmed.
    pub fn new(mut coeffs: Vec<SignedTrop>) -> Result<Self, OptError> {
        if let Some(k) = coeffs.iter().position(|c| !c.is_signed()) {
            return Err(OptError::UnsignedCoefficient(k));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(OptError::ZeroPolynomial);
        }
        Ok(SignedPoly { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &SignedTrop {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[SignedTrop] {
        &self.coeffs
    }

    /// Evaluate `⊕ₖ aₖ ⊙ xᵏ` in `𝕊`; the result may be balanced.
    pub fn eval(&self, x: &SignedTrop) -> Result<SignedTrop, OptError> {
        if !x.is_signed() {
            return Err(OptError::UnsignedPoint(x.to_string()));
        }
        let mut acc = SignedTrop::Zero;
        let mut xk = SignedTrop::one();
        for a in &self.coeffs {
            acc = &acc + &(a * &xk);
            xk = &xk * x;
        }
        Ok(acc)
    }

    /// `|f|(m) = maxₖ (|aₖ| + k·m)` over the support, as an exact rational.
    fn modulus_at(&self, m: &Rat) -> TropNum {
        let mut best = TropNum::NegInf;
        for (k, a) in self.coeffs.iter().enumerate() {
            if let Some(mag) = a.magnitude() {
                let v = TropNum::Fin(mag + m * rat(k as i64));
                if v > best {
                    best = v;
                }
            }
        }
        best
    }
}

/// All roots of `f`: the points `x ∈ 𝕊^∨` with `f(x) ∇ 𝟘`.
///
/// Candidates are `𝟘` (a root iff `a₀ = 𝟘`) and `Pos(m)`, `Neg(m)` for
/// each tie point `m` of the max-plus polynomial `|f|`; a point with a
/// single strictly dominating signed monomial evaluates to a signed value,
/// so no other root can exist. Returned in ascending `⪯` order.
pub fn poly_roots(f: &SignedPoly) -> Vec<SignedTrop> {
    let mut roots = Vec::new();
    if f.coeff(0).is_zero() {
        roots.push(SignedTrop::Zero);
    }
    let support: Vec<usize> = (0..=f.degree()).filter(|&k| !f.coeff(k).is_zero()).collect();
    let mut ties: Vec<Rat> = Vec::new();
    for (idx, &j) in support.iter().enumerate() {
        for &k in &support[idx + 1..] {
            // |a_j| + j·m = |a_k| + k·m
            let m = (f.coeff(j).magnitude().unwrap() - f.coeff(k).magnitude().unwrap())
                / rat((k - j) as i64);
            let at_tie = f.coeff(j).magnitude().unwrap() + &m * rat(j as i64);
            if TropNum::Fin(at_tie) == f.modulus_at(&m) && !ties.contains(&m) {
                ties.push(m);
            }
        }
    }
    ties.sort();
    for m in ties {
        for x in [SignedTrop::Neg(m.clone()), SignedTrop::Pos(m.clone())] {
            if f.eval(&x).unwrap().is_balanced_class() {
                roots.push(x);
            }
        }
    }
    roots.sort_by(|a, b| {
        if a == b {
            std::cmp::Ordering::Equal
        } else if a.lt(b) {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    roots
}

/// Which side a one-sided limit is taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LimitSide {
    Left,
    Right,
}

/// How the infimum of a univariate problem is approached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Attainment {
    /// The infimum is attained at the given point (only ever `𝟘`).
    AttainedAt(SignedTrop),
    /// The infimum is the one-sided limit at a root of maximal modulus.
    OneSidedLimitAt { root: SignedTrop, side: LimitSide },
    /// The objective is unbounded from below.
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    /// The infimum; `Bot` exactly when unbounded.
    pub value: SignedTrop,
    pub attainment: Attainment,
}

/// Is the value of the monomial `aₖ xᵏ` negative on the given branch?
fn monomial_negative(a_k: &SignedTrop, k: usize, negative_branch: bool) -> bool {
    let coeff_neg = matches!(a_k, SignedTrop::Neg(_));
    coeff_neg ^ (negative_branch && k % 2 == 1)
}

/// Does `f` change sign across the finite root `α`?
///
/// Just outside the tie the monomial of largest degree among the
/// achievers dominates, just inside the one of smallest degree; the root
/// is sign-changing iff those two monomials disagree in sign on the
/// root's branch.
fn root_changes_sign(f: &SignedPoly, alpha: &SignedTrop) -> bool {
    let m = alpha.magnitude().expect("finite root");
    let fm = match f.modulus_at(m) {
        TropNum::Fin(v) => v,
        TropNum::NegInf => return false,
    };
    let achievers: Vec<usize> = (0..=f.degree())
        .filter(|&k| f.coeff(k).magnitude().is_some_and(|mag| mag + m * rat(k as i64) == fm))
        .collect();
    let (lo, hi) = (*achievers.first().unwrap(), *achievers.last().unwrap());
    let negative_branch = matches!(alpha, SignedTrop::Neg(_));
    monomial_negative(f.coeff(lo), lo, negative_branch)
        != monomial_negative(f.coeff(hi), hi, negative_branch)
}

/// Minimize a univariate signed polynomial over `x ∈ 𝕊^∨` with `f(x)`
/// signed.
///
/// Odd degree or a negative leading coefficient give `⊥` (unbounded).
/// Otherwise the infimum is `⊖|f|(|α|)` for `α` the maximal-modulus root
/// at which `f` changes sign, approached one-sidedly (from the left of a
/// positive root, from the right of a negative one); when no sign change
/// exists anywhere — in particular when there is no root at all — the
/// polynomial function never takes negative values and the infimum
/// `f(𝟘) = a₀` is attained at `𝟘`. Degree zero is the constant `a₀`.
///
/// The sign-change filter is a sharpening of the textbook case split: a
/// balance point whose tie is dominated by even monomials on both sides
/// (e.g. `f = -3x² ⊕ 0x ⊕ 3` at `⊖3`) leaves the function positive on
/// both sides, and the infimum is then the attained one.
pub fn minimize_poly(f: &SignedPoly) -> OptResult {
    let n = f.degree();
    if n == 0 {
        return OptResult {
            value: f.coeff(0).clone(),
            attainment: Attainment::AttainedAt(SignedTrop::Zero),
        };
    }
    let leading = f.coeff(n);
    if n % 2 == 1 || matches!(leading, SignedTrop::Neg(_)) {
        return OptResult { value: SignedTrop::Bot, attainment: Attainment::Unbounded };
    }
    // maximal-modulus sign-changing root, preferring Pos on modulus ties
    let alpha = poly_roots(f)
        .into_iter()
        .filter(|r| !r.is_zero() && root_changes_sign(f, r))
        .max_by(|a, b| {
            let ord = a.modulus().unwrap().cmp(&b.modulus().unwrap());
            ord.then_with(|| {
                let a_pos = matches!(a, SignedTrop::Pos(_));
                let b_pos = matches!(b, SignedTrop::Pos(_));
                a_pos.cmp(&b_pos)
            })
        });
    match alpha {
        None => OptResult {
            value: f.coeff(0).clone(),
            attainment: Attainment::AttainedAt(SignedTrop::Zero),
        },
        Some(alpha) => {
            let m = alpha.magnitude().unwrap();
            let value = SignedTrop::Neg(match f.modulus_at(m) {
                TropNum::Fin(v) => v,
                TropNum::NegInf => unreachable!("|f| is finite at a finite root"),
            });
            let side = if matches!(alpha, SignedTrop::Pos(_)) {
                LimitSide::Left
            } else {
                LimitSide::Right
            };
            OptResult { value, attainment: Attainment::OneSidedLimitAt { root: alpha, side } }
        }
    }
}

/// Sweep a plot grid in ascending `⪯` order: the negative branch from
/// magnitude `hi` down to `lo`, then `𝟘`, then the positive branch from
/// `lo` up to `hi`. Balanced values are reported as such.
pub fn poly_plot_data(
    f: &SignedPoly,
    lo: &Rat,
    hi: &Rat,
    step: &Rat,
) -> Result<Vec<(SignedTrop, SignedTrop)>, OptError> {
    if step <= &rat(0) || lo > hi {
        return Err(OptError::BadStep);
    }
    let mut grid = Vec::new();
    let mut m = hi.clone();
    while &m >= lo {
        grid.push(SignedTrop::Neg(m.clone()));
        m -= step;
    }
    grid.push(SignedTrop::Zero);
    let mut m = lo.clone();
    while &m <= hi {
        grid.push(SignedTrop::Pos(m.clone()));
        m += step;
    }
    grid.into_iter().map(|x| Ok((x.clone(), f.eval(&x)?))).collect()
}

/// An unconstrained tropical quadratic problem `inf xᵀAx ⊕ bᵀx` with `A`
/// positive definite.
#[derive(Debug, Clone)]
pub struct QuadProblem {
    pub a: SignedMat,
    pub b: SignedVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadSolution {
    /// The optimal value `⊖ bᵀ diag(A)⁻¹ b`.
    pub value: SignedTrop,
    /// `x̄ = ⊖ diag(A)⁻¹ b`, the limit of a minimizing sequence.
    pub xbar: SignedVec,
    /// `x* = ⊖ (det A)⁻¹ (com A)ᵀ b`, the signed valuation of the lifted
    /// optimizer; `None` when the instance is non-generic (a balanced
    /// entry appears in `(com A)ᵀ b` or in `det A`).
    pub xstar: Option<SignedVec>,
}

/// Closed-form solution of the tropical quadratic program.
pub fn solve_quadratic(p: &QuadProblem) -> Result<QuadSolution, OptError> {
    if !is_pd_signed(&p.a)?.member {
        return Err(OptError::NotPositiveDefinite);
    }
    if p.a.rows() != p.b.dim() {
        return Err(OptError::DimMismatch(p.a.rows(), p.b.dim()));
    }
    if let Some(i) = p.b.first_balanced() {
        return Err(OptError::Linalg(LinalgError::BalancedEntry(i)));
    }
    let n = p.a.rows();

    let mut value = SignedTrop::Zero;
    let mut xbar_entries = Vec::with_capacity(n);
    for i in 0..n {
        let aii_inv = p.a.at(i, i).recip()?;
        let bi = p.b.get(i);
        value = &value + &(&bi.square() * &aii_inv);
        xbar_entries.push((&aii_inv * bi).negate());
    }
    let value = value.negate();
    let xbar = SignedVec::new(xbar_entries)?;

    // x* through the comatrix; n = 1 degenerates to x̄
    let xstar = if n == 1 {
        Some(xbar.clone())
    } else {
        let det = det_signed(&p.a)?;
        let com_t = comatrix(&p.a)?.transpose();
        let v = com_t.mul_vec(&p.b)?;
        if det.is_signed() && !det.is_zero() && v.is_signed() {
            let det_inv = det.recip()?;
            let entries: Vec<SignedTrop> = v.iter().map(|vi| (&det_inv * vi).negate()).collect();
            Some(SignedVec::new(entries)?)
        } else {
            None
        }
    };

    Ok(QuadSolution { value, xbar, xstar })
}

/// Outcome of the copositivity quadratic program `inf_{x ⪰ 𝟘} xᵀAx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopositiveQp {
    /// `𝟘` iff `A` is copositive, `⊥` otherwise.
    pub value: SignedTrop,
    /// For a non-copositive `A`, a nonnegative `x` with `xᵀAx` signed
    /// negative; scaling `x` drives the objective to `⊥`.
    pub witness: Option<SignedVec>,
}

/// Evaluate `xᵀAx` over `𝕊`.
pub fn quad_form(a: &SignedMat, x: &SignedVec) -> Result<SignedTrop, OptError> {
    Ok(x.dot_signed(&a.mul_vec(x)?)?)
}

/// The copositivity QP: value `𝟘` iff `A` is copositive, else `⊥`
/// together with a verified negative witness built from the violated
/// two-by-two inequality.
pub fn copositive_qp_value(a: &SignedMat) -> Result<CopositiveQp, OptError> {
    let verdict = is_copositive(a)?;
    if verdict.member {
        return Ok(CopositiveQp { value: SignedTrop::Zero, witness: None });
    }
    let viol = verdict.violation_data().expect("non-member carries a violation");
    let n = a.rows();
    let mut x = SignedVec::zero(n);
    match viol.kind {
        ViolationKind::DiagonalNotNonneg => {
            x.set(viol.i, SignedTrop::one());
        }
        ViolationKind::NegativePartSquare => {
            let (i, j) = (viol.i, viol.j);
            let beta = a.at(i, j).magnitude().unwrap().clone();
            match (a.at(i, i), a.at(j, j)) {
                (SignedTrop::Pos(_), SignedTrop::Pos(_)) => {
                    // x_i = 𝟙/√(A_ii), x_j = 𝟙/√(A_jj)
                    x.set(i, a.at(i, i).sqrt_pos()?.recip()?);
                    x.set(j, a.at(j, j).sqrt_pos()?.recip()?);
                }
                (SignedTrop::Zero, SignedTrop::Pos(gamma)) => {
                    x.set(i, SignedTrop::Pos((gamma - &beta) + rat(1)));
                    x.set(j, SignedTrop::one());
                }
                (SignedTrop::Pos(alpha), SignedTrop::Zero) => {
                    x.set(i, SignedTrop::one());
                    x.set(j, SignedTrop::Pos((alpha - &beta) + rat(1)));
                }
                (SignedTrop::Zero, SignedTrop::Zero) => {
                    x.set(i, SignedTrop::one());
                    x.set(j, SignedTrop::one());
                }
                _ => unreachable!("diagonal passed the nonnegativity check"),
            }
        }
        _ => unreachable!("copositivity violations are diagonal or negative-part"),
    }
    let val = quad_form(a, &x)?;
    assert!(
        matches!(val, SignedTrop::Neg(_)),
        "witness construction must give a signed negative value, got {val}"
    );
    Ok(CopositiveQp { value: SignedTrop::Bot, witness: Some(x) })
}
