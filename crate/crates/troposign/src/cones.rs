//! Membership tests with certificates for the tropical matrix cones:
//! signed and unsigned PSD, PD, CP, CPSD and copositive, plus the
//! constructive CP factorization.
//!
//! All of these cones are decided by two-by-two inequality systems on the
//! entries; the quantified definitions over signed vectors are exercised
//! against these tests by brute-force grid oracles in the test suites.

use thiserror::Error;

use crate::linalg::{SignedMat, TropMat};
use crate::signed::SignedTrop;
use crate::trop::TropNum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("balanced entry at ({0},{1}): cone membership is defined over signed matrices")]
    BalancedEntry(usize, usize),
    #[error("matrix is not symmetric (differs at ({0},{1}))")]
    NotSymmetric(usize, usize),
    #[error("matrix is not a cone member; no factorization exists")]
    NotMember,
}

/// Why a membership test failed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    NotSymmetric,
    DiagonalNotNonneg,
    DiagonalNotPositive,
    OffDiagonalSquare,
    OffDiagonalSquareNotStrict,
    NegativePartSquare,
}

/// A re-checkable witness of non-membership: the failed inequality with
/// its two sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeViolation {
    pub kind: ViolationKind,
    pub i: usize,
    pub j: usize,
    pub lhs: SignedTrop,
    pub rhs: SignedTrop,
}

impl ConeViolation {
    /// Re-evaluate the recorded inequality; a genuine certificate fails it.
    pub fn reevaluates_to_failure(&self) -> bool {
        match self.kind {
            ViolationKind::NotSymmetric => self.lhs != self.rhs,
            ViolationKind::DiagonalNotNonneg => !self.lhs.geq(&self.rhs),
            ViolationKind::DiagonalNotPositive => !self.lhs.gt(&self.rhs),
            ViolationKind::OffDiagonalSquare | ViolationKind::NegativePartSquare => {
                !self.lhs.leq(&self.rhs)
            }
            ViolationKind::OffDiagonalSquareNotStrict => !self.lhs.lt(&self.rhs),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// All defining inequalities were checked and hold.
    InequalitiesHold { checked: usize },
    /// The first failed inequality, in check order.
    Violation(ConeViolation),
    /// A Gram witness `Y` with `Y ⊙ Yᵀ = X`.
    Factorization(TropMat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeVerdict {
    pub member: bool,
    pub certificate: Certificate,
}

impl ConeVerdict {
    fn member(checked: usize) -> Self {
        ConeVerdict { member: true, certificate: Certificate::InequalitiesHold { checked } }
    }

    fn violation(
        kind: ViolationKind,
        i: usize,
        j: usize,
        lhs: SignedTrop,
        rhs: SignedTrop,
    ) -> Self {
        ConeVerdict {
            member: false,
            certificate: Certificate::Violation(ConeViolation { kind, i, j, lhs, rhs }),
        }
    }

    pub fn violation_data(&self) -> Option<&ConeViolation> {
        match &self.certificate {
            Certificate::Violation(v) => Some(v),
            _ => None,
        }
    }
}

fn require_square_signed(a: &SignedMat) -> Result<(), ConeError> {
    if !a.is_square() {
        return Err(ConeError::NotSquare(a.rows(), a.cols()));
    }
    if let Some((i, j)) = a.first_balanced() {
        return Err(ConeError::BalancedEntry(i, j));
    }
    Ok(())
}

fn symmetry_violation(a: &SignedMat) -> Option<(usize, usize)> {
    for i in 0..a.rows() {
        for j in 0..i {
            if a.at(i, j) != a.at(j, i) {
                return Some((j, i));
            }
        }
    }
    None
}

/// Signed tropical positive semidefiniteness:
/// `A` symmetric, `Aᵢᵢ ⪰ 𝟘`, and `Aᵢⱼ² ⪯ AᵢᵢAⱼⱼ` for `i ≠ j`.
pub fn is_psd_signed(a: &SignedMat) -> Result<ConeVerdict, ConeError> {
    require_square_signed(a)?;
    let n = a.rows();
    if let Some((i, j)) = symmetry_violation(a) {
        return Ok(ConeVerdict::violation(
            ViolationKind::NotSymmetric,
            i,
            j,
            a.at(i, j).clone(),
            a.at(j, i).clone(),
        ));
    }
    let mut checked = 0;
    for i in 0..n {
        checked += 1;
        if !a.at(i, i).geq(&SignedTrop::Zero) {
            return Ok(ConeVerdict::violation(
                ViolationKind::DiagonalNotNonneg,
                i,
                i,
                a.at(i, i).clone(),
                SignedTrop::Zero,
            ));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let lhs = a.at(i, j).square();
            let rhs = a.at(i, i) * a.at(j, j);
            if !lhs.leq(&rhs) {
                return Ok(ConeVerdict::violation(
                    ViolationKind::OffDiagonalSquare,
                    i,
                    j,
                    lhs,
                    rhs,
                ));
            }
        }
    }
    Ok(ConeVerdict::member(checked))
}

/// Signed tropical positive definiteness: the strict variant,
/// `Aᵢᵢ ≻ 𝟘` and `Aᵢⱼ² ≺ AᵢᵢAⱼⱼ` for `i ≠ j`.
pub fn is_pd_signed(a: &SignedMat) -> Result<ConeVerdict, ConeError> {
    require_square_signed(a)?;
    let n = a.rows();
    if let Some((i, j)) = symmetry_violation(a) {
        return Ok(ConeVerdict::violation(
            ViolationKind::NotSymmetric,
            i,
            j,
            a.at(i, j).clone(),
            a.at(j, i).clone(),
        ));
    }
    let mut checked = 0;
    for i in 0..n {
        checked += 1;
        if !a.at(i, i).gt(&SignedTrop::Zero) {
            return Ok(ConeVerdict::violation(
                ViolationKind::DiagonalNotPositive,
                i,
                i,
                a.at(i, i).clone(),
                SignedTrop::Zero,
            ));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let lhs = a.at(i, j).square();
            let rhs = a.at(i, i) * a.at(j, j);
            if !lhs.lt(&rhs) {
                return Ok(ConeVerdict::violation(
                    ViolationKind::OffDiagonalSquareNotStrict,
                    i,
                    j,
                    lhs,
                    rhs,
                ));
            }
        }
    }
    Ok(ConeVerdict::member(checked))
}

/// Tropical (unsigned) positive semidefiniteness:
/// symmetric and `2Aᵢⱼ ≤ Aᵢᵢ + Aⱼⱼ` with the usual `-∞` conventions.
pub fn is_psd_trop(a: &TropMat) -> Result<ConeVerdict, ConeError> {
    if !a.is_square() {
        return Err(ConeError::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    for i in 0..n {
        for j in 0..i {
            if a.at(i, j) != a.at(j, i) {
                return Ok(ConeVerdict::violation(
                    ViolationKind::NotSymmetric,
                    j,
                    i,
                    SignedTrop::from_trop(a.at(j, i)),
                    SignedTrop::from_trop(a.at(i, j)),
                ));
            }
        }
    }
    let mut checked = 0;
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let lhs = a.at(i, j).tmul(a.at(i, j));
            let rhs = a.at(i, i).tmul(a.at(j, j));
            if lhs > rhs {
                return Ok(ConeVerdict::violation(
                    ViolationKind::OffDiagonalSquare,
                    i,
                    j,
                    SignedTrop::from_trop(&lhs),
                    SignedTrop::from_trop(&rhs),
                ));
            }
        }
    }
    Ok(ConeVerdict::member(checked))
}

/// Tropical complete positivity: symmetric and `Mᵢⱼ² ≤ MᵢᵢMⱼⱼ` for all
/// `i, j`. Over `𝕋` this coincides with [`is_psd_trop`] and
/// [`is_cpsd`]; the three entry points are kept separate on purpose.
pub fn is_cp(x: &TropMat) -> Result<ConeVerdict, ConeError> {
    if !x.is_square() {
        return Err(ConeError::NotSquare(x.rows(), x.cols()));
    }
    let n = x.rows();
    for i in 0..n {
        for j in 0..i {
            if x.at(i, j) != x.at(j, i) {
                return Ok(ConeVerdict::violation(
                    ViolationKind::NotSymmetric,
                    j,
                    i,
                    SignedTrop::from_trop(x.at(j, i)),
                    SignedTrop::from_trop(x.at(i, j)),
                ));
            }
        }
    }
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            checked += 1;
            let lhs = x.at(i, j).tmul(x.at(i, j));
            let rhs = x.at(i, i).tmul(x.at(j, j));
            if lhs > rhs {
                return Ok(ConeVerdict::violation(
                    ViolationKind::OffDiagonalSquare,
                    i,
                    j,
                    SignedTrop::from_trop(&lhs),
                    SignedTrop::from_trop(&rhs),
                ));
            }
        }
    }
    Ok(ConeVerdict::member(checked))
}

/// Tropical complete positive semidefiniteness, which collapses to
/// complete positivity over `𝕋`; delegates to [`is_cp`].
pub fn is_cpsd(x: &TropMat) -> Result<ConeVerdict, ConeError> {
    is_cp(x)
}

/// Constructive CP factorization with `n(n+1)/2` columns: one column per
/// singleton `{i}` carrying `Xᵢᵢ/2`, one per pair `{i,j}` carrying
/// `(Xᵢⱼ - Xⱼⱼ/2, Xⱼⱼ/2)`. The witness satisfies `Y ⊙ Yᵀ = X` exactly.
pub fn cp_factorize(x: &TropMat) -> Result<TropMat, ConeError> {
    let verdict = is_cp(x)?;
    if !verdict.member {
        return Err(ConeError::NotMember);
    }
    let n = x.rows();
    let cols = n * (n + 1) / 2;
    let mut y = TropMat::fill(n, cols, TropNum::NegInf);
    for i in 0..n {
        y.set(i, i, x.at(i, i).half());
    }
    let mut col = n;
    for i in 0..n {
        for j in i + 1..n {
            if !x.at(i, j).is_neg_inf() {
                // membership forces both diagonal entries to be finite here
                let half_jj = x.at(j, j).half();
                y.set(i, col, x.at(i, j).tmul(&half_jj.recip().unwrap()));
                y.set(j, col, half_jj);
            }
            col += 1;
        }
    }
    Ok(y)
}

/// The negative part `s⁻` of a signed scalar, as an element of `𝕊⁺`.
fn negative_part(s: &SignedTrop) -> SignedTrop {
    match s {
        SignedTrop::Neg(m) => SignedTrop::Pos(m.clone()),
        _ => SignedTrop::Zero,
    }
}

/// Tropical copositivity: `A` symmetric signed, `Aᵢᵢ ⪰ 𝟘` and
/// `(Aᵢⱼ⁻)² ⪯ AᵢᵢAⱼⱼ` for all `i, j`.
///
/// Unlike the PSD tests, asymmetry is a precondition violation here: the
/// polar reading of the copositive cone is only stated for symmetric
/// matrices.
pub fn is_copositive(a: &SignedMat) -> Result<ConeVerdict, ConeError> {
    require_square_signed(a)?;
    if let Some((i, j)) = symmetry_violation(a) {
        return Err(ConeError::NotSymmetric(i, j));
    }
    let n = a.rows();
    let mut checked = 0;
    for i in 0..n {
        checked += 1;
        if !a.at(i, i).geq(&SignedTrop::Zero) {
            return Ok(ConeVerdict::violation(
                ViolationKind::DiagonalNotNonneg,
                i,
                i,
                a.at(i, i).clone(),
                SignedTrop::Zero,
            ));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            checked += 1;
            let lhs = negative_part(a.at(i, j)).square();
            let rhs = a.at(i, i) * a.at(j, j);
            if !lhs.leq(&rhs) {
                return Ok(ConeVerdict::violation(
                    ViolationKind::NegativePartSquare,
                    i,
                    j,
                    lhs,
                    rhs,
                ));
            }
        }
    }
    Ok(ConeVerdict::member(checked))
}
