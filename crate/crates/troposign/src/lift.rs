//! Monomial Puiseux lifts evaluated exactly at a fixed rational `t`,
//! signed-valuation extraction, and the desk-scale verification harnesses
//! for the valuation-commutation statements.
//!
//! A signed tropical number `x` lifts to the rational `sign(x)·c·t^{|x|}`.
//! Working with a fixed, sufficiently large rational `t` (default `10⁶`)
//! instead of formal series keeps every check exact: leading exponents are
//! recovered by comparing against exact powers of `t`, and classical
//! positive semidefiniteness is certified by principal-minor signs rather
//! than numeric eigenvalues. Exponents are restricted to rationals with
//! bounded denominator so that `t^{|x|}` stays rational.

use num_traits::{Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::cones::{cp_factorize, is_copositive, is_psd_signed, ConeError};
use crate::linalg::{LinalgError, SignedMat, SignedVec, TropMat, TropVec};
use crate::polar::{polar_contains, FinitePointSet, PolarError};
use crate::sample::{rand_polar_member, rand_signed_vec, rng_from_seed, MagnitudeGrid};
use crate::signed::{SignClass, SignedTrop};
use crate::trop::{rat, Rat, TropNum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("lift base t must be a rational > 1")]
    BadBase,
    #[error("exponent denominator {0} exceeds the configured bound {1}")]
    ExponentDenominator(u64, u64),
    #[error("t^({0}) is irrational for the configured t")]
    IrrationalPower(String),
    #[error("cannot lift {0}: only signed values have monomial lifts")]
    UnsignedScalar(String),
    #[error("coefficient must be positive")]
    BadCoefficient,
    #[error("matrix is not in PSD_n(𝕊)")]
    NotPsd,
    #[error("PSD certificate failed at t and t²: {0}")]
    CertificateFailed(String),
    #[error("dimension {0} exceeds the desk-scale bound {1}")]
    DimensionTooLarge(usize, usize),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Polar(#[from] PolarError),
}

/// Monomial lift configuration: the base `t > 1` and the exponent
/// denominator bound.
#[derive(Debug, Clone)]
pub struct RationalLift {
    t: Rat,
    max_exp_denom: u64,
}

/// Denominator of the exponent grid used by [`sval_extract`]; fine enough
/// for the 1/100 tolerance of the quadratic cross-check and divisible by
/// the default exponent denominators.
const EXTRACT_DENOM: u64 = 300;

impl Default for RationalLift {
    fn default() -> Self {
        RationalLift { t: rat(1_000_000), max_exp_denom: 4 }
    }
}

impl RationalLift {
    pub fn new(t: Rat) -> Result<Self, LiftError> {
        if t <= rat(1) {
            return Err(LiftError::BadBase);
        }
        Ok(RationalLift { t, max_exp_denom: 4 })
    }

    pub fn with_max_exp_denom(mut self, d: u64) -> Self {
        self.max_exp_denom = d.max(1);
        self
    }

    pub fn t(&self) -> &Rat {
        &self.t
    }

    /// The same lift at `t²`, used by the certificate retry protocol.
    pub fn squared(&self) -> RationalLift {
        RationalLift { t: &self.t * &self.t, max_exp_denom: self.max_exp_denom }
    }

    /// Largest exponent denominator `d` within the bound for which
    /// `t^(1/d)` is rational; sampling magnitudes on the `1/d` grid keeps
    /// every lift exact. Always at least 1.
    pub fn compatible_denominator(&self) -> i64 {
        for d in (2..=self.max_exp_denom).rev() {
            if pow_rational(&self.t, &Rat::new(1.into(), d.into()), self.max_exp_denom).is_ok() {
                return d as i64;
            }
        }
        1
    }

    /// A magnitude grid on `[-3, 3]` whose lifts are exact at this `t`.
    pub fn compatible_grid(&self) -> MagnitudeGrid {
        MagnitudeGrid::with_denom(-3, 3, self.compatible_denominator())
    }

    /// `t^e` as an exact rational; integer exponents always work, a
    /// fractional exponent `p/q` requires `t` to have an exact `q`-th root.
    pub fn power(&self, e: &Rat) -> Result<Rat, LiftError> {
        pow_rational(&self.t, e, self.max_exp_denom)
    }
}

fn exact_nth_root(x: &num_bigint::BigInt, n: u32) -> Option<num_bigint::BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.nth_root(n);
    if num_traits::pow::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

/// Exact `base^e` for rational `e = p/q`, `q ≤ max_denom`; errors when the
/// `q`-th root of `base` is irrational.
pub fn pow_rational(base: &Rat, e: &Rat, max_denom: u64) -> Result<Rat, LiftError> {
    if base <= &rat(0) {
        return Err(LiftError::BadBase);
    }
    let q: u64 =
        e.denom().try_into().map_err(|_| LiftError::ExponentDenominator(u64::MAX, max_denom))?;
    if q > max_denom {
        return Err(LiftError::ExponentDenominator(q, max_denom));
    }
    let root = if q == 1 {
        base.clone()
    } else {
        let num = exact_nth_root(base.numer(), q as u32)
            .ok_or_else(|| LiftError::IrrationalPower(e.to_string()))?;
        let den = exact_nth_root(base.denom(), q as u32)
            .ok_or_else(|| LiftError::IrrationalPower(e.to_string()))?;
        Rat::new(num, den)
    };
    let p: i64 = e.numer().try_into().map_err(|_| LiftError::IrrationalPower(e.to_string()))?;
    let abs = num_traits::pow::pow(root.clone(), p.unsigned_abs() as usize);
    Ok(if p < 0 { abs.recip() } else { abs })
}

/// `x ↦ sign(x)·t^{|x|}`, with `𝟘 ↦ 0`.
pub fn lift_scalar(x: &SignedTrop, lift: &RationalLift) -> Result<Rat, LiftError> {
    lift_scalar_coeff(x, &rat(1), lift)
}

/// `x ↦ sign(x)·c·t^{|x|}` for a positive rational coefficient `c`.
pub fn lift_scalar_coeff(x: &SignedTrop, c: &Rat, lift: &RationalLift) -> Result<Rat, LiftError> {
    if c <= &rat(0) {
        return Err(LiftError::BadCoefficient);
    }
    match x {
        SignedTrop::Zero => Ok(Rat::zero()),
        SignedTrop::Pos(m) => Ok(c * lift.power(m)?),
        SignedTrop::Neg(m) => Ok(-(c * lift.power(m)?)),
        other => Err(LiftError::UnsignedScalar(other.to_string())),
    }
}

/// Lift of a tropical number as a nonnegative rational.
pub fn lift_trop(x: &TropNum, lift: &RationalLift) -> Result<Rat, LiftError> {
    match x {
        TropNum::NegInf => Ok(Rat::zero()),
        TropNum::Fin(m) => lift.power(m),
    }
}

pub fn lift_trop_vec(v: &TropVec, lift: &RationalLift) -> Result<Vec<Rat>, LiftError> {
    v.iter().map(|e| lift_trop(e, lift)).collect()
}

pub fn lift_signed_vec(v: &SignedVec, lift: &RationalLift) -> Result<Vec<Rat>, LiftError> {
    v.iter().map(|e| lift_scalar(e, lift)).collect()
}

/// Sign and leading exponent recovered from an exact rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvalEstimate {
    pub sign: SignClass,
    /// `log_t |v|` on the `1/300` grid; `-∞` for zero.
    pub exponent: TropNum,
    /// Whether the exponent is exact (`|v|` is an exact rational power of
    /// `t` on the grid) rather than a grid approximation.
    pub exact: bool,
}

impl SvalEstimate {
    /// The signed tropical number this estimate denotes.
    pub fn to_signed(&self) -> SignedTrop {
        match (&self.sign, &self.exponent) {
            (SignClass::Zero, _) => SignedTrop::Zero,
            (SignClass::Positive, TropNum::Fin(e)) => SignedTrop::Pos(e.clone()),
            (SignClass::Negative, TropNum::Fin(e)) => SignedTrop::Neg(e.clone()),
            _ => unreachable!("nonzero estimates carry finite exponents"),
        }
    }
}

/// Extract the signed valuation of an exact rational: its sign together
/// with `log_t |v|`.
///
/// The exponent is exact whenever `|v| = t^e` for `e` with denominator
/// dividing the configured bound (monomial lifts in particular);
/// otherwise it is the largest point of the `1/300` grid with
/// `t^e ≤ |v|`, so the error is below `1/300`.
pub fn sval_extract(v: &Rat, lift: &RationalLift) -> SvalEstimate {
    if v.is_zero() {
        return SvalEstimate { sign: SignClass::Zero, exponent: TropNum::NegInf, exact: true };
    }
    let sign = if v.is_positive() { SignClass::Positive } else { SignClass::Negative };
    let abs = v.abs();
    let t = &lift.t;

    // integer bracket: t^k ≤ |v| < t^(k+1)
    let mut k: i64 = 0;
    let mut cur = rat(1);
    if abs >= rat(1) {
        loop {
            let next = &cur * t;
            if next > abs {
                break;
            }
            cur = next;
            k += 1;
        }
    } else {
        while cur > abs {
            cur /= t;
            k -= 1;
        }
    }
    if cur == abs {
        return SvalEstimate { sign, exponent: TropNum::Fin(rat(k)), exact: true };
    }

    // residual u = |v| / t^k ∈ (1, t); everything below works on raw
    // integers (u^a vs t^b by cross multiplication) to avoid gcd
    // normalization on enormous fractions
    let u = &abs / &cur;
    let (up, uq) = (u.numer().clone(), u.denom().clone());
    let (tp, tq) = (t.numer().clone(), t.denom().clone());
    let upow = |b: &num_bigint::BigInt, e: u64| num_traits::pow::pow(b.clone(), e as usize);

    // try small exponent denominators for an exact fractional hit:
    // u^q = t^r ⟺ up^q tq^r = tp^r uq^q
    for q in 2..=lift.max_exp_denom.min(12) {
        let up_q = upow(&up, q);
        let uq_q = upow(&uq, q);
        for r in 1..q {
            if &up_q * upow(&tq, r) == upow(&tp, r) * &uq_q {
                return SvalEstimate {
                    sign,
                    exponent: TropNum::Fin(rat(k) + Rat::new(r.into(), q.into())),
                    exact: true,
                };
            }
        }
    }

    // refine on the 1/EXTRACT_DENOM grid: the largest j with
    // t^(j/D) ≤ u ⟺ tp^j uq^D ≤ up^D tq^j
    let d = EXTRACT_DENOM;
    let up_d = upow(&up, d);
    let uq_d = upow(&uq, d);
    let le = |j: u64| upow(&tp, j) * &uq_d <= &up_d * upow(&tq, j);
    let (mut lo, mut hi) = (0u64, d);
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if le(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let exact = upow(&tp, lo) * &uq_d == &up_d * upow(&tq, lo);
    SvalEstimate { sign, exponent: TropNum::Fin(rat(k) + Rat::new(lo.into(), d.into())), exact }
}

/// Does `val(v) = e` hold exactly, given that `v` is a sum of at most
/// `coeff_bound` monomials of unit coefficient (or one monomial with
/// coefficient up to `coeff_bound`)?
///
/// `t^e ≤ |v| ≤ coeff_bound·t^e` pins the valuation to `e` provided
/// `coeff_bound` is below the grid gap `t^(1/max_denom)`, which is checked
/// exactly as `coeff_bound^max_denom < t`.
pub fn val_matches(
    v: &Rat,
    e: &TropNum,
    coeff_bound: &Rat,
    lift: &RationalLift,
) -> Result<bool, LiftError> {
    match e {
        TropNum::NegInf => Ok(v.is_zero()),
        TropNum::Fin(exp) => {
            if v.is_zero() {
                return Ok(false);
            }
            let gap_ok =
                num_traits::pow::pow(coeff_bound.clone(), lift.max_exp_denom as usize) < lift.t;
            if !gap_ok {
                return Err(LiftError::CertificateFailed(format!(
                    "coefficient bound {coeff_bound} too large for the exponent grid at t = {}",
                    lift.t
                )));
            }
            let te = lift.power(exp)?;
            let abs = v.abs();
            Ok(te <= abs && abs <= coeff_bound * &te)
        }
    }
}

/// Exact determinant of a rational matrix by Gaussian elimination.
pub fn det_rat(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = rat(1);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Rat::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// First principal minor of a symmetric rational matrix that is negative,
/// if any; `None` certifies positive semidefiniteness exactly.
pub fn negative_principal_minor(m: &[Vec<Rat>]) -> Option<(Vec<usize>, Rat)> {
    let n = m.len();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<Rat>> =
            idx.iter().map(|&r| idx.iter().map(|&c| m[r][c].clone()).collect()).collect();
        let d = det_rat(&sub);
        if d.is_negative() {
            return Some((idx, d));
        }
    }
    None
}

/// One PSD-certificate attempt at a given base.
#[derive(Debug, Clone)]
pub struct MinorCheckAttempt {
    pub t: Rat,
    pub failed_minor: Option<(Vec<usize>, Rat)>,
}

/// A lifted PSD matrix together with its exact certificate trail.
#[derive(Debug, Clone)]
pub struct PsdLift {
    pub matrix: Vec<Vec<Rat>>,
    pub t_used: Rat,
    pub attempts: Vec<MinorCheckAttempt>,
}

const MAX_MINOR_DIM: usize = 10;

fn psd_lift_matrix(a: &SignedMat, lift: &RationalLift) -> Result<Vec<Vec<Rat>>, LiftError> {
    let n = a.rows();
    let diag_coeff = rat((n as i64 - 1).max(1));
    let mut out = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = if i == j { diag_coeff.clone() } else { rat(1) };
            out[i][j] = lift_scalar_coeff(a.at(i, j), &c, lift)?;
        }
    }
    Ok(out)
}

/// Lift a member of `PSD_n(𝕊)` to an exactly certified classical PSD
/// matrix over the rationals: `cᵢⱼ = εᵢⱼ bᵢⱼ t^{|Aᵢⱼ|}` with `bᵢᵢ = n-1`
/// (clamped to 1) and `bᵢⱼ = 1` off the diagonal.
///
/// The certificate is the nonnegativity of all principal minors, checked
/// exactly. A failure triggers one retry at `t²` (distinguishing a too
/// small `t` from a genuine counterexample); both attempts are reported.
pub fn lift_psd(a: &SignedMat, lift: &RationalLift) -> Result<PsdLift, LiftError> {
    if a.rows() > MAX_MINOR_DIM {
        return Err(LiftError::DimensionTooLarge(a.rows(), MAX_MINOR_DIM));
    }
    if !is_psd_signed(a)?.member {
        return Err(LiftError::NotPsd);
    }
    let mut attempts = Vec::new();
    for l in [lift.clone(), lift.squared()] {
        let matrix = psd_lift_matrix(a, &l)?;
        let failed = negative_principal_minor(&matrix);
        attempts.push(MinorCheckAttempt { t: l.t().clone(), failed_minor: failed.clone() });
        if failed.is_none() {
            return Ok(PsdLift { matrix, t_used: l.t().clone(), attempts });
        }
    }
    Err(LiftError::CertificateFailed(format!("{:?}", attempts)))
}

/// A single recorded failure in a verification run.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub direction: String,
    pub detail: String,
}

/// Outcome of a sampled verification harness.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyReport {
    pub fn consistent(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Desk-scale check that taking polars commutes with the signed valuation
/// on monomial data.
///
/// Direction one (`sval(𝐀°) ⊆ (val 𝐀)°`): sample signed monomial vectors,
/// keep the ones inside the classical polar of the lifted cone (exact
/// inner products against the lifted generators and random nonnegative
/// combinations), and confirm their signed valuations lie in `A°`.
///
/// Direction two (interior of `(val 𝐀)° ⊆ sval(𝐀°)`): sample members of
/// `A°`, push them into the interior (boost the positive part, give zero
/// coordinates a very negative magnitude), lift as monomials, and confirm
/// the lifted vector satisfies every classical inequality exactly.
pub fn verify_polar_commutation(
    a: &FinitePointSet,
    lift: &RationalLift,
    samples: usize,
    seed: u64,
) -> Result<VerifyReport, LiftError> {
    let mut rng = rng_from_seed(seed);
    let grid = lift.compatible_grid();
    let n = a.dim();
    let lifted_gens: Vec<Vec<Rat>> =
        a.points().iter().map(|p| lift_trop_vec(p, lift)).collect::<Result<_, _>>()?;
    let mut checked = 0;
    let mut counterexamples = Vec::new();

    let dot = |x: &[Rat], y: &[Rat]| -> Rat {
        x.iter().zip(y.iter()).map(|(a, b)| a * b).fold(Rat::zero(), |acc, v| acc + v)
    };

    // direction one: classical polar members map into A°
    for _ in 0..samples.div_ceil(2) {
        let x = rand_signed_vec(&mut rng, n, &grid);
        let xl = lift_signed_vec(&x, lift)?;
        let in_classical_polar = lifted_gens.iter().all(|g| dot(&xl, g) >= Rat::zero());
        checked += 1;
        if !in_classical_polar {
            continue;
        }
        // spot-check against random nonnegative combinations of the generators
        for _ in 0..2 {
            let mut combo = vec![Rat::zero(); n];
            for g in &lifted_gens {
                let lambda = rat(rng.gen_range(0i64..=3));
                for (c, gi) in combo.iter_mut().zip(g.iter()) {
                    *c += &lambda * gi;
                }
            }
            if dot(&xl, &combo) < Rat::zero() {
                counterexamples.push(Counterexample {
                    direction: "sval(A°) ⊆ (val A)°".into(),
                    detail: format!("combination check failed at x = {x}"),
                });
            }
        }
        if !polar_contains(a, &x)? {
            counterexamples.push(Counterexample {
                direction: "sval(A°) ⊆ (val A)°".into(),
                detail: format!("lift of x = {x} is in the classical polar but x ∉ A°"),
            });
        }
    }

    // direction two: interior members of A° lift into the classical polar
    let mut floor = rat(-8);
    for p in a.points() {
        for e in p.iter() {
            if let Some(r) = e.as_finite() {
                if r < &floor {
                    floor = r.clone();
                }
            }
        }
    }
    for _ in 0..samples / 2 {
        let x = rand_polar_member(&mut rng, a, &grid, 40);
        let mut z_entries = Vec::with_capacity(n);
        for e in x.iter() {
            z_entries.push(match e {
                SignedTrop::Pos(m) => SignedTrop::Pos(m + rat(1)),
                SignedTrop::Neg(m) => SignedTrop::Neg(m.clone()),
                SignedTrop::Zero => SignedTrop::Pos(&floor - rat(8)),
                _ => unreachable!("polar members are signed"),
            });
        }
        let z = SignedVec::new(z_entries)?;
        checked += 1;
        if !polar_contains(a, &z)? {
            counterexamples.push(Counterexample {
                direction: "int (val A)° ⊆ sval(A°)".into(),
                detail: format!("interior perturbation left A° at x = {x}"),
            });
            continue;
        }
        let zl = lift_signed_vec(&z, lift)?;
        for g in &lifted_gens {
            if dot(&zl, g) < Rat::zero() {
                counterexamples.push(Counterexample {
                    direction: "int (val A)° ⊆ sval(A°)".into(),
                    detail: format!("lift of z = {z} violates a classical inequality"),
                });
                break;
            }
        }
    }

    Ok(VerifyReport { checked, counterexamples })
}

/// Desk-scale check of the hierarchy collapse under (signed) valuation.
///
/// Primal: every sampled `X ∈ CP_n(𝕋)` is realized with valuation exactly
/// `X` by two classical routes, a completely positive Gram lift
/// `𝐘𝐘ᵀ` through [`cp_factorize`] and the PSD ∩ NN lift of [`lift_psd`];
/// since `CP ⊆ CPSD ⊆ PSD ∩ NN` classically, this exhibits members of
/// every cone in the chain with the same valuation.
///
/// Dual: every sampled `M ∈ CP_n°(𝕊)` (a tropical copositive matrix) is
/// realized as `sval(𝐏 + 𝐍)` with `𝐏` exactly certified PSD and `𝐍`
/// nonnegative, and the extracted valuation lands back in `CP_n°(𝕊)`. For
/// `n = 2` the run starts with the fixed copositive-but-not-PSD matrix
/// `[[2,3],[3,2]]`.
pub fn verify_collapse(
    n: usize,
    lift: &RationalLift,
    samples: usize,
    seed: u64,
) -> Result<VerifyReport, LiftError> {
    if n > 4 {
        return Err(LiftError::DimensionTooLarge(n, 4));
    }
    let mut rng = rng_from_seed(seed);
    let grid = lift.compatible_grid();
    let mut checked = 0;
    let mut counterexamples = Vec::new();

    // primal direction
    for _ in 0..samples.div_ceil(2) {
        // doubled entries keep the halved exponents of the factorization
        // on the liftable grid
        let x0 = crate::sample::rand_cp_member(&mut rng, n, &grid);
        let mut x = TropMat::fill(n, n, TropNum::NegInf);
        for i in 0..n {
            for j in 0..n {
                x.set(i, j, x0.at(i, j).tmul(x0.at(i, j)));
            }
        }
        checked += 1;

        // route one: Gram lift of the CP factorization
        let y = cp_factorize(&x)?;
        let cols = y.cols();
        let mut prod = vec![vec![Rat::zero(); n]; n];
        let ylift: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..cols).map(|j| lift_trop(y.at(i, j), lift)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        for i in 0..n {
            for j in 0..n {
                prod[i][j] =
                    (0..cols).map(|k| &ylift[i][k] * &ylift[j][k]).fold(Rat::zero(), |a, v| a + v);
            }
        }
        let coeff = rat(cols as i64);
        for i in 0..n {
            for j in 0..n {
                if !val_matches(&prod[i][j], x.at(i, j), &coeff, lift)? {
                    counterexamples.push(Counterexample {
                        direction: "val(CP lift)".into(),
                        detail: format!("val mismatch at ({i},{j}) for X = {x:?}"),
                    });
                }
            }
        }

        // route two: PSD ∩ NN lift of the same matrix
        let signed = trop_to_signed_mat(&x)?;
        let psd = lift_psd(&signed, lift)?;
        let diag_coeff = rat((n as i64 - 1).max(1));
        for i in 0..n {
            for j in 0..n {
                if psd.matrix[i][j].is_negative() {
                    counterexamples.push(Counterexample {
                        direction: "val(PSD∩NN lift)".into(),
                        detail: format!("lift not nonnegative at ({i},{j})"),
                    });
                }
                let c = if i == j { diag_coeff.clone() } else { rat(1) };
                if !val_matches(&psd.matrix[i][j], x.at(i, j), &c, lift)? {
                    counterexamples.push(Counterexample {
                        direction: "val(PSD∩NN lift)".into(),
                        detail: format!("val mismatch at ({i},{j}) for X = {x:?}"),
                    });
                }
            }
        }
    }

    // dual direction; for n = 2 start from the fixed Remark matrix
    let mut dual_cases: Vec<SignedMat> = Vec::new();
    if n == 2 {
        dual_cases.push(
            SignedMat::from_rows(vec![
                vec![SignedTrop::pos_int(2), SignedTrop::pos_int(3)],
                vec![SignedTrop::pos_int(3), SignedTrop::pos_int(2)],
            ])
            .unwrap(),
        );
    }
    while dual_cases.len() < samples / 2 {
        dual_cases.push(crate::sample::rand_copositive_member(&mut rng, n, &grid));
    }
    for m in dual_cases {
        checked += 1;
        if !is_copositive(&m)?.member {
            counterexamples.push(Counterexample {
                direction: "sval(PSD+NN)".into(),
                detail: "sampled matrix not copositive".into(),
            });
            continue;
        }
        // P keeps the diagonal and the negative off-diagonal part: a PSD member
        let mut p = SignedMat::fill(n, n, SignedTrop::Zero);
        let mut nn = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            p.set(i, i, m.at(i, i).clone());
            for j in 0..n {
                if i == j {
                    continue;
                }
                match m.at(i, j) {
                    SignedTrop::Neg(_) => p.set(i, j, m.at(i, j).clone()),
                    SignedTrop::Pos(mag) => nn[i][j] = lift.power(mag)?,
                    _ => {}
                }
            }
        }
        let plift = lift_psd(&p, lift)?;
        let diag_coeff = rat((n as i64 - 1).max(1));
        let mut sval_entries: Vec<Vec<SignedTrop>> = vec![vec![SignedTrop::Zero; n]; n];
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                let total = &plift.matrix[i][j] + &nn[i][j];
                let c = if i == j { diag_coeff.clone() } else { rat(1) };
                let expected = m.at(i, j);
                let expected_val = expected.modulus().unwrap();
                if !val_matches(&total, &expected_val, &c, lift)?
                    || (total.is_negative() != matches!(expected, SignedTrop::Neg(_)))
                {
                    counterexamples.push(Counterexample {
                        direction: "sval(PSD+NN)".into(),
                        detail: format!("sval mismatch at ({i},{j}) for M = {m:?}"),
                    });
                    ok = false;
                }
                sval_entries[i][j] = expected.clone();
            }
        }
        if ok {
            // the extracted matrix is M itself; confirm it is still copositive
            let back = SignedMat::from_rows(sval_entries)?;
            if !is_copositive(&back)?.member {
                counterexamples.push(Counterexample {
                    direction: "sval(PSD+NN)".into(),
                    detail: format!("extracted sval left the copositive cone for M = {m:?}"),
                });
            }
        }
    }

    Ok(VerifyReport { checked, counterexamples })
}

/// Read a tropical matrix as a signed one (entries into `𝕊⁺`).
pub fn trop_to_signed_mat(x: &TropMat) -> Result<SignedMat, LinalgError> {
    let rows = (0..x.rows())
        .map(|i| (0..x.cols()).map(|j| SignedTrop::from_trop(x.at(i, j))).collect())
        .collect();
    SignedMat::from_rows(rows)
}
