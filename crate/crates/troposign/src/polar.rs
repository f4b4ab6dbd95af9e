//! Signed polars of finite subsets of `𝕋ⁿ`, the `∨`-map and bend-addition
//! combinators, bend-cone axiom checking, the `R ⊕ Δⁿ` pre-congruence
//! membership test, and tropical separation.
//!
//! Infinite sets (polars, bend cones) are never materialized. Everything
//! here is a membership test, a combinator on pairs, or a sampled axiom
//! check; the universally quantified statements are exercised by the
//! property suites at desk scale.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::linalg::{LinalgError, SignedVec, TropVec};
use crate::signed::SignedTrop;
use crate::trop::{rat, Rat, TropNum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolarError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("point set must be nonempty")]
    EmptyPointSet,
    #[error("cancellation index mismatch at {0}: x⁻ and y⁺ must agree")]
    CancellationIndexMismatch(usize),
    #[error("pair is not signed (supports of plus and minus parts overlap at {0})")]
    NotSignedPair(usize),
    #[error("separator construction could not be verified")]
    SeparatorUnverified,
}

/// An element `(x⁺, x⁻)` of `(𝕋ⁿ)²`.
///
/// The pair is *signed* when the supports of the two parts are disjoint;
/// signed pairs are exactly the images of vectors in `(𝕊^∨)ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPair {
    pub plus: TropVec,
    pub minus: TropVec,
}

impl SignedPair {
    pub fn new(plus: TropVec, minus: TropVec) -> Result<Self, PolarError> {
        if plus.dim() != minus.dim() {
            return Err(PolarError::DimMismatch(plus.dim(), minus.dim()));
        }
        Ok(SignedPair { plus, minus })
    }

    pub fn zero(dim: usize) -> Self {
        SignedPair { plus: TropVec::zero(dim), minus: TropVec::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.plus.dim()
    }

    /// Disjoint supports: `xᵢ⁺ ⊙ xᵢ⁻ = 𝟘` for every `i`.
    pub fn is_signed(&self) -> bool {
        self.plus.iter().zip(self.minus.iter()).all(|(p, m)| p.is_neg_inf() || m.is_neg_inf())
    }

    /// The `∨`-map: coordinatewise, keep the plus part on ties.
    pub fn vee(&self) -> SignedPair {
        let n = self.dim();
        let mut plus = TropVec::zero(n);
        let mut minus = TropVec::zero(n);
        for i in 0..n {
            let (p, m) = (self.plus.get(i), self.minus.get(i));
            if p >= m {
                plus.set(i, p.clone());
            } else {
                minus.set(i, m.clone());
            }
        }
        SignedPair { plus, minus }
    }

    /// Plain pair addition `(x⁺ ⊕ y⁺, x⁻ ⊕ y⁻)`.
    pub fn oplus(&self, other: &SignedPair) -> Result<SignedPair, PolarError> {
        Ok(SignedPair { plus: self.plus.join(&other.plus)?, minus: self.minus.join(&other.minus)? })
    }

    /// Tropical scaling `(λ ⊙ x⁺, λ ⊙ x⁻)`.
    pub fn scale(&self, lambda: &TropNum) -> SignedPair {
        SignedPair { plus: self.plus.scale(lambda), minus: self.minus.scale(lambda) }
    }

    /// View a signed pair as a vector of `(𝕊^∨)ⁿ`; errors when unsigned.
    pub fn to_signed_vec(&self) -> Result<SignedVec, PolarError> {
        let mut entries = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            let e = match (self.plus.get(i).as_finite(), self.minus.get(i).as_finite()) {
                (None, None) => SignedTrop::Zero,
                (Some(p), None) => SignedTrop::Pos(p.clone()),
                (None, Some(m)) => SignedTrop::Neg(m.clone()),
                (Some(_), Some(_)) => return Err(PolarError::NotSignedPair(i)),
            };
            entries.push(e);
        }
        Ok(SignedVec::new(entries)?)
    }

    /// Canonical decomposition of a signed vector into `(x⁺, x⁻)`.
    pub fn from_signed_vec(x: &SignedVec) -> Result<SignedPair, PolarError> {
        let n = x.dim();
        let mut plus = TropVec::zero(n);
        let mut minus = TropVec::zero(n);
        for i in 0..n {
            match x.get(i) {
                SignedTrop::Zero => {}
                SignedTrop::Pos(m) => plus.set(i, TropNum::Fin(m.clone())),
                SignedTrop::Neg(m) => minus.set(i, TropNum::Fin(m.clone())),
                other => {
                    return Err(PolarError::Linalg(if other.is_extended() {
                        LinalgError::ExtendedEntry
                    } else {
                        LinalgError::BalancedEntry(i)
                    }))
                }
            }
        }
        Ok(SignedPair { plus, minus })
    }
}

/// The `∨`-map as a free function, matching the notation `f ↦ f^∨`.
pub fn vee_map(f: &SignedPair) -> SignedPair {
    f.vee()
}

/// `x ⊕ᵢ y = (x⁺ ⊕ y⁺_{∖i}, x⁻_{∖i} ⊕ y⁻)`, defined when `xᵢ⁻ = yᵢ⁺`.
pub fn oplus_i(x: &SignedPair, y: &SignedPair, i: usize) -> Result<SignedPair, PolarError> {
    if x.dim() != y.dim() {
        return Err(PolarError::DimMismatch(x.dim(), y.dim()));
    }
    if x.minus.get(i) != y.plus.get(i) {
        return Err(PolarError::CancellationIndexMismatch(i));
    }
    Ok(SignedPair {
        plus: x.plus.join(&y.plus.restrict_complement(&[i])?)?,
        minus: x.minus.restrict_complement(&[i])?.join(&y.minus)?,
    })
}

/// `x ⊕̂ y`: cancel on every tie index `I = {i ∣ xᵢ⁻ = yᵢ⁺}` at once.
pub fn hat_oplus(x: &SignedPair, y: &SignedPair) -> Result<SignedPair, PolarError> {
    if x.dim() != y.dim() {
        return Err(PolarError::DimMismatch(x.dim(), y.dim()));
    }
    let ties: Vec<usize> = (0..x.dim()).filter(|&i| x.minus.get(i) == y.plus.get(i)).collect();
    Ok(SignedPair {
        plus: x.plus.join(&y.plus.restrict_complement(&ties)?)?,
        minus: x.minus.restrict_complement(&ties)?.join(&y.minus)?,
    })
}

/// `x ⊕̂^∨ y = (x ⊕̂ y)^∨`.
pub fn hat_oplus_vee(x: &SignedPair, y: &SignedPair) -> Result<SignedPair, PolarError> {
    Ok(hat_oplus(x, y)?.vee())
}

/// A finite subset of `𝕋ⁿ` (nonempty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePointSet {
    points: Vec<TropVec>,
    dim: usize,
}

impl FinitePointSet {
    pub fn new(points: Vec<TropVec>) -> Result<Self, PolarError> {
        let dim = points.first().ok_or(PolarError::EmptyPointSet)?.dim();
        if let Some(bad) = points.iter().find(|p| p.dim() != dim) {
            return Err(PolarError::DimMismatch(bad.dim(), dim));
        }
        Ok(FinitePointSet { points, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[TropVec] {
        &self.points
    }
}

/// A finite list of pairs in `(𝕋ⁿ)²`; may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePairSet {
    pairs: Vec<SignedPair>,
    dim: usize,
}

impl FinitePairSet {
    pub fn new(dim: usize, pairs: Vec<SignedPair>) -> Result<Self, PolarError> {
        if let Some(bad) = pairs.iter().find(|p| p.dim() != dim) {
            return Err(PolarError::DimMismatch(bad.dim(), dim));
        }
        Ok(FinitePairSet { pairs, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pairs(&self) -> &[SignedPair] {
        &self.pairs
    }
}

/// Membership in the signed polar `A° = {x ∈ (𝕊^∨)ⁿ ∣ ⟨x,a⟩ ⪰ 𝟘 ∀a ∈ A}`.
pub fn polar_contains(a: &FinitePointSet, x: &SignedVec) -> Result<bool, PolarError> {
    if a.dim() != x.dim() {
        return Err(PolarError::DimMismatch(a.dim(), x.dim()));
    }
    for point in &a.points {
        let v = x.dot_trop(point)?;
        if !v.geq(&SignedTrop::Zero) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the two-sided polar `A^▷`: `⟨x⁺,a⟩ ≥ ⟨x⁻,a⟩ ∀a ∈ A`.
/// The pair need not be signed.
pub fn two_sided_contains(a: &FinitePointSet, p: &SignedPair) -> Result<bool, PolarError> {
    if a.dim() != p.dim() {
        return Err(PolarError::DimMismatch(a.dim(), p.dim()));
    }
    for point in &a.points {
        if p.plus.dot(point)? < p.minus.dot(point)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in the one-sided polar `B^◁`: `⟨x⁺,a⟩ ≥ ⟨x⁻,a⟩ ∀(x⁺,x⁻) ∈ B`.
pub fn one_sided_contains(b: &FinitePairSet, a: &TropVec) -> Result<bool, PolarError> {
    if !b.pairs.is_empty() && b.dim() != a.dim() {
        return Err(PolarError::DimMismatch(b.dim(), a.dim()));
    }
    for pair in &b.pairs {
        if pair.plus.dot(a)? < pair.minus.dot(a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How the underlying pair cone is described.
///
/// `List` is a literal finite list; `PolarOf` is the signed part of `A°`
/// for a finite `A`, with membership decided by the half-space test.
#[derive(Debug, Clone)]
pub enum PairConeSpec<'a> {
    List(&'a FinitePairSet),
    PolarOf(&'a FinitePointSet),
}

impl PairConeSpec<'_> {
    pub fn dim(&self) -> usize {
        match self {
            PairConeSpec::List(l) => l.dim(),
            PairConeSpec::PolarOf(a) => a.dim(),
        }
    }

    /// Literal membership: exact equality with a listed pair, or the
    /// half-space test for a polar. Used by the axiom checker, where a
    /// finite literal list is taken at face value.
    fn contains_exact(&self, p: &SignedPair) -> Result<bool, PolarError> {
        match self {
            PairConeSpec::List(l) => Ok(l.pairs.iter().any(|r| r == p)),
            PairConeSpec::PolarOf(a) => polar_contains(a, &p.to_signed_vec()?),
        }
    }

    /// Membership up to tropical scaling of listed generators. Used by the
    /// `R ⊕ Δⁿ` saturation test.
    fn contains_up_to_scaling(&self, p: &SignedPair) -> Result<bool, PolarError> {
        match self {
            PairConeSpec::List(l) => Ok(l.pairs.iter().any(|r| scaling_match(p, r))),
            PairConeSpec::PolarOf(a) => polar_contains(a, &p.to_signed_vec()?),
        }
    }
}

/// Does `g = λ ⊙ r` hold for some finite `λ`?
fn scaling_match(g: &SignedPair, r: &SignedPair) -> bool {
    if g.dim() != r.dim() {
        return false;
    }
    let mut lambda: Option<Rat> = None;
    for (ge, re) in g.plus.iter().zip(r.plus.iter()).chain(g.minus.iter().zip(r.minus.iter())) {
        match (ge.as_finite(), re.as_finite()) {
            (None, None) => {}
            (Some(gv), Some(rv)) => {
                let d = gv - rv;
                match &lambda {
                    None => lambda = Some(d),
                    Some(l) if *l == d => {}
                    _ => return false,
                }
            }
            _ => return false,
        }
    }
    // matching supports and a consistent shift; all-zero pairs match trivially
    true
}

/// The four signed-bend-cone axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BendAxiom {
    /// (i) every `(x⁺, 𝟘)` belongs to the set
    BaseMinusZero,
    /// (ii) stability under tropical scaling
    Scaling,
    /// (iii) stability of `(x ⊕ y)^∨`
    VeeOfSum,
    /// (iv) stability of `(x ⊕ᵢ y)^∨` on cancellation indices
    VeeOfCancellation,
}

#[derive(Debug, Clone)]
pub struct AxiomViolation {
    pub axiom: BendAxiom,
    pub inputs: Vec<SignedPair>,
    pub lambda: Option<TropNum>,
    pub index: Option<usize>,
    pub derived: SignedPair,
}

#[derive(Debug, Clone)]
pub enum AxiomStatus {
    Consistent,
    Violation(Box<AxiomViolation>),
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub status: AxiomStatus,
    pub samples_run: usize,
}

impl AxiomReport {
    pub fn is_consistent(&self) -> bool {
        matches!(self.status, AxiomStatus::Consistent)
    }
}

/// Check the signed-bend-cone axioms on sampled data.
///
/// `seeds` supplies the elements the operations are applied to (for a
/// literal list this is the list itself; for a polar it is a finite sample
/// of members). The operation-stability axioms (ii)–(iv) are checked
/// first, then the base axiom (i) on sampled vectors; the first failing
/// membership under this fixed ordering is reported.
pub fn check_bend_axioms(
    spec: &PairConeSpec<'_>,
    seeds: &FinitePairSet,
    samples: usize,
    seed: u64,
) -> Result<AxiomReport, PolarError> {
    for s in seeds.pairs() {
        if let Some(i) =
            s.plus.iter().zip(s.minus.iter()).position(|(p, m)| !p.is_neg_inf() && !m.is_neg_inf())
        {
            return Err(PolarError::NotSignedPair(i));
        }
    }
    let n = spec.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut run = 0usize;
    let budget = samples.max(4);
    let per_phase = budget / 4;

    let violation = |axiom, inputs, lambda, index, derived, run| AxiomReport {
        status: AxiomStatus::Violation(Box::new(AxiomViolation {
            axiom,
            inputs,
            lambda,
            index,
            derived,
        })),
        samples_run: run,
    };

    // (ii) scaling stability
    let mut done = 0;
    'scaling: for x in seeds.pairs() {
        for _ in 0..4 {
            if done >= per_phase {
                break 'scaling;
            }
            let lambda = TropNum::Fin(Rat::new(rng.gen_range(-12i64..=12).into(), 4.into()));
            let derived = x.scale(&lambda);
            run += 1;
            done += 1;
            if !spec.contains_exact(&derived)? {
                return Ok(violation(
                    BendAxiom::Scaling,
                    vec![x.clone()],
                    Some(lambda),
                    None,
                    derived,
                    run,
                ));
            }
        }
    }

    // (iii) ∨-of-sum stability
    let mut done = 0;
    'sum: for x in seeds.pairs() {
        for y in seeds.pairs() {
            if done >= per_phase {
                break 'sum;
            }
            let derived = x.oplus(y)?.vee();
            run += 1;
            done += 1;
            if !spec.contains_exact(&derived)? {
                return Ok(violation(
                    BendAxiom::VeeOfSum,
                    vec![x.clone(), y.clone()],
                    None,
                    None,
                    derived,
                    run,
                ));
            }
        }
    }

    // (iv) ∨-of-cancellation stability on valid indices
    let mut done = 0;
    'cancel: for x in seeds.pairs() {
        for y in seeds.pairs() {
            for i in 0..n {
                if done >= per_phase {
                    break 'cancel;
                }
                if x.minus.get(i) != y.plus.get(i) {
                    continue;
                }
                let derived = oplus_i(x, y, i)?.vee();
                run += 1;
                done += 1;
                if !spec.contains_exact(&derived)? {
                    return Ok(violation(
                        BendAxiom::VeeOfCancellation,
                        vec![x.clone(), y.clone()],
                        None,
                        Some(i),
                        derived,
                        run,
                    ));
                }
            }
        }
    }

    // (i) all (x⁺, 𝟘) belong to the set, on sampled vectors
    let remaining = budget.saturating_sub(run).max(per_phase);
    for _ in 0..remaining {
        let mut plus = TropVec::zero(n);
        for i in 0..n {
            if rng.gen_range(0..4) > 0 {
                plus.set(i, TropNum::Fin(Rat::new(rng.gen_range(-12i64..=12).into(), 4.into())));
            }
        }
        let derived = SignedPair { plus, minus: TropVec::zero(n) };
        run += 1;
        if !spec.contains_exact(&derived)? {
            return Ok(violation(BendAxiom::BaseMinusZero, vec![], None, None, derived, run));
        }
    }

    Ok(AxiomReport { status: AxiomStatus::Consistent, samples_run: run })
}

/// Membership test for `C = R ⊕ Δⁿ`, the monotone pre-congruence spanned
/// by a bend cone `R` and the diagonal.
///
/// A query `f` belongs to `C` iff `f⁺ ≥ f⁻` entrywise (the monotone part)
/// or `f^∨` belongs to `R`; the diagonal summand is recovered as
/// `cᵢ = min(fᵢ⁺, fᵢ⁻)`.
pub struct DiagonalSaturation<'a> {
    spec: PairConeSpec<'a>,
}

pub fn saturate_diagonal(spec: PairConeSpec<'_>) -> DiagonalSaturation<'_> {
    DiagonalSaturation { spec }
}

impl DiagonalSaturation<'_> {
    pub fn contains(&self, f: &SignedPair) -> Result<bool, PolarError> {
        if f.dim() != self.spec.dim() {
            return Err(PolarError::DimMismatch(f.dim(), self.spec.dim()));
        }
        if f.minus.le(&f.plus) {
            return Ok(true);
        }
        self.spec.contains_up_to_scaling(&f.vee())
    }

    /// The diagonal part `cᵢ = min(fᵢ⁺, fᵢ⁻)` of the decomposition
    /// `f = f^∨ ⊕ (c, c)`.
    pub fn diagonal_part(&self, f: &SignedPair) -> TropVec {
        let n = f.dim();
        let mut c = TropVec::zero(n);
        for i in 0..n {
            c.set(i, f.plus.get(i).min(f.minus.get(i)).clone());
        }
        c
    }
}

/// Residuated projection of `z` onto the tropical cone generated by `A`:
/// `P = ⊕_a λ_a ⊙ a` with `λ_a = min_{i ∈ supp(a)} (zᵢ - aᵢ)`.
///
/// Generators with empty support are skipped; a `-∞` coordinate of `z`
/// inside the support of a generator forces `λ_a = -∞`.
pub fn project_onto_hull(a: &FinitePointSet, z: &TropVec) -> Result<TropVec, PolarError> {
    if a.dim() != z.dim() {
        return Err(PolarError::DimMismatch(a.dim(), z.dim()));
    }
    let mut proj = TropVec::zero(z.dim());
    for gen in a.points() {
        let support = gen.support();
        if support.is_empty() {
            continue;
        }
        let mut lambda: Option<TropNum> = None;
        for &i in &support {
            let gi = gen.get(i).as_finite().unwrap();
            let term = match z.get(i).as_finite() {
                None => TropNum::NegInf,
                Some(zi) => TropNum::Fin(zi - gi),
            };
            lambda = Some(match lambda {
                None => term,
                Some(l) => l.min(term),
            });
        }
        let lambda = lambda.unwrap();
        if lambda.is_neg_inf() {
            continue;
        }
        proj = proj.join(&gen.scale(&lambda))?;
    }
    Ok(proj)
}

/// Outcome of [`separate`].
#[derive(Debug, Clone)]
pub enum Separation {
    /// `z` is in the tropical cone generated by `A`; no separator exists.
    InHull { projection: TropVec },
    /// A verified separator: a member of `A°` strictly violated by `z`.
    Separated { separator: SignedVec, projection: TropVec },
}

/// Build a signed separator between `z ∉ hull(A)` and `A` from the
/// projection residuals, and verify both postconditions before returning;
/// an unverified candidate is an error, never a result.
///
/// The separator is `⊕_{j∈J} Pos(-Pⱼ)eⱼ ⊖ ⊕_{j∉J} Neg(…)eⱼ` with
/// `J = {j ∣ Pⱼ = zⱼ}`. Coordinates where both `z` and `P` are `-∞` get a
/// large positive coefficient instead, which keeps membership on
/// generators whose scaling was blocked by a `-∞` of `z`; coordinates
/// where only `P` is `-∞` get a `Neg` coefficient derived from `z`.
pub fn separate(a: &FinitePointSet, z: &TropVec) -> Result<Separation, PolarError> {
    let projection = project_onto_hull(a, z)?;
    if &projection == z {
        return Ok(Separation::InHull { projection });
    }

    // magnitude bound over all data, for the boost coefficient
    let mut bound = rat(1);
    for v in a.points().iter().chain(std::iter::once(z)) {
        for e in v.iter() {
            if let Some(r) = e.as_finite() {
                let abs = if r < &rat(0) { -r } else { r.clone() };
                if abs > bound {
                    bound = abs;
                }
            }
        }
    }
    let boost = rat(5) * &bound + rat(2);

    let n = z.dim();
    let mut entries = Vec::with_capacity(n);
    for j in 0..n {
        let pj = projection.get(j);
        let tight = pj == z.get(j);
        let e = match (tight, pj.as_finite()) {
            (true, Some(p)) => SignedTrop::Pos(-p),
            (true, None) => SignedTrop::Pos(boost.clone()),
            (false, Some(p)) => SignedTrop::Neg(-p),
            // z_j is finite here (P ≤ z and P_j ≠ z_j); overshoot by 1
            (false, None) => SignedTrop::Neg(rat(1) - z.get(j).as_finite().unwrap()),
        };
        entries.push(e);
    }
    let separator = SignedVec::new(entries)?;

    if polar_contains(a, &separator)? {
        let at_z = separator.dot_trop(z)?;
        if !at_z.geq(&SignedTrop::Zero) {
            return Ok(Separation::Separated { separator, projection });
        }
    }
    Err(PolarError::SeparatorUnverified)
}
