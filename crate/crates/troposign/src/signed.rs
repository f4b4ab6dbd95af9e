//! The symmetrized tropical semiring `𝕊`, plus the order-completion
//! elements `⊤` and `⊥`.
//!
//! `𝕊` is the quotient of pairs `(a⁺, a⁻) ∈ 𝕋²` by the balance-refined
//! relation; its elements are positive (`Pos`), negative (`Neg`), balanced
//! (`Bal`) or zero. Values are kept in canonical form at construction, and
//! [`PairRep`] exists only as a conversion view used to define the order
//! and balance relations by the pair formulas.
//!
//! The order `⪯` is total on the signed part `𝕊^∨ ∪ {⊤, ⊥}` but is *not*
//! transitive through balanced middles; see [`SignedTrop::leq`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero as _;
use thiserror::Error;

use crate::trop::{rat, Rat, TropNum};

/// Errors from operations that are undefined on part of `𝕊 ∪ {⊤,⊥}`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("modulus undefined on extended elements")]
    ModulusUndefined,
    #[error("balance relation undefined on extended elements")]
    BalanceUndefined,
    #[error("pair representation undefined on extended elements")]
    PairUndefined,
    #[error("square root requires a positive element, got {0}")]
    NotPositive(String),
    #[error("no multiplicative inverse for {0}")]
    NotInvertible(String),
    #[error("expected a signed element, got {0}")]
    NotSigned(String),
}

/// An element of `𝕊 ∪ {⊤, ⊥}` in canonical form.
///
/// `Zero` carries no magnitude; `Pos`, `Neg` and `Bal` carry an exact
/// rational magnitude (the modulus). `Top`/`Bot` are the completion
/// elements used as extreme optimization values; most arithmetic is
/// undefined on them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SignedTrop {
    Zero,
    Pos(Rat),
    Neg(Rat),
    Bal(Rat),
    Top,
    Bot,
}

/// Classification of an element of `𝕊 ∪ {⊤,⊥}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Positive,
    Negative,
    Balanced,
    Zero,
    Top,
    Bot,
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignClass::Positive => "positive",
            SignClass::Negative => "negative",
            SignClass::Balanced => "balanced",
            SignClass::Zero => "zero",
            SignClass::Top => "top",
            SignClass::Bot => "bot",
        };
        write!(f, "{s}")
    }
}

/// A raw element `(a⁺, a⁻)` of `𝕋²`, the pair view of `𝕊`.
///
/// The relations `⪯`, `≺` and `∇` are defined here by the pair formulas
/// and `SignedTrop` delegates to them, so there is a single source of
/// truth; the case table is kept as a test oracle only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRep {
    pub plus: TropNum,
    pub minus: TropNum,
}

impl PairRep {
    pub fn new(plus: TropNum, minus: TropNum) -> Self {
        PairRep { plus, minus }
    }

    /// `|(a⁺,a⁻)| = a⁺ ⊕ a⁻`.
    pub fn modulus(&self) -> TropNum {
        self.plus.tadd(&self.minus)
    }

    /// Projection onto the quotient `𝕊`.
    pub fn project(&self) -> SignedTrop {
        match (self.plus.as_finite(), self.minus.as_finite()) {
            (None, None) => SignedTrop::Zero,
            (Some(p), None) => SignedTrop::Pos(p.clone()),
            (None, Some(m)) => SignedTrop::Neg(m.clone()),
            (Some(p), Some(m)) => {
                if p > m {
                    SignedTrop::Pos(p.clone())
                } else if m > p {
                    SignedTrop::Neg(m.clone())
                } else {
                    SignedTrop::Bal(p.clone())
                }
            }
        }
    }

    /// `(a⁺,a⁻) ⊕ (b⁺,b⁻) = (a⁺⊕b⁺, a⁻⊕b⁻)`.
    pub fn add(&self, other: &PairRep) -> PairRep {
        PairRep::new(self.plus.tadd(&other.plus), self.minus.tadd(&other.minus))
    }

    /// The cross multiplication formula on pairs.
    pub fn mul(&self, other: &PairRep) -> PairRep {
        let pp = self.plus.tmul(&other.plus);
        let mm = self.minus.tmul(&other.minus);
        let pm = self.plus.tmul(&other.minus);
        let mp = self.minus.tmul(&other.plus);
        PairRep::new(pp.tadd(&mm), pm.tadd(&mp))
    }

    /// `a ⪯ b ⟺ a⁺ ⊕ b⁻ ≤ a⁻ ⊕ b⁺`.
    pub fn leq(&self, other: &PairRep) -> bool {
        self.plus.tadd(&other.minus) <= self.minus.tadd(&other.plus)
    }

    /// `a ≺ b ⟺ a⁺ ⊕ b⁻ < a⁻ ⊕ b⁺`.
    pub fn lt(&self, other: &PairRep) -> bool {
        self.plus.tadd(&other.minus) < self.minus.tadd(&other.plus)
    }

    /// `a ∇ b ⟺ a⁺ ⊕ b⁻ = a⁻ ⊕ b⁺`.
    pub fn balances(&self, other: &PairRep) -> bool {
        self.plus.tadd(&other.minus) == self.minus.tadd(&other.plus)
    }
}

impl SignedTrop {
    /// The multiplicative unit `𝟙 = Pos(0)`.
    pub fn one() -> SignedTrop {
        SignedTrop::Pos(Rat::zero())
    }

    pub fn pos(m: impl Into<Rat>) -> SignedTrop {
        SignedTrop::Pos(m.into())
    }

    pub fn neg(m: impl Into<Rat>) -> SignedTrop {
        SignedTrop::Neg(m.into())
    }

    pub fn bal(m: impl Into<Rat>) -> SignedTrop {
        SignedTrop::Bal(m.into())
    }

    pub fn pos_int(n: i64) -> SignedTrop {
        SignedTrop::Pos(rat(n))
    }

    pub fn neg_int(n: i64) -> SignedTrop {
        SignedTrop::Neg(rat(n))
    }

    pub fn bal_int(n: i64) -> SignedTrop {
        SignedTrop::Bal(rat(n))
    }

    /// Embed a tropical number as a positive element (`𝕋 ≅ 𝕊⁺`).
    pub fn from_trop(t: &TropNum) -> SignedTrop {
        match t {
            TropNum::NegInf => SignedTrop::Zero,
            TropNum::Fin(r) => SignedTrop::Pos(r.clone()),
        }
    }

    pub fn sign_class(&self) -> SignClass {
        match self {
            SignedTrop::Zero => SignClass::Zero,
            SignedTrop::Pos(_) => SignClass::Positive,
            SignedTrop::Neg(_) => SignClass::Negative,
            SignedTrop::Bal(_) => SignClass::Balanced,
            SignedTrop::Top => SignClass::Top,
            SignedTrop::Bot => SignClass::Bot,
        }
    }

    /// Member of `𝕊^∨ = 𝕊⁺ ∪ 𝕊⁻`, i.e. `Pos`, `Neg` or `Zero`.
    pub fn is_signed(&self) -> bool {
        matches!(self, SignedTrop::Zero | SignedTrop::Pos(_) | SignedTrop::Neg(_))
    }

    /// Member of `𝕊⁺` (zero counts as weakly positive).
    pub fn is_weak_positive(&self) -> bool {
        matches!(self, SignedTrop::Zero | SignedTrop::Pos(_))
    }

    /// Member of `𝕊⁻`.
    pub fn is_weak_negative(&self) -> bool {
        matches!(self, SignedTrop::Zero | SignedTrop::Neg(_))
    }

    /// Member of `𝕊° = {x ∣ x ∇ 𝟘}`, i.e. `Bal` or `Zero`.
    pub fn is_balanced_class(&self) -> bool {
        matches!(self, SignedTrop::Zero | SignedTrop::Bal(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SignedTrop::Zero)
    }

    pub fn is_extended(&self) -> bool {
        matches!(self, SignedTrop::Top | SignedTrop::Bot)
    }

    pub fn magnitude(&self) -> Option<&Rat> {
        match self {
            SignedTrop::Pos(m) | SignedTrop::Neg(m) | SignedTrop::Bal(m) => Some(m),
            _ => None,
        }
    }

    /// The pair view; undefined on `⊤`/`⊥`.
    pub fn pair_rep(&self) -> Result<PairRep, TropError> {
        match self {
            SignedTrop::Zero => Ok(PairRep::new(TropNum::NegInf, TropNum::NegInf)),
            SignedTrop::Pos(m) => Ok(PairRep::new(TropNum::Fin(m.clone()), TropNum::NegInf)),
            SignedTrop::Neg(m) => Ok(PairRep::new(TropNum::NegInf, TropNum::Fin(m.clone()))),
            SignedTrop::Bal(m) => {
                Ok(PairRep::new(TropNum::Fin(m.clone()), TropNum::Fin(m.clone())))
            }
            SignedTrop::Top | SignedTrop::Bot => Err(TropError::PairUndefined),
        }
    }

    /// The positive part `x⁺` of the canonical decomposition `x = x⁺ ⊖ x⁻`
    /// of a signed element, as a tropical number.
    pub fn plus_part(&self) -> Result<TropNum, TropError> {
        match self {
            SignedTrop::Zero | SignedTrop::Neg(_) => Ok(TropNum::NegInf),
            SignedTrop::Pos(m) => Ok(TropNum::Fin(m.clone())),
            other => Err(TropError::NotSigned(other.to_string())),
        }
    }

    /// The negative part `x⁻` of a signed element, as a tropical number.
    pub fn minus_part(&self) -> Result<TropNum, TropError> {
        match self {
            SignedTrop::Zero | SignedTrop::Pos(_) => Ok(TropNum::NegInf),
            SignedTrop::Neg(m) => Ok(TropNum::Fin(m.clone())),
            other => Err(TropError::NotSigned(other.to_string())),
        }
    }

    /// Semiring addition.
    ///
    /// `⊤ ⊕ x = ⊤`; `⊥` is not a valid operand (panics), per the
    /// completion conventions adopted for optimization values.
    pub fn add(&self, other: &SignedTrop) -> SignedTrop {
        use SignedTrop::*;
        match (self, other) {
            (Bot, _) | (_, Bot) => panic!("⊕ is undefined on ⊥"),
            (Top, _) | (_, Top) => Top,
            (Zero, x) | (x, Zero) => x.clone(),
            (a, b) => {
                let ma = a.magnitude().expect("finite nonzero");
                let mb = b.magnitude().expect("finite nonzero");
                if ma > mb {
                    a.clone()
                } else if mb > ma {
                    b.clone()
                } else {
                    match (a, b) {
                        (Pos(_), Pos(_)) => a.clone(),
                        (Neg(_), Neg(_)) => a.clone(),
                        _ => Bal(ma.clone()),
                    }
                }
            }
        }
    }

    /// Semiring multiplication: magnitudes add, signs multiply, `Bal`
    /// absorbs signs and `Zero` absorbs everything (including `⊤`/`⊥`).
    ///
    /// `⊤ ⊙ x` follows the sign of `x`; `⊤ ⊙ ⊤` and `⊤ ⊙ Bal` are
    /// undefined (panic).
    pub fn mul(&self, other: &SignedTrop) -> SignedTrop {
        use SignedTrop::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Top, Pos(_)) | (Pos(_), Top) => Top,
            (Top, Neg(_)) | (Neg(_), Top) => Bot,
            (Bot, Pos(_)) | (Pos(_), Bot) => Bot,
            (Bot, Neg(_)) | (Neg(_), Bot) => Top,
            (Top | Bot, _) | (_, Top | Bot) => panic!("⊙ undefined on this extended operand pair"),
            (a, b) => {
                let m = a.magnitude().unwrap() + b.magnitude().unwrap();
                match (a, b) {
                    (Bal(_), _) | (_, Bal(_)) => Bal(m),
                    (Pos(_), Pos(_)) | (Neg(_), Neg(_)) => Pos(m),
                    _ => Neg(m),
                }
            }
        }
    }

    /// The `⊖` map: swaps `Pos ↔ Neg` and `⊤ ↔ ⊥`, fixes `Zero` and `Bal`.
    pub fn negate(&self) -> SignedTrop {
        use SignedTrop::*;
        match self {
            Zero => Zero,
            Pos(m) => Neg(m.clone()),
            Neg(m) => Pos(m.clone()),
            Bal(m) => Bal(m.clone()),
            Top => Bot,
            Bot => Top,
        }
    }

    /// `a ⊖ b = a ⊕ (⊖b)`.
    pub fn sub(&self, other: &SignedTrop) -> SignedTrop {
        self.add(&other.negate())
    }

    /// `|a|` as a tropical number; errors on `⊤`/`⊥`.
    pub fn modulus(&self) -> Result<TropNum, TropError> {
        match self {
            SignedTrop::Top | SignedTrop::Bot => Err(TropError::ModulusUndefined),
            SignedTrop::Zero => Ok(TropNum::NegInf),
            _ => Ok(TropNum::Fin(self.magnitude().unwrap().clone())),
        }
    }

    /// The relation `a ⪯ b`, with `⊥ ⪯ x ⪯ ⊤` for every `x`.
    ///
    /// Reflexive and total on `𝕊^∨ ∪ {⊤,⊥}`, but not transitive through
    /// balanced middles.
    pub fn leq(&self, other: &SignedTrop) -> bool {
        use SignedTrop::*;
        match (self, other) {
            (Bot, _) | (_, Top) => true,
            (Top, x) => *x == Top,
            (x, Bot) => *x == Bot,
            (a, b) => a.pair_rep().unwrap().leq(&b.pair_rep().unwrap()),
        }
    }

    /// The strict relation `a ≺ b`.
    pub fn lt(&self, other: &SignedTrop) -> bool {
        use SignedTrop::*;
        match (self, other) {
            (Bot, x) => *x != Bot,
            (x, Top) => *x != Top,
            (Top, _) | (_, Bot) => false,
            (a, b) => a.pair_rep().unwrap().lt(&b.pair_rep().unwrap()),
        }
    }

    pub fn geq(&self, other: &SignedTrop) -> bool {
        other.leq(self)
    }

    pub fn gt(&self, other: &SignedTrop) -> bool {
        other.lt(self)
    }

    /// The balance relation `a ∇ b`; errors on `⊤`/`⊥`.
    pub fn balances(&self, other: &SignedTrop) -> Result<bool, TropError> {
        if self.is_extended() || other.is_extended() {
            return Err(TropError::BalanceUndefined);
        }
        Ok(self.pair_rep()?.balances(&other.pair_rep()?))
    }

    /// `x ∇ 𝟘`, i.e. `x ∈ 𝕊°`.
    pub fn balances_zero(&self) -> Result<bool, TropError> {
        self.balances(&SignedTrop::Zero)
    }

    /// Tropical square root of a weakly positive element: `Pos(m) ↦ Pos(m/2)`.
    pub fn sqrt_pos(&self) -> Result<SignedTrop, TropError> {
        match self {
            SignedTrop::Zero => Ok(SignedTrop::Zero),
            SignedTrop::Pos(m) => Ok(SignedTrop::Pos(m / rat(2))),
            other => Err(TropError::NotPositive(other.to_string())),
        }
    }

    /// Multiplicative inverse of a nonzero signed element.
    pub fn recip(&self) -> Result<SignedTrop, TropError> {
        match self {
            SignedTrop::Pos(m) => Ok(SignedTrop::Pos(-m)),
            SignedTrop::Neg(m) => Ok(SignedTrop::Neg(-m)),
            other => Err(TropError::NotInvertible(other.to_string())),
        }
    }

    pub fn square(&self) -> SignedTrop {
        self.mul(self)
    }

    /// `self^k` for a small integer power (`k = 0` gives `𝟙`).
    pub fn pow(&self, k: u32) -> SignedTrop {
        let mut acc = SignedTrop::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scale by a tropical number: `λ ⊙ x` with `λ` read as `Pos(λ)`.
    pub fn scale(&self, lambda: &TropNum) -> SignedTrop {
        self.mul(&SignedTrop::from_trop(lambda))
    }
}

impl Add for &SignedTrop {
    type Output = SignedTrop;
    fn add(self, rhs: &SignedTrop) -> SignedTrop {
        SignedTrop::add(self, rhs)
    }
}

impl Mul for &SignedTrop {
    type Output = SignedTrop;
    fn mul(self, rhs: &SignedTrop) -> SignedTrop {
        SignedTrop::mul(self, rhs)
    }
}

impl Sub for &SignedTrop {
    type Output = SignedTrop;
    fn sub(self, rhs: &SignedTrop) -> SignedTrop {
        SignedTrop::sub(self, rhs)
    }
}

impl Neg for &SignedTrop {
    type Output = SignedTrop;
    fn neg(self) -> SignedTrop {
        self.negate()
    }
}

impl fmt::Display for SignedTrop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignedTrop::Zero => write!(f, "𝟘"),
            SignedTrop::Pos(m) => write!(f, "{}", crate::trop::format_rat(m)),
            SignedTrop::Neg(m) => write!(f, "⊖{}", crate::trop::format_rat(m)),
            SignedTrop::Bal(m) => write!(f, "{}°", crate::trop::format_rat(m)),
            SignedTrop::Top => write!(f, "⊤"),
            SignedTrop::Bot => write!(f, "⊥"),
        }
    }
}
