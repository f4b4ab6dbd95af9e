//! Shared test support.
//!
//! The heart of this module is a tiny scaled-integer re-implementation of
//! the pair arithmetic of `𝕋²`, written straight from the defining
//! formulas and independent of the library's canonical-form code path. It
//! is used as the brute-force quantifier oracle for the matrix-cone
//! membership tests: magnitudes are scaled by a common denominator so
//! everything is exact `i64` arithmetic, which keeps exhaustive grids
//! cheap.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use troposign::linalg::{SignedMat, SignedVec, TropVec};
use troposign::signed::SignedTrop;
use troposign::trop::{rat, Rat};

pub fn p(n: i64) -> SignedTrop {
    SignedTrop::pos_int(n)
}

pub fn n(v: i64) -> SignedTrop {
    SignedTrop::neg_int(v)
}

pub fn b(v: i64) -> SignedTrop {
    SignedTrop::bal_int(v)
}

pub fn z() -> SignedTrop {
    SignedTrop::Zero
}

pub fn tv(entries: &[i64]) -> TropVec {
    TropVec::from_ints(entries)
}

pub fn svec(entries: Vec<SignedTrop>) -> SignedVec {
    SignedVec::new(entries).unwrap()
}

pub fn smat(rows: Vec<Vec<SignedTrop>>) -> SignedMat {
    SignedMat::from_rows(rows).unwrap()
}

/// A raw pair `(a⁺, a⁻)` with scaled-integer entries; `None` is `-∞`.
pub type Pair = (Option<i64>, Option<i64>);

pub const PZERO: Pair = (None, None);

fn omul(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x + y),
        _ => None,
    }
}

/// `(a⁺,a⁻) ⊕ (b⁺,b⁻) = (a⁺⊕b⁺, a⁻⊕b⁻)`; `Option<i64>` orders `None`
/// below everything, so `max` is the tropical sum.
pub fn padd(a: Pair, b: Pair) -> Pair {
    (a.0.max(b.0), a.1.max(b.1))
}

/// `(a⁺,a⁻) ⊙ (b⁺,b⁻) = (a⁺b⁺ ⊕ a⁻b⁻, a⁺b⁻ ⊕ a⁻b⁺)`.
pub fn pmul(a: Pair, b: Pair) -> Pair {
    (omul(a.0, b.0).max(omul(a.1, b.1)), omul(a.0, b.1).max(omul(a.1, b.0)))
}

/// `x ⪰ 𝟘 ⟺ x⁻ ≤ x⁺` by the pair formula.
pub fn pair_geq_zero(a: Pair) -> bool {
    a.1 <= a.0
}

/// Convert a signed scalar to a pair with magnitudes scaled by `scale`
/// (which must clear every denominator in the data).
pub fn to_pair(s: &SignedTrop, scale: i64) -> Pair {
    let mag = |m: &Rat| -> i64 {
        let scaled = m * rat(scale);
        assert!(scaled.is_integer(), "oracle scale {scale} does not clear the denominator of {m}");
        i64::try_from(scaled.to_integer()).expect("oracle magnitude fits i64")
    };
    match s {
        SignedTrop::Zero => PZERO,
        SignedTrop::Pos(m) => (Some(mag(m)), None),
        SignedTrop::Neg(m) => (None, Some(mag(m))),
        SignedTrop::Bal(m) => {
            let v = mag(m);
            (Some(v), Some(v))
        }
        _ => panic!("extended elements have no pair representation"),
    }
}

pub fn mat_to_pairs(a: &SignedMat, scale: i64) -> Vec<Vec<Pair>> {
    (0..a.rows()).map(|i| (0..a.cols()).map(|j| to_pair(a.at(i, j), scale)).collect()).collect()
}

/// `xᵀAx` in raw pair arithmetic.
pub fn quad_form_pairs(a: &[Vec<Pair>], x: &[Pair]) -> Pair {
    let n = x.len();
    let mut acc = PZERO;
    for i in 0..n {
        for j in 0..n {
            acc = padd(acc, pmul(pmul(x[i], a[i][j]), x[j]));
        }
    }
    acc
}

/// The signed grid values `{𝟘} ∪ {Pos(m), Neg(m)}` for scaled magnitudes.
pub fn signed_grid_values(mags_scaled: &[i64]) -> Vec<Pair> {
    let mut vals = vec![PZERO];
    for &m in mags_scaled {
        vals.push((Some(m), None));
        vals.push((None, Some(m)));
    }
    vals
}

/// The nonnegative grid values `{𝟘} ∪ {Pos(m)}`.
pub fn nonneg_grid_values(mags_scaled: &[i64]) -> Vec<Pair> {
    let mut vals = vec![PZERO];
    for &m in mags_scaled {
        vals.push((Some(m), None));
    }
    vals
}

/// Evenly spaced scaled magnitudes `lo..=hi` by `step` (all scaled).
pub fn scaled_range(lo: i64, hi: i64, step: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut v = lo;
    while v <= hi {
        out.push(v);
        v += step;
    }
    out
}

/// Does the grid quantifier `∀x: xᵀAx ⪰ 𝟘` hold?
///
/// Enumerates exhaustively all vectors of support at most `max_support`
/// over the nonzero grid values (the two-by-two structure of the cone
/// conditions puts every violating direction on a pair of coordinates),
/// then samples `full_samples` unrestricted grid vectors on top.
pub fn grid_quantifier_holds(
    a_pairs: &[Vec<Pair>],
    values_nonzero: &[Pair],
    max_support: usize,
    full_samples: usize,
    rng: &mut ChaCha8Rng,
) -> bool {
    let n = a_pairs.len();
    let mut x = vec![PZERO; n];

    // exhaustive over small supports
    fn rec(a: &[Vec<Pair>], vals: &[Pair], x: &mut Vec<Pair>, first: usize, left: usize) -> bool {
        if !pair_geq_zero(quad_form_pairs(a, x)) {
            return false;
        }
        if left == 0 {
            return true;
        }
        let n = x.len();
        for i in first..n {
            for &v in vals {
                x[i] = v;
                if !rec(a, vals, x, i + 1, left - 1) {
                    return false;
                }
            }
            x[i] = PZERO;
        }
        true
    }
    if !rec(a_pairs, values_nonzero, &mut x, 0, max_support.min(n)) {
        return false;
    }

    // sampled full vectors
    let mut all_vals = values_nonzero.to_vec();
    all_vals.push(PZERO);
    for _ in 0..full_samples {
        let x: Vec<Pair> = (0..n).map(|_| all_vals[rng.gen_range(0..all_vals.len())]).collect();
        if !pair_geq_zero(quad_form_pairs(a_pairs, &x)) {
            return false;
        }
    }
    true
}
