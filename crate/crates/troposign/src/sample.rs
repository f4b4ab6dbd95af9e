//! Seeded random generators over quarter-integer magnitude grids, used by
//! the property suites, the verification harnesses and the corpus
//! generator. All sampling is deterministic given the seed.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{SignedMat, SignedVec, TropMat, TropVec};
use crate::polar::{polar_contains, two_sided_contains, FinitePointSet, SignedPair};
use crate::signed::SignedTrop;
use crate::trop::{rat, Rat, TropNum};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Magnitudes are drawn as `k/denom` with `k` in `min_num..=max_num`.
#[derive(Debug, Clone, Copy)]
pub struct MagnitudeGrid {
    pub min_num: i64,
    pub max_num: i64,
    pub denom: i64,
}

impl Default for MagnitudeGrid {
    fn default() -> Self {
        // quarter-integer magnitudes in [-3, 3]
        MagnitudeGrid { min_num: -12, max_num: 12, denom: 4 }
    }
}

impl MagnitudeGrid {
    pub fn integers(lo: i64, hi: i64) -> Self {
        MagnitudeGrid { min_num: lo, max_num: hi, denom: 1 }
    }

    /// Magnitudes in `[lo, hi]` with the given denominator.
    pub fn with_denom(lo: i64, hi: i64, denom: i64) -> Self {
        MagnitudeGrid { min_num: lo * denom, max_num: hi * denom, denom }
    }

    /// One grid step.
    pub fn step(&self) -> Rat {
        Rat::new(1.into(), self.denom.into())
    }
}

pub fn rand_magnitude(rng: &mut ChaCha8Rng, grid: &MagnitudeGrid) -> Rat {
    Rat::new(rng.gen_range(grid.min_num..=grid.max_num).into(), grid.denom.into())
}

/// A tropical number; roughly one in four draws is `-∞`.
pub fn rand_trop(rng: &mut ChaCha8Rng, grid: &MagnitudeGrid) -> TropNum {
    if rng.gen_range(0..4) == 0 {
        TropNum::NegInf
    } else {
        TropNum::Fin(rand_magnitude(rng, grid))
    }
}

/// A signed element of `𝕊^∨` (never balanced).
pub fn rand_signed(rng: &mut ChaCha8Rng, grid: &MagnitudeGrid) -> SignedTrop {
    match rng.gen_range(0..7) {
        0 => SignedTrop::Zero,
        k if k % 2 == 1 => SignedTrop::Pos(rand_magnitude(rng, grid)),
        _ => SignedTrop::Neg(rand_magnitude(rng, grid)),
    }
}

/// Any element of `𝕊`, balanced included.
pub fn rand_signed_any(rng: &mut ChaCha8Rng, grid: &MagnitudeGrid) -> SignedTrop {
    match rng.gen_range(0..7) {
        0 => SignedTrop::Zero,
        1 | 2 => SignedTrop::Pos(rand_magnitude(rng, grid)),
        3 | 4 => SignedTrop::Neg(rand_magnitude(rng, grid)),
        _ => SignedTrop::Bal(rand_magnitude(rng, grid)),
    }
}

pub fn rand_trop_vec(rng: &mut ChaCha8Rng, dim: usize, grid: &MagnitudeGrid) -> TropVec {
    TropVec::new((0..dim).map(|_| rand_trop(rng, grid)).collect())
}

pub fn rand_signed_vec(rng: &mut ChaCha8Rng, dim: usize, grid: &MagnitudeGrid) -> SignedVec {
    SignedVec::new((0..dim).map(|_| rand_signed(rng, grid)).collect()).unwrap()
}

/// A finite point set with at least one generator of nonempty support.
pub fn rand_point_set(
    rng: &mut ChaCha8Rng,
    dim: usize,
    count: usize,
    grid: &MagnitudeGrid,
) -> FinitePointSet {
    loop {
        let points: Vec<TropVec> =
            (0..count.max(1)).map(|_| rand_trop_vec(rng, dim, grid)).collect();
        if points.iter().any(|p| !p.support().is_empty()) {
            return FinitePointSet::new(points).unwrap();
        }
    }
}

/// Rejection-sample a member of `A°`; minus-zero vectors always qualify,
/// so this terminates quickly, but the attempts are biased toward mixed
/// signs first to get interesting members.
pub fn rand_polar_member(
    rng: &mut ChaCha8Rng,
    a: &FinitePointSet,
    grid: &MagnitudeGrid,
    tries: usize,
) -> SignedVec {
    for _ in 0..tries {
        let x = rand_signed_vec(rng, a.dim(), grid);
        if polar_contains(a, &x).unwrap() {
            return x;
        }
    }
    // fall back to a guaranteed member with empty minus part
    let entries = (0..a.dim())
        .map(|_| match rng.gen_range(0..3) {
            0 => SignedTrop::Zero,
            _ => SignedTrop::Pos(rand_magnitude(rng, grid)),
        })
        .collect();
    SignedVec::new(entries).unwrap()
}

/// Rejection-sample a member of the two-sided polar `A^▷` (pairs, not
/// necessarily signed), falling back to a monotone pair.
pub fn rand_two_sided_member(
    rng: &mut ChaCha8Rng,
    a: &FinitePointSet,
    grid: &MagnitudeGrid,
    tries: usize,
) -> SignedPair {
    for _ in 0..tries {
        let p =
            SignedPair::new(rand_trop_vec(rng, a.dim(), grid), rand_trop_vec(rng, a.dim(), grid))
                .unwrap();
        if two_sided_contains(a, &p).unwrap() {
            return p;
        }
    }
    let plus = rand_trop_vec(rng, a.dim(), grid);
    let minus = plus.clone();
    SignedPair::new(plus, minus).unwrap()
}

pub fn rand_symmetric_trop(rng: &mut ChaCha8Rng, n: usize, grid: &MagnitudeGrid) -> TropMat {
    let mut m = TropMat::fill(n, n, TropNum::NegInf);
    for i in 0..n {
        for j in i..n {
            let v = rand_trop(rng, grid);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

pub fn rand_symmetric_signed(rng: &mut ChaCha8Rng, n: usize, grid: &MagnitudeGrid) -> SignedMat {
    let mut m = SignedMat::fill(n, n, SignedTrop::Zero);
    for i in 0..n {
        for j in i..n {
            let v = rand_signed(rng, grid);
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}

/// A member of `CP_n(𝕋)`: diagonal first, off-diagonal entries bounded by
/// the half-sum of their diagonals.
pub fn rand_cp_member(rng: &mut ChaCha8Rng, n: usize, grid: &MagnitudeGrid) -> TropMat {
    let diag: Vec<TropNum> = (0..n)
        .map(|_| {
            if rng.gen_range(0..8) == 0 {
                TropNum::NegInf
            } else {
                TropNum::Fin(rand_magnitude(rng, grid))
            }
        })
        .collect();
    let mut m = TropMat::fill(n, n, TropNum::NegInf);
    for i in 0..n {
        m.set(i, i, diag[i].clone());
    }
    for i in 0..n {
        for j in i + 1..n {
            if let (Some(di), Some(dj)) = (diag[i].as_finite(), diag[j].as_finite()) {
                if rng.gen_range(0..4) > 0 {
                    // |X_ij| ≤ min(d_i, d_j) implies 2|X_ij| ≤ d_i + d_j and
                    // keeps the magnitude on the sampling grid
                    let slack = rat(rng.gen_range(0i64..=8)) * grid.step();
                    let v = di.min(dj).clone() - slack;
                    m.set(i, j, TropNum::Fin(v.clone()));
                    m.set(j, i, TropNum::Fin(v));
                }
            }
        }
    }
    m
}

/// A member of `PSD_n(𝕊)` with mixed off-diagonal signs.
pub fn rand_psd_signed_member(rng: &mut ChaCha8Rng, n: usize, grid: &MagnitudeGrid) -> SignedMat {
    let diag: Vec<SignedTrop> = (0..n)
        .map(|_| {
            if rng.gen_range(0..8) == 0 {
                SignedTrop::Zero
            } else {
                SignedTrop::Pos(rand_magnitude(rng, grid))
            }
        })
        .collect();
    let mut m = SignedMat::fill(n, n, SignedTrop::Zero);
    for (i, d) in diag.iter().enumerate() {
        m.set(i, i, d.clone());
    }
    for i in 0..n {
        for j in i + 1..n {
            if let (Some(di), Some(dj)) = (diag[i].magnitude(), diag[j].magnitude()) {
                if rng.gen_range(0..4) > 0 {
                    let slack = rat(rng.gen_range(0i64..=8)) * grid.step();
                    let mag = di.min(dj).clone() - slack;
                    let v =
                        if rng.gen_bool(0.5) { SignedTrop::Pos(mag) } else { SignedTrop::Neg(mag) };
                    m.set(i, j, v.clone());
                    m.set(j, i, v);
                }
            }
        }
    }
    m
}

/// A member of `PD_n(𝕊)`: strict diagonal dominance of the inequalities.
pub fn rand_pd_signed_member(rng: &mut ChaCha8Rng, n: usize, grid: &MagnitudeGrid) -> SignedMat {
    let diag: Vec<Rat> = (0..n).map(|_| rand_magnitude(rng, grid)).collect();
    let mut m = SignedMat::fill(n, n, SignedTrop::Zero);
    for (i, d) in diag.iter().enumerate() {
        m.set(i, i, SignedTrop::Pos(d.clone()));
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..4) > 0 {
                let slack = rat(rng.gen_range(1i64..=8)) * grid.step();
                let mag = diag[i].clone().min(diag[j].clone()) - slack;
                let v = if rng.gen_bool(0.5) { SignedTrop::Pos(mag) } else { SignedTrop::Neg(mag) };
                m.set(i, j, v.clone());
                m.set(j, i, v);
            }
        }
    }
    m
}

/// A member of the tropical copositive cone: positive off-diagonal
/// entries are unconstrained, negative ones obey the half-sum bound.
pub fn rand_copositive_member(rng: &mut ChaCha8Rng, n: usize, grid: &MagnitudeGrid) -> SignedMat {
    let diag: Vec<SignedTrop> = (0..n)
        .map(|_| {
            if rng.gen_range(0..8) == 0 {
                SignedTrop::Zero
            } else {
                SignedTrop::Pos(rand_magnitude(rng, grid))
            }
        })
        .collect();
    let mut m = SignedMat::fill(n, n, SignedTrop::Zero);
    for (i, d) in diag.iter().enumerate() {
        m.set(i, i, d.clone());
    }
    for i in 0..n {
        for j in i + 1..n {
            let v = match rng.gen_range(0..4) {
                0 => SignedTrop::Zero,
                1 | 2 => SignedTrop::Pos(rand_magnitude(rng, grid)),
                _ => match (diag[i].magnitude(), diag[j].magnitude()) {
                    (Some(di), Some(dj)) => {
                        let slack = rat(rng.gen_range(0i64..=8)) * grid.step();
                        SignedTrop::Neg(di.min(dj).clone() - slack)
                    }
                    _ => SignedTrop::Zero,
                },
            };
            m.set(i, j, v.clone());
            m.set(j, i, v);
        }
    }
    m
}
