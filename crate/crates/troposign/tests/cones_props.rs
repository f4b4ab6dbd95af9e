//! Matrix-cone membership against the brute-force grid quantifier, the
//! tropical collapse of CP/CPSD/PSD, factorization round-trips, and the
//! PSD lift consistency check.

mod common;

use common::{
    grid_quantifier_holds, mat_to_pairs, nonneg_grid_values, scaled_range, signed_grid_values,
};
use rand::Rng;
use troposign::cones::{cp_factorize, is_cp, is_cpsd, is_psd_signed, is_psd_trop, Certificate};
use troposign::lift::{lift_psd, RationalLift};
use troposign::linalg::SignedMat;
use troposign::sample::{
    rand_cp_member, rand_psd_signed_member, rand_symmetric_signed, rand_symmetric_trop,
    rng_from_seed, MagnitudeGrid,
};
use troposign::signed::SignedTrop;
use troposign::trop::rat;

/// Oracle equivalence on random symmetric signed matrices with integer
/// magnitudes: the membership test agrees with the grid quantifier over
/// half-integer signed vectors (the witness analysis for the two-by-two
/// conditions needs exactly twice the resolution of the data).
#[test]
fn psd_signed_matches_grid_quantifier() {
    let grid = MagnitudeGrid::integers(-2, 2);
    let mut rng = rng_from_seed(201);
    // x magnitudes: half-integers in [-3, 3], scale 2
    let mags = scaled_range(-6, 6, 1);
    let values = signed_grid_values(&mags);
    let mut members = 0;
    for round in 0..600 {
        let n_dim = 2 + (round % 2);
        let a = if round % 3 == 0 {
            rand_psd_signed_member(&mut rng, n_dim, &grid)
        } else {
            rand_symmetric_signed(&mut rng, n_dim, &grid)
        };
        let verdict = is_psd_signed(&a).unwrap();
        let pairs = mat_to_pairs(&a, 2);
        let grid_ok = grid_quantifier_holds(&pairs, &values, 2, 200, &mut rng);
        assert_eq!(verdict.member, grid_ok, "PSD mismatch on {a}");
        if verdict.member {
            members += 1;
        }
    }
    assert!(members > 100, "sampling produced too few members: {members}");
}

#[test]
fn copositive_matches_nonnegative_grid_quantifier() {
    let grid = MagnitudeGrid::integers(-2, 2);
    let mut rng = rng_from_seed(202);
    let mags = scaled_range(-6, 6, 1);
    let values = nonneg_grid_values(&mags);
    let mut members = 0;
    for round in 0..600 {
        let n_dim = 2 + (round % 2);
        let a = if round % 3 == 0 {
            troposign::sample::rand_copositive_member(&mut rng, n_dim, &grid)
        } else {
            rand_symmetric_signed(&mut rng, n_dim, &grid)
        };
        let verdict = troposign::cones::is_copositive(&a).unwrap();
        let pairs = mat_to_pairs(&a, 2);
        let grid_ok = grid_quantifier_holds(&pairs, &values, 2, 200, &mut rng);
        assert_eq!(verdict.member, grid_ok, "copositivity mismatch on {a}");
        if verdict.member {
            members += 1;
        }
    }
    assert!(members > 100, "sampling produced too few members: {members}");
}

#[test]
fn the_three_tropical_cones_coincide() {
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(203);
    for _ in 0..2000 {
        let n_dim = rng.gen_range(1..=5);
        let x = rand_symmetric_trop(&mut rng, n_dim, &grid);
        let cp = is_cp(&x).unwrap().member;
        let cpsd = is_cpsd(&x).unwrap().member;
        let psd = is_psd_trop(&x).unwrap().member;
        assert_eq!(cp, cpsd);
        assert_eq!(cp, psd, "collapse failed on {x:?}");
    }
}

#[test]
fn cp_factorization_round_trips_with_expected_width() {
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(204);
    for _ in 0..300 {
        let n_dim = rng.gen_range(1..=5);
        let x = rand_cp_member(&mut rng, n_dim, &grid);
        let y = cp_factorize(&x).unwrap();
        assert_eq!(y.cols(), n_dim * (n_dim + 1) / 2);
        assert_eq!(y.mul(&y.transpose()).unwrap(), x, "Y⊙Yᵀ ≠ X for {x:?}");
    }
}

#[test]
fn violation_certificates_reevaluate_to_failures() {
    let grid = MagnitudeGrid::integers(-2, 2);
    let mut rng = rng_from_seed(205);
    let mut seen = 0;
    for _ in 0..400 {
        let n_dim = rng.gen_range(2..=4);
        let a = rand_symmetric_signed(&mut rng, n_dim, &grid);
        let verdict = is_psd_signed(&a).unwrap();
        if let Certificate::Violation(v) = &verdict.certificate {
            seen += 1;
            assert!(v.reevaluates_to_failure(), "certificate does not re-evaluate: {v:?}");
        }
    }
    assert!(seen > 100);
}

/// Members of PSD_n(𝕊) lift to classically PSD rational matrices at
/// t = 10⁶ via the (n-1)/1 coefficient recipe, certified by exact
/// principal minors.
#[test]
fn psd_members_lift_to_certified_classical_psd() {
    let lift = RationalLift::default();
    let grid = MagnitudeGrid::with_denom(-3, 3, lift.compatible_denominator());
    let mut rng = rng_from_seed(206);
    for _ in 0..500 {
        let n_dim = rng.gen_range(1..=4);
        let a = rand_psd_signed_member(&mut rng, n_dim, &grid);
        let lifted = lift_psd(&a, &lift).unwrap();
        assert_eq!(lifted.t_used, rat(1_000_000), "retry should never trigger for the recipe");
        assert_eq!(lifted.attempts.len(), 1);
    }
}

#[test]
fn diagonal_reduction_for_tropical_psd_frobenius_products() {
    // frobenius(Y, Z) = ⟨diag Y, diag Z⟩ for tropical PSD members
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(207);
    for _ in 0..300 {
        let n_dim = rng.gen_range(1..=4);
        let y = rand_cp_member(&mut rng, n_dim, &grid);
        let z = rand_cp_member(&mut rng, n_dim, &grid);
        assert!(is_psd_trop(&y).unwrap().member && is_psd_trop(&z).unwrap().member);
        let ys = troposign::lift::trop_to_signed_mat(&y).unwrap();
        let zs = troposign::lift::trop_to_signed_mat(&z).unwrap();
        let full = troposign::linalg::frobenius(&ys, &zs).unwrap();
        let diag = ys.diag().dot_signed(&zs.diag()).unwrap();
        assert_eq!(full, diag, "diagonal reduction failed for Y = {y:?}, Z = {z:?}");
    }
}

#[test]
fn worked_diag_reduction_instance() {
    let y = troposign::linalg::TropMat::from_ints(&[&[2, 2], &[2, 2]]);
    assert!(is_psd_trop(&y).unwrap().member);
    let ys = troposign::lift::trop_to_signed_mat(&y).unwrap();
    let v = troposign::linalg::frobenius(&ys, &ys).unwrap();
    assert_eq!(v, SignedTrop::pos_int(4));
    assert_eq!(ys.diag().dot_signed(&ys.diag()).unwrap(), SignedTrop::pos_int(4));
}

#[test]
fn psd_matrices_with_balanced_entries_are_rejected() {
    let a = SignedMat::from_rows(vec![
        vec![SignedTrop::pos_int(0), SignedTrop::bal_int(0)],
        vec![SignedTrop::bal_int(0), SignedTrop::pos_int(0)],
    ])
    .unwrap();
    assert!(is_psd_signed(&a).is_err());
    assert!(troposign::cones::is_copositive(&a).is_err());
}

#[test]
fn determinant_of_equal_rows_is_balanced_or_zero() {
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(208);
    for _ in 0..300 {
        let n_dim = rng.gen_range(2..=4);
        let mut a = rand_symmetric_signed(&mut rng, n_dim, &grid);
        // copy one row onto another (and fix columns to keep it a matrix,
        // not necessarily symmetric -- the identity is about equal rows)
        let src = rng.gen_range(0..n_dim);
        let dst = (src + 1) % n_dim;
        for j in 0..n_dim {
            let v = a.at(src, j).clone();
            a.set(dst, j, v);
        }
        let d = troposign::linalg::det_signed(&a).unwrap();
        assert!(d.is_balanced_class(), "equal rows must balance: det = {d} for {a}");
    }
}

#[test]
fn signed_scalar_products_match_the_pair_inequality() {
    // ⟨x, a⟩ ⪰ 𝟘 ⟺ ⟨x⁺, a⟩ ≥ ⟨x⁻, a⟩
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(209);
    for _ in 0..2000 {
        let dim = rng.gen_range(1..=4);
        let x = troposign::sample::rand_signed_vec(&mut rng, dim, &grid);
        let a = troposign::sample::rand_trop_vec(&mut rng, dim, &grid);
        let signed_side = x.dot_trop(&a).unwrap().geq(&SignedTrop::Zero);
        let pair = troposign::polar::SignedPair::from_signed_vec(&x).unwrap();
        let pair_side = pair.plus.dot(&a).unwrap() >= pair.minus.dot(&a).unwrap();
        assert_eq!(signed_side, pair_side);
    }
}

#[test]
fn unsigned_psd_agrees_with_the_signed_embedding() {
    // PSD over 𝕋 is the restriction of PSD over 𝕊 along 𝕋 ≅ 𝕊⁺
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(210);
    for _ in 0..1000 {
        let n_dim = rng.gen_range(1..=4);
        let x = rand_symmetric_trop(&mut rng, n_dim, &grid);
        let embedded = troposign::lift::trop_to_signed_mat(&x).unwrap();
        assert_eq!(
            is_psd_trop(&x).unwrap().member,
            is_psd_signed(&embedded).unwrap().member,
            "embedding mismatch at {x:?}"
        );
    }
}
