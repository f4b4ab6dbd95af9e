//! Optimization properties: the univariate minimizer against a dense grid
//! oracle with local probing at the reported root, root completeness, the
//! closed-form quadratic identities, and the copositivity QP.

mod common;

use common::{n, p, smat, svec, z};
use rand::Rng;
use troposign::cones::is_copositive;
use troposign::opt::{
    copositive_qp_value, minimize_poly, poly_roots, quad_form, solve_quadratic, Attainment,
    OptResult, QuadProblem, SignedPoly,
};
use troposign::sample::{
    rand_pd_signed_member, rand_signed_vec, rand_symmetric_signed, rng_from_seed, MagnitudeGrid,
};
use troposign::signed::SignedTrop;
use troposign::trop::{rat, ratq, Rat};

fn rand_poly(rng: &mut rand_chacha::ChaCha8Rng, max_degree: usize) -> SignedPoly {
    loop {
        let deg = rng.gen_range(0..=max_degree);
        let coeffs: Vec<SignedTrop> = (0..=deg)
            .map(|_| match rng.gen_range(0..5) {
                0 => SignedTrop::Zero,
                k if k % 2 == 1 => SignedTrop::pos_int(rng.gen_range(-5..=5)),
                _ => SignedTrop::neg_int(rng.gen_range(-5..=5)),
            })
            .collect();
        if let Ok(f) = SignedPoly::new(coeffs) {
            return f;
        }
    }
}

/// `|f|(m)` recomputed directly from the coefficients.
fn modulus_value(f: &SignedPoly, m: &Rat) -> Option<Rat> {
    let mut best: Option<Rat> = None;
    for (k, a) in f.coeffs().iter().enumerate() {
        if let Some(mag) = a.magnitude() {
            let v = mag + m * rat(k as i64);
            best = Some(match best {
                None => v,
                Some(b) => b.max(v),
            });
        }
    }
    best
}

#[test]
fn minimizer_agrees_with_dense_grid_oracle() {
    let mut rng = rng_from_seed(301);
    for _ in 0..400 {
        let f = rand_poly(&mut rng, 6);
        let OptResult { value, attainment } = minimize_poly(&f);

        // dense signed grid: magnitudes -20..20 step 1/4, both signs, plus 𝟘
        let mut grid_values: Vec<SignedTrop> = Vec::new();
        let mut m = rat(-20);
        while m <= rat(20) {
            for x in [SignedTrop::Pos(m.clone()), SignedTrop::Neg(m.clone())] {
                let v = f.eval(&x).unwrap();
                if v.is_signed() {
                    grid_values.push(v);
                }
            }
            m += ratq(1, 4);
        }
        grid_values.push(f.eval(&SignedTrop::Zero).unwrap());

        // every feasible grid value dominates the reported infimum
        for v in &grid_values {
            assert!(v.geq(&value), "grid value {v} below the reported infimum {value} for {f:?}");
        }

        match &attainment {
            Attainment::Unbounded => {
                // the grid must already exhibit arbitrarily low values
                let low = grid_values.iter().any(|v| v.lt(&SignedTrop::neg_int(10)));
                assert!(low, "unbounded case shows no low grid values for {f:?}");
                assert_eq!(value, SignedTrop::Bot);
            }
            Attainment::AttainedAt(at) => {
                assert_eq!(at, &SignedTrop::Zero);
                assert_eq!(f.eval(at).unwrap(), value);
            }
            Attainment::OneSidedLimitAt { root, side } => {
                // probe the approach side at shrinking offsets
                let m = root.magnitude().unwrap().clone();
                let fm = modulus_value(&f, &m).unwrap();
                assert_eq!(value, SignedTrop::Neg(fm.clone()), "value is ⊖|f|(|α|)");

                // keep probes clear of the neighboring roots
                let mut eps = ratq(1, 4);
                for other in poly_roots(&f) {
                    if &other != root {
                        if let Some(om) = other.magnitude() {
                            let d = if om > &m { om - &m } else { &m - om };
                            if d != rat(0) {
                                while eps >= d {
                                    eps /= rat(4);
                                }
                            }
                        }
                    }
                }
                for k in 0..3 {
                    let off = &eps / rat(1 << k);
                    let x = match (root, side) {
                        (SignedTrop::Pos(_), troposign::opt::LimitSide::Left) => {
                            SignedTrop::Pos(&m - &off)
                        }
                        (SignedTrop::Neg(_), troposign::opt::LimitSide::Right) => {
                            SignedTrop::Neg(&m - &off)
                        }
                        _ => panic!("side does not match the root sign"),
                    };
                    let v = f.eval(&x).unwrap();
                    match v {
                        SignedTrop::Neg(vm) => {
                            // |f| has slopes bounded by the degree
                            let slack = rat(f.degree() as i64) * &off;
                            assert!(
                                vm <= fm && fm.clone() - &vm <= slack,
                                "one-sided probe off by more than the slope bound for {f:?}"
                            );
                        }
                        other => panic!("probe at {x} not signed negative: {other} for {f:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn balanced_grid_points_are_exactly_the_roots() {
    let mut rng = rng_from_seed(302);
    for _ in 0..300 {
        let f = rand_poly(&mut rng, 6);
        let roots = poly_roots(&f);
        let mut m = rat(-20);
        while m <= rat(20) {
            for x in [SignedTrop::Pos(m.clone()), SignedTrop::Neg(m.clone())] {
                let balanced = f.eval(&x).unwrap().is_balanced_class();
                assert_eq!(balanced, roots.contains(&x), "root set wrong at {x} for {f:?}");
            }
            m += ratq(1, 4);
        }
        let zero_balanced = f.eval(&SignedTrop::Zero).unwrap().is_balanced_class();
        assert_eq!(zero_balanced, roots.contains(&SignedTrop::Zero));
        for r in &roots {
            assert!(f.eval(r).unwrap().is_balanced_class());
        }
    }
}

#[test]
fn quadratic_value_matches_minimizing_sequence() {
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(303);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=4);
        let a = rand_pd_signed_member(&mut rng, dim, &grid);
        let b = rand_signed_vec(&mut rng, dim, &grid);
        let sol = solve_quadratic(&QuadProblem { a: a.clone(), b: b.clone() }).unwrap();

        // recompute the value entrywise
        let mut by_formula = SignedTrop::Zero;
        for i in 0..dim {
            by_formula = &by_formula + &(&b.get(i).square() * &a.at(i, i).recip().unwrap());
        }
        assert_eq!(sol.value, by_formula.negate());

        // the objective along x̄ ⊙ Pos(-δ) decreases monotonically to the value
        let eval = |x: &troposign::linalg::SignedVec| -> SignedTrop {
            let xtax = quad_form(&a, x).unwrap();
            let btx = b.dot_signed(x).unwrap();
            &xtax + &btx
        };
        let mut last: Option<SignedTrop> = None;
        for delta in [rat(2), rat(1), ratq(1, 2), ratq(1, 4)] {
            let xk = sol.xbar.scale(&SignedTrop::Pos(-delta.clone()));
            let v = eval(&xk);
            assert!(v.is_signed(), "sequence point must be feasible");
            assert!(v.geq(&sol.value));
            assert_eq!(&v, &(&sol.value * &SignedTrop::Pos(-delta)));
            if let Some(prev) = last {
                assert!(v.leq(&prev), "sequence must decrease");
            }
            last = Some(v);
        }

        // x* agrees with x̄ in value when generic
        if let Some(xstar) = &sol.xstar {
            for i in 0..dim {
                assert!(xstar.get(i).is_signed());
            }
        }
    }
}

#[test]
fn quadratic_form_reduces_to_diagonal_on_pd_matrices() {
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(304);
    for _ in 0..300 {
        let dim = rng.gen_range(1..=4);
        let a = rand_pd_signed_member(&mut rng, dim, &grid);
        let x = rand_signed_vec(&mut rng, dim, &grid);
        let full = quad_form(&a, &x).unwrap();
        let mut diag = troposign::linalg::SignedMat::fill(dim, dim, SignedTrop::Zero);
        for i in 0..dim {
            diag.set(i, i, a.at(i, i).clone());
        }
        assert_eq!(full, quad_form(&diag, &x).unwrap(), "xᵀAx ≠ xᵀdiag(A)x for {a}");
    }
}

#[test]
fn copositive_qp_agrees_with_membership() {
    // exhaustive over 2x2 symmetric signed matrices with magnitudes -1..=1
    let mut values = vec![z()];
    for m in -1..=1 {
        values.push(p(m));
        values.push(n(m));
    }
    for aa in &values {
        for bb in &values {
            for cc in &values {
                let a = smat(vec![vec![aa.clone(), bb.clone()], vec![bb.clone(), cc.clone()]]);
                let member = is_copositive(&a).unwrap().member;
                let qp = copositive_qp_value(&a).unwrap();
                assert_eq!(member, qp.value == SignedTrop::Zero);
                assert_eq!(!member, qp.value == SignedTrop::Bot);
                if let Some(w) = qp.witness {
                    let v = quad_form(&a, &w).unwrap();
                    assert!(matches!(v, SignedTrop::Neg(_)), "witness not negative: {v}");
                    assert!(w.iter().all(|e| e.is_weak_positive()), "witness not nonnegative");
                }
            }
        }
    }

    // random 3x3
    let grid = MagnitudeGrid::default();
    let mut rng = rng_from_seed(305);
    for _ in 0..300 {
        let a = rand_symmetric_signed(&mut rng, 3, &grid);
        let member = is_copositive(&a).unwrap().member;
        let qp = copositive_qp_value(&a).unwrap();
        assert_eq!(member, qp.value == SignedTrop::Zero);
    }
}

#[test]
fn non_generic_quadratic_instances_are_flagged() {
    // a PD matrix engineered so (com A)ᵀ b has a balanced entry
    let a = smat(vec![vec![p(0), p(-1), n(-1)], vec![p(-1), p(0), z()], vec![n(-1), z(), p(0)]]);
    assert!(troposign::cones::is_pd_signed(&a).unwrap().member);
    let b = svec(vec![p(0), p(0), p(0)]);
    let sol = solve_quadratic(&QuadProblem { a, b }).unwrap();
    // value and xbar are always defined
    assert_eq!(sol.value, n(0));
    assert_eq!(sol.xbar, svec(vec![n(0), n(0), n(0)]));
    // the comatrix route may or may not be generic; if present, entries are signed
    if let Some(xs) = sol.xstar {
        assert!(xs.iter().all(|e| e.is_signed()));
    }
}
