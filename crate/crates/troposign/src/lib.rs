//! Exact arithmetic over the symmetrized tropical (max-plus) semiring.
//!
//! The crate provides:
//!
//! - [`trop`] / [`signed`] — the max-plus semifield `𝕋` and the symmetrized
//!   semiring `𝕊` of signed tropical numbers, with exact rational magnitudes
//!   and the `⪯` / `∇` relations;
//! - [`linalg`] — vectors and matrices over `𝕋` and `𝕊`, symmetrized
//!   determinant, comatrix and Kleene star;
//! - [`polar`] — signed polars of finite point sets, the `∨`-map and
//!   bend-addition combinators, bend-cone axiom checking, and tropical
//!   separation;
//! - [`cones`] — membership tests with certificates for the tropical PSD,
//!   PD, CP, CPSD and copositive matrix cones, and CP factorization;
//! - [`opt`] — univariate signed polynomial optimization, tropical
//!   quadratic programs in closed form, and copositivity as a QP;
//! - [`sat`] — the 3-SAT ↔ tropical quadratic feasibility encoder with an
//!   exhaustive checker, plus DIMACS I/O;
//! - [`lift`] — monomial Puiseux lifts evaluated exactly at a fixed
//!   rational `t`, signed-valuation extraction, and the desk-scale
//!   verification harnesses for the valuation-commutation statements;
//! - [`io`] — JSON encodings for scalars, vectors, matrices and reports;
//! - [`sample`] — seeded random generators used by tests and the corpus
//!   generator.
//!
//! ```
//! use troposign::{SignedMat, SignedTrop};
//!
//! // ⊖3 ⊕ 2 = ⊖3: the larger modulus wins, keeping its sign
//! let a = SignedTrop::neg_int(3);
//! let b = SignedTrop::pos_int(2);
//! assert_eq!(&a + &b, a);
//! assert_eq!(&a + &(-&a), SignedTrop::bal_int(3));
//!
//! // the off-diagonal square test rejects [[2,3],[3,2]] from the PSD cone
//! let m = SignedMat::from_rows(vec![
//!     vec![SignedTrop::pos_int(2), SignedTrop::pos_int(3)],
//!     vec![SignedTrop::pos_int(3), SignedTrop::pos_int(2)],
//! ])?;
//! assert!(!troposign::cones::is_psd_signed(&m)?.member);
//! assert!(troposign::cones::is_copositive(&m)?.member);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cones;
pub mod io;
pub mod lift;
pub mod linalg;
pub mod opt;
pub mod polar;
pub mod sample;
pub mod sat;
pub mod signed;
pub mod trop;

pub use crate::linalg::{SignedMat, SignedVec, TropMat, TropVec};
pub use crate::signed::{SignClass, SignedTrop, TropError};
pub use crate::trop::{Rat, TropNum};
