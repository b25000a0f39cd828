//! Exact-arithmetic model of the positive geometric crystal of type
//! D_6^(1) at the spin node.
//!
//! - [`exact_arith`]: the [`Rational`] scalar and seeded positive sampling.
//! - [`spin_module`]: the 32-dimensional module, `Y_k(c)` and `V_1`, `V_2`.
//! - [`unipotent_crystal`]: the generic Schubert-cell crystal on a reduced word.
//! - [`d6_spin_crystal`]: named points, closed-form actions, `σ̄`, the K-family.
//! - [`verifier`]: randomized exact identity checks with JSON reports.

pub mod d6_spin_crystal;
pub mod error;
pub mod exact_arith;
pub mod spin_module;
pub mod unipotent_crystal;
pub mod verifier;

pub use d6_spin_crystal::{KFamily, PointV1, PointV2};
pub use error::{Error, Result};
pub use exact_arith::Rational;
pub use spin_module::{SpinBasis, SpinVector};
pub use unipotent_crystal::{ParamTuple, SimplyLacedCartan, WordCrystal};
