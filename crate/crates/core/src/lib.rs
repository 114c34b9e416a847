//! Spectral calculus for complex Hermitian matrices and numerical checks of
//! concentration inequalities for random sums `Z = Σ ε_i A_i`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is a pure
//! function of its inputs; randomness comes from explicitly passed
//! [`RngStream`]s.
//!
//! - [`matrix`], [`eigen`], [`spectral`]: Hermitian matrices, a cyclic Jacobi
//!   eigensolver and functions of matrices (`e^A`, norms, the PSD order).
//! - [`trace_ineq`]: Golden–Thompson, Trotter–Lie and trace-power gaps.
//! - [`rng`], [`ensembles`]: counter-based streams, coefficient sequences,
//!   matrix families and isotropic vector ensembles.
//! - [`bounds`]: `C_p`, `σ`, the moment and tail bounds.
//! - [`verifier`]: exact enumeration over sign patterns, MGF checks and
//!   Monte Carlo experiments.
#![cfg_attr(not(test), no_std)]
// `!(x >= 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod bounds;
pub mod eigen;
pub mod ensembles;
mod error;
pub mod matrix;
pub mod rng;
pub mod special;
pub mod spectral;
pub mod trace_ineq;
pub mod verifier;

pub use eigen::{eigh, EigenSystem};
pub use ensembles::{CoefficientKind, EnsembleKind, MatrixFamily, VectorEnsemble};
pub use error::{Error, Result};
pub use matrix::{product_trace, HermitianMatrix, SquareMatrix};
pub use num_complex::Complex64;
pub use rng::RngStream;
pub use spectral::{matrix_exp, operator_norm, psd_order_holds, schatten_norm, spectral_apply};
pub use trace_ineq::{golden_thompson_gap, trace_power_gap, trotter_product, TraceGap};
