//! zetamass: an exact-arithmetic workbench for zeta functions of curves over
//! finite fields and the mass/volume identities of parabolic reduction.
//!
//! The library computes, with exact rational arithmetic wherever the theory
//! is exact and certified high-precision arithmetic elsewhere:
//!
//! - completed Artin zeta functions of curves over F_q from point counts or
//!   numerator coefficients: special values, residues, effective-divisor
//!   counts, Riemann-hypothesis root checks ([`curvezeta`]);
//! - rank-n zeta functions assembled from alpha/beta partial-mass tables,
//!   with rationality, functional-equation and residue verification
//!   ([`zetassembly`]);
//! - total and semistable masses of bundles: the Zagier closed formula, the
//!   Harder-Narasimhan shell expansion, roots-of-unity average/individual
//!   identities, and the number-field Siegel/semistable-volume analogues
//!   ([`masscalc`]);
//! - root systems of small rank: Weyl groups, exponent counts, coweight cell
//!   volumes, Langlands volume formula, W0/parabolic enumeration, and the
//!   conjectural parabolic-reduction coefficient generators ([`rootsys`]);
//! - Witten zeta values for SU(n) with certified tail bounds and the moduli
//!   volume formula ([`wittenvol`]);
//! - high-precision period evaluation with the archimedean Gamma_R factor
//!   ([`periods`]).
//!
//! Everything is deterministic: exact values are exact, floating values are
//! computed at a caller-chosen precision with stable formatting, and all
//! randomized property drivers take explicit seeds.

pub mod cli;
pub mod curvezeta;
pub mod error;
pub mod exactmath;
pub mod io;
pub mod masscalc;
pub mod periods;
pub mod rootsys;
pub mod wittenvol;
pub mod zetassembly;

pub use error::{Error, Result};
