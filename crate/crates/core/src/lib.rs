//! Exact upper bounds for s-distance sets of `k`-dimensional subspaces of
//! `ℝⁿ`, and polynomial-method checks that validate them on concrete
//! configurations.
//!
//! - [`exact`]: rationals, binomials, Gamma at half-integers.
//! - [`partition`], [`symfun`]: partitions, dominance, Jack polynomials.
//! - [`hilbert`]: Hilbert function and series of the Plücker-embedded Grassmannian.
//! - [`leading`]: the leading coefficient `d(k,n)` of the projection-embedding Hilbert polynomial.
//! - [`geometry`]: frames, principal angles, distances, spectra, fixtures.
//! - [`polymethod`]: evaluation matrices, sampled Hilbert ranks, exact rank checks.
//! - [`bounds`]: every bound and the prior bounds it is compared against.

pub mod bounds;
pub mod config;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod hilbert;
pub mod leading;
pub mod partition;
pub mod polymethod;
pub mod serde_util;
pub mod symfun;

pub use error::{Error, Result};
