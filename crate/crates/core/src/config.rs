//! Default numerical tolerances. Every floating-point threshold used by the
//! geometry and verification code is read from a [`Tolerances`] value.

use serde::{Deserialize, Serialize};

/// Orthonormality defect accepted as-is for a frame.
pub const TOL_ORTH: f64 = 1e-10;
/// Frames with a larger defect than this are rejected rather than repaired.
pub const TOL_REORTH_MAX: f64 = 1e-6;
/// Single-linkage threshold when clustering pairwise distances.
pub const TOL_CLUSTER: f64 = 1e-9;
/// Largest off-diagonal magnitude of an evaluation matrix treated as zero.
pub const TOL_DIAG: f64 = 1e-8;
/// Singular values below `max(rows, cols) · σ_max · RANK_FACTOR` count as zero.
pub const RANK_FACTOR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub tol_orth: f64,
    pub tol_cluster: f64,
    pub tol_diag: f64,
    pub rank_factor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            tol_orth: TOL_ORTH,
            tol_cluster: TOL_CLUSTER,
            tol_diag: TOL_DIAG,
            rank_factor: RANK_FACTOR,
        }
    }
}
