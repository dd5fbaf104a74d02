//! Classical configurations used as fixtures for the bounds.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use super::frame::SubspaceFrame;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Configuration {
    /// The `n` coordinate axes.
    CoordinateAxes,
    /// `n + 1` lines through the vertices of a centered regular simplex.
    SimplexLines,
    /// The 6 diagonals of the icosahedron (`n = 3` only).
    IcosahedronLines,
    /// Seeded random `k`-dimensional subspaces.
    RandomFrames { count: usize, seed: u64, k: usize },
}

pub fn generate_configuration(config: &Configuration, n: usize) -> Result<Vec<SubspaceFrame>> {
    if n == 0 {
        return Err(Error::domain("ambient dimension must be positive"));
    }
    match config {
        Configuration::CoordinateAxes => (0..n)
            .map(|i| {
                let mut v = vec![0.0; n];
                v[i] = 1.0;
                SubspaceFrame::line(&v)
            })
            .collect(),
        Configuration::SimplexLines => simplex_lines(n),
        Configuration::IcosahedronLines => {
            if n != 3 {
                return Err(Error::domain(format!("icosahedron lines live in R^3, not R^{n}")));
            }
            let phi = (1.0 + 5f64.sqrt()) / 2.0;
            [
                [0.0, 1.0, phi],
                [0.0, 1.0, -phi],
                [1.0, phi, 0.0],
                [1.0, -phi, 0.0],
                [phi, 0.0, 1.0],
                [-phi, 0.0, 1.0],
            ]
            .iter()
            .map(|v| SubspaceFrame::line(v))
            .collect()
        }
        Configuration::RandomFrames { count, seed, k } => {
            if *k == 0 || *k > n {
                return Err(Error::domain(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count).map(|_| random_frame(&mut rng, n, *k)).collect()
        }
    }
}

/// Columns of the Helmert basis of `𝟙^⊥ ⊂ ℝ^{n+1}`: the `n + 1` vertices
/// of a regular simplex centered at the origin of `ℝⁿ`.
fn simplex_lines(n: usize) -> Result<Vec<SubspaceFrame>> {
    let mut h = DMatrix::<f64>::zeros(n, n + 1);
    for m in 1..=n {
        let norm = ((m * (m + 1)) as f64).sqrt();
        for i in 0..m {
            h[(m - 1, i)] = 1.0 / norm;
        }
        h[(m - 1, m)] = -(m as f64) / norm;
    }
    (0..=n)
        .map(|i| SubspaceFrame::line(h.column(i).as_slice()))
        .collect()
}

/// Gaussian `n × k` matrix, orthonormalized.
pub fn random_frame<R: Rng>(rng: &mut R, n: usize, k: usize) -> Result<SubspaceFrame> {
    loop {
        let m = DMatrix::from_fn(n, k, |_, _| rng.sample::<f64, _>(StandardNormal));
        match SubspaceFrame::orthonormalize(m) {
            Ok(f) => return Ok(f),
            Err(Error::InvalidInput(_)) => continue,
            Err(e) => return Err(e),
        }
    }
}

/// Haar-distributed `n × n` orthogonal matrix.
pub fn random_orthogonal<R: Rng>(rng: &mut R, n: usize) -> DMatrix<f64> {
    let m = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = m.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}
