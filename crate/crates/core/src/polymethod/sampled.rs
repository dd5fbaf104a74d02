//! Dimension of `ℝ[X]_{≤d}` restricted to the projection-embedded
//! Grassmannian, measured as the rank of an evaluation matrix at random
//! projections.

use nalgebra::DMatrix;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linalg::numeric_rank;
use super::poly::{monomials_up_to, Monomial};
use crate::config::RANK_FACTOR;
use crate::error::{Error, Result};
use crate::geometry::fixtures::random_frame;

/// Refuse evaluation matrices wider than this many monomials.
pub const MAX_MONOMIALS: usize = 4000;

/// Default oversampling: rows per monomial.
pub const SAMPLE_FACTOR: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SampledRank {
    pub k: usize,
    pub n: usize,
    pub degree: u32,
    pub monomials: usize,
    pub samples: usize,
    pub seed: u64,
    pub rank: usize,
}

pub fn monomial_count(n: usize, degree: u32) -> usize {
    monomials_up_to(n * (n + 1) / 2, degree).len()
}

fn sample_rows(rng: &mut ChaCha8Rng, n: usize, k: usize, basis: &[Monomial], rows: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(rows * basis.len());
    for _ in 0..rows {
        let point = random_frame(rng, n, k)?.projection_matrix().upper_entries();
        out.extend(basis.iter().map(|m| m.eval_f64(&point)));
    }
    Ok(out)
}

/// Rank of the `samples × monomials` matrix of all monomials of degree
/// `≤ degree` in the entries `x_{i,j}` (`i ≤ j`) of random rank-`k`
/// projections. Defaults to `3 ×` the monomial count; the rank must be
/// unchanged when the samples are doubled.
pub fn sampled_hilbert_rank(k: usize, n: usize, degree: u32, num_samples: Option<usize>, seed: u64) -> Result<usize> {
    Ok(sampled_hilbert_rank_with(k, n, degree, num_samples, seed, RANK_FACTOR)?.rank)
}

pub fn sampled_hilbert_rank_with(
    k: usize,
    n: usize,
    degree: u32,
    num_samples: Option<usize>,
    seed: u64,
    rank_factor: f64,
) -> Result<SampledRank> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    let basis = monomials_up_to(n * (n + 1) / 2, degree);
    let cols = basis.len();
    if cols > MAX_MONOMIALS {
        return Err(Error::domain(format!(
            "{cols} monomials exceed the limit of {MAX_MONOMIALS}"
        )));
    }
    let samples = num_samples.unwrap_or(SAMPLE_FACTOR * cols);
    if samples < cols {
        return Err(Error::invalid(format!(
            "insufficient samples: {samples} < {cols} monomials; rank would be capped by the sample count"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut data = sample_rows(&mut rng, n, k, &basis, samples)?;
    let first = numeric_rank(&DMatrix::from_row_slice(samples, cols, &data), rank_factor);
    data.extend(sample_rows(&mut rng, n, k, &basis, samples)?);
    let second = numeric_rank(&DMatrix::from_row_slice(2 * samples, cols, &data), rank_factor);
    if first != second {
        return Err(Error::Unsaturated { first, second });
    }
    Ok(SampledRank {
        k,
        n,
        degree,
        monomials: cols,
        samples,
        seed,
        rank: first,
    })
}
