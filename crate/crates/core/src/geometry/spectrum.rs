use serde::Serialize;

use super::distance::{chordal_distance, distance, Metric};
use super::frame::SubspaceFrame;
use crate::error::{Error, Result};

/// Distinct pairwise distance values of a configuration, after clustering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceSpectrum {
    pub metric: Metric,
    /// Cluster representatives (means), ascending.
    pub values: Vec<f64>,
    /// Number of pairs in each cluster.
    pub multiplicities: Vec<usize>,
    pub s: usize,
    pub tol_cluster: f64,
}

impl DistanceSpectrum {
    /// Number of frames `N` recovered from `Σ multiplicities = N(N−1)/2`.
    pub fn frame_count(&self) -> usize {
        let pairs: usize = self.multiplicities.iter().sum();
        // smallest N with N(N-1)/2 >= pairs
        let mut n = 1usize;
        while n * (n - 1) / 2 < pairs {
            n += 1;
        }
        n
    }
}

/// Pairwise distances `(i, j, δ(U_i, U_j))` for `i < j`.
pub fn pairwise_distances(frames: &[SubspaceFrame], metric: Metric) -> Result<Vec<(usize, usize, f64)>> {
    let mut out = Vec::with_capacity(frames.len() * frames.len().saturating_sub(1) / 2);
    for i in 0..frames.len() {
        for j in i + 1..frames.len() {
            out.push((i, j, distance(metric, &frames[i], &frames[j])?));
        }
    }
    Ok(out)
}

/// Clusters all pairwise distances by single linkage with an absolute
/// threshold: sorted values separated by a gap larger than `tol_cluster`
/// start a new cluster.
pub fn distance_spectrum(frames: &[SubspaceFrame], metric: Metric, tol_cluster: f64) -> Result<DistanceSpectrum> {
    if frames.len() < 2 {
        return Err(Error::invalid("a distance spectrum needs at least two frames"));
    }
    if !(tol_cluster > 0.0) {
        return Err(Error::invalid(format!("tol_cluster must be positive, got {tol_cluster}")));
    }
    let (n, k) = (frames[0].n(), frames[0].k());
    if let Some(bad) = frames.iter().position(|f| f.n() != n || f.k() != k) {
        return Err(Error::invalid(format!(
            "frame {bad} is {}x{}, expected {n}x{k}",
            frames[bad].n(),
            frames[bad].k()
        )));
    }
    if let Metric::Angle(i) = metric {
        if i > k {
            return Err(Error::invalid(format!("angle selector {i} exceeds k = {k}")));
        }
    }
    for i in 0..frames.len() {
        for j in i + 1..frames.len() {
            if chordal_distance(&frames[i], &frames[j])? <= tol_cluster {
                return Err(Error::invalid(format!("frames {i} and {j} span the same subspace")));
            }
        }
    }
    let mut dists: Vec<f64> = pairwise_distances(frames, metric)?
        .into_iter()
        .map(|(_, _, d)| d)
        .collect();
    dists.sort_by(f64::total_cmp);

    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for d in dists {
        match clusters.last_mut() {
            Some(c) if d - c.last().copied().unwrap_or(d) <= tol_cluster => c.push(d),
            _ => clusters.push(vec![d]),
        }
    }
    let values = clusters
        .iter()
        .map(|c| c.iter().sum::<f64>() / c.len() as f64)
        .collect();
    let multiplicities: Vec<usize> = clusters.iter().map(Vec::len).collect();
    Ok(DistanceSpectrum {
        metric,
        s: multiplicities.len(),
        values,
        multiplicities,
        tol_cluster,
    })
}
