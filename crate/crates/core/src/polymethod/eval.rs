//! Evaluation matrices `M = (p_i(v_j))` of the polynomial method and the
//! rank-versus-dimension check `rank M ≤ dim 𝕍`.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::linalg::numeric_rank;
use super::sampled::sampled_hilbert_rank_with;
use crate::bounds::{bound_equiangular, bound_lines_spherical};
use crate::config::{Tolerances, TOL_CLUSTER};
use crate::error::{Error, Result};
use crate::geometry::distance::{principal_cosines, Metric};
use crate::geometry::frame::SubspaceFrame;
use crate::geometry::spectrum::{distance_spectrum, DistanceSpectrum};
use crate::hilbert::hilbert_even_sum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `p(X, Y) = ∏_t (tr(XY) + a_t² − k)` on projection matrices.
    ChordalP,
    /// `f_U(X) = ∏_t (det(UᵀX)² − cos² a_t)`.
    FsF,
    /// `f_i(X) = det(U_iᵀ X U_i − cos²α · tr(X)/k · I_k)`.
    EquiangularF,
}

impl std::str::FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chordal" | "chordal_p" => Ok(Construction::ChordalP),
            "fs" | "fs_f" => Ok(Construction::FsF),
            "equiangular" | "equiangular_f" => Ok(Construction::EquiangularF),
            _ => Err(Error::invalid(format!("unknown construction {s:?}"))),
        }
    }
}

fn serialize_matrix<S: Serializer>(m: &DMatrix<f64>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    let rows: Vec<Vec<f64>> = m.row_iter().map(|r| r.iter().copied().collect()).collect();
    rows.serialize(ser)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationMatrix {
    pub construction: Construction,
    #[serde(serialize_with = "serialize_matrix")]
    pub entries: DMatrix<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum_used: Option<DistanceSpectrum>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

impl EvaluationMatrix {
    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        self.entries.diagonal().iter().copied().collect()
    }

    pub fn max_offdiag(&self) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    worst = worst.max(self.entries[(i, j)].abs());
                }
            }
        }
        worst
    }

    pub fn min_abs_diagonal(&self) -> f64 {
        self.entries
            .diagonal()
            .iter()
            .fold(f64::INFINITY, |a, x| a.min(x.abs()))
    }

    /// Off-diagonal entries at most `tol`, diagonal entries larger than `tol`.
    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.max_offdiag() <= tol && self.min_abs_diagonal() > tol
    }

    pub fn rank(&self, rank_factor: f64) -> usize {
        numeric_rank(&self.entries, rank_factor)
    }
}

fn check_frames(frames: &[SubspaceFrame]) -> Result<(usize, usize)> {
    let first = frames
        .first()
        .ok_or_else(|| Error::invalid("no frames"))?;
    let (n, k) = (first.n(), first.k());
    if frames.iter().any(|f| f.n() != n || f.k() != k) {
        return Err(Error::invalid("frames have inconsistent dimensions"));
    }
    Ok((n, k))
}

fn check_spectrum(frames: &[SubspaceFrame], spectrum: &DistanceSpectrum, metric: Metric) -> Result<()> {
    if spectrum.metric != metric {
        return Err(Error::invalid(format!(
            "spectrum was computed for {} but the construction needs {metric}",
            spectrum.metric
        )));
    }
    if spectrum.values.is_empty() {
        return Err(Error::invalid("empty spectrum"));
    }
    let n = frames.len();
    let pairs: usize = spectrum.multiplicities.iter().sum();
    if n >= 2 && pairs != n * (n - 1) / 2 {
        return Err(Error::invalid(format!(
            "spectrum covers {pairs} pairs but {n} frames have {}",
            n * (n - 1) / 2
        )));
    }
    Ok(())
}

fn build(frames: &[SubspaceFrame], entry: impl Fn(&SubspaceFrame, &SubspaceFrame) -> f64) -> DMatrix<f64> {
    let n = frames.len();
    DMatrix::from_fn(n, n, |i, j| entry(&frames[i], &frames[j]))
}

/// Entry `(i, j)` is `∏_t (tr(P_i P_j) + a_t² − k)` for the chordal spectrum `a`.
pub fn chordal_eval_matrix(frames: &[SubspaceFrame], spectrum: &DistanceSpectrum) -> Result<EvaluationMatrix> {
    let (_, k) = check_frames(frames)?;
    check_spectrum(frames, spectrum, Metric::Chordal)?;
    let projections: Vec<_> = frames.iter().map(SubspaceFrame::projection_matrix).collect();
    let n = frames.len();
    let entries = DMatrix::from_fn(n, n, |i, j| {
        let tr = projections[i].trace_product(&projections[j]);
        spectrum
            .values
            .iter()
            .map(|a| tr + a * a - k as f64)
            .product()
    });
    Ok(EvaluationMatrix {
        construction: Construction::ChordalP,
        entries,
        spectrum_used: Some(spectrum.clone()),
        alpha: None,
    })
}

/// Entry `(i, j)` is `∏_t (det(U_iᵀU_j)² − cos² a_t)` for the Fubini–Study spectrum `a`.
pub fn fs_eval_matrix(frames: &[SubspaceFrame], spectrum: &DistanceSpectrum) -> Result<EvaluationMatrix> {
    check_frames(frames)?;
    check_spectrum(frames, spectrum, Metric::FubiniStudy)?;
    let cos2: Vec<f64> = spectrum.values.iter().map(|a| a.cos().powi(2)).collect();
    let entries = build(frames, |u, v| {
        let det = (u.columns().transpose() * v.columns()).determinant();
        cos2.iter().map(|c| det * det - c).product()
    });
    Ok(EvaluationMatrix {
        construction: Construction::FsF,
        entries,
        spectrum_used: Some(spectrum.clone()),
        alpha: None,
    })
}

/// The same matrix as [`fs_eval_matrix`], with `det(U_iᵀU_j)` replaced by
/// the Plücker inner product `⟨ι(U_i), ι(U_j)⟩`.
pub fn fs_eval_matrix_plucker(frames: &[SubspaceFrame], spectrum: &DistanceSpectrum) -> Result<EvaluationMatrix> {
    check_frames(frames)?;
    check_spectrum(frames, spectrum, Metric::FubiniStudy)?;
    let cos2: Vec<f64> = spectrum.values.iter().map(|a| a.cos().powi(2)).collect();
    let coords: Vec<Vec<f64>> = frames.iter().map(SubspaceFrame::plucker_coordinates).collect();
    let n = frames.len();
    let entries = DMatrix::from_fn(n, n, |i, j| {
        let ip: f64 = coords[i].iter().zip(&coords[j]).map(|(a, b)| a * b).sum();
        cos2.iter().map(|c| ip * ip - c).product()
    });
    Ok(EvaluationMatrix {
        construction: Construction::FsF,
        entries,
        spectrum_used: Some(spectrum.clone()),
        alpha: None,
    })
}

/// Entry `(i, j)` is `det(U_iᵀ P_j U_i − cos²α · tr(P_j)/k · I_k)
/// = ∏_t (σ_t² − cos²α)` over the principal cosines `σ_t` of the pair,
/// which vanishes whenever one principal angle equals `α`. Diagonal
/// entries are `sin^{2k} α`.
pub fn equiangular_eval_matrix(frames: &[SubspaceFrame], alpha: f64, selector_index: usize) -> Result<EvaluationMatrix> {
    equiangular_eval_matrix_with(frames, alpha, selector_index, TOL_CLUSTER)
}

/// [`equiangular_eval_matrix`] with an explicit tolerance on
/// `|cos θ_selector − cos α|` for the equiangularity check.
pub fn equiangular_eval_matrix_with(
    frames: &[SubspaceFrame],
    alpha: f64,
    selector_index: usize,
    tol: f64,
) -> Result<EvaluationMatrix> {
    let (_, k) = check_frames(frames)?;
    if selector_index == 0 || selector_index > k {
        return Err(Error::invalid(format!(
            "angle selector {selector_index} out of range 1..={k}"
        )));
    }
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&alpha) {
        return Err(Error::domain(format!("alpha = {alpha} is not in [0, π/2]")));
    }
    let c = alpha.cos();
    for i in 0..frames.len() {
        for j in i + 1..frames.len() {
            let cosines = principal_cosines(&frames[i], &frames[j])?;
            // cosines are descending, angles ascending
            let sel = cosines[selector_index - 1];
            if (sel - c).abs() > tol {
                return Err(Error::Uncertified(format!(
                    "frames {i} and {j}: angle {selector_index} has cosine {sel}, expected {c}"
                )));
            }
        }
    }
    let c2 = c * c;
    let entries = build(frames, |u, v| {
        let pv = v.projection_matrix();
        let m = u.columns().transpose() * pv.matrix() * u.columns();
        let shift = c2 * pv.trace() / k as f64;
        (m - DMatrix::<f64>::identity(k, k) * shift).determinant()
    });
    Ok(EvaluationMatrix {
        construction: Construction::EquiangularF,
        entries,
        spectrum_used: None,
        alpha: Some(alpha),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    HilbertEvenSum,
    SampledHilbert,
    Thm52Formula,
    Prop46Formula,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub tolerances: Tolerances,
    /// Principal-angle index for the equiangular construction (1-based).
    pub selector: usize,
    pub seed: u64,
    pub samples: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerances: Tolerances::default(),
            selector: 1,
            seed: 0,
            samples: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankReport {
    pub construction: Construction,
    pub metric: Metric,
    pub k: usize,
    pub n: usize,
    pub frames: usize,
    pub s: usize,
    pub matrix_rank: usize,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub bound: BigInt,
    pub bound_source: BoundSource,
    pub satisfied: bool,
    pub max_offdiag: f64,
    pub min_abs_diagonal: f64,
}

/// Builds the evaluation matrix of `construction` on the certified
/// spectrum of `frames`, computes its rank, and compares it with the
/// dimension of the polynomial space containing the `p_i`.
pub fn verify_prop31(frames: &[SubspaceFrame], construction: Construction, opts: &VerifyOptions) -> Result<RankReport> {
    let (n, k) = check_frames(frames)?;
    let tol = &opts.tolerances;
    let metric = match construction {
        Construction::ChordalP => Metric::Chordal,
        Construction::FsF => Metric::FubiniStudy,
        Construction::EquiangularF => Metric::Angle(opts.selector),
    };
    let spectrum = distance_spectrum(frames, metric, tol.tol_cluster)?;
    let s = spectrum.s;
    let matrix = match construction {
        Construction::ChordalP => chordal_eval_matrix(frames, &spectrum)?,
        Construction::FsF => fs_eval_matrix(frames, &spectrum)?,
        Construction::EquiangularF => {
            if s != 1 {
                return Err(Error::Uncertified(format!(
                    "not equiangular: {s} distinct values of angle {}",
                    opts.selector
                )));
            }
            equiangular_eval_matrix_with(frames, spectrum.values[0], opts.selector, tol.tol_cluster)?
        }
    };
    if !matrix.is_diagonal(tol.tol_diag) {
        return Err(Error::Uncertified(format!(
            "evaluation matrix is not diagonal within {}: max off-diagonal {:.3e}, min diagonal {:.3e}",
            tol.tol_diag,
            matrix.max_offdiag(),
            matrix.min_abs_diagonal()
        )));
    }
    let rank = matrix.rank(tol.rank_factor);
    let (bound, source) = match construction {
        Construction::FsF => (hilbert_even_sum(k as u32, n as u32, s as u32)?, BoundSource::HilbertEvenSum),
        Construction::ChordalP => {
            let r = sampled_hilbert_rank_with(k, n, s as u32, opts.samples, opts.seed, tol.rank_factor)?;
            (BigInt::from(r.rank), BoundSource::SampledHilbert)
        }
        Construction::EquiangularF if k >= 2 => (bound_equiangular(k as u32, n as u32)?, BoundSource::Thm52Formula),
        Construction::EquiangularF => (bound_lines_spherical(n as u32, 1)?, BoundSource::Prop46Formula),
    };
    Ok(RankReport {
        construction,
        metric,
        k,
        n,
        frames: frames.len(),
        s,
        matrix_rank: rank,
        satisfied: BigInt::from(rank) <= bound,
        bound,
        bound_source: source,
        max_offdiag: matrix.max_offdiag(),
        min_abs_diagonal: matrix.min_abs_diagonal(),
    })
}
