use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::frame::SubspaceFrame;
use crate::error::{Error, Result};

/// Distance functions on `Gr(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Metric {
    Chordal,
    FubiniStudy,
    /// The `i`-th principal angle (1-based, angles in ascending order).
    Angle(usize),
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Metric::Chordal => write!(f, "chordal"),
            Metric::FubiniStudy => write!(f, "fs"),
            Metric::Angle(i) => write!(f, "angle:{i}"),
        }
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chordal" => Ok(Metric::Chordal),
            "fs" | "fubini_study" | "fubini-study" => Ok(Metric::FubiniStudy),
            _ => {
                let idx = s
                    .strip_prefix("angle:")
                    .and_then(|i| i.parse::<usize>().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::invalid(format!("unknown metric {s:?}")))?;
                Ok(Metric::Angle(idx))
            }
        }
    }
}

impl TryFrom<String> for Metric {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Metric> for String {
    fn from(m: Metric) -> String {
        m.to_string()
    }
}

fn check_pair(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<()> {
    if u.n() != v.n() || u.k() != v.k() {
        return Err(Error::domain(format!(
            "frames live in different Grassmannians: Gr({},{}) vs Gr({},{})",
            u.k(),
            u.n(),
            v.k(),
            v.n()
        )));
    }
    Ok(())
}

/// `UᵀV`.
fn cross_gram(u: &SubspaceFrame, v: &SubspaceFrame) -> DMatrix<f64> {
    u.columns().transpose() * v.columns()
}

/// Singular values of `UᵀV`, clamped into `[0, 1]`, in descending order.
pub fn principal_cosines(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<Vec<f64>> {
    check_pair(u, v)?;
    let mut s: Vec<f64> = cross_gram(u, v)
        .singular_values()
        .iter()
        .map(|x| x.clamp(0.0, 1.0))
        .collect();
    s.sort_by(|a, b| b.total_cmp(a));
    Ok(s)
}

/// Principal angles `θ_1 ≤ … ≤ θ_k`.
pub fn principal_angles(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<Vec<f64>> {
    Ok(principal_cosines(u, v)?.into_iter().map(f64::acos).collect())
}

/// Chordal distance `(k − tr(UUᵀVVᵀ))^{1/2}`, evaluated as
/// `‖UUᵀ − VVᵀ‖_F / √2` to avoid cancellation near zero.
pub fn chordal_distance(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    check_pair(u, v)?;
    let diff = u.projection_matrix().0 - v.projection_matrix().0;
    Ok(diff.norm() / std::f64::consts::SQRT_2)
}

/// Chordal distance by the literal trace formula.
pub fn chordal_distance_trace(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    check_pair(u, v)?;
    let tr = u.projection_matrix().trace_product(&v.projection_matrix());
    Ok((u.k() as f64 - tr).max(0.0).sqrt())
}

/// Chordal distance `(Σ sin² θ_i)^{1/2}`.
pub fn chordal_from_angles(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    let sum: f64 = principal_angles(u, v)?.iter().map(|t| t.sin().powi(2)).sum();
    Ok(sum.sqrt())
}

/// `|det(UᵀV)|`, the cosine of the Fubini–Study distance.
pub fn fs_cosine(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    check_pair(u, v)?;
    Ok(cross_gram(u, v).determinant().abs().min(1.0))
}

/// Fubini–Study distance `arccos |det(UᵀV)|`.
pub fn fubini_study_distance(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    Ok(fs_cosine(u, v)?.acos())
}

/// Fubini–Study distance `arccos ∏ cos θ_i`.
pub fn fs_from_angles(u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    let prod: f64 = principal_cosines(u, v)?.iter().product();
    Ok(prod.min(1.0).acos())
}

/// The `index`-th principal angle (1-based).
pub fn angle_distance(u: &SubspaceFrame, v: &SubspaceFrame, index: usize) -> Result<f64> {
    if index == 0 || index > u.k() {
        return Err(Error::domain(format!(
            "angle selector {index} out of range 1..={}",
            u.k()
        )));
    }
    Ok(principal_angles(u, v)?[index - 1])
}

/// `δ(U, V)` for the chosen metric.
pub fn distance(metric: Metric, u: &SubspaceFrame, v: &SubspaceFrame) -> Result<f64> {
    match metric {
        Metric::Chordal => chordal_distance(u, v),
        Metric::FubiniStudy => fubini_study_distance(u, v),
        Metric::Angle(i) => angle_distance(u, v, i),
    }
}
