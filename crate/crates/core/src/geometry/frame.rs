use nalgebra::DMatrix;

use crate::config::{TOL_ORTH, TOL_REORTH_MAX};
use crate::error::{Error, Result};

/// An `n × k` matrix with orthonormal columns spanning a point of `Gr(k, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceFrame {
    columns: DMatrix<f64>,
}

impl SubspaceFrame {
    /// Validates orthonormality with the default tolerance.
    pub fn new(columns: DMatrix<f64>) -> Result<Self> {
        Self::with_tolerance(columns, TOL_ORTH)
    }

    /// Accepts frames whose defect `max |UᵀU − I|` is at most `tol_orth`,
    /// re-orthonormalizes frames with a defect up to `1e-6`, and rejects the rest.
    pub fn with_tolerance(columns: DMatrix<f64>, tol_orth: f64) -> Result<Self> {
        let (n, k) = columns.shape();
        if k == 0 || k > n {
            return Err(Error::invalid(format!("frame must satisfy 1 <= k <= n, got {n}x{k}")));
        }
        if columns.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("frame has non-finite entries"));
        }
        let defect = orthonormality_defect(&columns);
        if defect <= tol_orth {
            return Ok(SubspaceFrame { columns });
        }
        if defect <= TOL_REORTH_MAX.max(tol_orth) {
            return Self::orthonormalize(columns);
        }
        Err(Error::invalid(format!(
            "frame columns are not orthonormal (defect {defect:.3e})"
        )))
    }

    /// Orthonormal basis of the column span of a full-rank `n × k` matrix.
    pub fn orthonormalize(m: DMatrix<f64>) -> Result<Self> {
        let (n, k) = m.shape();
        if k == 0 || k > n {
            return Err(Error::invalid(format!("frame must satisfy 1 <= k <= n, got {n}x{k}")));
        }
        let scale = m.amax().max(f64::MIN_POSITIVE);
        let qr = m.qr();
        let r = qr.r();
        if (0..k).any(|i| r[(i, i)].abs() <= 1e-12 * scale) {
            return Err(Error::invalid("frame columns are linearly dependent"));
        }
        Ok(SubspaceFrame { columns: qr.q() })
    }

    /// The line spanned by a non-zero vector.
    pub fn line(v: &[f64]) -> Result<Self> {
        Self::orthonormalize(DMatrix::from_column_slice(v.len(), 1, v))
    }

    pub fn n(&self) -> usize {
        self.columns.nrows()
    }

    pub fn k(&self) -> usize {
        self.columns.ncols()
    }

    pub fn columns(&self) -> &DMatrix<f64> {
        &self.columns
    }

    /// Row-major entries, as used by the JSON frame format.
    pub fn row_major(&self) -> Vec<f64> {
        let (n, k) = self.columns.shape();
        let mut out = Vec::with_capacity(n * k);
        for i in 0..n {
            for j in 0..k {
                out.push(self.columns[(i, j)]);
            }
        }
        out
    }

    /// `U Q` for a `k × k` orthogonal `Q`: another basis of the same subspace.
    pub fn change_basis(&self, q: &DMatrix<f64>) -> Result<Self> {
        Self::new(&self.columns * q)
    }

    /// `R U` for an `n × n` orthogonal `R`.
    pub fn rotate(&self, r: &DMatrix<f64>) -> Result<Self> {
        Self::new(r * &self.columns)
    }

    /// `P = UUᵀ`.
    pub fn projection_matrix(&self) -> ProjectionMatrix {
        ProjectionMatrix(&self.columns * self.columns.transpose())
    }

    /// All `k × k` minors `det(U_I)`, subsets `I` in lexicographic order.
    pub fn plucker_coordinates(&self) -> Vec<f64> {
        let (n, k) = self.columns.shape();
        k_subsets(n, k)
            .into_iter()
            .map(|rows| self.columns.select_rows(rows.iter()).determinant())
            .collect()
    }
}

/// `max |UᵀU − I|`.
pub fn orthonormality_defect(columns: &DMatrix<f64>) -> f64 {
    let k = columns.ncols();
    let gram = columns.transpose() * columns;
    (gram - DMatrix::<f64>::identity(k, k)).amax()
}

/// Lexicographically ordered `k`-subsets of `0..n`.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Orthogonal projection `P = UUᵀ` onto a subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionMatrix(pub DMatrix<f64>);

impl ProjectionMatrix {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    /// `max(|P² − P|, |P − Pᵀ|)`.
    pub fn defect(&self) -> f64 {
        let p = &self.0;
        let idem = (p * p - p).amax();
        let sym = (p - p.transpose()).amax();
        idem.max(sym)
    }

    /// `tr(P Q)` for another projection.
    pub fn trace_product(&self, other: &ProjectionMatrix) -> f64 {
        self.0.component_mul(&other.0).sum()
    }

    /// Upper-triangle entries `x_{i,j}`, `i ≤ j`, in lexicographic order.
    pub fn upper_entries(&self) -> Vec<f64> {
        let n = self.0.nrows();
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                out.push(self.0[(i, j)]);
            }
        }
        out
    }
}
