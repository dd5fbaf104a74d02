//! Exact and numeric rank, and exact rational projection matrices.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Rank over `ℚ` by fraction-free (Bareiss) elimination.
pub fn exact_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    bareiss_rank(&mut m)
}

/// Scales a rational row by the lcm of its denominators.
fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let l = row
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .map(|q| q.numer() * (&l / q.denom()))
        .collect()
}

/// Rank of an integer matrix; destroys `m`.
pub fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Number of singular values above `max(rows, cols) · σ_max · factor`.
pub fn numeric_rank(m: &DMatrix<f64>, factor: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.singular_values();
    let smax = sv.max();
    if smax == 0.0 {
        return 0;
    }
    let thresh = m.nrows().max(m.ncols()) as f64 * smax * factor;
    sv.iter().filter(|&&s| s > thresh).count()
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
pub fn rational_inverse(a: &[Vec<BigRational>]) -> Result<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n)
            .find(|&i| !aug[i][c].is_zero())
            .ok_or_else(|| Error::domain("matrix is singular"))?;
        aug.swap(c, p);
        let inv = aug[c][c].recip();
        for x in aug[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..2 * n {
                    let v = &aug[c][j] * &f;
                    aug[i][j] -= v;
                }
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `V (VᵀV)⁻¹ Vᵀ` for an integer `n × k` matrix `V` of full column rank:
/// an exact rational projection of rank `k`.
pub fn rational_projection(v: &[Vec<i64>]) -> Result<Vec<Vec<BigRational>>> {
    let n = v.len();
    let k = v.first().map_or(0, Vec::len);
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let gram: Vec<Vec<BigRational>> = (0..k)
        .map(|a| (0..k).map(|b| q((0..n).map(|i| v[i][a] * v[i][b]).sum())).collect())
        .collect();
    let ginv = rational_inverse(&gram)?;
    let mut p = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = BigRational::zero();
            for a in 0..k {
                for b in 0..k {
                    acc += &ginv[a][b] * q(v[i][a] * v[j][b]);
                }
            }
            p[j][i] = acc.clone();
            p[i][j] = acc;
        }
    }
    Ok(p)
}

/// Random rational rank-`k` projection from an integer matrix with entries in `[-5, 5]`.
pub fn random_rational_projection<R: Rng>(rng: &mut R, n: usize, k: usize) -> Vec<Vec<BigRational>> {
    loop {
        let v: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..k).map(|_| rng.random_range(-5..=5)).collect())
            .collect();
        if let Ok(p) = rational_projection(&v) {
            return p;
        }
    }
}

/// Upper-triangle entries in the variable order of [`super::poly::var_index`].
pub fn upper_entries<T: Clone>(m: &[Vec<T>]) -> Vec<T> {
    let n = m.len();
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| m[i][j].clone())
        .collect()
}

/// True when every entry of a rational matrix is zero.
pub fn is_zero_matrix(m: &[Vec<BigRational>]) -> bool {
    m.iter().all(|r| r.iter().all(Zero::is_zero))
}
