//! Hilbert function and Hilbert series of the Grassmannian `Gr(k, n)` in its
//! Plücker embedding.
//!
//! The series is `N_k(n − k; t) / (1 − t)^{k(n−k)+1}` with numerator
//! coefficients
//!
//! ```text
//! c_k(r, j) = Σ_{l=0}^{j} (−1)^{j−l} C(kr+1, j−l) ∏_{i=0}^{k−1} C(r+i+l, r) / C(r+i, r).
//! ```
//!
//! The product in `c_k` is the Hilbert function itself (the Hodge–Pedoe
//! formula), so the numerator is the Hilbert series multiplied by
//! `(1 − t)^{kr+1}`; the denominator exponent `kr + 1` fixes `r = n − k`.
//! Two evaluation paths are provided: the closed-form convolution
//! [`hilbert_value`] and truncated power-series division
//! [`HilbertSeries::coefficients`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial_u, factorial};

/// How to evaluate the Hilbert function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HilbertMethod {
    Closed,
    Series,
}

/// Rational generating function `numerator(t) / (1 − t^period)^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<BigInt>,
    pub denom_exponent: u32,
    pub denom_period: u32,
}

impl HilbertSeries {
    /// Hilbert series of the Plücker-embedded `Gr(k, n)`.
    pub fn plucker(k: u32, n: u32) -> Result<Self> {
        check_kn(k, n)?;
        let r = n - k;
        let numerator = (0..=numerator_degree(k, n))
            .map(|j| c_coefficient(k, r, j))
            .collect();
        Ok(HilbertSeries {
            numerator,
            denom_exponent: k * r + 1,
            denom_period: 1,
        })
    }

    /// Expanded denominator polynomial.
    pub fn denominator(&self) -> Vec<BigInt> {
        let p = self.denom_period as usize;
        let e = self.denom_exponent as u64;
        let mut out = vec![BigInt::zero(); p * e as usize + 1];
        for i in 0..=e {
            let c = binomial_u(e, i as i64);
            out[p * i as usize] = if i % 2 == 0 { c } else { -c };
        }
        out
    }

    /// Power-series coefficients of `t^0 … t^upto`, by truncated division.
    pub fn coefficients(&self, upto: usize) -> Vec<BigInt> {
        series_divide(&self.numerator, &self.denominator(), upto)
    }

    /// Value at `t = 1` of the numerator (the degree of the variety).
    pub fn numerator_sum(&self) -> BigInt {
        self.numerator.iter().sum()
    }
}

/// Truncated quotient `num / den` up to `t^upto`; `den[0]` must be `±1`.
pub fn series_divide(num: &[BigInt], den: &[BigInt], upto: usize) -> Vec<BigInt> {
    assert!(
        den.first().is_some_and(|d| d.is_one() || (-d).is_one()),
        "series denominator must have unit constant term"
    );
    let d0 = den[0].clone();
    let mut out: Vec<BigInt> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        let mut acc = num.get(m).cloned().unwrap_or_else(BigInt::zero);
        for i in 1..=m.min(den.len() - 1) {
            acc -= &den[i] * &out[m - i];
        }
        out.push(acc * &d0);
    }
    out
}

/// Degree bound `(r − 1)(k − 1)` of the numerator, with `r = n − k`.
pub fn numerator_degree(k: u32, n: u32) -> u32 {
    let r = n.saturating_sub(k);
    if r == 0 {
        0
    } else {
        (r - 1) * (k - 1)
    }
}

/// `c_k(r, j)`.
pub fn c_coefficient(k: u32, r: u32, j: u32) -> BigInt {
    let r64 = r as u64;
    let mut den = BigInt::one();
    for i in 0..k as u64 {
        den *= binomial_u(r64 + i, r64 as i64);
    }
    let mut acc = BigInt::zero();
    for l in 0..=j as u64 {
        let mut prod = BigInt::one();
        for i in 0..k as u64 {
            prod *= binomial_u(r64 + i + l, r64 as i64);
        }
        let term = binomial_u(k as u64 * r64 + 1, (j as u64 - l) as i64) * prod;
        if (j as u64 - l) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    debug_assert!((&acc % &den).is_zero());
    acc / den
}

/// Hilbert function of the Plücker-embedded `Gr(k, n)` at degree `m`,
/// by the closed-form convolution of the numerator with the coefficients
/// of `(1 − t)^{−(k(n−k)+1)}`.
pub fn hilbert_value(k: u32, n: u32, m: u32) -> Result<BigInt> {
    check_kn(k, n)?;
    let r = n - k;
    let dim = (k * r) as u64;
    let top = numerator_degree(k, n).min(m);
    let mut acc = BigInt::zero();
    for j in 0..=top {
        let a = (m - j) as u64;
        acc += c_coefficient(k, r, j) * binomial_u(dim + a, a as i64);
    }
    Ok(acc)
}

/// Hilbert function by the selected evaluation path.
pub fn hilbert_value_with(k: u32, n: u32, m: u32, method: HilbertMethod) -> Result<BigInt> {
    match method {
        HilbertMethod::Closed => hilbert_value(k, n, m),
        HilbertMethod::Series => {
            let series = HilbertSeries::plucker(k, n)?;
            Ok(series.coefficients(m as usize).swap_remove(m as usize))
        }
    }
}

/// `Σ_{i=1}^{s} H(2i)`, the exact Fubini–Study bound.
pub fn hilbert_even_sum(k: u32, n: u32, s: u32) -> Result<BigInt> {
    if s == 0 {
        return Err(Error::domain("s must be at least 1"));
    }
    let mut acc = BigInt::zero();
    for i in 1..=s {
        acc += hilbert_value(k, n, 2 * i)?;
    }
    Ok(acc)
}

/// `∏_{j=1}^{2s} (j − 1)! / (j + k − 1)!`, the coefficient of `n^{2ks}` in
/// [`hilbert_even_sum`].
pub fn fs_leading_coefficient(k: u32, s: u32) -> Result<BigRational> {
    if k == 0 || s == 0 {
        return Err(Error::domain("k and s must be at least 1"));
    }
    let mut acc = BigRational::one();
    for j in 1..=(2 * s) as u64 {
        acc *= BigRational::new(factorial(j - 1), factorial(j + k as u64 - 1));
    }
    Ok(acc)
}

fn check_kn(k: u32, n: u32) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    Ok(())
}
