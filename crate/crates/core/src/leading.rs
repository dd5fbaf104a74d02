//! Leading coefficient of the Hilbert polynomial of the Grassmannian embedded
//! as projection matrices, and the chordal-distance leading term built on it.
//!
//! ```text
//! d(k, n) = α_{k,n} Σ_λ A_{λ,k} B_{λ,k} C_{λ,k},
//! h(d) = d(k, n) / (k(n−k))! · d^{k(n−k)} + lower order terms.
//! ```
//!
//! The sum runs over partitions `λ` of `k(k−1)/2` with at most `k` parts in
//! the support of the Jack expansion of `∏_{i<j}(x_i + x_j)`.
//! The Gamma factors produce powers of √π that cancel term by term; the
//! cancellation is checked, not assumed.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factorial, gamma_half, gamma_ratio_half_shift, ExactScalar};
use crate::partition::Partition;
use crate::symfun::jack_expansion_coeffs;

/// `d(k,n)` together with the dimension and the normalized leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeadingTermReport {
    pub k: u32,
    pub n: u32,
    #[serde(serialize_with = "crate::serde_util::rational_str")]
    pub d_kn: BigRational,
    pub dim: u32,
    #[serde(serialize_with = "crate::serde_util::rational_str")]
    pub leading_coeff: BigRational,
}

impl LeadingTermReport {
    pub fn compute(k: u32, n: u32) -> Result<Self> {
        let d = d_kn(k, n)?;
        let dim = k * (n - k);
        let leading_coeff = &d / BigRational::from_integer(factorial(dim as u64));
        Ok(LeadingTermReport {
            k,
            n,
            d_kn: d,
            dim,
            leading_coeff,
        })
    }
}

/// `α_{k,n}` for `1 ≤ k ≤ n/2`.
pub fn alpha_coefficient(k: u32, n: u32) -> Result<BigRational> {
    if k == 0 || 2 * k > n {
        return Err(Error::domain(format!(
            "alpha_(k,n) needs 1 <= k <= n/2, got k = {k}, n = {n}"
        )));
    }
    let (k, n) = (k as i64, n as i64);
    let two = BigInt::from(2);
    let (num, den) = if n == 2 * k {
        let mut den = BigInt::one();
        for i in 1..=k {
            for j in i + 1..=k {
                den *= BigInt::from((j - i) * (2 * k - j - i));
            }
        }
        (two.pow((k * (k - 1) + 1) as u32), den)
    } else if n % 2 == 0 {
        let mut den = BigInt::one();
        for i in 1..=k {
            for j in i + 1..=n / 2 {
                den *= BigInt::from((j - i) * (n - j - i));
            }
        }
        (two.pow((k * (n - k - 1)) as u32), den)
    } else {
        let mut den = BigInt::one();
        for i in 1..=k {
            for j in i + 1..=(n - 1) / 2 {
                den *= BigInt::from((j - i) * (n - i - j));
            }
            den *= BigInt::from(n - 2 * i);
        }
        (two.pow((k * (n - k)) as u32), den)
    };
    Ok(BigRational::new(num, den))
}

/// `A_{λ,k} = ∏_{i=1}^{k} Γ(n − 2k + 1 + λ_i + (k − i)/2)`.
pub fn gamma_product_a(lambda: &Partition, k: u32, n: u32) -> Result<ExactScalar> {
    let (k, n) = (k as i64, n as i64);
    let mut acc = ExactScalar::one();
    for i in 1..=k {
        let li = lambda.part((i - 1) as usize) as i64;
        // twice the Gamma argument
        let two_x = 2 * (n - 2 * k + 1 + li) + (k - i);
        acc = &acc * &gamma_half(two_x)?;
    }
    Ok(acc)
}

/// `B_{λ,k} = ∏_{i<j} Γ(λ_i − λ_j + (j−i+1)/2) / Γ(λ_i − λ_j + (j−i)/2)`.
pub fn gamma_product_b(lambda: &Partition, k: u32) -> Result<ExactScalar> {
    let k = k as usize;
    let mut acc = ExactScalar::one();
    for i in 0..k {
        for j in i + 1..k {
            let gap = lambda.part(i) as i64 - lambda.part(j) as i64;
            let two_x = 2 * gap + (j - i) as i64;
            acc = &acc * &gamma_ratio_half_shift(two_x, 1, 0)?;
        }
    }
    Ok(acc)
}

/// `d(k, n)` for `1 ≤ k ≤ n − 1`; for `k > n/2` this is `d(n − k, n)`.
pub fn d_kn(k: u32, n: u32) -> Result<BigRational> {
    if k == 0 || k >= n {
        return Err(Error::domain(format!(
            "d(k,n) needs 1 <= k <= n-1, got k = {k}, n = {n}"
        )));
    }
    let k = if 2 * k > n { n - k } else { k };
    let alpha = alpha_coefficient(k, n)?;
    let mut sum = ExactScalar::zero();
    for (lambda, c) in jack_expansion_coeffs(k as usize)? {
        let a = gamma_product_a(&lambda, k, n)?;
        let b = gamma_product_b(&lambda, k)?;
        let term = &(&a * &b) * &c;
        sum = sum.checked_add(&term)?;
    }
    let total = &sum * &alpha;
    let d = total.to_rational()?;
    if !d.is_positive() {
        return Err(Error::invariant("d(k,n) positivity", format!("d({k},{n}) = {d}")));
    }
    Ok(d)
}

/// `d(k,n) / (k(n−k))! · s^{k(n−k)}`, the leading term of the chordal bound.
pub fn chordal_leading_term(k: u32, n: u32, s: u32) -> Result<BigRational> {
    if s == 0 {
        return Err(Error::domain("s must be at least 1"));
    }
    let report = LeadingTermReport::compute(k, n)?;
    let power = BigInt::from(s).pow(report.dim);
    Ok(report.leading_coeff * BigRational::from_integer(power))
}

/// `(8n − 25)(2n − 9)!! 2^{2n−6} / (n − 2)!`, the closed form of `d(3, n)`.
pub fn d3_closed_form(n: u32) -> Result<BigRational> {
    if n < 6 {
        return Err(Error::domain("closed form for d(3,n) needs n >= 6"));
    }
    let n = n as i64;
    let num = BigInt::from(8 * n - 25)
        * crate::exact::double_factorial(2 * n - 9)?
        * BigInt::from(2).pow((2 * n - 6) as u32);
    Ok(BigRational::new(num, factorial((n - 2) as u64)))
}

/// True when `q` is an integer; used by callers reporting `d(k,n)`.
pub fn is_integral(q: &BigRational) -> bool {
    q.denom().is_one() || q.is_zero()
}
