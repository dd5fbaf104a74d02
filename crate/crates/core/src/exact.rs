//! Exact scalars: big rationals, binomials, factorials, and Gamma values at
//! integer and half-integer arguments.
//!
//! Gamma at a half-integer is a rational multiple of √π, so Gamma products
//! live in ℚ·π^{e/2}. [`ExactScalar`] tracks the exponent `e` of √π next to
//! the rational coefficient. Single Gamma values carry `e ∈ {0, 1}`, ratios
//! may carry `-1`, and longer products accumulate any integer; callers that
//! need a rational (such as the leading-coefficient engine) must check that
//! the exponent has cancelled to zero.

use std::fmt;
use std::ops::{Div, Mul, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A number of the form `coeff · (√π)^sqrt_pi_exp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    coeff: BigRational,
    sqrt_pi_exp: i32,
}

impl ExactScalar {
    pub fn new(coeff: BigRational, sqrt_pi_exp: i32) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        ExactScalar { coeff, sqrt_pi_exp }
    }

    pub fn rational(coeff: BigRational) -> Self {
        Self::new(coeff, 0)
    }

    pub fn from_integer(v: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        ExactScalar {
            coeff: BigRational::zero(),
            sqrt_pi_exp: 0,
        }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    /// The √π-free rational coefficient.
    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    /// Exponent of √π.
    pub fn sqrt_pi_exp(&self) -> i32 {
        self.sqrt_pi_exp
    }

    /// Whole powers of π folded into the exponent (`sqrt_pi_exp` div 2).
    pub fn pi_power(&self) -> i32 {
        self.sqrt_pi_exp.div_euclid(2)
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt_pi_exp == 0
    }

    /// The value as a rational, failing if any power of √π survives.
    pub fn to_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeff.clone())
        } else {
            Err(Error::invariant(
                "pi-cancellation",
                format!("value {self} is not rational"),
            ))
        }
    }

    /// Sum of two scalars. Defined only when both carry the same √π power
    /// (or one of them is zero); anything else would leave ℚ·π^{e/2}.
    pub fn checked_add(&self, other: &ExactScalar) -> Result<ExactScalar> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.sqrt_pi_exp != other.sqrt_pi_exp {
            return Err(Error::invariant(
                "sqrt-pi-grading",
                format!("cannot add {self} and {other}"),
            ));
        }
        Ok(ExactScalar::new(
            &self.coeff + &other.coeff,
            self.sqrt_pi_exp,
        ))
    }

    pub fn recip(&self) -> Result<ExactScalar> {
        if self.is_zero() {
            return Err(Error::domain("reciprocal of zero"));
        }
        Ok(ExactScalar::new(self.coeff.recip(), -self.sqrt_pi_exp))
    }

    /// Floating-point value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        c * std::f64::consts::PI.sqrt().powi(self.sqrt_pi_exp)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.coeff * &rhs.coeff, self.sqrt_pi_exp + rhs.sqrt_pi_exp)
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl Mul<&BigRational> for &ExactScalar {
    type Output = ExactScalar;

    fn mul(self, rhs: &BigRational) -> ExactScalar {
        ExactScalar::new(&self.coeff * rhs, self.sqrt_pi_exp)
    }
}

impl Div for &ExactScalar {
    type Output = ExactScalar;

    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.coeff / &rhs.coeff, self.sqrt_pi_exp - rhs.sqrt_pi_exp)
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;

    fn neg(self) -> ExactScalar {
        ExactScalar::new(-self.coeff, self.sqrt_pi_exp)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational(&self.coeff))?;
        match self.sqrt_pi_exp {
            0 => Ok(()),
            1 => write!(f, "·√π"),
            e => write!(f, "·√π^{e}"),
        }
    }
}

/// `n!` for `n ≥ 0`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Double factorial with the convention `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut m = n;
    while m > 1 {
        acc *= BigInt::from(m);
        m -= 2;
    }
    Ok(acc)
}

/// Binomial coefficient for `n ≥ 0`; zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!("binomial with negative n = {n}")));
    }
    Ok(binomial_u(n as u64, k))
}

/// Binomial coefficient for non-negative `n`.
pub fn binomial_u(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `Γ(two_x / 2)` for a positive integer `two_x`.
pub fn gamma_half(two_x: i64) -> Result<ExactScalar> {
    if two_x <= 0 {
        return Err(Error::domain(format!(
            "Gamma pole at {}",
            BigRational::new(two_x.into(), 2.into())
        )));
    }
    if two_x % 2 == 0 {
        // Γ(m) = (m-1)!
        let m = (two_x / 2) as u64;
        return Ok(ExactScalar::rational(BigRational::from_integer(factorial(
            m - 1,
        ))));
    }
    // Γ(m + 1/2) = (2m)! / (4^m m!) · √π
    let m = ((two_x - 1) / 2) as u64;
    let num = factorial(2 * m);
    let den = BigInt::from(4u32).pow(m as u32) * factorial(m);
    Ok(ExactScalar::new(BigRational::new(num, den), 1))
}

/// `Γ((two_x + num_shift_halves)/2) / Γ((two_x + den_shift_halves)/2)`.
pub fn gamma_ratio_half_shift(
    two_x: i64,
    num_shift_halves: i64,
    den_shift_halves: i64,
) -> Result<ExactScalar> {
    let num = gamma_half(two_x + num_shift_halves)?;
    let den = gamma_half(two_x + den_shift_halves)?;
    Ok(&num / &den)
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q` or `p` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::invalid(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::invalid(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(p)?, q))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

/// Integer part of a rational that must be integral.
pub fn expect_integer(q: &BigRational, what: &'static str) -> Result<BigInt> {
    if q.denom().is_one() {
        Ok(q.numer().clone())
    } else {
        Err(Error::invariant(what, format!("{} is not an integer", format_rational(q))))
    }
}

/// `p/q` as a reduced rational.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `|a - b| / |b|` as f64, for asymptotic comparisons done after exact evaluation.
pub fn relative_gap(a: &BigRational, b: &BigRational) -> f64 {
    if b.is_zero() {
        return f64::INFINITY;
    }
    let r = (a / b - BigRational::one()).abs();
    r.to_f64().unwrap_or(f64::INFINITY)
}

#[cfg(test)]
fn is_lowest_terms(q: &BigRational) -> bool {
    use num_integer::Integer;
    q.numer().gcd(q.denom()).is_one() || q.numer().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        rat(p, q)
    }

    #[test]
    fn gamma_half_examples() {
        assert_eq!(gamma_half(2).unwrap(), ExactScalar::one());
        let g = gamma_half(1).unwrap();
        assert_eq!(g.coeff(), &r(1, 1));
        assert_eq!(g.sqrt_pi_exp(), 1);
        let g = gamma_half(5).unwrap();
        assert_eq!(g.coeff(), &r(3, 4));
        assert_eq!(g.sqrt_pi_exp(), 1);
    }

    #[test]
    fn gamma_poles_are_errors() {
        assert!(matches!(gamma_half(0), Err(Error::Domain(_))));
        assert!(matches!(gamma_half(-3), Err(Error::Domain(_))));
        assert!(gamma_ratio_half_shift(1, -1, 0).is_err());
    }

    #[test]
    fn gamma_ratio_examples() {
        // Γ(2)/Γ(1)
        assert_eq!(gamma_ratio_half_shift(2, 2, 0).unwrap(), ExactScalar::one());
        // Γ(3/2)/Γ(1)
        assert_eq!(
            gamma_ratio_half_shift(2, 1, 0).unwrap(),
            ExactScalar::new(r(1, 2), 1)
        );
        // Γ(2)/Γ(3/2)
        assert_eq!(
            gamma_ratio_half_shift(3, 1, 0).unwrap(),
            ExactScalar::new(r(2, 1), -1)
        );
    }

    #[test]
    fn gamma_recurrence_to_100() {
        for two_x in 1..=100i64 {
            let lhs = gamma_half(two_x + 2).unwrap();
            let rhs = &gamma_half(two_x).unwrap() * &r(two_x, 2);
            assert_eq!(lhs, rhs, "two_x = {two_x}");
        }
    }

    #[test]
    fn gamma_legendre_closed_form() {
        for m in 0..=30u64 {
            let expected = BigRational::new(
                factorial(2 * m),
                BigInt::from(4u32).pow(m as u32) * factorial(m),
            );
            let g = gamma_half(2 * m as i64 + 1).unwrap();
            assert_eq!(g, ExactScalar::new(expected, 1));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), BigInt::from(6));
        assert_eq!(binomial(8, 4).unwrap(), BigInt::from(70));
        assert_eq!(binomial(5, 7).unwrap(), BigInt::zero());
        assert_eq!(binomial(5, -1).unwrap(), BigInt::zero());
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn binomial_symmetry_and_pascal() {
        for n in 0..=60i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k).unwrap(), binomial(n, n - k).unwrap());
                if n > 0 && k > 0 {
                    assert_eq!(
                        binomial(n, k).unwrap(),
                        binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), BigInt::one());
        assert_eq!(double_factorial(0).unwrap(), BigInt::one());
        assert_eq!(double_factorial(3).unwrap(), BigInt::from(3));
        assert_eq!(double_factorial(7).unwrap(), BigInt::from(105));
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn sqrt_pi_grading() {
        let a = gamma_half(1).unwrap();
        let b = gamma_half(3).unwrap();
        assert_eq!(a.checked_add(&b).unwrap(), ExactScalar::new(r(3, 2), 1));
        assert!(a.checked_add(&ExactScalar::one()).is_err());
        let sq = &a * &a;
        assert_eq!(sq.sqrt_pi_exp(), 2);
        assert_eq!(sq.pi_power(), 1);
        assert!(sq.to_rational().is_err());
        assert!((sq.to_f64() - std::f64::consts::PI).abs() < 1e-12);
        assert_eq!((&a / &a).to_rational().unwrap(), BigRational::one());
    }

    #[test]
    fn zero_is_normalized() {
        let z = ExactScalar::new(BigRational::zero(), 3);
        assert_eq!(z.sqrt_pi_exp(), 0);
        assert!(is_lowest_terms(z.coeff()));
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["16", "-3/4", "1/12", "0"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(format_rational(&parse_rational("4/8").unwrap()), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
