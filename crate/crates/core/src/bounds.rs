//! Upper bounds on the size of s-distance sets in `Gr(k, n)` and the prior
//! bounds they are measured against.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{binomial_u, format_rational};
use crate::hilbert::hilbert_even_sum;
use crate::leading::chordal_leading_term;
use crate::serde_util::bigint_value;

fn m2(s: u64) -> u64 {
    s * s.saturating_sub(1) / 2
}

fn check_kn(k: u32, n: u32) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::domain(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    Ok(())
}

/// `Σ_{i=1}^{s} H_{Gr(k,n)}(2i)` in the Plücker embedding.
pub fn bound_fs_exact(k: u32, n: u32, s: u32) -> Result<BigInt> {
    check_kn(k, n)?;
    hilbert_even_sum(k, n, s)
}

/// `C(n + 2s − 1, n − 1) + C(n + 2s − 2, n − 1)`, for lines under either
/// the chordal or the Fubini–Study distance.
pub fn bound_lines_spherical(n: u32, s: u32) -> Result<BigInt> {
    if n < 2 || s == 0 {
        return Err(Error::domain(format!("need n >= 2 and s >= 1, got n = {n}, s = {s}")));
    }
    let (n, s) = (n as u64, s as u64);
    Ok(binomial_u(n + 2 * s - 1, n as i64 - 1) + binomial_u(n + 2 * s - 2, n as i64 - 1))
}

/// Equiangular subspaces under an angle distance, `2 ≤ k ≤ n`:
/// `C(M_{n+1} + 1, 2) − M_{n+1}` for `k = 2`, and
/// `C(M_{n+1} + k − 1, k) − M_n C(M_n − 1, k − 3) − n C(M_n, k − 3)` for `k ≥ 3`.
pub fn bound_equiangular(k: u32, n: u32) -> Result<BigInt> {
    if k < 2 || k > n {
        return Err(Error::domain(format!("need 2 <= k <= n, got k = {k}, n = {n}")));
    }
    let (k, n) = (k as u64, n as u64);
    let big_m = m2(n + 1);
    if k == 2 {
        return Ok(binomial_u(big_m + 1, 2) - BigInt::from(big_m));
    }
    let mn = m2(n);
    let t = k as i64 - 3;
    Ok(binomial_u(big_m + k - 1, k as i64)
        - BigInt::from(mn) * binomial_u(mn - 1, t)
        - BigInt::from(n) * binomial_u(mn, t))
}

/// `C(C(n+1, 2) + k − 1, k)`, the prior bound for angle distances.
pub fn baseline_balla(k: u32, n: u32) -> Result<BigInt> {
    check_kn(k, n)?;
    Ok(binomial_u(m2(n as u64 + 1) + k as u64 - 1, k as i64))
}

/// `C(n+1, 2)`, the prior chordal bound for equiangular subspaces.
pub fn baseline_chs(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    Ok(binomial_u(n as u64 + 1, 2))
}

/// `C(C(n, k) + 1, 2)`, the prior Fubini–Study bound for equiangular subspaces.
pub fn baseline_fs_balla(k: u32, n: u32) -> Result<BigInt> {
    check_kn(k, n)?;
    let c = binomial_u(n as u64, k as i64);
    Ok(&c * (&c + 1u32) / 2u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Fs,
    Lines,
    Equiangular,
    ChordalLeading,
}

impl std::str::FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fs" => Ok(BoundKind::Fs),
            "lines" => Ok(BoundKind::Lines),
            "equiangular" => Ok(BoundKind::Equiangular),
            "chordal-leading" => Ok(BoundKind::ChordalLeading),
            _ => Err(Error::invalid(format!("unknown bound {s:?}"))),
        }
    }
}

impl std::fmt::Display for BoundKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundKind::Fs => "fs",
            BoundKind::Lines => "lines",
            BoundKind::Equiangular => "equiangular",
            BoundKind::ChordalLeading => "chordal-leading",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    ExactFiniteN,
    LeadingTermAsymptotic,
}

impl std::fmt::Display for ReportKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ReportKind::ExactFiniteN => "exact_finite_n",
            ReportKind::LeadingTermAsymptotic => "leading_term_asymptotic",
        })
    }
}

/// An integer bound, or the rational coefficient of a leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Integer(BigInt),
    Rational(BigRational),
}

impl std::fmt::Display for BoundValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Rational(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BoundValue::Integer(v) => bigint_value(v).serialize(ser),
            BoundValue::Rational(q) => ser.serialize_str(&format_rational(q)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Baseline {
    pub name: &'static str,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound: BoundKind,
    pub k: u32,
    pub n: u32,
    pub s: u32,
    pub metric: &'static str,
    pub value: BoundValue,
    pub kind: ReportKind,
    pub baseline: Option<Baseline>,
    #[serde(serialize_with = "crate::serde_util::bigint_opt")]
    pub improvement: Option<BigInt>,
}

/// Evaluates one bound and, where a prior bound covers the same setting,
/// the prior bound and the improvement over it.
///
/// - `fs`: exact; baseline `C(C(n,k)+1, 2)` when `s = 1`.
/// - `lines`: exact, `k = 1`; no baseline.
/// - `equiangular`: exact, `s = 1`; baseline `C(C(n+1,2)+k−1, k)`.
/// - `chordal-leading`: the rational coefficient `d(k,n)/(k(n−k))!·s^{k(n−k)}`
///   of the leading term in `n`; no baseline.
pub fn compare(bound: BoundKind, k: u32, n: u32, s: u32) -> Result<BoundReport> {
    if s == 0 {
        return Err(Error::domain("s must be at least 1"));
    }
    let exact = |value: BigInt, metric, baseline: Option<Baseline>| {
        let improvement = baseline.as_ref().map(|b| &b.value - &value);
        BoundReport {
            bound,
            k,
            n,
            s,
            metric,
            value: BoundValue::Integer(value),
            kind: ReportKind::ExactFiniteN,
            baseline,
            improvement,
        }
    };
    let report = match bound {
        BoundKind::Fs => {
            let value = bound_fs_exact(k, n, s)?;
            let baseline = if s == 1 {
                Some(Baseline {
                    name: "fs_balla",
                    value: baseline_fs_balla(k, n)?,
                })
            } else {
                None
            };
            exact(value, "fs", baseline)
        }
        BoundKind::Lines => {
            if k != 1 {
                return Err(Error::domain(format!("the lines bound needs k = 1, got k = {k}")));
            }
            exact(bound_lines_spherical(n, s)?, "chordal_or_fs", None)
        }
        BoundKind::Equiangular => {
            if s != 1 {
                return Err(Error::domain(format!("the equiangular bound needs s = 1, got s = {s}")));
            }
            let baseline = Baseline {
                name: "balla",
                value: baseline_balla(k, n)?,
            };
            exact(bound_equiangular(k, n)?, "angle", Some(baseline))
        }
        BoundKind::ChordalLeading => BoundReport {
            bound,
            k,
            n,
            s,
            metric: "chordal",
            value: BoundValue::Rational(chordal_leading_term(k, n, s)?),
            kind: ReportKind::LeadingTermAsymptotic,
            baseline: None,
            improvement: None,
        },
    };
    if let (Some(imp), BoundKind::Equiangular) = (&report.improvement, bound) {
        if imp.sign() != num_bigint::Sign::Plus {
            return Err(Error::invariant(
                "equiangular improvement",
                format!("improvement {imp} at k = {k}, n = {n}"),
            ));
        }
    }
    if let (Some(imp), BoundKind::Fs) = (&report.improvement, bound) {
        if imp.sign() == num_bigint::Sign::Minus {
            return Err(Error::invariant(
                "fs improvement",
                format!("improvement {imp} at k = {k}, n = {n}"),
            ));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn fs_examples() {
        assert_eq!(bound_fs_exact(1, 3, 1).unwrap(), big(6));
        assert_eq!(bound_fs_exact(2, 4, 1).unwrap(), big(20));
        assert_eq!(bound_fs_exact(1, 4, 2).unwrap(), big(45));
        assert!(bound_fs_exact(3, 2, 1).is_err());
    }

    #[test]
    fn lines_examples() {
        assert_eq!(bound_lines_spherical(3, 1).unwrap(), big(9));
        assert_eq!(bound_lines_spherical(3, 2).unwrap(), big(25));
        assert_eq!(bound_lines_spherical(2, 1).unwrap(), big(5));
        assert!(bound_lines_spherical(1, 1).is_err());
    }

    #[test]
    fn equiangular_examples() {
        assert_eq!(bound_equiangular(2, 3).unwrap(), big(15));
        assert_eq!(bound_equiangular(3, 3).unwrap(), big(50));
        assert_eq!(bound_equiangular(2, 4).unwrap(), big(45));
        assert!(bound_equiangular(1, 3).is_err());
    }

    #[test]
    fn baseline_examples() {
        assert_eq!(baseline_balla(2, 3).unwrap(), big(21));
        assert_eq!(baseline_balla(3, 3).unwrap(), big(56));
        for n in 1..8 {
            assert_eq!(baseline_balla(1, n).unwrap(), baseline_chs(n).unwrap());
        }
        assert_eq!(baseline_chs(3).unwrap(), big(6));
        assert_eq!(baseline_chs(4).unwrap(), big(10));
        assert_eq!(baseline_chs(7).unwrap(), big(28));
        assert_eq!(baseline_fs_balla(1, 3).unwrap(), big(6));
        assert_eq!(baseline_fs_balla(2, 4).unwrap(), big(21));
        assert_eq!(baseline_fs_balla(1, 2).unwrap(), big(3));
    }

    #[test]
    fn compare_examples() {
        let r = compare(BoundKind::Equiangular, 2, 3, 1).unwrap();
        assert_eq!(r.improvement, Some(big(6)));
        let r = compare(BoundKind::Fs, 2, 4, 1).unwrap();
        assert_eq!(r.improvement, Some(big(1)));
        let r = compare(BoundKind::Equiangular, 3, 3, 1).unwrap();
        assert_eq!(r.improvement, Some(big(6)));
        assert_eq!(r.kind, ReportKind::ExactFiniteN);
        let r = compare(BoundKind::ChordalLeading, 1, 5, 1).unwrap();
        assert_eq!(r.kind, ReportKind::LeadingTermAsymptotic);
        assert!(compare(BoundKind::Equiangular, 2, 3, 2).is_err());
        assert!(compare(BoundKind::Lines, 2, 3, 1).is_err());
    }

    #[test]
    fn report_json() {
        let r = compare(BoundKind::Equiangular, 2, 3, 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["value"], 15);
        assert_eq!(v["baseline"]["value"], 21);
        assert_eq!(v["improvement"], 6);
        assert_eq!(v["kind"], "exact_finite_n");
        let r = compare(BoundKind::ChordalLeading, 2, 4, 1).unwrap();
        assert!(serde_json::to_value(&r).unwrap()["value"].is_string());
    }

    #[test]
    fn improvements_over_grid() {
        for n in 2..=10 {
            for k in 2..=n {
                assert!(bound_equiangular(k, n).unwrap() < baseline_balla(k, n).unwrap(), "k={k} n={n}");
            }
        }
        for n in 1..=8 {
            for k in 1..=n {
                let b = bound_fs_exact(k, n, 1).unwrap();
                let base = baseline_fs_balla(k, n).unwrap();
                assert!(b <= base);
                if k >= 2 && k + 2 <= n {
                    assert!(b < base, "k={k} n={n}");
                }
            }
        }
        for n in 2..=12 {
            assert!(bound_lines_spherical(n, 1).unwrap() >= baseline_chs(n).unwrap());
        }
    }

    #[test]
    fn monotone_in_s_and_n() {
        for k in 1..=3 {
            for n in k.max(2)..=8 {
                for s in 1..=3 {
                    let b = bound_fs_exact(k, n, s).unwrap();
                    assert!(b <= bound_fs_exact(k, n, s + 1).unwrap());
                    assert!(b <= bound_fs_exact(k, n + 1, s).unwrap());
                    if k == 1 {
                        let l = bound_lines_spherical(n, s).unwrap();
                        assert!(l <= bound_lines_spherical(n, s + 1).unwrap());
                        assert!(l <= bound_lines_spherical(n + 1, s).unwrap());
                    }
                }
                if k >= 2 && k <= n {
                    assert!(bound_equiangular(k, n).unwrap() <= bound_equiangular(k, n + 1).unwrap());
                }
            }
        }
    }
}
