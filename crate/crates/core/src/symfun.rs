//! Homogeneous symmetric polynomials in the monomial basis, Jack polynomials,
//! and the Jack expansion of `∏_{i<j} (x_i + x_j)`.
//!
//! Jack polynomials are computed from the monomial-coefficient recurrence of
//! the Laplace–Beltrami type operator
//!
//! ```text
//! D(α) = (α/2) Σ x_i² ∂_i² + Σ_{i≠j} x_i² / (x_i − x_j) ∂_i,
//! ```
//!
//! which acts triangularly on monomial symmetric functions:
//! `D m_ν = e_ν m_ν + Σ (p − q) m_μ`, where `μ` runs over partitions obtained
//! from `ν` by moving `t` units from a part `p` to a smaller part `q`
//! (`0 < t < p − q`). The monic Jack `P_λ` is the eigenvector with leading
//! term `m_λ`; `J_λ` rescales it by the hook product `∏ (α·arm + leg + 1)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::partition::{dominates, enumerate_dominated, partitions, Partition};

/// Homogeneous symmetric polynomial `Σ c_λ m_λ` in `num_vars` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    degree: u32,
    num_vars: usize,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SymPoly {
    pub fn zero(degree: u32, num_vars: usize) -> Self {
        SymPoly {
            degree,
            num_vars,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Coefficient of `m_λ` (zero when absent).
    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Non-zero terms in decreasing lexicographic order of the partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter().rev()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.terms().map(|(p, _)| p.clone()).collect()
    }

    /// Adds `c` to the coefficient of `m_λ`, dropping zeros.
    pub fn add_term(&mut self, lambda: Partition, c: &BigRational) -> Result<()> {
        if lambda.weight() != self.degree || lambda.len() > self.num_vars {
            return Err(Error::invalid(format!(
                "m_{lambda} does not live in degree {} with {} variables",
                self.degree, self.num_vars
            )));
        }
        let updated = self.coeff(&lambda) + c;
        if updated.is_zero() {
            self.coeffs.remove(&lambda);
        } else {
            self.coeffs.insert(lambda, updated);
        }
        Ok(())
    }

    /// `self + scale · other`.
    pub fn add_scaled(&mut self, other: &SymPoly, scale: &BigRational) -> Result<()> {
        for (lambda, c) in &other.coeffs {
            self.add_term(lambda.clone(), &(c * scale))?;
        }
        Ok(())
    }

    /// Value at `x_1 = … = x_N = 1`: each `m_λ` contributes the number of
    /// distinct rearrangements of `λ` padded to `N` entries.
    pub fn eval_at_ones(&self) -> BigRational {
        let n = self.num_vars;
        let mut total = BigRational::zero();
        for (lambda, c) in &self.coeffs {
            let padded = lambda.padded(n);
            let mut counts: HashMap<u32, u64> = HashMap::new();
            for p in padded {
                *counts.entry(p).or_default() += 1;
            }
            let mut orbit = factorial(n as u64);
            for m in counts.values() {
                orbit /= factorial(*m);
            }
            total += c * BigRational::from_integer(orbit);
        }
        total
    }
}

/// Normalization of Jack polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JackNormalization {
    /// Monic: coefficient of `m_λ` is 1.
    P,
    /// Integral form: coefficient of `m_{(1^n)}` is `n!`.
    J,
}

/// `∏_{1≤i<j≤k} (x_i + x_j)` in the monomial basis of `k` variables.
pub fn product_offdiag_expand(k: usize) -> Result<SymPoly> {
    if k == 0 {
        return Err(Error::domain("product over k = 0 variables"));
    }
    let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::new();
    poly.insert(vec![0; k], BigInt::one());
    for i in 0..k {
        for j in i + 1..k {
            let mut next: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(poly.len() * 2);
            for (exp, c) in &poly {
                for var in [i, j] {
                    let mut e = exp.clone();
                    e[var] += 1;
                    *next.entry(e).or_insert_with(BigInt::zero) += c;
                }
            }
            poly = next;
        }
    }
    let degree = (k * (k - 1) / 2) as u32;
    let mut out = SymPoly::zero(degree, k);
    for (exp, c) in poly {
        if exp.windows(2).all(|w| w[0] >= w[1]) {
            out.add_term(Partition::from_unsorted(exp), &BigRational::from_integer(c))?;
        }
    }
    Ok(out)
}

/// Eigenvalue of `D(α)` on `m_μ`, up to a shift that depends only on the
/// weight and the variable count.
fn eigenvalue(mu: &Partition, alpha: &BigRational) -> BigRational {
    let mut quad = BigInt::zero();
    let mut lin = BigInt::zero();
    for (i, &p) in mu.parts().iter().enumerate() {
        quad += BigInt::from(p) * BigInt::from(p.saturating_sub(1));
        lin += BigInt::from(i) * BigInt::from(p);
    }
    alpha * BigRational::new(quad, BigInt::from(2)) - BigRational::from_integer(lin)
}

/// Sources `ν` with `m_μ` appearing in `D m_ν`, paired with the coefficient.
fn raising_sources(mu: &Partition) -> Vec<(Partition, u32)> {
    let parts = mu.parts();
    let mut out = Vec::new();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let s = parts[i] + parts[j];
            for p in parts[i] + 1..=s {
                let q = s - p;
                let mut b = parts.to_vec();
                b[i] = p;
                b[j] = q;
                out.push((Partition::from_unsorted(b), p - q));
            }
        }
    }
    out
}

/// Jack polynomial `P_λ^{(α)}` or `J_λ^{(α)}` in `num_vars` variables.
pub fn jack(
    lambda: &Partition,
    alpha: &BigRational,
    num_vars: usize,
    norm: JackNormalization,
) -> Result<SymPoly> {
    if lambda.len() > num_vars {
        return Err(Error::domain(format!(
            "{lambda} has more than {num_vars} parts"
        )));
    }
    if alpha <= &BigRational::zero() {
        return Err(Error::domain("Jack parameter must be positive"));
    }
    let weight = lambda.weight();
    let e_lambda = eigenvalue(lambda, alpha);
    let mut coeffs: HashMap<Partition, BigRational> = HashMap::new();
    coeffs.insert(lambda.clone(), BigRational::one());
    // Decreasing lex order visits every ν > μ before μ.
    for mu in enumerate_dominated(weight, num_vars, lambda)? {
        if &mu == lambda {
            continue;
        }
        let mut acc = BigRational::zero();
        for (nu, w) in raising_sources(&mu) {
            if let Some(c) = coeffs.get(&nu) {
                acc += c * BigRational::from_integer(BigInt::from(w));
            }
        }
        if acc.is_zero() {
            continue;
        }
        let gap = &e_lambda - eigenvalue(&mu, alpha);
        if gap.is_zero() {
            return Err(Error::invariant(
                "jack-eigenvalue-separation",
                format!("e_{lambda} = e_{mu}"),
            ));
        }
        coeffs.insert(mu, acc / gap);
    }
    let scale = match norm {
        JackNormalization::P => BigRational::one(),
        JackNormalization::J => hook_product(lambda, alpha),
    };
    let mut out = SymPoly::zero(weight, num_vars);
    for (mu, c) in coeffs {
        out.add_term(mu, &(c * &scale))?;
    }
    Ok(out)
}

/// `J_λ^{(α)}` in monomials.
pub fn jack_in_monomials(lambda: &Partition, alpha: &BigRational, num_vars: usize) -> Result<SymPoly> {
    jack(lambda, alpha, num_vars, JackNormalization::J)
}

/// `∏_{s ∈ λ} (α·arm(s) + leg(s) + 1)`, the ratio `J_λ / P_λ`.
pub fn hook_product(lambda: &Partition, alpha: &BigRational) -> BigRational {
    let conj = lambda.conjugate();
    let mut acc = BigRational::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j as usize) - i as u32 - 1;
            acc *= alpha * BigRational::from_integer(arm.into())
                + BigRational::from_integer(BigInt::from(leg + 1));
        }
    }
    acc
}

/// Coefficients `C_λ` in `∏_{i<j≤k} (x_i + x_j) = Σ_λ C_λ P_λ^{(2)}` over
/// `k` variables.
///
/// The expansion is taken in the monic basis: it is the normalization under
/// which the leading-coefficient formula reproduces the known closed forms
/// for `k = 3`. The support lies in the partitions dominated by the
/// staircase `δ_k`, the dominance-maximal monomial of the product.
pub fn jack_expansion_coeffs(k: usize) -> Result<BTreeMap<Partition, BigRational>> {
    jack_expansion_coeffs_with(k, JackNormalization::P)
}

/// As [`jack_expansion_coeffs`] with an explicit normalization.
pub fn jack_expansion_coeffs_with(
    k: usize,
    norm: JackNormalization,
) -> Result<BTreeMap<Partition, BigRational>> {
    let alpha = BigRational::from_integer(BigInt::from(2));
    let mut residual = product_offdiag_expand(k)?;
    let weight = residual.degree();
    let mut out = BTreeMap::new();
    for lambda in partitions(weight, k) {
        let c = residual.coeff(&lambda);
        if c.is_zero() {
            continue;
        }
        let j = jack(&lambda, &alpha, k, norm)?;
        let lead = j.coeff(&lambda);
        if lead.is_zero() {
            return Err(Error::invariant(
                "jack-triangularity",
                format!("zero leading coefficient for {lambda}"),
            ));
        }
        let scale = &c / &lead;
        residual.add_scaled(&j, &(-scale.clone()))?;
        out.insert(lambda, scale);
    }
    if residual.terms().next().is_some() {
        return Err(Error::invariant(
            "jack-expansion",
            "residual left after triangular solve",
        ));
    }
    Ok(out)
}

/// `true` when every partition in the support is dominated by `δ_k`.
pub fn support_below_staircase(coeffs: &BTreeMap<Partition, BigRational>, k: usize) -> Result<bool> {
    let stair = Partition::staircase(k);
    for lambda in coeffs.keys() {
        if !dominates(&stair, lambda)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn two() -> BigRational {
        rat(2, 1)
    }

    #[test]
    fn product_examples() {
        let one = product_offdiag_expand(1).unwrap();
        assert_eq!(one.coeff(&Partition::empty()), rat(1, 1));
        assert_eq!(one.support().len(), 1);

        let two_vars = product_offdiag_expand(2).unwrap();
        assert_eq!(two_vars.support(), vec![p(&[1])]);

        let three = product_offdiag_expand(3).unwrap();
        assert_eq!(three.coeff(&p(&[2, 1])), rat(1, 1));
        assert_eq!(three.coeff(&p(&[1, 1, 1])), rat(2, 1));
        assert_eq!(three.support().len(), 2);
    }

    #[test]
    fn product_specializes_to_power_of_two() {
        for k in 1..=6usize {
            let v = product_offdiag_expand(k).unwrap().eval_at_ones();
            assert_eq!(v, BigRational::from_integer(BigInt::from(2).pow((k * (k - 1) / 2) as u32)));
        }
    }

    #[test]
    fn jack_examples() {
        for alpha in [rat(1, 1), rat(2, 1), rat(1, 3)] {
            let j = jack_in_monomials(&p(&[1]), &alpha, 3).unwrap();
            assert_eq!(j.support(), vec![p(&[1])]);
            assert_eq!(j.coeff(&p(&[1])), rat(1, 1));
        }
        let j11 = jack_in_monomials(&p(&[1, 1]), &two(), 2).unwrap();
        assert_eq!(j11.coeff(&p(&[1, 1])), rat(2, 1));
        assert_eq!(j11.support().len(), 1);
        let j2 = jack_in_monomials(&p(&[2]), &two(), 2).unwrap();
        assert_eq!(j2.coeff(&p(&[2])), rat(3, 1));
        assert_eq!(j2.coeff(&p(&[1, 1])), rat(2, 1));
    }

    #[test]
    fn zonal_degree_three() {
        // Known zonal polynomials of degree 3.
        let j3 = jack_in_monomials(&p(&[3]), &two(), 3).unwrap();
        assert_eq!(j3.coeff(&p(&[3])), rat(15, 1));
        assert_eq!(j3.coeff(&p(&[2, 1])), rat(9, 1));
        assert_eq!(j3.coeff(&p(&[1, 1, 1])), rat(6, 1));
        let j21 = jack_in_monomials(&p(&[2, 1]), &two(), 3).unwrap();
        assert_eq!(j21.coeff(&p(&[2, 1])), rat(4, 1));
        assert_eq!(j21.coeff(&p(&[1, 1, 1])), rat(6, 1));
    }

    #[test]
    fn j_normalization_fixes_all_ones_coefficient() {
        for w in 1..=6u32 {
            for lambda in partitions(w, w as usize) {
                let j = jack_in_monomials(&lambda, &two(), w as usize).unwrap();
                let ones = Partition::new(vec![1; w as usize]).unwrap();
                assert_eq!(j.coeff(&ones), BigRational::from_integer(factorial(w as u64)));
            }
        }
    }

    #[test]
    fn alpha_one_gives_schur_functions() {
        // s_(2,1) = m_(2,1) + 2 m_(1,1,1)
        let s = jack(&p(&[2, 1]), &rat(1, 1), 3, JackNormalization::P).unwrap();
        assert_eq!(s.coeff(&p(&[1, 1, 1])), rat(2, 1));
        // s_(2,2) = m_22 + m_211 + 2 m_1111
        let s = jack(&p(&[2, 2]), &rat(1, 1), 4, JackNormalization::P).unwrap();
        assert_eq!(s.coeff(&p(&[2, 1, 1])), rat(1, 1));
        assert_eq!(s.coeff(&p(&[1, 1, 1, 1])), rat(2, 1));
    }

    #[test]
    fn triangularity_up_to_weight_eight() {
        for w in 0..=8u32 {
            for lambda in partitions(w, w as usize) {
                let j = jack_in_monomials(&lambda, &two(), w as usize).unwrap();
                assert!(!j.coeff(&lambda).is_zero());
                for (mu, _) in j.terms() {
                    assert!(dominates(&lambda, mu).unwrap(), "{mu} in J_{lambda}");
                }
            }
        }
    }

    #[test]
    fn expansion_examples() {
        let c1 = jack_expansion_coeffs(1).unwrap();
        assert_eq!(c1.len(), 1);
        assert_eq!(c1[&Partition::empty()], rat(1, 1));
        let c2 = jack_expansion_coeffs(2).unwrap();
        assert_eq!(c2.len(), 1);
        assert_eq!(c2[&p(&[1])], rat(1, 1));
        let c3 = jack_expansion_coeffs(3).unwrap();
        assert_eq!(c3[&p(&[2, 1])], rat(1, 1));
        assert_eq!(c3[&p(&[1, 1, 1])], rat(1, 2));
        assert_eq!(c3.len(), 2);
        // In the integral normalization the same expansion reads 1/4, 1/12.
        let c3j = jack_expansion_coeffs_with(3, JackNormalization::J).unwrap();
        assert_eq!(c3j[&p(&[2, 1])], rat(1, 4));
        assert_eq!(c3j[&p(&[1, 1, 1])], rat(1, 12));
    }

    #[test]
    fn expansion_reconstructs_product() {
        for k in 1..=5usize {
            for norm in [JackNormalization::P, JackNormalization::J] {
                let coeffs = jack_expansion_coeffs_with(k, norm).unwrap();
                assert!(support_below_staircase(&coeffs, k).unwrap());
                let target = product_offdiag_expand(k).unwrap();
                let mut sum = SymPoly::zero(target.degree(), k);
                for (lambda, c) in &coeffs {
                    let j = jack(lambda, &two(), k, norm).unwrap();
                    sum.add_scaled(&j, c).unwrap();
                }
                assert_eq!(sum, target, "k = {k}");
            }
        }
    }

    #[test]
    fn jack_rejects_bad_input() {
        assert!(jack_in_monomials(&p(&[1, 1, 1]), &two(), 2).is_err());
        assert!(jack(&p(&[2]), &rat(0, 1), 2, JackNormalization::P).is_err());
        assert!(product_offdiag_expand(0).is_err());
    }
}
