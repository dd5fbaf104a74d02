//! Explicit linearly independent polynomials in the ideal
//! `𝕀_{k,n} = ⟨tr X − k, X² − X⟩` of the projection-embedded Grassmannian,
//! certified by exact rank.
//!
//! Indices are 0-based pairs `(i, j)`, `i ≤ j`; `ℐ` is all such pairs and
//! `ℐ₀` the off-diagonal ones.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::linalg::{exact_rank, random_rational_projection, upper_entries};
use super::poly::{monomials_of_degree, var_index, Poly};
use crate::error::{Error, Result};
use crate::exact::binomial_u;
use crate::geometry::frame::k_subsets;

pub type Pair = (usize, usize);

/// A member of `Λ_d`: a pair `α₁ ∈ ℐ` and a `(d − 3)`-subset of `ℐ₀ ∖ {α₁}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyIndex {
    pub head: Pair,
    pub tail: Vec<Pair>,
}

fn m_choose_2(s: u64) -> u64 {
    s * s.saturating_sub(1) / 2
}

fn check_params(n: usize, k: usize) -> Result<()> {
    if n < 2 || k < 2 || k > n {
        return Err(Error::domain(format!("need 2 <= k <= n, got k = {k}, n = {n}")));
    }
    Ok(())
}

/// Largest `d` covered by the construction: `M_n + 2`.
pub fn max_degree(n: usize) -> usize {
    m_choose_2(n as u64) as usize + 2
}

/// `p_d(n)`: `M_{n+1}` for `d = 2`, `M_n·C(M_n − 1, d − 3) + n·C(M_n, d − 3)` for `3 ≤ d ≤ M_n + 2`.
pub fn p_d(n: usize, d: usize) -> Result<BigInt> {
    if n < 2 || d < 2 || d > max_degree(n) {
        return Err(Error::domain(format!(
            "p_d(n) is defined for n >= 2 and 2 <= d <= M_n + 2, got n = {n}, d = {d}"
        )));
    }
    if d == 2 {
        return Ok(BigInt::from(m_choose_2(n as u64 + 1)));
    }
    let m = m_choose_2(n as u64);
    let t = d as i64 - 3;
    Ok(BigInt::from(m) * binomial_u(m - 1, t) + BigInt::from(n) * binomial_u(m, t))
}

pub fn pairs(n: usize) -> Vec<Pair> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

pub fn offdiag_pairs(n: usize) -> Vec<Pair> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn num_vars(n: usize) -> usize {
    n * (n + 1) / 2
}

fn x(n: usize, i: usize, j: usize) -> Poly {
    Poly::var(num_vars(n), var_index(n, i, j))
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `f_{i,j} = tr(X)·x_{i,j} − k Σ_l x_{i,l} x_{l,j}`.
pub fn f_poly(n: usize, k: usize, (i, j): Pair) -> Poly {
    let nv = num_vars(n);
    let mut tr = Poly::zero(nv);
    for l in 0..n {
        tr = tr.add(&x(n, l, l));
    }
    let mut sq = Poly::zero(nv);
    for l in 0..n {
        sq = sq.add(&x(n, i, l).mul(&x(n, l, j)));
    }
    tr.mul(&x(n, i, j)).add(&sq.scale(&int(-(k as i64))))
}

/// `g_{i,j} = tr(E_{i,j} X)`: `2x_{i,j}` off the diagonal, `x_{i,i}` on it.
pub fn g_poly(n: usize, (i, j): Pair) -> Poly {
    let p = x(n, i, j);
    if i == j {
        p
    } else {
        p.scale(&int(2))
    }
}

/// `h_{i,j} = x_{i,j} f_{i,j}`.
pub fn h_poly(n: usize, k: usize, a: Pair) -> Poly {
    x(n, a.0, a.1).mul(&f_poly(n, k, a))
}

/// `Λ_d`, heads in lexicographic order, tails as lexicographic subsets.
pub fn family_indices(n: usize, d: usize) -> Result<Vec<FamilyIndex>> {
    if d < 3 || d > max_degree(n) {
        return Err(Error::domain(format!(
            "family degree must satisfy 3 <= d <= M_n + 2 = {}, got d = {d}",
            max_degree(n)
        )));
    }
    let off = offdiag_pairs(n);
    let mut out = Vec::new();
    for head in pairs(n) {
        let rest: Vec<Pair> = off.iter().copied().filter(|&b| b != head).collect();
        for subset in k_subsets(rest.len(), d - 3) {
            out.push(FamilyIndex {
                head,
                tail: subset.into_iter().map(|t| rest[t]).collect(),
            });
        }
    }
    Ok(out)
}

/// `P_I = h_{α₁} ∏ g_β`.
pub fn family_poly(n: usize, k: usize, idx: &FamilyIndex) -> Poly {
    idx.tail
        .iter()
        .fold(h_poly(n, k, idx.head), |acc, &b| acc.mul(&g_poly(n, b)))
}

/// The quadrics `{f_{i,j}}` (for `d = 2`) or the family `𝒫_d` (for `d ≥ 3`).
pub fn family(n: usize, d: usize, k: usize) -> Result<Vec<Poly>> {
    check_params(n, k)?;
    if d == 2 {
        return Ok(pairs(n).into_iter().map(|a| f_poly(n, k, a)).collect());
    }
    Ok(family_indices(n, d)?
        .iter()
        .map(|idx| family_poly(n, k, idx))
        .collect())
}

/// Coefficient matrix of homogeneous degree-`d` polynomials in the
/// graded-lex monomial basis.
pub fn coefficient_matrix(polys: &[Poly], n: usize, d: usize) -> Result<Vec<Vec<BigRational>>> {
    let basis = monomials_of_degree(num_vars(n), d as u32);
    let index: std::collections::HashMap<_, _> =
        basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    polys
        .iter()
        .map(|p| {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (m, c) in p.terms() {
                let col = index.get(m).ok_or_else(|| {
                    Error::invariant("homogeneity", format!("term of degree {} in a degree-{d} family", m.degree()))
                })?;
                row[*col] = c.clone();
            }
            Ok(row)
        })
        .collect()
}

/// Exact rank of `{f_{i,j} : (i,j) ∈ ℐ}`; equals `C(n+1, 2)`.
pub fn lemma51_quadrics_rank(n: usize, k: usize) -> Result<usize> {
    lemma51_family_rank(n, 2, k)
}

/// Exact rank of the degree-`d` family; equals `p_d(n)`.
pub fn lemma51_family_rank(n: usize, d: usize, k: usize) -> Result<usize> {
    let polys = family(n, d, k)?;
    Ok(exact_rank(&coefficient_matrix(&polys, n, d)?))
}

/// Outcome of [`lemma51_report`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma51Report {
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub family_size: usize,
    pub rank: usize,
    #[serde(serialize_with = "crate::serde_util::bigint")]
    pub p_d: BigInt,
    pub independent: bool,
}

pub fn lemma51_report(n: usize, d: usize, k: usize) -> Result<Lemma51Report> {
    let polys = family(n, d, k)?;
    let rank = exact_rank(&coefficient_matrix(&polys, n, d)?);
    let p = p_d(n, d)?;
    Ok(Lemma51Report {
        n,
        d,
        k,
        family_size: polys.len(),
        rank,
        independent: BigInt::from(rank) == p && rank == polys.len(),
        p_d: p,
    })
}

/// Evaluates the whole family at `samples` seeded rational rank-`k`
/// projections; returns the number of non-zero evaluations (zero means
/// every polynomial lies in `𝕀_{k,n}` as far as point evaluation can tell).
pub fn ideal_membership_failures(n: usize, d: usize, k: usize, samples: usize, seed: u64) -> Result<usize> {
    let polys = family(n, d, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..samples {
        let p = random_rational_projection(&mut rng, n, k);
        let point = upper_entries(&p);
        failures += polys.iter().filter(|f| !f.eval(&point).is_zero()).count();
    }
    Ok(failures)
}

/// `B_I = (1 − δ_{α₁}) E_{1,1} + Σ_{α ∈ I} E_α`, where `δ_{α₁} = 1` exactly
/// when `α₁` is diagonal and `E_{i,i}` has a single unit entry.
pub fn selector_matrix(n: usize, idx: &FamilyIndex) -> Vec<Vec<BigRational>> {
    let mut b = vec![vec![BigRational::zero(); n]; n];
    let mut add = |(i, j): Pair| {
        b[i][j] += BigRational::one();
        if i != j {
            b[j][i] += BigRational::one();
        }
    };
    if idx.head.0 != idx.head.1 {
        add((0, 0));
    }
    add(idx.head);
    for &t in &idx.tail {
        add(t);
    }
    b
}

/// Exhaustively checks the selector property of the matrices `B_I`:
/// for diagonal `α₁`, `P_J(B_I) ≠ 0` iff `J = I`; for off-diagonal `α₁`
/// and `β₁`, `P_J(B_I) ≠ 0` iff `{α} = {β}` as sets. Returns the number of
/// violating pairs `(I, J)`.
pub fn selector_violations(n: usize, d: usize, k: usize) -> Result<usize> {
    check_params(n, k)?;
    let indices = family_indices(n, d)?;
    let polys: Vec<Poly> = indices.iter().map(|i| family_poly(n, k, i)).collect();
    let as_set = |i: &FamilyIndex| {
        let mut v = i.tail.clone();
        v.push(i.head);
        v.sort();
        v
    };
    let mut violations = 0;
    for a in &indices {
        let point = upper_entries(&selector_matrix(n, a));
        let a_diag = a.head.0 == a.head.1;
        for (b, pb) in indices.iter().zip(&polys) {
            let b_diag = b.head.0 == b.head.1;
            let expected = if a_diag {
                a == b
            } else if !b_diag {
                as_set(a) == as_set(b)
            } else {
                continue;
            };
            if (!pb.eval(&point).is_zero()) != expected {
                violations += 1;
            }
        }
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(p_d(3, 2).unwrap(), BigInt::from(6));
        assert_eq!(p_d(3, 3).unwrap(), BigInt::from(6));
        assert_eq!(p_d(3, 4).unwrap(), BigInt::from(15));
        assert_eq!(p_d(4, 3).unwrap(), BigInt::from(10));
        assert!(p_d(3, 6).is_err());
        assert!(p_d(3, 1).is_err());
        for (n, d) in [(3, 3), (3, 4), (3, 5), (4, 3), (4, 4), (5, 3)] {
            assert_eq!(BigInt::from(family_indices(n, d).unwrap().len()), p_d(n, d).unwrap());
        }
    }

    #[test]
    fn quadric_ranks() {
        for k in [2, 3] {
            assert_eq!(lemma51_quadrics_rank(3, k).unwrap(), 6);
            assert_eq!(lemma51_quadrics_rank(4, k).unwrap(), 10);
        }
        assert_eq!(lemma51_quadrics_rank(2, 2).unwrap(), 3);
    }

    #[test]
    fn family_ranks() {
        for k in [2, 3] {
            assert_eq!(lemma51_family_rank(3, 3, k).unwrap(), 6);
            assert_eq!(lemma51_family_rank(3, 4, k).unwrap(), 15);
            assert_eq!(lemma51_family_rank(4, 3, k).unwrap(), 10);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(lemma51_family_rank(3, 6, 2).is_err());
        assert!(lemma51_family_rank(3, 3, 1).is_err());
        assert!(lemma51_family_rank(3, 3, 4).is_err());
        assert!(lemma51_family_rank(3, 1, 2).is_err());
    }

    #[test]
    fn f_matches_definition() {
        // f_{0,0} for n = 2, k = 2: (x00 + x11) x00 − 2(x00² + x01²)
        let f = f_poly(2, 2, (0, 0));
        let pt = [int(3), int(5), int(7)];
        assert_eq!(f.eval(&pt), int((3 + 7) * 3 - 2 * (9 + 25)));
    }

    #[test]
    fn selector_matrix_shape() {
        let idx = FamilyIndex { head: (0, 1), tail: vec![(1, 2)] };
        let b = selector_matrix(3, &idx);
        assert_eq!(b[0][0], int(1));
        assert_eq!(b[0][1], int(1));
        assert_eq!(b[2][1], int(1));
        assert_eq!(b[2][2], int(0));
        let diag = FamilyIndex { head: (2, 2), tail: vec![] };
        let b = selector_matrix(3, &diag);
        assert_eq!(b[0][0], int(0));
        assert_eq!(b[2][2], int(1));
    }
}
