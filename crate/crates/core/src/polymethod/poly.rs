//! Sparse polynomials with rational coefficients in the entries `x_{i,j}`,
//! `i ≤ j`, of a symmetric `n × n` matrix.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exponent vector, ordered graded-lexicographically: higher total degree
/// first, then larger exponent of the earliest variable first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, v: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[v] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::one();
        for (x, &e) in point.iter().zip(&self.0) {
            for _ in 0..e {
                acc *= x;
            }
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        point
            .iter()
            .zip(&self.0)
            .map(|(x, &e)| x.powi(e as i32))
            .product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of total degree exactly `degree`, in graded-lex order.
pub fn monomials_of_degree(num_vars: usize, degree: u32) -> Vec<Monomial> {
    fn rec(v: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v + 1 == cur.len() {
            cur[v] = left as u16;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[v] = e as u16;
            rec(v + 1, left - e, cur, out);
        }
        cur[v] = 0;
    }
    if num_vars == 0 {
        return if degree == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, degree, &mut vec![0; num_vars], &mut out);
    out
}

/// All monomials of degree at most `degree`, lowest degree first.
pub fn monomials_up_to(num_vars: usize, degree: u32) -> Vec<Monomial> {
    (0..=degree)
        .flat_map(|d| monomials_of_degree(num_vars, d))
        .collect()
}

/// Index of `x_{i,j}` (0-based, either order) among the `n(n+1)/2` variables.
pub fn var_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    // row i of the upper triangle starts at Σ_{r<i} (n − r)
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    num_vars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(num_vars: usize) -> Self {
        Poly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: BigRational) -> Self {
        let mut p = Poly::zero(num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    pub fn var(num_vars: usize, v: usize) -> Self {
        let mut p = Poly::zero(num_vars);
        p.add_term(Monomial::var(num_vars, v), BigRational::one());
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        let v = self.coeff(&m) + c;
        if v.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, v);
        }
    }

    /// `Some(d)` when every term has degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.num_vars);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.num_vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| m.eval(point) * c)
            .fold(BigRational::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn variable_indexing() {
        let n = 4;
        let mut expected = 0;
        for i in 0..n {
            for j in i..n {
                assert_eq!(var_index(n, i, j), expected);
                assert_eq!(var_index(n, j, i), expected);
                expected += 1;
            }
        }
    }

    #[test]
    fn graded_lex_order() {
        let ms = monomials_of_degree(3, 2);
        let exps: Vec<Vec<u16>> = ms.iter().map(|m| m.0.clone()).collect();
        assert_eq!(
            exps,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        let mut sorted = ms.clone();
        sorted.sort();
        assert_eq!(sorted, ms);
        assert!(Monomial(vec![0, 0, 2]) < Monomial(vec![1, 0, 0]));
        assert_eq!(monomials_up_to(6, 2).len(), 28);
    }

    #[test]
    fn arithmetic() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&Monomial(vec![1, 1])), rat(2, 1));
        assert_eq!(sq.homogeneous_degree(), Some(2));
        assert_eq!(sq.eval(&[rat(1, 2), rat(1, 3)]), rat(25, 36));
        let diff = sq.add(&sq.scale(&rat(-1, 1)));
        assert!(diff.is_zero());
    }
}
