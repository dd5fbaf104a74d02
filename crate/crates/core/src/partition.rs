//! Integer partitions and the dominance order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers. Trailing zeros are
/// stripped on construction, so `(2,1,0)` and `(2,1)` are the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting tuples that are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary non-negative exponents into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(k-1, k-2, …, 1, 0)`.
    pub fn staircase(k: usize) -> Self {
        Partition::from_unsorted((0..k as u32).rev().collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// Conjugate partition (column lengths of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Dominance comparison; both partitions must have the same weight.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominates(self, other)
    }
}

/// Decreasing lexicographic order, a linear extension of dominance.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `true` iff every partial sum of `lhs` is at least the matching partial
/// sum of `rhs`.
pub fn dominates(lhs: &Partition, rhs: &Partition) -> Result<bool> {
    if lhs.weight() != rhs.weight() {
        return Err(Error::domain(format!(
            "dominance needs equal weights, got {lhs} and {rhs}"
        )));
    }
    let len = lhs.len().max(rhs.len());
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..len {
        a += lhs.part(i);
        b += rhs.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All partitions of `weight` with at most `max_parts` parts, in decreasing
/// lexicographic order.
pub fn partitions(weight: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(rem: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for first in (1..=cap.min(rem)).rev() {
            cur.push(first);
            rec(rem - first, first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weight, weight, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `weight` with at most `max_parts` parts that dominate `floor`.
pub fn enumerate_dominating(weight: u32, max_parts: usize, floor: &Partition) -> Result<Vec<Partition>> {
    check_weight(weight, floor)?;
    let mut out = Vec::new();
    for p in partitions(weight, max_parts) {
        if dominates(&p, floor)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Partitions of `weight` with at most `max_parts` parts dominated by `ceiling`.
pub fn enumerate_dominated(weight: u32, max_parts: usize, ceiling: &Partition) -> Result<Vec<Partition>> {
    check_weight(weight, ceiling)?;
    let mut out = Vec::new();
    for p in partitions(weight, max_parts) {
        if dominates(ceiling, &p)? {
            out.push(p);
        }
    }
    Ok(out)
}

fn check_weight(weight: u32, p: &Partition) -> Result<()> {
    if p.weight() != weight {
        return Err(Error::domain(format!(
            "weight {weight} does not match partition {p} of weight {}",
            p.weight()
        )));
    }
    Ok(())
}
