use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts`: weakly decreasing, trailing zeros dropped.
    /// Interior zeros are rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative integers into a partition.
    pub fn from_unsorted(values: &[usize]) -> Self {
        let mut parts: Vec<usize> = values.iter().copied().filter(|&v| v > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        Partition::from_unsorted(&[d])
    }

    /// The one-column partition `(1^d)`.
    pub fn column(d: usize) -> Self {
        Partition(vec![1; d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Zero-padded copy of length `n`; `None` when the partition is longer.
    pub fn padded(&self, n: usize) -> Option<Vec<usize>> {
        if self.len() > n {
            return None;
        }
        let mut v = self.0.clone();
        v.resize(n, 0);
        Some(v)
    }

    /// Column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let width = self.part(0);
        let cols = (0..width)
            .map(|j| self.0.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition(cols)
    }

    /// Hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let t = self.transpose();
        self.0
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row)
                    .map(|j| (row - j - 1) + (t.part(j) - i - 1) + 1)
                    .collect()
            })
            .collect()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|p| p * p).sum()
    }

    /// Running sums `λ_1, λ_1+λ_2, …` zero-padded to `len`.
    pub(crate) fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `d` with at most `max_parts` parts (`None` = unbounded),
/// in reverse lexicographic order: `(d)` first, `(1^d)` last.
pub fn enumerate_partitions(d: usize, max_parts: Option<usize>) -> Vec<Partition> {
    fn go(
        remaining: usize,
        max_part: usize,
        slots: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            current.push(p);
            go(remaining - p, p, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, max_parts.unwrap_or(d), &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `d` into exactly `parts` non-negative entries,
/// in reverse lexicographic order.
pub fn weak_compositions(d: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, slots: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            current.push(remaining);
            out.push(current.clone());
            current.pop();
            return;
        }
        for v in (0..=remaining).rev() {
            current.push(v);
            go(remaining - v, slots - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, parts, &mut Vec::new(), &mut out);
    out
}

/// `λ ≤ μ` in dominance order: every partial sum of `λ` is at most that of `μ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "dominance between {lambda} (size {}) and {mu} (size {})",
            lambda.size(),
            mu.size()
        )));
    }
    let len = lambda.len().max(mu.len());
    let (a, b) = (lambda.partial_sums(len), mu.partial_sums(len));
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `f^λ`: number of standard tableaux, by the hook length formula.
pub fn dim_sym_irrep(lambda: &Partition) -> BigUint {
    let hooks: BigUint = lambda
        .hook_lengths()
        .iter()
        .flatten()
        .fold(BigUint::one(), |acc, &h| acc * BigUint::from(h));
    factorial(lambda.size()) / hooks
}

/// Dimension of the irreducible `gl_n`-module of highest weight `λ`
/// by Weyl's product formula. Zero when `λ` has more than `n` parts.
pub fn dim_gl_irrep(n: usize, lambda: &Partition) -> BigUint {
    let Some(l) = lambda.padded(n) else {
        return BigUint::from(0u32);
    };
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigUint::from(l[i] - l[j] + j - i);
            den *= BigUint::from(j - i);
        }
    }
    num / den
}
