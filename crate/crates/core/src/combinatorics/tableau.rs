use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A Young tableau with positive integer entries, stored row by row.
///
/// Constructed tableaux are always semistandard: rows weakly increase,
/// columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// Built internally by insertion; invariants are the caller's.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Invalid(format!("tableau {:?}: {msg}", self.rows)));
        if self.rows.iter().any(|r| r.is_empty()) {
            return bad("empty row".into());
        }
        if self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths increase".into());
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.contains(&0) {
                return bad("entries must be positive".into());
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("row {i} decreases"));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return bad(format!("column strictness fails in row {i}"));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(&self.rows.iter().map(Vec::len).collect::<Vec<_>>())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Multiplicity of each value `1..=len`.
    pub fn content(&self, len: usize) -> Vec<usize> {
        let mut c = vec![0; len];
        for &v in self.rows.iter().flatten() {
            if v <= len {
                c[v - 1] += 1;
            }
        }
        c
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every semistandard tableau of shape `shape` with entries in `1..=max_entry`,
/// filled cell by cell in reading order.
pub fn semistandard_tableaux(shape: &Partition, max_entry: usize) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        max_entry: usize,
        out: &mut Vec<Tableau>,
    ) {
        if k == cells.len() {
            out.push(Tableau::from_rows_unchecked(grid.clone()));
            return;
        }
        let (i, j) = cells[k];
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        for v in left.max(above)..=max_entry {
            grid[i][j] = v;
            fill(k + 1, cells, grid, max_entry, out);
        }
        grid[i][j] = 0;
    }

    fill(0, &cells, &mut grid, max_entry, &mut out);
    out
}

/// Kostka number `K_{λ,μ}`: semistandard tableaux of shape `λ` and content `μ`.
///
/// `μ` is any vector of non-negative integers; its order does not matter.
/// Returns zero when `|μ| ≠ |λ|`. Counted by peeling horizontal strips for the
/// largest letter, so it never enumerates tableaux.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> BigUint {
    if mu.iter().sum::<usize>() != lambda.size() {
        return BigUint::zero();
    }
    kostka_rec(lambda.parts(), mu)
}

fn kostka_rec(shape: &[usize], mu: &[usize]) -> BigUint {
    let Some((&last, rest)) = mu.split_last() else {
        return if shape.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    // Inner shapes ν with λ/ν a horizontal strip of size `last`:
    // λ_{i+1} ≤ ν_i ≤ λ_i.
    let mut total = BigUint::zero();
    let mut inner = vec![0usize; shape.len()];
    strips(shape, 0, last, &mut inner, &mut |nu| {
        let trimmed: Vec<usize> = nu.iter().copied().take_while(|&p| p > 0).collect();
        total += kostka_rec(&trimmed, rest);
    });
    total
}

fn strips(
    shape: &[usize],
    row: usize,
    remaining: usize,
    inner: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if remaining == 0 {
            visit(inner);
        }
        return;
    }
    let lower = shape.get(row + 1).copied().unwrap_or(0);
    let upper = shape[row];
    for nu in lower..=upper {
        let removed = upper - nu;
        if removed > remaining {
            continue;
        }
        inner[row] = nu;
        strips(shape, row + 1, remaining - removed, inner, visit);
    }
}
