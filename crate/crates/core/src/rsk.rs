//! RSK and Robinson–Schensted.
//!
//! The biword of a matrix lists the pair `(i, j)` exactly `a_ij` times,
//! sorted lexicographically. Bottom letters `j` are row-inserted into `P`,
//! top letters `i` recorded in `Q`, so `content(P)` is the column-sum vector
//! and `content(Q)` the row-sum vector.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Partition, Tableau};
use crate::error::{Error, Result};

/// An `n × m` matrix of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CompositionMatrix {
    entries: Vec<Vec<usize>>,
}

impl CompositionMatrix {
    /// Validates a rectangular, non-empty matrix.
    pub fn new(entries: Vec<Vec<usize>>) -> Result<Self> {
        let cols = entries.first().map_or(0, Vec::len);
        if entries.is_empty() || cols == 0 {
            return Err(Error::Invalid(
                "matrix needs at least one row and column".into(),
            ));
        }
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid(format!(
                "matrix {entries:?} is not rectangular"
            )));
        }
        Ok(CompositionMatrix { entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0);
        CompositionMatrix {
            entries: vec![vec![0; cols]; rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i][j]
    }

    pub(crate) fn add_to(&mut self, i: usize, j: usize, by: usize) {
        self.entries[i][j] += by;
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.cols())
            .map(|j| self.entries.iter().map(|r| r[j]).sum())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        CompositionMatrix {
            entries: (0..self.cols())
                .map(|j| self.entries.iter().map(|r| r[j]).collect())
                .collect(),
        }
    }

    /// The invariant matrix of a pair of words over `[0, rows)` and
    /// `[0, cols)`: `a_ij = #{k : u_k = i, v_k = j}`.
    pub fn of_word_pair(u: &[usize], v: &[usize], rows: usize, cols: usize) -> Self {
        let mut a = CompositionMatrix::zeros(rows, cols);
        for (&i, &j) in u.iter().zip(v) {
            a.entries[i][j] += 1;
        }
        a
    }

    /// All `rows × cols` matrices with entry sum `d`, flattened row-major in
    /// reverse lexicographic order.
    pub fn enumerate(rows: usize, cols: usize, d: usize) -> Vec<CompositionMatrix> {
        crate::combinatorics::weak_compositions(d, rows * cols)
            .into_iter()
            .map(|flat| CompositionMatrix {
                entries: flat.chunks(cols).map(<[usize]>::to_vec).collect(),
            })
            .collect()
    }

    /// The lexicographically sorted biword, 1-based.
    pub fn biword(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.total());
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                out.extend(std::iter::repeat_n((i + 1, j + 1), a));
            }
        }
        out
    }
}

impl TryFrom<Vec<Vec<usize>>> for CompositionMatrix {
    type Error = Error;

    fn try_from(entries: Vec<Vec<usize>>) -> Result<Self> {
        CompositionMatrix::new(entries)
    }
}

impl From<CompositionMatrix> for Vec<Vec<usize>> {
    fn from(a: CompositionMatrix) -> Self {
        a.entries
    }
}

impl fmt::Display for CompositionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(","))?;
        }
        write!(f, "]")
    }
}

/// A permutation of `{1..d}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let d = word.len();
        let mut seen = vec![false; d];
        for &w in &word {
            if w == 0 || w > d || seen[w - 1] {
                return Err(Error::Invalid(format!(
                    "{word:?} is not a permutation of 1..{d}"
                )));
            }
            seen[w - 1] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(d: usize) -> Self {
        Permutation((1..=d).collect())
    }

    pub fn reversal(d: usize) -> Self {
        Permutation((1..=d).rev().collect())
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            inv[w - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// All permutations of `{1..d}` in lexicographic order.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(d);
        let mut used = vec![false; d];
        fn go(d: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == d {
                out.push(Permutation(current.clone()));
                return;
            }
            for v in 0..d {
                if !used[v] {
                    used[v] = true;
                    current.push(v + 1);
                    go(d, current, used, out);
                    current.pop();
                    used[v] = false;
                }
            }
        }
        go(d, &mut current, &mut used, &mut out);
        out
    }
}

/// Row-inserts `x`, returning the row index of the new cell.
fn row_insert(rows: &mut Vec<Vec<usize>>, mut x: usize) -> usize {
    for (r, row) in rows.iter_mut().enumerate() {
        match row.iter().position(|&y| y > x) {
            Some(pos) => x = std::mem::replace(&mut row[pos], x),
            None => {
                row.push(x);
                return r;
            }
        }
    }
    rows.push(vec![x]);
    rows.len() - 1
}

/// RSK: matrix to a pair of semistandard tableaux of equal shape.
pub fn rsk(a: &CompositionMatrix) -> (Tableau, Tableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (top, bottom) in a.biword() {
        let r = row_insert(&mut p, bottom);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(top);
    }
    assert!(
        p.len() <= a.rows().min(a.cols()),
        "RSK shape of {a} has {} rows, more than min(n,m)",
        p.len()
    );
    (
        Tableau::from_rows_unchecked(p),
        Tableau::from_rows_unchecked(q),
    )
}

/// Inverse RSK with dimensions read off the entries: `n = max(Q)`, `m = max(P)`.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<CompositionMatrix> {
    inverse_rsk_with_dims(p, q, q.max_entry().max(1), p.max_entry().max(1))
}

/// Inverse RSK into an `rows × cols` matrix.
pub fn inverse_rsk_with_dims(
    p: &Tableau,
    q: &Tableau,
    rows: usize,
    cols: usize,
) -> Result<CompositionMatrix> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(format!(
            "P has shape {}, Q has shape {}",
            p.shape(),
            q.shape()
        )));
    }
    if q.max_entry() > rows || p.max_entry() > cols {
        return Err(Error::Invalid(format!(
            "entries exceed a {rows}×{cols} matrix (max P {}, max Q {})",
            p.max_entry(),
            q.max_entry()
        )));
    }
    let mut p: Vec<Vec<usize>> = p.rows().to_vec();
    let mut q: Vec<Vec<usize>> = q.rows().to_vec();
    let mut a = CompositionMatrix::zeros(rows, cols);
    while !q.is_empty() {
        // Largest letter of Q; among equal letters, the rightmost cell.
        let (r, top) = q
            .iter()
            .enumerate()
            .map(|(r, row)| (r, *row.last().unwrap()))
            .max_by(|x, y| x.1.cmp(&y.1).then(q[x.0].len().cmp(&q[y.0].len())))
            .unwrap();
        q[r].pop();
        let mut y = p[r].pop().unwrap();
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            let pos = row.iter().rposition(|&v| v < y).unwrap();
            y = std::mem::replace(&mut row[pos], y);
        }
        a.add_to(top - 1, y - 1, 1);
    }
    Ok(a)
}

/// Shape of the Robinson–Schensted insertion tableau of `w`.
pub fn rs_shape(w: &Permutation) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in w.word() {
        row_insert(&mut rows, x);
    }
    Partition::from_unsorted(&rows.iter().map(Vec::len).collect::<Vec<_>>())
}

/// Longest strictly decreasing subsequence, by the quadratic recurrence.
pub fn lds(w: &Permutation) -> usize {
    let word = w.word();
    let mut best = vec![1usize; word.len()];
    for i in 0..word.len() {
        for j in 0..i {
            if word[j] > word[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Longest increasing subsequence, by the same recurrence.
pub fn lis(w: &Permutation) -> usize {
    let word = w.word();
    let mut best = vec![1usize; word.len()];
    for i in 0..word.len() {
        for j in 0..i {
            if word[j] < word[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{dim_sym_irrep, enumerate_partitions, kostka};
    use num_bigint::BigUint;

    fn m(rows: &[&[usize]]) -> CompositionMatrix {
        CompositionMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rsk_examples() {
        let (p, q) = rsk(&m(&[&[3, 0], &[0, 0]]));
        assert_eq!(p, t(&[&[1, 1, 1]]));
        assert_eq!(q, t(&[&[1, 1, 1]]));

        let (p, q) = rsk(&m(&[&[1, 0], &[0, 1]]));
        assert_eq!((p.clone(), q.clone()), (t(&[&[1, 2]]), t(&[&[1, 2]])));
        assert_eq!(p.shape(), Partition::row(2));

        let (p, q) = rsk(&m(&[&[0, 1], &[1, 0]]));
        assert_eq!((p.clone(), q), (t(&[&[1], &[2]]), t(&[&[1], &[2]])));
        assert_eq!(p.shape(), Partition::column(2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            inverse_rsk(&t(&[&[1, 2]]), &t(&[&[1, 2]])).unwrap(),
            m(&[&[1, 0], &[0, 1]])
        );
        assert_eq!(
            inverse_rsk(&t(&[&[1], &[2]]), &t(&[&[1], &[2]])).unwrap(),
            m(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(inverse_rsk(&t(&[&[1]]), &t(&[&[1]])).unwrap(), m(&[&[1]]));
        assert!(matches!(
            inverse_rsk(&t(&[&[1, 2]]), &t(&[&[1], &[2]])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn roundtrip_exhaustive() {
        for rows in 1..=3 {
            for cols in 1..=3 {
                for d in 0..=5 {
                    for a in CompositionMatrix::enumerate(rows, cols, d) {
                        let (p, q) = rsk(&a);
                        assert_eq!(p.shape(), q.shape());
                        assert_eq!(p.content(cols), a.col_sums());
                        assert_eq!(q.content(rows), a.row_sums());
                        assert!(Tableau::new(p.rows().to_vec()).is_ok());
                        assert!(Tableau::new(q.rows().to_vec()).is_ok());
                        assert_eq!(inverse_rsk_with_dims(&p, &q, rows, cols).unwrap(), a);
                    }
                }
            }
        }
    }

    #[test]
    fn margin_counts_match_kostka() {
        for d in 0..=5 {
            for a_row in crate::combinatorics::weak_compositions(d, 2) {
                for a_col in crate::combinatorics::weak_compositions(d, 3) {
                    let count = CompositionMatrix::enumerate(2, 3, d)
                        .into_iter()
                        .filter(|a| a.row_sums() == a_row && a.col_sums() == a_col)
                        .count();
                    let sum: BigUint = enumerate_partitions(d, None)
                        .iter()
                        .map(|l| kostka(l, &a_row) * kostka(l, &a_col))
                        .sum();
                    assert_eq!(BigUint::from(count), sum);
                }
            }
        }
    }

    #[test]
    fn rs_examples() {
        for d in 1..=6 {
            assert_eq!(rs_shape(&Permutation::identity(d)), Partition::row(d));
            assert_eq!(rs_shape(&Permutation::reversal(d)), Partition::column(d));
            assert_eq!(lds(&Permutation::identity(d)), 1);
        }
        let w = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(rs_shape(&w), Partition::new(vec![2, 1]).unwrap());
        assert_eq!(lds(&w), 2);
        assert_eq!(lds(&Permutation::reversal(4)), 4);
        assert!(Permutation::new(vec![1, 1]).is_err());
    }

    #[test]
    fn shape_statistics() {
        for d in 1..=6 {
            for w in Permutation::all(d) {
                let shape = rs_shape(&w);
                assert_eq!(shape.part(0), lis(&w));
                assert_eq!(shape.len(), lds(&w));
                assert_eq!(rs_shape(&w.inverse()), shape);
            }
        }
    }

    #[test]
    fn shape_distribution_is_plancherel() {
        for d in 1..=6 {
            for l in enumerate_partitions(d, None) {
                let count = Permutation::all(d)
                    .iter()
                    .filter(|w| rs_shape(w) == l)
                    .count();
                assert_eq!(BigUint::from(count), dim_sym_irrep(&l).pow(2));
            }
        }
    }
}
