//! Exact rational linear algebra.
//!
//! Dense matrices over `BigRational`, subspaces in canonical reduced row
//! echelon form, an incremental echelon basis for span computations, and a
//! row-sparse matrix type for module generators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise, lowest terms.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("{s:?} is not a rational"));
    let s = s.trim();
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect();
        write!(f, "RationalMatrix{rows:?}")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Like [`from_rows`](Self::from_rows) but with an explicit column count,
    /// so an empty row list still has a width.
    pub fn from_rows_with_cols(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch(format!("rows must have length {cols}")));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .flat_map(|r| r.iter().map(|&x| rat(x)))
                .collect(),
        }
    }

    /// Elementary matrix unit `E_ij` of size `k`.
    pub fn unit(k: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(k, k);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Entries in row-major order; used to treat matrices as vectors.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}×{} times {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .sum()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::SizeMismatch("vstack of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    /// Zero rows are kept at the bottom.
    pub fn rref_with_pivots(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m.data[r * m.cols + j] * &inv;
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let pr = &m.data[r * m.cols + j];
                    if pr.is_zero() {
                        continue;
                    }
                    let v = &m.data[i * m.cols + j] - &f * pr;
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> RationalMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let vectors: Vec<Vec<Rational>> = (0..self.cols)
            .filter(|&c| is_pivot[c].is_none())
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r[(row, free)].clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.cols, vectors).expect("kernel vectors have the ambient width")
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::SizeMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &pivot;
                for j in c..m.cols {
                    let v = &m.data[i * m.cols + j] - &f * &m.data[c * m.cols + j];
                    m.data[i * m.cols + j] = v;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;

    fn mul(self, rhs: &RationalMatrix) -> RationalMatrix {
        self.try_mul(rhs).expect("matrix product dimensions")
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;

    fn add(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;

    fn sub(self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// A subspace of `Q^ambient`, stored as the non-zero rows of its RREF.
/// Equal subspaces have identical representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: RationalMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: RationalMatrix::identity(ambient),
        }
    }

    /// Span of the given vectors (need not be independent).
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let m = RationalMatrix::from_rows_with_cols(vectors, ambient)?;
        Ok(Self::row_space(&m))
    }

    /// Row space of `m`.
    pub fn row_space(m: &RationalMatrix) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let k = pivots.len();
        Subspace {
            ambient: m.cols,
            basis: RationalMatrix {
                rows: k,
                cols: m.cols,
                data: r.data[..k * m.cols].to_vec(),
            },
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    /// Canonical basis, as rows.
    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vecs()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| self.basis.row(i).iter().position(|x| !x.is_zero()).unwrap())
            .collect()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// `U ∩ W = (U^⊥ + W^⊥)^⊥`, with `^⊥` the kernel of the basis matrix.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let perp_u = self.basis.kernel_basis();
        let perp_w = other.basis.kernel_basis();
        Ok(perp_u.basis.vstack(&perp_w.basis)?.kernel_basis())
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (row, pc) in self.pivots().into_iter().enumerate() {
            if v[pc].is_zero() {
                continue;
            }
            let f = v[pc].clone();
            for (x, b) in v.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    /// Image under `g`, acting on column vectors: `v ↦ g v`.
    pub fn image(&self, g: &RationalMatrix) -> Result<Subspace> {
        if g.cols != self.ambient {
            return Err(Error::AmbientMismatch {
                left: g.cols,
                right: self.ambient,
            });
        }
        let imgs = (0..self.dim())
            .map(|i| g.apply(self.basis.row(i)))
            .collect();
        Subspace::from_vectors(g.rows, imgs)
    }
}

/// Echelon basis grown one vector at a time.
///
/// Each stored row is reduced against all earlier rows, so membership is a
/// single forward sweep.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (pc, row) in &self.rows {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[pc].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push((pc, v));
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let len = self.len;
        Subspace::from_vectors(len, self.rows.into_iter().map(|(_, v)| v).collect())
            .expect("rows have the basis width")
    }
}

/// Result of [`span_closure`].
#[derive(Debug, Clone)]
pub struct SpanClosure {
    pub dim: usize,
    /// Linearly independent elements spanning the closure.
    pub basis: Vec<RationalMatrix>,
    /// Dimension after seeding and after each round of products.
    pub trajectory: Vec<usize>,
}

/// Smallest product-closed span containing the identity and `generators`.
///
/// Each round multiplies the elements added in the previous round with every
/// basis element, in both orders; the span grows strictly until the fixed
/// point, so at most `k²` rounds run for `k × k` matrices.
pub fn span_closure<F>(generators: &[RationalMatrix], product: F) -> Result<SpanClosure>
where
    F: Fn(&RationalMatrix, &RationalMatrix) -> RationalMatrix,
{
    let k = generators.first().map_or(0, RationalMatrix::rows);
    if generators.iter().any(|g| g.rows != k || g.cols != k) {
        return Err(Error::SizeMismatch(
            "span_closure needs square matrices of one size".into(),
        ));
    }
    let mut echelon = EchelonBasis::new(k * k);
    let mut basis: Vec<RationalMatrix> = Vec::new();
    let mut frontier = Vec::new();
    for g in std::iter::once(RationalMatrix::identity(k)).chain(generators.iter().cloned()) {
        if echelon.insert(g.as_slice()) {
            basis.push(g.clone());
            frontier.push(g);
        }
    }
    let mut trajectory = vec![echelon.dim()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let existing = basis.clone();
        for a in &frontier {
            for b in &existing {
                for c in [product(a, b), product(b, a)] {
                    if echelon.insert(c.as_slice()) {
                        basis.push(c.clone());
                        next.push(c);
                    }
                }
            }
        }
        frontier = next;
        trajectory.push(echelon.dim());
    }
    Ok(SpanClosure {
        dim: echelon.dim(),
        basis,
        trajectory,
    })
}

/// Row-sparse rational matrix; rows map column index to a non-zero entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.add_entry(i, i, Rational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn add_entry(&mut self, i: usize, j: usize, v: Rational) {
        if v.is_zero() {
            return;
        }
        let slot = self.data[i].entry(j).or_insert_with(Rational::zero);
        *slot += v;
        if slot.is_zero() {
            self.data[i].remove(&j);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.data[i].iter().map(|(&j, v)| (j, v))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, v) in row {
                t.data[j].insert(i, v.clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        if c.is_zero() {
            return out;
        }
        for (i, row) in self.data.iter().enumerate() {
            for (&j, v) in row {
                out.data[i].insert(j, v * c);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "sparse {}×{} times {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (&k, a) in row {
                for (&j, b) in &other.data[k] {
                    out.add_entry(i, j, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch("sparse sum of different shapes".into()));
        }
        let mut out = self.clone();
        for (i, row) in other.data.iter().enumerate() {
            for (&j, v) in row {
                out.add_entry(i, j, v.clone());
            }
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&rat(-1)))
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(&j, _)| !v[j].is_zero())
                    .map(|(&j, a)| a * &v[j])
                    .sum()
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn to_dense(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.rows, self.cols);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, v) in row {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_dense(m: &RationalMatrix) -> Self {
        let mut s = Self::zeros(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                s.add_entry(i, j, m[(i, j)].clone());
            }
        }
        s
    }

    /// Dense submatrix on the given row and column indices.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> RationalMatrix {
        let mut pos = vec![None; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = Some(k);
        }
        let mut m = RationalMatrix::zeros(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (&j, v) in &self.data[r] {
                if let Some(cj) = pos[j] {
                    m[(ri, cj)] = v.clone();
                }
            }
        }
        m
    }
}
