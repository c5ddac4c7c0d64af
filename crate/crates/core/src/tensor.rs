//! Based models of `(C^n)^{⊗d}` with its `gl_n` and `S_d` actions, and of
//! `S^d(C^n ⊗ C^m)` with commuting `gl_n`, `gl_m` actions.
//!
//! Two different symmetric group actions appear here and are kept apart:
//!
//! * *place permutation* permutes tensor slots of a word (`S_d` in Schur
//!   duality);
//! * *value permutation* applies a permutation matrix of `GL_d` to every
//!   letter (the Weyl group acting on a zero weight space).

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::budget::{saturating_pow, Budget};
use crate::combinatorics::{
    binomial, dim_gl_irrep, dim_sym_irrep, enumerate_partitions, factorial, sym_character,
    CycleType, Partition,
};
use crate::error::{Error, Result};
use crate::linalg::{rat, Rational, RationalMatrix, SparseMatrix, Subspace};
use crate::report::{ReportBuilder, VerificationReport};
use crate::rsk::{CompositionMatrix, Permutation};

/// Basis label of a model.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum BasisLabel {
    /// A word in `[0, n)^d` (0-based letters).
    Word(Vec<usize>),
    /// The monomial `z^A = Π z_ij^{a_ij}`.
    Monomial(CompositionMatrix),
}

/// A finite-dimensional module given by basis labels and exact generator
/// matrices. `left` holds `E_ab` of `gl_n` at index `a·n + b`; `right` the
/// same for `gl_m` when the model has a second Lie algebra action;
/// `transpositions[i]` is the adjacent place transposition `s_{i+1}`.
#[derive(Debug, Clone)]
pub struct BasedModule {
    labels: Vec<BasisLabel>,
    n: usize,
    m: Option<usize>,
    d: usize,
    left: Vec<SparseMatrix>,
    right: Vec<SparseMatrix>,
    transpositions: Vec<SparseMatrix>,
}

impl BasedModule {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> Option<usize> {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    /// `E_ab` of the left `gl_n` action (0-based indices).
    pub fn left_generator(&self, a: usize, b: usize) -> &SparseMatrix {
        &self.left[a * self.n + b]
    }

    /// `E_ab` of the right-hand `gl_m` action, if present.
    pub fn right_generator(&self, a: usize, b: usize) -> Option<&SparseMatrix> {
        self.m.map(|m| &self.right[a * m + b])
    }

    pub fn transpositions(&self) -> &[SparseMatrix] {
        &self.transpositions
    }

    /// `h_n`-weight of basis vector `i`: letter counts, or row sums.
    pub fn left_weight(&self, i: usize) -> Vec<usize> {
        match &self.labels[i] {
            BasisLabel::Word(w) => {
                let mut c = vec![0; self.n];
                for &x in w {
                    c[x] += 1;
                }
                c
            }
            BasisLabel::Monomial(a) => a.row_sums(),
        }
    }

    /// `h_m`-weight of a monomial: its column sums.
    pub fn right_weight(&self, i: usize) -> Option<Vec<usize>> {
        match &self.labels[i] {
            BasisLabel::Word(_) => None,
            BasisLabel::Monomial(a) => Some(a.col_sums()),
        }
    }

    /// Appends `[E_ab, E_cd] = δ_bc E_ad − δ_da E_cb` for every quadruple on
    /// the chosen side.
    pub fn check_gl_relations(&self, right_side: bool, report: &mut ReportBuilder) -> Result<()> {
        let (rank, gens, side) = if right_side {
            match self.m {
                Some(m) => (m, &self.right, "right"),
                None => return Ok(()),
            }
        } else {
            (self.n, &self.left, "left")
        };
        let zero = SparseMatrix::zeros(self.dim(), self.dim());
        let g = |a: usize, b: usize| &gens[a * rank + b];
        let mut failures = 0usize;
        let mut checked = 0usize;
        for a in 0..rank {
            for b in 0..rank {
                for c in 0..rank {
                    for e in 0..rank {
                        let lhs = g(a, b).commutator(g(c, e))?;
                        let mut rhs = zero.clone();
                        if b == c {
                            rhs = rhs.try_add(g(a, e))?;
                        }
                        if e == a {
                            rhs = rhs.try_sub(g(c, b))?;
                        }
                        checked += 1;
                        if lhs != rhs {
                            failures += 1;
                        }
                    }
                }
            }
        }
        report.equal(
            format!("{side} gl_{rank} commutation relations violated (of {checked})"),
            failures,
            0,
        );
        Ok(())
    }

    /// Appends `s_i² = 1`, the braid relation and far commutation.
    pub fn check_coxeter_relations(&self, report: &mut ReportBuilder) -> Result<()> {
        let id = SparseMatrix::identity(self.dim());
        let s = &self.transpositions;
        let mut failures = 0usize;
        for i in 0..s.len() {
            if s[i].try_mul(&s[i])? != id {
                failures += 1;
            }
            for j in i + 1..s.len() {
                if j == i + 1 {
                    let l = s[i].try_mul(&s[j])?.try_mul(&s[i])?;
                    let r = s[j].try_mul(&s[i])?.try_mul(&s[j])?;
                    if l != r {
                        failures += 1;
                    }
                } else if !s[i].commutator(&s[j])?.is_zero() {
                    failures += 1;
                }
            }
        }
        report.equal("Coxeter relations violated", failures, 0);
        Ok(())
    }

    /// Appends that every left generator commutes with every generator of
    /// the other action (right `gl_m`, or place transpositions).
    pub fn check_actions_commute(&self, report: &mut ReportBuilder) -> Result<()> {
        let others: Vec<&SparseMatrix> = if self.m.is_some() {
            self.right.iter().collect()
        } else {
            self.transpositions.iter().collect()
        };
        let mut failures = 0usize;
        for l in &self.left {
            for o in &others {
                if !l.commutator(o)?.is_zero() {
                    failures += 1;
                }
            }
        }
        report.equal(
            format!(
                "commutators [left gl_{}, {}] that are non-zero (of {})",
                self.n,
                if self.m.is_some() {
                    "right gl_m"
                } else {
                    "S_d"
                },
                self.left.len() * others.len()
            ),
            failures,
            0,
        );
        Ok(())
    }
}

pub(crate) fn word_index(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &x| acc * n + x)
}

pub(crate) fn all_words(n: usize, d: usize) -> Vec<Vec<usize>> {
    let total = n.pow(d as u32);
    (0..total)
        .map(|mut idx| {
            let mut w = vec![0; d];
            for k in (0..d).rev() {
                w[k] = idx % n;
                idx /= n;
            }
            w
        })
        .collect()
}

/// `σ·w` for place permutation: `(σ·w)_{σ(k)} = w_k`, with `σ` 0-based images.
pub fn place_permute(sigma: &[usize], w: &[usize]) -> Vec<usize> {
    let mut out = vec![0; w.len()];
    for (k, &x) in w.iter().enumerate() {
        out[sigma[k]] = x;
    }
    out
}

/// Matrix of place permutation by `σ` (0-based images) on `(C^n)^{⊗d}`.
pub fn place_permutation_matrix(n: usize, sigma: &[usize]) -> SparseMatrix {
    let d = sigma.len();
    let words = all_words(n, d);
    let mut m = SparseMatrix::zeros(words.len(), words.len());
    for (i, w) in words.iter().enumerate() {
        m.add_entry(word_index(&place_permute(sigma, w), n), i, rat(1));
    }
    m
}

/// `(C^n)^{⊗d}`: words as basis, `gl_n` by the Leibniz rule across slots,
/// `S_d` by place permutation.
pub fn build_tensor_space(n: usize, d: usize, budget: &Budget) -> Result<BasedModule> {
    if n == 0 || d == 0 {
        return Err(Error::Invalid("tensor space needs n ≥ 1 and d ≥ 1".into()));
    }
    budget.check(format!("(C^{n})^⊗{d}"), saturating_pow(n, d))?;
    let words = all_words(n, d);
    let dim = words.len();
    let mut left = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = SparseMatrix::zeros(dim, dim);
            for (i, w) in words.iter().enumerate() {
                for k in 0..d {
                    if w[k] == b {
                        let mut v = w.clone();
                        v[k] = a;
                        e.add_entry(word_index(&v, n), i, rat(1));
                    }
                }
            }
            left.push(e);
        }
    }
    let transpositions = (0..d.saturating_sub(1))
        .map(|i| {
            let mut sigma: Vec<usize> = (0..d).collect();
            sigma.swap(i, i + 1);
            place_permutation_matrix(n, &sigma)
        })
        .collect();
    Ok(BasedModule {
        labels: words.into_iter().map(BasisLabel::Word).collect(),
        n,
        m: None,
        d,
        left,
        right: Vec::new(),
        transpositions,
    })
}

/// `S^d(C^n ⊗ C^m)` with monomials `z^A` as basis.
///
/// `gl_n` acts by row polarization `E_ab z^A = Σ_j a_bj z^{A + e_aj − e_bj}`
/// and `gl_m` by the analogous column polarization.
pub fn build_symmetric_model(n: usize, m: usize, d: usize, budget: &Budget) -> Result<BasedModule> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid("symmetric model needs n, m ≥ 1".into()));
    }
    let dim = binomial(n * m + d - 1, d);
    budget.check(
        format!("S^{d}(C^{n}⊗C^{m})"),
        dim.to_u128().unwrap_or(u128::MAX),
    )?;
    let labels = CompositionMatrix::enumerate(n, m, d);
    let index: HashMap<CompositionMatrix, usize> = labels
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, a)| (a, i))
        .collect();
    let size = labels.len();

    let polarize = |rows: bool, a: usize, b: usize| {
        let mut e = SparseMatrix::zeros(size, size);
        let other = if rows { m } else { n };
        for (col, lab) in labels.iter().enumerate() {
            for j in 0..other {
                let (src, dst) = if rows {
                    ((b, j), (a, j))
                } else {
                    ((j, b), (j, a))
                };
                let coeff = lab.get(src.0, src.1);
                if coeff == 0 {
                    continue;
                }
                let mut entries = lab.entries().to_vec();
                entries[src.0][src.1] -= 1;
                entries[dst.0][dst.1] += 1;
                let target = index[&CompositionMatrix::new(entries).unwrap()];
                e.add_entry(target, col, rat(coeff as i64));
            }
        }
        e
    };
    let left = (0..n * n).map(|k| polarize(true, k / n, k % n)).collect();
    let right = (0..m * m).map(|k| polarize(false, k / m, k % m)).collect();
    Ok(BasedModule {
        labels: labels.into_iter().map(BasisLabel::Monomial).collect(),
        n,
        m: Some(m),
        d,
        left,
        right,
        transpositions: Vec::new(),
    })
}

/// A vector with its weights; `right_weight` is empty for the tensor space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub left_weight: Vec<usize>,
    pub right_weight: Vec<usize>,
    /// Coefficients over the model's basis.
    pub vector: Vec<Rational>,
}

impl WeightVector {
    /// Whether every `E_aa` scales the vector by the stated weight entry.
    pub fn is_weight_vector_of(&self, model: &BasedModule) -> bool {
        let scaled = |e: &SparseMatrix, w: usize| {
            e.apply(&self.vector)
                == self
                    .vector
                    .iter()
                    .map(|c| c * rat(w as i64))
                    .collect::<Vec<_>>()
        };
        let left = (0..model.n).all(|a| scaled(model.left_generator(a, a), self.left_weight[a]));
        let right = match model.m {
            Some(m) => {
                (0..m).all(|a| scaled(model.right_generator(a, a).unwrap(), self.right_weight[a]))
            }
            None => true,
        };
        left && right
    }
}

/// Kernel of the raising operators `E_{a,a+1}` (both sides, where present),
/// computed weight space by weight space.
pub fn joint_highest_weight_vectors(model: &BasedModule) -> Result<Vec<WeightVector>> {
    let mut raising: Vec<SparseMatrix> = (0..model.n.saturating_sub(1))
        .map(|a| model.left_generator(a, a + 1).transpose())
        .collect();
    if let Some(m) = model.m {
        raising.extend((0..m - 1).map(|a| model.right_generator(a, a + 1).unwrap().transpose()));
    }
    let mut blocks: BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for i in 0..model.dim() {
        let key = (
            model.left_weight(i),
            model.right_weight(i).unwrap_or_default(),
        );
        blocks.entry(key).or_default().push(i);
    }
    let mut out = Vec::new();
    for ((lw, rw), cols) in blocks {
        // Rows of the restricted system: every (operator, target) pair hit.
        let mut row_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
        for (op_idx, op_t) in raising.iter().enumerate() {
            for (c, &col) in cols.iter().enumerate() {
                for (target, v) in op_t.row_entries(col) {
                    let next = row_of.len();
                    let r = *row_of.entry((op_idx, target)).or_insert(next);
                    entries.push((r, c, v.clone()));
                }
            }
        }
        let mut sys = RationalMatrix::zeros(row_of.len(), cols.len());
        for (r, c, v) in entries {
            sys[(r, c)] += v;
        }
        for k in sys.kernel_basis().basis_vectors() {
            let mut vector = vec![Rational::zero(); model.dim()];
            for (c, &col) in cols.iter().enumerate() {
                vector[col] = k[c].clone();
            }
            out.push(WeightVector {
                left_weight: lw.clone(),
                right_weight: rw.clone(),
                vector,
            });
        }
    }
    Ok(out)
}

/// Multiplicities in Schur duality for one `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurMultiplicity {
    /// Multiplicity of the Specht module `S_λ`, by the character inner product.
    pub specht: BigUint,
    /// Multiplicity of the `gl_n`-isotype `λ`, counted as highest weight vectors.
    pub gl: BigUint,
}

/// Multiplicities of `S_λ` and of the `gl_n`-isotype `λ` in `(C^n)^{⊗d}`,
/// read off the model: traces of place permutations, and kernels of the
/// raising operators on each dominant weight space.
pub fn schur_duality_multiplicities(
    model: &BasedModule,
) -> Result<BTreeMap<Partition, SchurMultiplicity>> {
    if model.m.is_some() {
        return Err(Error::Invalid(
            "Schur duality needs the tensor space model".into(),
        ));
    }
    let (n, d) = (model.n, model.d);
    let order = BigInt::from(factorial(d));
    let classes: Vec<(CycleType, BigInt)> = enumerate_partitions(d, None)
        .into_iter()
        .map(|rho| {
            let ct = CycleType(rho);
            let sigma = class_representative(&ct);
            let trace = place_permutation_matrix(n, &sigma).trace();
            (ct, trace.to_integer())
        })
        .collect();
    let hw = tensor_highest_weight_counts(model)?;
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(d, Some(n)) {
        let mut inner = BigInt::zero();
        for (ct, trace) in &classes {
            inner += BigInt::from(ct.class_size()) * trace * sym_character(&lambda, ct)?;
        }
        assert!((&inner % &order).is_zero(), "non-integral multiplicity");
        let specht = (inner / &order)
            .to_biguint()
            .expect("negative multiplicity");
        let key = lambda.padded(n).unwrap();
        let gl = BigUint::from(hw.get(&key).copied().unwrap_or(0));
        out.insert(lambda, SchurMultiplicity { specht, gl });
    }
    Ok(out)
}

fn tensor_highest_weight_counts(model: &BasedModule) -> Result<BTreeMap<Vec<usize>, usize>> {
    let mut counts = BTreeMap::new();
    for v in joint_highest_weight_vectors(model)? {
        *counts.entry(v.left_weight).or_insert(0) += 1;
    }
    Ok(counts)
}

/// A permutation of the given cycle type, as 0-based images, cycles laid out
/// on consecutive points.
pub fn class_representative(ct: &CycleType) -> Vec<usize> {
    let mut sigma = Vec::with_capacity(ct.size());
    let mut start = 0;
    for &len in ct.0.parts() {
        for k in 0..len {
            sigma.push(start + (k + 1) % len);
        }
        start += len;
    }
    sigma
}

/// The weight-`(·; 1,…,1)` part of `S^d(C^n ⊗ C^d)` matched with `(C^n)^{⊗d}`.
///
/// A monomial whose column sums are all one is a word: column `j` goes to the
/// letter given by the row of its single entry.
#[derive(Debug, Clone)]
pub struct ZeroWeightBridge {
    pub n: usize,
    pub d: usize,
    /// `monomials[w]` = index in the symmetric model of the monomial matched
    /// with the word of index `w`.
    pub monomials: Vec<usize>,
}

pub fn zero_weight_bridge(
    n: usize,
    d: usize,
    budget: &Budget,
) -> Result<(ZeroWeightBridge, BasedModule, BasedModule)> {
    let sym = build_symmetric_model(n, d, d, budget)?;
    let tensor = build_tensor_space(n, d, budget)?;
    let mut monomials = vec![usize::MAX; tensor.dim()];
    for (i, lab) in sym.labels.iter().enumerate() {
        let BasisLabel::Monomial(a) = lab else {
            unreachable!()
        };
        if a.col_sums().iter().all(|&c| c == 1) {
            let word: Vec<usize> = (0..d)
                .map(|j| (0..n).find(|&r| a.get(r, j) == 1).unwrap())
                .collect();
            let w = word_index(&word, n);
            if monomials[w] != usize::MAX {
                return Err(Error::Invalid(format!("word {word:?} matched twice")));
            }
            monomials[w] = i;
        }
    }
    if monomials.contains(&usize::MAX) {
        return Err(Error::Invalid(
            "zero weight monomials do not cover every word".into(),
        ));
    }
    Ok((ZeroWeightBridge { n, d, monomials }, sym, tensor))
}

/// Column permutation `z_ij ↦ z_{i,σ(j)}` on `S^d(C^n ⊗ C^m)`: the action of a
/// permutation matrix of `GL_m`.
pub fn column_permutation_matrix(model: &BasedModule, sigma: &[usize]) -> Result<SparseMatrix> {
    let m = model
        .m
        .ok_or_else(|| Error::Invalid("needs the symmetric model".into()))?;
    if sigma.len() != m {
        return Err(Error::SizeMismatch(format!(
            "permutation of {} points on gl_{m}",
            sigma.len()
        )));
    }
    let index: HashMap<&CompositionMatrix, usize> = model
        .labels
        .iter()
        .enumerate()
        .map(|(i, l)| match l {
            BasisLabel::Monomial(a) => (a, i),
            BasisLabel::Word(_) => unreachable!(),
        })
        .collect();
    let mut out = SparseMatrix::zeros(model.dim(), model.dim());
    for (i, lab) in model.labels.iter().enumerate() {
        let BasisLabel::Monomial(a) = lab else {
            unreachable!()
        };
        let mut entries = vec![vec![0; m]; a.rows()];
        for (r, row) in entries.iter_mut().enumerate() {
            for j in 0..m {
                row[sigma[j]] = a.get(r, j);
            }
        }
        out.add_entry(index[&CompositionMatrix::new(entries)?], i, rat(1));
    }
    Ok(out)
}

impl ZeroWeightBridge {
    /// Checks that the matched sub-basis is preserved by `gl_n` and by column
    /// permutations, and that both restricted actions equal the tensor space
    /// actions (`gl_n` and place transpositions) exactly.
    pub fn verify(&self, sym: &BasedModule, tensor: &BasedModule) -> Result<VerificationReport> {
        let mut report = ReportBuilder::new("zero-weight-bridge")
            .param("n", self.n)
            .param("d", self.d);
        report.equal("matched monomials", self.monomials.len(), tensor.dim());
        let mut sorted = self.monomials.clone();
        sorted.sort_unstable();
        sorted.dedup();
        report.equal("distinct matched monomials", sorted.len(), tensor.dim());

        let all: Vec<usize> = (0..sym.dim()).collect();
        let outside: Vec<usize> = all
            .iter()
            .copied()
            .filter(|i| sorted.binary_search(i).is_err())
            .collect();
        let compare = |op: &SparseMatrix, target: &SparseMatrix| -> (bool, bool) {
            let restricted = op.restrict(&self.monomials, &self.monomials);
            let leak = op.restrict(&outside, &self.monomials);
            (restricted == target.to_dense(), leak.is_zero())
        };
        for a in 0..self.n {
            for b in 0..self.n {
                let (same, closed) = compare(sym.left_generator(a, b), tensor.left_generator(a, b));
                report.holds(
                    format!(
                        "E_{}{} restricted equals tensor E_{}{}",
                        a + 1,
                        b + 1,
                        a + 1,
                        b + 1
                    ),
                    same,
                );
                report.holds(
                    format!("E_{}{} preserves the zero weight monomials", a + 1, b + 1),
                    closed,
                );
            }
        }
        for (i, s) in tensor.transpositions().iter().enumerate() {
            let mut sigma: Vec<usize> = (0..self.d).collect();
            sigma.swap(i, i + 1);
            let col = column_permutation_matrix(sym, &sigma)?;
            let (same, closed) = compare(&col, s);
            report.holds(
                format!(
                    "column swap ({} {}) equals place transposition s_{}",
                    i + 1,
                    i + 2,
                    i + 1
                ),
                same,
            );
            report.holds(
                format!(
                    "column swap ({} {}) preserves the zero weight monomials",
                    i + 1,
                    i + 2
                ),
                closed,
            );
        }
        Ok(report.finish())
    }
}

/// The `S_d` character on the `(1,…,1)` weight space of `V_λ ⊂ (C^d)^{⊗d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroWeightCharacter {
    pub lambda: Partition,
    pub dim: usize,
    pub character: BTreeMap<CycleType, BigInt>,
}

/// Young symmetrizer `c_λ = b_λ a_λ` (row symmetrizer first, then column
/// antisymmetrizer) for the row-reading tableau, as a map from permutations
/// (0-based images) to integer coefficients. Left unnormalized.
pub fn young_symmetrizer(lambda: &Partition) -> BTreeMap<Vec<usize>, i64> {
    let d = lambda.size();
    let mut row_of = Vec::with_capacity(d);
    let mut col_of = Vec::with_capacity(d);
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 0..len {
            row_of.push(i);
            col_of.push(j);
        }
    }
    let perms: Vec<Vec<usize>> = Permutation::all(d)
        .into_iter()
        .map(|p| p.word().iter().map(|x| x - 1).collect())
        .collect();
    let rows: Vec<&Vec<usize>> = perms
        .iter()
        .filter(|p| (0..d).all(|k| row_of[p[k]] == row_of[k]))
        .collect();
    let cols: Vec<&Vec<usize>> = perms
        .iter()
        .filter(|p| (0..d).all(|k| col_of[p[k]] == col_of[k]))
        .collect();
    let mut out: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    for q in &cols {
        let sign = CycleType::of_permutation(q).sign() as i64;
        for p in &rows {
            // (q∘p)(k) = q(p(k))
            let qp: Vec<usize> = (0..d).map(|k| q[p[k]]).collect();
            *out.entry(qp).or_insert(0) += sign;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Realizes `V_λ` as the image of the Young symmetrizer in `(C^d)^{⊗d}`,
/// restricts to the `(1,…,1)` weight space, and takes the trace of value
/// permutation at each cycle type.
pub fn weyl_group_action_on_zero_weight(
    lambda: &Partition,
    budget: &Budget,
) -> Result<ZeroWeightCharacter> {
    let d = lambda.size();
    if d == 0 {
        return Err(Error::Invalid("λ must be a partition of d ≥ 1".into()));
    }
    budget.check(format!("(C^{d})^⊗{d}"), saturating_pow(d, d))?;
    let c = young_symmetrizer(lambda);
    // Zero weight words are permutations of the letters; index them.
    let words: Vec<Vec<usize>> = Permutation::all(d)
        .into_iter()
        .map(|p| p.word().iter().map(|x| x - 1).collect())
        .collect();
    let pos: HashMap<&Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let images: Vec<Vec<Rational>> = words
        .iter()
        .map(|w| {
            let mut v = vec![Rational::zero(); words.len()];
            for (sigma, &coeff) in &c {
                v[pos[&place_permute(sigma, w)]] += rat(coeff);
            }
            v
        })
        .collect();
    let space = Subspace::from_vectors(words.len(), images)?;
    let pivots = space.pivots();
    let mut character = BTreeMap::new();
    for rho in enumerate_partitions(d, None) {
        let ct = CycleType(rho);
        let pi = class_representative(&ct);
        let mut trace = Rational::zero();
        for (row, &p) in space.basis_vectors().iter().zip(&pivots) {
            // value permutation: every letter x ↦ π(x)
            let mut moved = vec![Rational::zero(); words.len()];
            for (i, coeff) in row.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let w: Vec<usize> = words[i].iter().map(|&x| pi[x]).collect();
                moved[pos[&w]] += coeff;
            }
            debug_assert!(space.contains_vector(&moved));
            trace += &moved[p];
        }
        assert!(trace.is_integer());
        character.insert(ct, trace.to_integer());
    }
    Ok(ZeroWeightCharacter {
        lambda: lambda.clone(),
        dim: space.dim(),
        character,
    })
}

/// `n^d = Σ_{λ ∈ P^d_n} dim V^n_λ · f^λ`.
pub fn tensor_dimension_bookkeeping(n: usize, d: usize) -> (BigUint, BigUint) {
    let total = BigUint::from(n).pow(d as u32);
    let sum = enumerate_partitions(d, Some(n))
        .iter()
        .map(|l| dim_gl_irrep(n, l) * dim_sym_irrep(l))
        .sum();
    (total, sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn tensor_space_basics() {
        let t = build_tensor_space(2, 2, &b()).unwrap();
        assert_eq!(t.dim(), 4);
        // trace of the place action at ρ = (2) is n^{#cycles} = 2
        assert_eq!(t.transpositions()[0].trace(), rat(2));
        for n in 1..=3 {
            for d in 1..=4 {
                let t = build_tensor_space(n, d, &b()).unwrap();
                for rho in enumerate_partitions(d, None) {
                    let ct = CycleType(rho);
                    let tr = place_permutation_matrix(n, &class_representative(&ct)).trace();
                    assert_eq!(tr, rat((n as i64).pow(ct.cycles() as u32)));
                }
                let mut r = ReportBuilder::new("t");
                t.check_gl_relations(false, &mut r).unwrap();
                t.check_coxeter_relations(&mut r).unwrap();
                t.check_actions_commute(&mut r).unwrap();
                assert!(r.finish().passed());
            }
        }
        assert!(matches!(
            build_tensor_space(5, 7, &b()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn class_representatives_have_their_type() {
        for d in 1..=6 {
            for rho in enumerate_partitions(d, None) {
                let ct = CycleType(rho);
                assert_eq!(CycleType::of_permutation(&class_representative(&ct)), ct);
            }
        }
    }

    #[test]
    fn multiplicity_of_trivial_in_c2_squared() {
        // (trace(id)·1 + trace(s)·1)/2 = (4 + 2)/2
        let t = build_tensor_space(2, 2, &b()).unwrap();
        let mult = schur_duality_multiplicities(&t).unwrap();
        assert_eq!(mult[&p(&[2])].specht, BigUint::from(3u32));
        assert_eq!(mult[&p(&[2])].gl, BigUint::from(1u32));
        assert_eq!(mult[&p(&[1, 1])].specht, BigUint::from(1u32));
        assert_eq!(mult[&p(&[1, 1])].gl, BigUint::from(1u32));
    }

    #[test]
    fn schur_multiplicities_frozen() {
        // Character inner products computed by hand:
        // (3): (8 + 3·4 + 2·2)/6 = 4;  (2,1): (2·8 + 0 − 2·2)/6 = 2.
        let t = build_tensor_space(2, 3, &b()).unwrap();
        let mult = schur_duality_multiplicities(&t).unwrap();
        assert_eq!(mult.len(), 2);
        assert_eq!(
            (mult[&p(&[3])].specht.clone(), mult[&p(&[3])].gl.clone()),
            (4u32.into(), 1u32.into())
        );
        assert_eq!(
            (
                mult[&p(&[2, 1])].specht.clone(),
                mult[&p(&[2, 1])].gl.clone()
            ),
            (2u32.into(), 2u32.into())
        );
        for d in 1..=4 {
            let t = build_tensor_space(1, d, &b()).unwrap();
            let mult = schur_duality_multiplicities(&t).unwrap();
            assert_eq!(mult.len(), 1);
            assert_eq!(mult[&Partition::row(d)].specht, BigUint::from(1u32));
            assert_eq!(mult[&Partition::row(d)].gl, BigUint::from(1u32));
        }
    }

    #[test]
    fn bookkeeping() {
        for n in 1..=3 {
            for d in 1..=5 {
                let (l, r) = tensor_dimension_bookkeeping(n, d);
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn symmetric_model_basics() {
        let s = build_symmetric_model(2, 2, 2, &b()).unwrap();
        assert_eq!(s.dim(), 10);
        let s = build_symmetric_model(3, 1, 4, &b()).unwrap();
        assert_eq!(BigUint::from(s.dim()), binomial(3 + 4 - 1, 4));
        let hw = joint_highest_weight_vectors(&s).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(
            (hw[0].left_weight.clone(), hw[0].right_weight.clone()),
            (vec![4, 0, 0], vec![4])
        );
        let s = build_symmetric_model(3, 2, 1, &b()).unwrap();
        assert_eq!(s.dim(), 6);
        let hw = joint_highest_weight_vectors(&s).unwrap();
        assert_eq!(hw.len(), 1);
        assert_eq!(
            (hw[0].left_weight.clone(), hw[0].right_weight.clone()),
            (vec![1, 0, 0], vec![1, 0])
        );
    }

    #[test]
    fn weights_are_margins() {
        let s = build_symmetric_model(2, 3, 3, &b()).unwrap();
        for i in 0..s.dim() {
            let BasisLabel::Monomial(a) = &s.labels()[i] else {
                panic!()
            };
            for k in 0..2 {
                let e = s.left_generator(k, k);
                assert_eq!(e.get(i, i), rat(a.row_sums()[k] as i64));
                assert!(e.row_entries(i).all(|(j, _)| j == i));
            }
            for k in 0..3 {
                let e = s.right_generator(k, k).unwrap();
                assert_eq!(e.get(i, i), rat(a.col_sums()[k] as i64));
            }
        }
    }

    #[test]
    fn highest_weight_vectors_2x2() {
        let s = build_symmetric_model(2, 2, 2, &b()).unwrap();
        let hw = joint_highest_weight_vectors(&s).unwrap();
        assert_eq!(hw.len(), 2);
        let idx = |rows: &[&[usize]]| {
            let a = CompositionMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap();
            s.labels()
                .iter()
                .position(|l| *l == BasisLabel::Monomial(a.clone()))
                .unwrap()
        };
        let top = hw.iter().find(|v| v.left_weight == vec![2, 0]).unwrap();
        assert_eq!(top.right_weight, vec![2, 0]);
        let z11sq = idx(&[&[2, 0], &[0, 0]]);
        assert!(top
            .vector
            .iter()
            .enumerate()
            .all(|(i, c)| (i == z11sq) != c.is_zero()));

        let det = hw.iter().find(|v| v.left_weight == vec![1, 1]).unwrap();
        assert_eq!(det.right_weight, vec![1, 1]);
        let (a, bb) = (idx(&[&[1, 0], &[0, 1]]), idx(&[&[0, 1], &[1, 0]]));
        assert_eq!(&det.vector[a] + &det.vector[bb], rat(0));
        assert!(!det.vector[a].is_zero());
        assert_eq!(det.vector.iter().filter(|c| !c.is_zero()).count(), 2);
    }

    #[test]
    fn highest_weight_multiset() {
        for n in 1..=3 {
            for m in 1..=3 {
                for d in 1..=4 {
                    let s = build_symmetric_model(n, m, d, &b()).unwrap();
                    let mut got: Vec<(Vec<usize>, Vec<usize>)> = joint_highest_weight_vectors(&s)
                        .unwrap()
                        .into_iter()
                        .map(|v| (v.left_weight, v.right_weight))
                        .collect();
                    got.sort();
                    for v in joint_highest_weight_vectors(&s).unwrap() {
                        assert!(v.is_weight_vector_of(&s));
                    }
                    let mut expected: Vec<(Vec<usize>, Vec<usize>)> =
                        enumerate_partitions(d, Some(n.min(m)))
                            .iter()
                            .map(|l| (l.padded(n).unwrap(), l.padded(m).unwrap()))
                            .collect();
                    expected.sort();
                    assert_eq!(got, expected, "n={n} m={m} d={d}");
                }
            }
        }
    }

    #[test]
    fn symmetric_actions_commute() {
        for (n, m, d) in [(2, 2, 2), (2, 3, 3), (3, 3, 2)] {
            let s = build_symmetric_model(n, m, d, &b()).unwrap();
            let mut r = ReportBuilder::new("s");
            s.check_gl_relations(false, &mut r).unwrap();
            s.check_gl_relations(true, &mut r).unwrap();
            s.check_actions_commute(&mut r).unwrap();
            assert!(r.finish().passed());
        }
    }

    #[test]
    fn bridge_small_cases() {
        let (bridge, sym, tensor) = zero_weight_bridge(2, 2, &b()).unwrap();
        assert_eq!(bridge.monomials.len(), 4);
        assert!(bridge.verify(&sym, &tensor).unwrap().passed());
        // E_12 matches exactly under the bijection
        let e12 = sym
            .left_generator(0, 1)
            .restrict(&bridge.monomials, &bridge.monomials);
        assert_eq!(e12, tensor.left_generator(0, 1).to_dense());

        let (bridge, sym, tensor) = zero_weight_bridge(3, 1, &b()).unwrap();
        assert_eq!(bridge.monomials.len(), 3);
        for (w, &i) in bridge.monomials.iter().enumerate() {
            let BasisLabel::Monomial(a) = &sym.labels()[i] else {
                panic!()
            };
            assert_eq!(a.get(w, 0), 1);
        }
        assert!(bridge.verify(&sym, &tensor).unwrap().passed());
    }

    #[test]
    fn young_symmetrizer_images() {
        for d in 1..=4 {
            let triv = weyl_group_action_on_zero_weight(&Partition::row(d), &b()).unwrap();
            assert_eq!(triv.dim, 1);
            assert!(triv.character.values().all(|v| *v == BigInt::from(1)));
            let sign = weyl_group_action_on_zero_weight(&Partition::column(d), &b()).unwrap();
            assert_eq!(sign.dim, 1);
            for (ct, v) in &sign.character {
                assert_eq!(*v, BigInt::from(ct.sign()));
            }
        }
        let w = weyl_group_action_on_zero_weight(&p(&[2, 1]), &b()).unwrap();
        assert_eq!(w.dim, 2);
        let values: Vec<i64> = [&[1, 1, 1][..], &[2, 1], &[3]]
            .iter()
            .map(|c| {
                w.character[&CycleType::new(c.to_vec()).unwrap()]
                    .to_i64()
                    .unwrap()
            })
            .collect();
        assert_eq!(values, vec![2, 0, -1]);
    }

    #[test]
    fn young_symmetrizer_is_quasi_idempotent() {
        // c_λ² = (d!/f^λ) c_λ in the group algebra.
        for d in 1..=4 {
            for l in enumerate_partitions(d, None) {
                let c = young_symmetrizer(&l);
                let mut sq: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for (x, a) in &c {
                    for (y, bb) in &c {
                        let xy: Vec<usize> = (0..d).map(|k| x[y[k]]).collect();
                        *sq.entry(xy).or_insert(0) += a * bb;
                    }
                }
                sq.retain(|_, v| *v != 0);
                let scale = ratio(
                    factorial(d).to_i64().unwrap(),
                    dim_sym_irrep(&l).to_i64().unwrap(),
                );
                assert!(scale.is_integer());
                let s = scale.to_integer().to_i64().unwrap();
                let expected: BTreeMap<Vec<usize>, i64> =
                    c.iter().map(|(k, v)| (k.clone(), v * s)).collect();
                assert_eq!(sq, expected, "λ={l}");
            }
        }
    }
}
