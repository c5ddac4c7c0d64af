//! The Schur algebra `End_{S_d}((C^n)^{⊗d})` with its word-pair-orbit basis,
//! the equivariant maps `(C^m)^{⊗d} → (C^n)^{⊗d}` truncated by isotypic
//! support, and their composition.
//!
//! Every map here is recorded in *orbit coordinates*: the coefficients over
//! `ξ_A`, where `ξ_A` sends a word `v` to the sum of the words `u` with
//! `orbit(u, v) = A`. An equivariant map is constant on orbits of word pairs,
//! so this loses nothing, and its value at `(u, v)` is the coordinate at
//! `orbit(u, v)`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::budget::{saturating_pow, Budget};
use crate::combinatorics::{
    binomial, dim_gl_irrep, dim_sym_irrep, enumerate_partitions, factorial, sym_character,
    CycleType, Partition,
};
use crate::error::{Error, Result};
use crate::linalg::{rat, span_closure, Rational, RationalMatrix, SparseMatrix, Subspace};
use crate::report::{ReportBuilder, VerificationReport, SCHEMA_VERSION};
use crate::rsk::{CompositionMatrix, Permutation};
use crate::tensor::{all_words, build_tensor_space, place_permute, word_index};

/// The `rows × cols` matrices with entry sum `d`, indexing orbits of
/// `S_d` on `[0, rows)^d × [0, cols)^d`.
#[derive(Debug, Clone)]
pub struct OrbitBasis {
    rows: usize,
    cols: usize,
    d: usize,
    labels: Vec<CompositionMatrix>,
    index: HashMap<CompositionMatrix, usize>,
}

impl OrbitBasis {
    pub fn new(rows: usize, cols: usize, d: usize) -> Self {
        let labels = CompositionMatrix::enumerate(rows, cols, d);
        let index = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, a)| (a, i))
            .collect();
        OrbitBasis {
            rows,
            cols,
            d,
            labels,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[CompositionMatrix] {
        &self.labels
    }

    pub fn index_of(&self, a: &CompositionMatrix) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Index of `orbit(u, v)`.
    pub fn orbit_of(&self, u: &[usize], v: &[usize]) -> usize {
        self.index[&CompositionMatrix::of_word_pair(u, v, self.rows, self.cols)]
    }

    /// The sorted word pair of orbit `i` (0-based letters).
    pub fn representative(&self, i: usize) -> (Vec<usize>, Vec<usize>) {
        self.labels[i]
            .biword()
            .into_iter()
            .map(|(a, b)| (a - 1, b - 1))
            .unzip()
    }

    /// Orbits grouped by margins `(row sums, column sums)`; the place action
    /// preserves both, so linear maps built from it are block diagonal.
    fn margin_blocks(&self) -> BTreeMap<(Vec<usize>, Vec<usize>), Vec<usize>> {
        let mut blocks: BTreeMap<_, Vec<usize>> = BTreeMap::new();
        for (i, a) in self.labels.iter().enumerate() {
            blocks
                .entry((a.row_sums(), a.col_sums()))
                .or_default()
                .push(i);
        }
        blocks
    }

    /// `ξ_A` as a `rows^d × cols^d` matrix on words.
    pub fn element_matrix(&self, i: usize) -> SparseMatrix {
        let mut out =
            SparseMatrix::zeros(self.rows.pow(self.d as u32), self.cols.pow(self.d as u32));
        let a = &self.labels[i];
        for u in all_words(self.rows, self.d) {
            for v in all_words(self.cols, self.d) {
                if CompositionMatrix::of_word_pair(&u, &v, self.rows, self.cols) == *a {
                    out.add_entry(word_index(&u, self.rows), word_index(&v, self.cols), rat(1));
                }
            }
        }
        out
    }
}

/// Structure constants of `ξ_A ∘ ξ_B` for `A: n × k`, `B: k × m`:
/// `g_{AB}^C = #{w ∈ [0,k)^d : orbit(u_C, w) = A, orbit(w, v_C) = B}`.
#[derive(Debug, Clone)]
pub struct CompositionTable {
    left: OrbitBasis,
    right: OrbitBasis,
    target: OrbitBasis,
    entries: HashMap<(usize, usize), Vec<(usize, u64)>>,
}

impl CompositionTable {
    pub fn new(n: usize, k: usize, m: usize, d: usize, budget: &Budget) -> Result<Self> {
        let left = OrbitBasis::new(n, k, d);
        let right = OrbitBasis::new(k, m, d);
        let target = OrbitBasis::new(n, m, d);
        budget.check(format!("(C^{k})^⊗{d}"), saturating_pow(k, d))?;
        let middle = all_words(k, d);
        let mut entries: HashMap<(usize, usize), Vec<(usize, u64)>> = HashMap::new();
        for c in 0..target.len() {
            let (u, v) = target.representative(c);
            let mut counts: HashMap<(usize, usize), u64> = HashMap::new();
            for w in &middle {
                *counts
                    .entry((left.orbit_of(&u, w), right.orbit_of(w, &v)))
                    .or_insert(0) += 1;
            }
            for (key, g) in counts {
                entries.entry(key).or_default().push((c, g));
            }
        }
        for list in entries.values_mut() {
            list.sort_unstable();
        }
        Ok(CompositionTable {
            left,
            right,
            target,
            entries,
        })
    }

    pub fn target(&self) -> &OrbitBasis {
        &self.target
    }

    /// Expansion of `ξ_A ∘ ξ_B` over the target basis.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, u64)] {
        self.entries.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> u64 {
        self.product(a, b)
            .binary_search_by_key(&c, |&(k, _)| k)
            .map_or(0, |pos| self.product(a, b)[pos].1)
    }

    /// Composition of two maps in orbit coordinates.
    pub fn compose(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.left.len() || y.len() != self.right.len() {
            return Err(Error::SizeMismatch(format!(
                "composition expects {} and {} coordinates, got {} and {}",
                self.left.len(),
                self.right.len(),
                x.len(),
                y.len()
            )));
        }
        let mut out = vec![Rational::zero(); self.target.len()];
        let ys: Vec<(usize, &Rational)> =
            y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for &(b, yb) in &ys {
                let xy = xa * yb;
                for &(c, g) in self.product(a, b) {
                    out[c] += &xy * rat(g as i64);
                }
            }
        }
        Ok(out)
    }
}

/// Class functions on `S_d` acting on the source side of equivariant maps,
/// in orbit coordinates: `(X·Σ_w f(w) w)` at orbit `B` is
/// `Σ_w f(w) · x_{orbit(u_B, w·v_B)}`.
#[derive(Debug, Clone)]
pub struct IsotypicProjector {
    partitions: Vec<Partition>,
    /// `weights[λ][class] = f^λ χ^λ(class) / d!`, the coefficients of `e_λ`.
    weights: Vec<Vec<Rational>>,
    /// `shifted[B][w]` = orbit of `(u_B, w·v_B)`.
    shifted: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl IsotypicProjector {
    pub fn new(orbits: &OrbitBasis) -> Result<Self> {
        let d = orbits.d;
        let partitions = enumerate_partitions(d, None);
        let classes: Vec<CycleType> = partitions.iter().cloned().map(CycleType).collect();
        let order = Rational::from_integer(factorial(d).into());
        let mut weights = Vec::with_capacity(partitions.len());
        for l in &partitions {
            let f = Rational::from_integer(dim_sym_irrep(l).into());
            let row = classes
                .iter()
                .map(|c| Ok(&f * Rational::from_integer(sym_character(l, c)?) / &order))
                .collect::<Result<Vec<_>>>()?;
            weights.push(row);
        }
        let perms: Vec<Vec<usize>> = Permutation::all(d)
            .into_iter()
            .map(|p| p.word().iter().map(|x| x - 1).collect())
            .collect();
        let class_of = perms
            .iter()
            .map(|p| {
                let ct = CycleType::of_permutation(p);
                classes
                    .iter()
                    .position(|c| *c == ct)
                    .expect("every cycle type is a class")
            })
            .collect();
        let shifted = (0..orbits.len())
            .map(|b| {
                let (u, v) = orbits.representative(b);
                perms
                    .iter()
                    .map(|w| orbits.orbit_of(&u, &place_permute(w, &v)))
                    .collect()
            })
            .collect();
        Ok(IsotypicProjector {
            partitions,
            weights,
            shifted,
            class_of,
        })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    fn class_weights(&self, keep: &dyn Fn(&Partition) -> bool) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.weights[0].len()];
        for (l, row) in self.partitions.iter().zip(&self.weights) {
            if keep(l) {
                for (o, w) in out.iter_mut().zip(row) {
                    *o += w;
                }
            }
        }
        out
    }

    fn apply_weights(&self, class_weights: &[Rational], x: &[Rational]) -> Vec<Rational> {
        self.shifted
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (w, &a) in row.iter().enumerate() {
                    let c = &class_weights[self.class_of[w]];
                    if !c.is_zero() && !x[a].is_zero() {
                        acc += c * &x[a];
                    }
                }
                acc
            })
            .collect()
    }

    /// `x · Σ_{length(λ) ≤ r} e_λ`.
    pub fn truncate(&self, r: usize, x: &[Rational]) -> Vec<Rational> {
        self.apply_weights(&self.class_weights(&|l| l.len() <= r), x)
    }

    /// The `λ` with `x · e_λ ≠ 0`.
    pub fn support(&self, x: &[Rational]) -> Vec<Partition> {
        self.partitions
            .iter()
            .zip(&self.weights)
            .filter(|(_, w)| self.apply_weights(w, x).iter().any(|c| !c.is_zero()))
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Matrix of `x ↦ x · Σ_{length(λ) ≤ r} e_λ` restricted to the orbits in
    /// `block`, which must be closed under the place action.
    fn truncation_block(&self, r: usize, block: &[usize]) -> RationalMatrix {
        let cw = self.class_weights(&|l| l.len() <= r);
        let pos: HashMap<usize, usize> = block.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        let mut t = RationalMatrix::zeros(block.len(), block.len());
        for (i, &b) in block.iter().enumerate() {
            for (w, &a) in self.shifted[b].iter().enumerate() {
                t[(i, pos[&a])] += &cw[self.class_of[w]];
            }
        }
        t
    }
}

/// Dimension of `{X : X s_i = s_i X for all i}` among maps
/// `(C^m)^{⊗d} → (C^n)^{⊗d}`, solved as an exact kernel one content pair at a
/// time, and whether every `ξ_A` lies in it.
pub fn equivariant_maps_by_kernel(
    n: usize,
    m: usize,
    d: usize,
    budget: &Budget,
) -> Result<(usize, bool)> {
    budget.check(
        format!("maps (C^{m})^⊗{d} → (C^{n})^⊗{d}"),
        saturating_pow(n, d).saturating_mul(saturating_pow(m, d)),
    )?;
    let group = |k: usize| {
        let mut by_content: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
        for w in all_words(k, d) {
            let mut c = vec![0; k];
            for &x in &w {
                c[x] += 1;
            }
            by_content.entry(c).or_default().push(w);
        }
        by_content
    };
    let (targets, sources) = (group(n), group(m));
    let mut total = 0;
    let mut xi_inside = true;
    for us in targets.values() {
        let upos: HashMap<&Vec<usize>, usize> =
            us.iter().enumerate().map(|(i, u)| (u, i)).collect();
        for vs in sources.values() {
            let vpos: HashMap<&Vec<usize>, usize> =
                vs.iter().enumerate().map(|(i, v)| (v, i)).collect();
            let unknowns = us.len() * vs.len();
            let mut eqs = Vec::new();
            for (i, u) in us.iter().enumerate() {
                for (j, v) in vs.iter().enumerate() {
                    for s in 0..d.saturating_sub(1) {
                        let (mut su, mut sv) = (u.clone(), v.clone());
                        su.swap(s, s + 1);
                        sv.swap(s, s + 1);
                        let other = upos[&su] * vs.len() + vpos[&sv];
                        let here = i * vs.len() + j;
                        if other != here {
                            let mut row = vec![Rational::zero(); unknowns];
                            row[here] = rat(1);
                            row[other] = rat(-1);
                            eqs.push(row);
                        }
                    }
                }
            }
            let kernel = RationalMatrix::from_rows_with_cols(eqs, unknowns)?.kernel_basis();
            total += kernel.dim();
            let mut xi: HashMap<CompositionMatrix, Vec<Rational>> = HashMap::new();
            for (i, u) in us.iter().enumerate() {
                for (j, v) in vs.iter().enumerate() {
                    xi.entry(CompositionMatrix::of_word_pair(u, v, n, m))
                        .or_insert_with(|| vec![Rational::zero(); unknowns])[i * vs.len() + j] =
                        rat(1);
                }
            }
            xi_inside &= xi.values().all(|x| kernel.contains_vector(x));
        }
    }
    Ok((total, xi_inside))
}

/// `S(n, d)` with the `ξ_A` basis realized on `(C^n)^{⊗d}`.
#[derive(Debug, Clone)]
pub struct SchurAlgebra {
    n: usize,
    d: usize,
    table: CompositionTable,
    elements: Vec<SparseMatrix>,
}

pub fn build_schur_algebra(n: usize, d: usize, budget: &Budget) -> Result<SchurAlgebra> {
    if n == 0 || d == 0 {
        return Err(Error::Invalid("Schur algebra needs n ≥ 1 and d ≥ 1".into()));
    }
    budget.check(format!("(C^{n})^⊗{d}"), saturating_pow(n, d))?;
    budget.check(
        format!("S({n},{d})"),
        binomial(n * n + d - 1, d).to_u128().unwrap_or(u128::MAX),
    )?;
    let table = CompositionTable::new(n, n, n, d, budget)?;
    let elements = (0..table.target.len())
        .map(|i| table.target.element_matrix(i))
        .collect();
    Ok(SchurAlgebra {
        n,
        d,
        table,
        elements,
    })
}

/// Wire form of the multiplication table; `products` lists `[i, j, k, g]`
/// with `ξ_i ξ_j = Σ_k g ξ_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurAlgebraJson {
    pub schema: u32,
    pub n: usize,
    pub d: usize,
    pub basis: Vec<CompositionMatrix>,
    pub products: Vec<[u64; 4]>,
}

impl SchurAlgebra {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn labels(&self) -> &[CompositionMatrix] {
        self.table.target.labels()
    }

    pub fn element(&self, i: usize) -> &SparseMatrix {
        &self.elements[i]
    }

    pub fn table(&self) -> &CompositionTable {
        &self.table
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u64 {
        self.table.coefficient(i, j, k)
    }

    /// Orbit coordinates of the unit: the diagonal labels.
    pub fn unit(&self) -> Vec<Rational> {
        self.labels()
            .iter()
            .map(|a| {
                let diagonal = (0..self.n).all(|i| (0..self.n).all(|j| i == j || a.get(i, j) == 0));
                rat(diagonal as i64)
            })
            .collect()
    }

    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.table.compose(x, y)
    }

    pub fn to_json(&self) -> SchurAlgebraJson {
        let mut products = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for &(k, g) in self.table.product(i, j) {
                    products.push([i as u64, j as u64, k as u64, g]);
                }
            }
        }
        SchurAlgebraJson {
            schema: SCHEMA_VERSION,
            n: self.n,
            d: self.d,
            basis: self.labels().to_vec(),
            products,
        }
    }

    fn transpose_index(&self) -> Vec<usize> {
        self.labels()
            .iter()
            .map(|a| {
                self.table
                    .target
                    .index_of(&a.transpose())
                    .expect("square labels")
            })
            .collect()
    }

    /// Dimension, unit, commutant, place-equivariance, associativity,
    /// anti-involution and agreement of the table with matrix products.
    /// Triple and pair checks are exhaustive up to `exhaustive_limit` items
    /// and sampled with `rng` beyond.
    pub fn verify<R: Rng + ?Sized>(
        &self,
        budget: &Budget,
        exhaustive_limit: usize,
        rng: &mut R,
    ) -> Result<VerificationReport> {
        let (n, d, dim) = (self.n, self.d, self.dim());
        let mut report = ReportBuilder::new("schur-algebra")
            .param("n", n)
            .param("d", d);
        report.equal(
            "dim S(n,d) = binomial(n²+d−1, d)",
            dim,
            binomial(n * n + d - 1, d),
        );
        let squares: BigUint = simple_module_dims(n, d).values().map(|v| v * v).sum();
        report.equal("dim S(n,d) = Σ_λ (dim V^n_λ)²", dim, &squares);

        let (kernel_dim, inside) = equivariant_maps_by_kernel(n, n, d, budget)?;
        report.equal(
            "commutant dimension by kernel = Σ_λ (dim V^n_λ)²",
            kernel_dim,
            &squares,
        );
        report.equal("span of ξ_A = commutant (rank)", dim, kernel_dim);
        report.holds("every ξ_A solves the commutant equations", inside);

        let tensor = build_tensor_space(n, d, budget)?;
        let mut unit = SparseMatrix::zeros(tensor.dim(), tensor.dim());
        for (i, c) in self.unit().iter().enumerate() {
            if !c.is_zero() {
                unit = unit.try_add(&self.elements[i])?;
            }
        }
        report.holds(
            "Σ_diagonal ξ_D is the identity",
            unit == SparseMatrix::identity(tensor.dim()),
        );
        let mut noncommuting = 0;
        for x in &self.elements {
            for s in tensor.transpositions() {
                if !x.commutator(s)?.is_zero() {
                    noncommuting += 1;
                }
            }
        }
        report.equal(
            "ξ_A not commuting with a place transposition",
            noncommuting,
            0,
        );

        let units = self.unit();
        let mut unit_failures = 0;
        for i in 0..dim {
            let e = basis_vector(dim, i);
            if self.multiply(&units, &e)? != e || self.multiply(&e, &units)? != e {
                unit_failures += 1;
            }
        }
        report.equal("ξ_A with 1·ξ_A ≠ ξ_A or ξ_A·1 ≠ ξ_A", unit_failures, 0);

        let pairs = index_tuples::<2, _>(dim, exhaustive_limit, rng);
        let mut mismatched = 0;
        for &[i, j] in &pairs {
            let direct = self.elements[i].try_mul(&self.elements[j])?;
            let mut expanded = SparseMatrix::zeros(tensor.dim(), tensor.dim());
            for &(k, g) in self.table.product(i, j) {
                expanded = expanded.try_add(&self.elements[k].scale(&rat(g as i64)))?;
            }
            if direct != expanded {
                mismatched += 1;
            }
        }
        report.equal(
            format!(
                "structure constants disagreeing with matrix products (of {})",
                pairs.len()
            ),
            mismatched,
            0,
        );

        let t = self.transpose_index();
        let mut reversed = 0;
        for &[i, j] in &pairs {
            for k in 0..dim {
                if self.structure_constant(i, j, k) != self.structure_constant(t[j], t[i], t[k]) {
                    reversed += 1;
                }
            }
        }
        report.equal("products not reversed by ξ_A ↦ ξ_{Aᵀ}", reversed, 0);

        let triples = index_tuples::<3, _>(dim, exhaustive_limit, rng);
        let mut nonassoc = 0;
        for &[i, j, k] in &triples {
            let (x, y, z) = (
                basis_vector(dim, i),
                basis_vector(dim, j),
                basis_vector(dim, k),
            );
            let l = self.multiply(&self.multiply(&x, &y)?, &z)?;
            let r = self.multiply(&x, &self.multiply(&y, &z)?)?;
            if l != r {
                nonassoc += 1;
            }
        }
        report.equal(
            format!("non-associative basis triples (of {})", triples.len()),
            nonassoc,
            0,
        );
        Ok(report.finish())
    }
}

fn basis_vector(len: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    v[i] = rat(1);
    v
}

/// All `K`-tuples over `[0, len)` when there are at most `limit`, otherwise
/// `limit` uniformly random ones.
fn index_tuples<const K: usize, R: Rng + ?Sized>(
    len: usize,
    limit: usize,
    rng: &mut R,
) -> Vec<[usize; K]> {
    let total = saturating_pow(len, K);
    if total <= limit as u128 {
        (0..total as usize)
            .map(|mut idx| {
                let mut t = [0; K];
                for slot in t.iter_mut().rev() {
                    *slot = idx % len;
                    idx /= len;
                }
                t
            })
            .collect()
    } else {
        (0..limit)
            .map(|_| std::array::from_fn(|_| rng.gen_range(0..len)))
            .collect()
    }
}

/// `dim V^n_λ` for `λ ∈ P^d_n`; the simple `S(n, d)`-modules.
pub fn simple_module_dims(n: usize, d: usize) -> BTreeMap<Partition, BigUint> {
    enumerate_partitions(d, Some(n))
        .into_iter()
        .map(|l| {
            let dim = dim_gl_irrep(n, &l);
            (l, dim)
        })
        .collect()
}

/// Closes the Leibniz images of all `E_ab` and the identity under products
/// and compares with `dim S(n, d)`.
pub fn verify_ginzburg_surjection(
    n: usize,
    d: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    let tensor = build_tensor_space(n, d, budget)?;
    let k = tensor.dim();
    budget.check(format!("gl((C^{n})^⊗{d})"), (k as u128) * (k as u128))?;
    let generators: Vec<RationalMatrix> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| tensor.left_generator(a, b).to_dense())
        .collect();
    let closure = span_closure(&generators, |x, y| x * y)?;
    let target = binomial(n * n + d - 1, d);
    let transpositions: Vec<RationalMatrix> = tensor
        .transpositions()
        .iter()
        .map(SparseMatrix::to_dense)
        .collect();
    let outside = closure
        .basis
        .iter()
        .filter(|x| transpositions.iter().any(|s| (*x * s) != (s * *x)))
        .count();
    let trajectory: Vec<serde_json::Value> = closure.trajectory.iter().map(|&t| t.into()).collect();
    let mut report = ReportBuilder::new("ginzburg")
        .param("n", n)
        .param("d", d)
        .param("trajectory", trajectory);
    report.equal("closure dimension = dim S(n,d)", closure.dim, target);
    report.equal("closure elements outside the commutant", outside, 0);
    Ok(report.finish())
}

/// `S_d`-equivariant maps `(C^m)^{⊗d} → (C^n)^{⊗d}` whose isotypic support
/// has length at most `r`, as a subspace of orbit coordinates.
#[derive(Debug, Clone)]
pub struct IntertwinerSpace {
    n: usize,
    m: usize,
    d: usize,
    r: usize,
    orbits: OrbitBasis,
    projector: IsotypicProjector,
    space: Subspace,
}

pub fn build_intertwiner_space(
    n: usize,
    m: usize,
    d: usize,
    r: usize,
    budget: &Budget,
) -> Result<IntertwinerSpace> {
    if n == 0 || m == 0 || d == 0 {
        return Err(Error::Invalid("intertwiner space needs n, m, d ≥ 1".into()));
    }
    budget.check(
        format!("Hom((C^{m})^⊗{d}, (C^{n})^⊗{d})^S_{d}"),
        binomial(n * m + d - 1, d).to_u128().unwrap_or(u128::MAX),
    )?;
    let orbits = OrbitBasis::new(n, m, d);
    let projector = IsotypicProjector::new(&orbits)?;
    let mut vectors = Vec::new();
    for block in orbits.margin_blocks().values() {
        let t = projector.truncation_block(r, block);
        for v in Subspace::row_space(&t.transpose()).basis_vectors() {
            let mut full = vec![Rational::zero(); orbits.len()];
            for (&b, c) in block.iter().zip(v) {
                full[b] = c;
            }
            vectors.push(full);
        }
    }
    let space = Subspace::from_vectors(orbits.len(), vectors)?;
    Ok(IntertwinerSpace {
        n,
        m,
        d,
        r,
        orbits,
        projector,
        space,
    })
}

impl IntertwinerSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn truncation(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn orbits(&self) -> &OrbitBasis {
        &self.orbits
    }

    /// Basis in orbit coordinates (canonical echelon form).
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.space.basis_vectors()
    }

    /// `Σ_{λ ∈ P^d_min(n,r,m)} dim V^n_λ · dim V^m_λ`.
    pub fn expected_dim(&self) -> BigUint {
        enumerate_partitions(self.d, Some(self.n.min(self.m).min(self.r)))
            .iter()
            .map(|l| dim_gl_irrep(self.n, l) * dim_gl_irrep(self.m, l))
            .sum()
    }

    /// Whether `x` is fixed by the truncating idempotent.
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.projector.truncate(self.r, x) == x && self.space.contains_vector(x)
    }

    pub fn support(&self, x: &[Rational]) -> Vec<Partition> {
        self.projector.support(x)
    }

    pub fn report(&self, budget: &Budget) -> Result<VerificationReport> {
        let mut report = ReportBuilder::new("intertwiner-space")
            .param("n", self.n)
            .param("m", self.m)
            .param("d", self.d)
            .param("r", self.r);
        report.equal(
            "truncated dimension = Σ dim V^n_λ · dim V^m_λ",
            self.dim(),
            self.expected_dim(),
        );
        if self.r >= self.n.min(self.m) {
            report.equal(
                "untruncated dimension = number of orbits",
                self.dim(),
                self.orbits.len(),
            );
            let (kernel_dim, inside) = equivariant_maps_by_kernel(self.n, self.m, self.d, budget)?;
            report.equal(
                "equivariant maps by kernel = number of orbits",
                kernel_dim,
                self.orbits.len(),
            );
            report.holds("every ξ_A is equivariant", inside);
        }
        let outside = self
            .basis()
            .iter()
            .filter(|x| self.support(x).iter().any(|l| l.len() > self.r))
            .count();
        report.equal("basis maps with support beyond the truncation", outside, 0);
        Ok(report.finish())
    }
}

/// Products of basis maps of two intertwiner spaces.
#[derive(Debug, Clone)]
pub struct Composition {
    pub left: IntertwinerSpace,
    pub right: IntertwinerSpace,
    /// `(i, j, left_i ∘ right_j)` in orbit coordinates of `n × m` matrices.
    pub products: Vec<(usize, usize, Vec<Rational>)>,
    /// The space `min(a, k, b)`-truncated maps the products must land in.
    pub target: IntertwinerSpace,
    pub span_dim: usize,
    table: CompositionTable,
}

/// Composes every basis map of `x: (C^k)^{⊗d} → (C^n)^{⊗d}` with every basis
/// map of `y: (C^m)^{⊗d} → (C^k)^{⊗d}`.
pub fn compose_intertwiners(
    x: &IntertwinerSpace,
    y: &IntertwinerSpace,
    budget: &Budget,
) -> Result<Composition> {
    if x.m != y.n || x.d != y.d {
        return Err(Error::SizeMismatch(format!(
            "cannot compose maps into (C^{})^⊗{} after maps into (C^{})^⊗{}",
            x.m, x.d, y.n, y.d
        )));
    }
    let (n, k, m, d) = (x.n, x.m, y.m, x.d);
    let table = CompositionTable::new(n, k, m, d, budget)?;
    let target = build_intertwiner_space(n, m, d, x.r.min(k).min(y.r), budget)?;
    let (xb, yb) = (x.basis(), y.basis());
    let mut products = Vec::with_capacity(xb.len() * yb.len());
    let mut span = crate::linalg::EchelonBasis::new(table.target.len());
    for (i, u) in xb.iter().enumerate() {
        for (j, v) in yb.iter().enumerate() {
            let p = table.compose(u, v)?;
            span.insert(&p);
            products.push((i, j, p));
        }
    }
    Ok(Composition {
        left: x.clone(),
        right: y.clone(),
        products,
        target,
        span_dim: span.dim(),
        table,
    })
}

impl Composition {
    pub fn support_bound(&self) -> usize {
        [
            self.left.n,
            self.left.r,
            self.left.m,
            self.right.r,
            self.right.m,
        ]
        .into_iter()
        .min()
        .unwrap()
    }

    /// Support rule and landing space for every product, plus associativity
    /// against the Schur algebra `S(m, d)` acting on the right: exhaustive up
    /// to `exhaustive_limit` triples, sampled beyond.
    pub fn verify<R: Rng + ?Sized>(
        &self,
        budget: &Budget,
        exhaustive_limit: usize,
        rng: &mut R,
    ) -> Result<VerificationReport> {
        let (n, k, m) = (self.left.n, self.left.m, self.right.m);
        let bound = self.support_bound();
        let mut report = ReportBuilder::new("convolution")
            .param("n", n)
            .param("k", k)
            .param("m", m)
            .param("d", self.left.d)
            .param("a", self.left.r)
            .param("b", self.right.r);
        let mut beyond = 0;
        let mut outside = 0;
        for (_, _, p) in &self.products {
            if self.target.support(p).iter().any(|l| l.len() > bound) {
                beyond += 1;
            }
            if !self.target.contains(p) {
                outside += 1;
            }
        }
        report.equal(
            format!(
                "products with support beyond length {bound} (of {})",
                self.products.len()
            ),
            beyond,
            0,
        );
        report.equal(
            "products outside the min(a,k,b)-truncated space",
            outside,
            0,
        );
        report.holds(
            "span of products within the truncated space",
            self.span_dim <= self.target.dim(),
        );

        let d = self.left.d;
        let right_table = CompositionTable::new(k, m, m, d, budget)?;
        let outer_table = CompositionTable::new(n, m, m, d, budget)?;
        let zs = OrbitBasis::new(m, m, d);
        let (xb, yb) = (self.left.basis(), self.right.basis());
        let mut triples: Vec<[usize; 3]> = Vec::new();
        let total = (xb.len() as u128) * (yb.len() as u128) * (zs.len() as u128);
        if total <= exhaustive_limit as u128 {
            for i in 0..xb.len() {
                for j in 0..yb.len() {
                    for l in 0..zs.len() {
                        triples.push([i, j, l]);
                    }
                }
            }
        } else if !xb.is_empty() && !yb.is_empty() {
            for _ in 0..exhaustive_limit {
                triples.push([
                    rng.gen_range(0..xb.len()),
                    rng.gen_range(0..yb.len()),
                    rng.gen_range(0..zs.len()),
                ]);
            }
        }
        let mut nonassoc = 0;
        for [i, j, l] in &triples {
            let z = basis_vector(zs.len(), *l);
            let lhs = outer_table.compose(&self.table.compose(&xb[*i], &yb[*j])?, &z)?;
            let rhs = self
                .table
                .compose(&xb[*i], &right_table.compose(&yb[*j], &z)?)?;
            if lhs != rhs {
                nonassoc += 1;
            }
        }
        report.equal(
            format!("non-associative triples (of {})", triples.len()),
            nonassoc,
            0,
        );
        Ok(report.finish())
    }
}
