//! Flags over `Q^d`, the invariant matrix of a flag pair, and the dimension
//! calculus of flag varieties, nilpotent orbits and Spaltenstein varieties.
//!
//! Nilpotent orbits are indexed by a partition `λ` whose transpose gives the
//! Jordan block sizes: `x_λ` has blocks `λ^t`, so `λ = (d)` is the zero orbit
//! and `λ = (1^d)` the regular one.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{
    binomial, dominance_leq, enumerate_partitions, kostka, weak_compositions, Partition,
};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, rat, Rational, RationalMatrix, Subspace};
use crate::report::{ReportBuilder, VerificationReport};
use crate::rsk::CompositionMatrix;

/// Step dimensions `(d_1, …, d_n)` of an `n`-step flag; zeros allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FlagType(Vec<usize>);

impl FlagType {
    pub fn new(steps: Vec<usize>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Invalid("a flag type needs at least one step".into()));
        }
        Ok(FlagType(steps))
    }

    /// The complete type `(1, …, 1)` of length `d`.
    pub fn complete(d: usize) -> Self {
        FlagType(vec![1; d.max(1)])
    }

    /// Every type with `n` steps summing to `d`, reverse lexicographic.
    pub fn all(n: usize, d: usize) -> Vec<FlagType> {
        weak_compositions(d, n).into_iter().map(FlagType).collect()
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `dim F_i = d_1 + … + d_i` for `i = 0..=n`.
    pub fn cumulative(&self) -> Vec<usize> {
        let mut acc = 0;
        std::iter::once(0)
            .chain(self.0.iter().map(|&s| {
                acc += s;
                acc
            }))
            .collect()
    }
}

impl fmt::Display for FlagType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `dim` of the partial flag variety of type `t`: `Σ_{i<j} d_i d_j`.
pub fn flag_variety_dim(t: &FlagType) -> usize {
    let s = t.steps();
    (0..s.len())
        .flat_map(|i| (i + 1..s.len()).map(move |j| (i, j)))
        .map(|(i, j)| s[i] * s[j])
        .sum()
}

/// `dim O_{x_λ} = d² − Σ λ_i²`.
pub fn nilpotent_orbit_dim(lambda: &Partition) -> usize {
    let d = lambda.size();
    d * d - lambda.sum_of_squares()
}

/// The Jordan form `x_λ`, blocks `λ^t` in order, each an upper shift
/// `e_{k+1} ↦ e_k`.
pub fn jordan_nilpotent(lambda: &Partition) -> RationalMatrix {
    let d = lambda.size();
    let mut x = RationalMatrix::zeros(d, d);
    let mut offset = 0;
    for &block in lambda.transpose().parts() {
        for k in 1..block {
            x[(offset + k - 1, offset + k)] = rat(1);
        }
        offset += block;
    }
    x
}

/// Dimension of `{flags F of type t : x_λ F_i ⊆ F_{i−1}}`, or `None` when that
/// variety is empty. Emptiness is decided by `K_{λ,t} = 0`.
pub fn spaltenstein_dim(lambda: &Partition, t: &FlagType) -> Option<usize> {
    if kostka(lambda, t.steps()).is_zero() {
        return None;
    }
    let orbit = nilpotent_orbit_dim(lambda);
    debug_assert!(orbit.is_multiple_of(2));
    let base = flag_variety_dim(t);
    assert!(
        2 * base >= orbit,
        "Spaltenstein dimension negative for λ={lambda}, t={t}"
    );
    Some(base - orbit / 2)
}

/// Whether `O_{x_λ} ⊆ closure(O_{x_μ})`.
///
/// Closure order on Jordan types is dominance, and transposing reverses
/// dominance, so this is `μ ≤ λ` in dominance order on the indexing
/// partitions. The zero orbit `(d)` lies below everything.
pub fn closure_order(lambda: &Partition, mu: &Partition) -> Result<bool> {
    dominance_leq(mu, lambda)
}

/// An `n`-step flag `0 = F_0 ⊆ F_1 ⊆ … ⊆ F_n = Q^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    ty: FlagType,
    /// `F_1, …, F_n`.
    chain: Vec<Subspace>,
}

impl Flag {
    /// Validates nesting and that the last step is the whole space.
    /// Chain indices in errors are 1-based, matching `F_i`.
    pub fn new(d: usize, chain: Vec<Subspace>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidFlag {
                index: 0,
                reason: "no steps".into(),
            });
        }
        let mut steps = Vec::with_capacity(chain.len());
        let mut prev = Subspace::zero(d);
        for (i, f) in chain.iter().enumerate() {
            if f.ambient() != d {
                return Err(Error::InvalidFlag {
                    index: i + 1,
                    reason: format!("ambient dimension {} instead of {d}", f.ambient()),
                });
            }
            if !f.contains(&prev)? {
                return Err(Error::InvalidFlag {
                    index: i + 1,
                    reason: format!("F_{i} is not contained in F_{}", i + 1),
                });
            }
            steps.push(f.dim() - prev.dim());
            prev = f.clone();
        }
        if prev.dim() != d {
            return Err(Error::InvalidFlag {
                index: chain.len(),
                reason: format!("last step has dimension {} instead of {d}", prev.dim()),
            });
        }
        Ok(Flag {
            ty: FlagType(steps),
            chain,
        })
    }

    /// `F_i` spanned by the first `d_1 + … + d_i` rows of an invertible `basis`.
    pub fn from_basis(basis: &RationalMatrix, ty: &FlagType) -> Result<Self> {
        let d = ty.total();
        if basis.rows() != d || basis.cols() != d {
            return Err(Error::SizeMismatch(format!(
                "{}×{} basis for a flag in Q^{d}",
                basis.rows(),
                basis.cols()
            )));
        }
        let rows = basis.row_vecs();
        let chain = ty
            .cumulative()
            .into_iter()
            .skip(1)
            .map(|k| Subspace::from_vectors(d, rows[..k].to_vec()))
            .collect::<Result<Vec<_>>>()?;
        let flag = Flag::new(d, chain)?;
        if flag.ty != *ty {
            return Err(Error::Invalid("basis rows are linearly dependent".into()));
        }
        Ok(flag)
    }

    /// The coordinate flag of type `ty`.
    pub fn standard(ty: &FlagType) -> Self {
        Flag::from_basis(&RationalMatrix::identity(ty.total()), ty).expect("identity basis")
    }

    /// A random flag of type `ty`: rows of a random invertible integer matrix.
    pub fn random<R: Rng + ?Sized>(ty: &FlagType, rng: &mut R) -> Self {
        Flag::from_basis(&random_invertible(ty.total(), rng), ty).expect("invertible basis")
    }

    pub fn ty(&self) -> &FlagType {
        &self.ty
    }

    pub fn d(&self) -> usize {
        self.ty.total()
    }

    pub fn n(&self) -> usize {
        self.ty.n()
    }

    /// `F_i` for `i = 0..=n`.
    pub fn step(&self, i: usize) -> Subspace {
        if i == 0 {
            Subspace::zero(self.d())
        } else {
            self.chain[i - 1].clone()
        }
    }

    /// `g·F`, with `g` acting on column vectors.
    pub fn act(&self, g: &RationalMatrix) -> Result<Flag> {
        let chain = self
            .chain
            .iter()
            .map(|f| f.image(g))
            .collect::<Result<Vec<_>>>()?;
        Flag::new(self.d(), chain)
    }

    pub fn to_json(&self) -> FlagJson {
        FlagJson {
            d: self.d(),
            steps: self
                .chain
                .iter()
                .map(|f| {
                    f.basis_vectors()
                        .iter()
                        .map(|v| v.iter().map(format_rational).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(json: &FlagJson) -> Result<Flag> {
        let chain = json
            .steps
            .iter()
            .enumerate()
            .map(|(i, vectors)| {
                let parsed = vectors
                    .iter()
                    .map(|v| {
                        if v.len() != json.d {
                            return Err(Error::InvalidFlag {
                                index: i + 1,
                                reason: format!("vector of length {} in Q^{}", v.len(), json.d),
                            });
                        }
                        v.iter()
                            .map(|s| parse_rational(s))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Subspace::from_vectors(json.d, parsed)
            })
            .collect::<Result<Vec<_>>>()?;
        Flag::new(json.d, chain)
    }
}

/// Wire form of a flag: `steps[i]` lists vectors spanning `F_{i+1}`, each
/// vector a list of `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagJson {
    pub d: usize,
    pub steps: Vec<Vec<Vec<String>>>,
}

/// Input of the orbit-invariant calculator: two flags in the same `Q^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagPairJson {
    pub first: FlagJson,
    pub second: FlagJson,
}

/// Random invertible `d × d` integer matrix with entries in `[−9, 9]`.
pub fn random_invertible<R: Rng + ?Sized>(d: usize, rng: &mut R) -> RationalMatrix {
    loop {
        let data = (0..d * d).map(|_| rat(rng.gen_range(-9..=9))).collect();
        let g = RationalMatrix::from_flat(d, d, data).unwrap();
        if !g.determinant().unwrap().is_zero() {
            return g;
        }
    }
}

/// The `n × m` matrix `a_ij = dim(F_i∩F'_j) − dim(F_{i−1}∩F'_j)
/// − dim(F_i∩F'_{j−1}) + dim(F_{i−1}∩F'_{j−1})` labelling the `GL_d`-orbit
/// of the pair.
pub fn orbit_invariant(f: &Flag, g: &Flag) -> Result<CompositionMatrix> {
    if f.d() != g.d() {
        return Err(Error::AmbientMismatch {
            left: f.d(),
            right: g.d(),
        });
    }
    let (n, m) = (f.n(), g.n());
    let mut dims = vec![vec![0usize; m + 1]; n + 1];
    for (i, row) in dims.iter_mut().enumerate().skip(1) {
        let fi = f.step(i);
        for (j, cell) in row.iter_mut().enumerate().skip(1) {
            *cell = fi.intersect(&g.step(j))?.dim();
        }
    }
    let mut a = CompositionMatrix::zeros(n, m);
    for i in 1..=n {
        for j in 1..=m {
            let v = (dims[i][j] + dims[i - 1][j - 1]) as isize
                - dims[i - 1][j] as isize
                - dims[i][j - 1] as isize;
            assert!(v >= 0, "negative orbit invariant entry");
            a.add_to(i - 1, j - 1, v as usize);
        }
    }
    Ok(a)
}

/// Number of `GL_d`-orbits on `n`-step × `m`-step flag pairs, with the
/// labelling matrices. The count is `binomial(nm + d − 1, d)`.
pub fn count_orbits(n: usize, m: usize, d: usize) -> (BigUint, Vec<CompositionMatrix>) {
    let all = CompositionMatrix::enumerate(n, m, d);
    (binomial(n * m + d - 1, d), all)
}

/// A representative pair `(F, F')` of the orbit labelled `a`: basis vectors
/// are allotted in blocks to the cells `(i, j)` row-major, `F_i` is spanned by
/// the blocks in rows `≤ i`, `F'_j` by those in columns `≤ j`.
pub fn representative_pair(a: &CompositionMatrix) -> (Flag, Flag) {
    let d = a.total();
    let mut row_of = Vec::with_capacity(d);
    let mut col_of = Vec::with_capacity(d);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            for _ in 0..a.get(i, j) {
                row_of.push(i);
                col_of.push(j);
            }
        }
    }
    let span = |pred: &dyn Fn(usize) -> bool| {
        let vecs = (0..d)
            .filter(|&k| pred(k))
            .map(|k| {
                let mut v = vec![Rational::zero(); d];
                v[k] = rat(1);
                v
            })
            .collect();
        Subspace::from_vectors(d, vecs).unwrap()
    };
    let f = (1..=a.rows())
        .map(|i| span(&|k| row_of[k] < i))
        .collect::<Vec<_>>();
    let g = (1..=a.cols())
        .map(|j| span(&|k| col_of[k] < j))
        .collect::<Vec<_>>();
    (Flag::new(d, f).unwrap(), Flag::new(d, g).unwrap())
}

/// `{X ∈ gl_d : X·S ⊆ T for every (S, T)}`, as a subspace of `Q^{d²}`
/// (row-major entries of `X`).
pub fn endomorphisms_mapping(d: usize, pairs: &[(Subspace, Subspace)]) -> Result<Subspace> {
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    for (s, t) in pairs {
        // Functionals vanishing on T.
        let ann = t.basis().kernel_basis();
        for phi in ann.basis_vectors() {
            for f in s.basis_vectors() {
                // φᵀ X f = Σ_{r,c} φ_r X_rc f_c
                let mut row = vec![Rational::zero(); d * d];
                for r in 0..d {
                    if phi[r].is_zero() {
                        continue;
                    }
                    for c in 0..d {
                        if !f[c].is_zero() {
                            row[r * d + c] = &phi[r] * &f[c];
                        }
                    }
                }
                eqs.push(row);
            }
        }
    }
    Ok(RationalMatrix::from_rows_with_cols(eqs, d * d)?.kernel_basis())
}

fn nilradical_pairs(f: &Flag) -> Vec<(Subspace, Subspace)> {
    (1..=f.n()).map(|i| (f.step(i), f.step(i - 1))).collect()
}

fn stabilizer_pairs(f: &Flag) -> Vec<(Subspace, Subspace)> {
    (1..=f.n()).map(|i| (f.step(i), f.step(i))).collect()
}

/// One irreducible component of the Steinberg-type variety over a flag-pair
/// orbit, with its dimension computed from the orbit data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub matrix: CompositionMatrix,
    /// `(row sums, column sums)`.
    pub weight: (Vec<usize>, Vec<usize>),
    pub orbit_dim: usize,
    pub conormal_fiber_dim: usize,
    pub dimension: usize,
    /// `flag_variety_dim(row type) + flag_variety_dim(column type)`.
    pub half_ambient_dim: usize,
}

/// Dimension of the part of the variety lying over one nilpotent orbit and
/// one pair of flag types.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub lambda: Partition,
    pub row_type: FlagType,
    pub col_type: FlagType,
    pub orbit_dim: usize,
    pub fiber_dims: (usize, usize),
    pub dimension: usize,
    pub half_ambient_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub k: usize,
    /// One record per orbit matrix; present only when `k ≥ min(n, m)`.
    pub components: Option<Vec<ComponentRecord>>,
    pub strata: Vec<StratumRecord>,
}

/// Component data of a single orbit, computed on its representative pair.
///
/// The orbit dimension is `d²` minus the dimension of the common stabilizer
/// algebra; the conormal fiber is the intersection of the two nilradicals.
/// Both come from exact kernels.
pub fn component_record(a: &CompositionMatrix) -> Result<ComponentRecord> {
    let d = a.total();
    let (f, g) = representative_pair(a);
    debug_assert_eq!(orbit_invariant(&f, &g)?, *a);
    let mut stab = stabilizer_pairs(&f);
    stab.extend(stabilizer_pairs(&g));
    let stabilizer = endomorphisms_mapping(d, &stab)?.dim();
    let mut nil = nilradical_pairs(&f);
    nil.extend(nilradical_pairs(&g));
    let conormal_fiber_dim = endomorphisms_mapping(d, &nil)?.dim();
    let orbit_dim = d * d - stabilizer;
    let half =
        flag_variety_dim(&FlagType(a.row_sums())) + flag_variety_dim(&FlagType(a.col_sums()));
    Ok(ComponentRecord {
        matrix: a.clone(),
        weight: (a.row_sums(), a.col_sums()),
        orbit_dim,
        conormal_fiber_dim,
        dimension: orbit_dim + conormal_fiber_dim,
        half_ambient_dim: half,
    })
}

/// Census of components and orbit strata for `n`-step × `m`-step flags with
/// nilpotents truncated at `x^k = 0`.
///
/// For `k < min(n, m)` the variety need not be a union of conormal closures,
/// so only the strata table is produced.
pub fn component_census(n: usize, m: usize, d: usize, k: usize) -> Result<Census> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid("n and m must be positive".into()));
    }
    let components = if k >= n.min(m) {
        Some(
            CompositionMatrix::enumerate(n, m, d)
                .iter()
                .map(component_record)
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let mut strata = Vec::new();
    for lambda in enumerate_partitions(d, Some(k.min(n).min(m))) {
        let orbit = nilpotent_orbit_dim(&lambda);
        for t1 in FlagType::all(n, d) {
            let Some(s1) = spaltenstein_dim(&lambda, &t1) else {
                continue;
            };
            for t2 in FlagType::all(m, d) {
                let Some(s2) = spaltenstein_dim(&lambda, &t2) else {
                    continue;
                };
                strata.push(StratumRecord {
                    lambda: lambda.clone(),
                    orbit_dim: orbit,
                    fiber_dims: (s1, s2),
                    dimension: orbit + s1 + s2,
                    half_ambient_dim: flag_variety_dim(&t1) + flag_variety_dim(&t2),
                    row_type: t1.clone(),
                    col_type: t2,
                });
            }
        }
    }
    Ok(Census {
        n,
        m,
        d,
        k,
        components,
        strata,
    })
}

/// Checks `dim O_λ + dim F^{t1}_x + dim F^{t2}_x = dim F_{t1} + dim F_{t2}`
/// over every `λ ∈ P^d_{min(n,m)}` and every pair of types with non-empty
/// fibers, and that the right side is half of `dim(M_{t1} × M_{t2})`.
pub fn dimension_identity_check(n: usize, m: usize, d: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("component-dimensions")
        .param("n", n)
        .param("m", m)
        .param("d", d);
    for lambda in enumerate_partitions(d, Some(n.min(m))) {
        let orbit = nilpotent_orbit_dim(&lambda);
        for t1 in FlagType::all(n, d) {
            let Some(s1) = spaltenstein_dim(&lambda, &t1) else {
                continue;
            };
            for t2 in FlagType::all(m, d) {
                let Some(s2) = spaltenstein_dim(&lambda, &t2) else {
                    continue;
                };
                let half = flag_variety_dim(&t1) + flag_variety_dim(&t2);
                // dim M_t = 2·dim F_t (cotangent bundle).
                let ambient = 2 * flag_variety_dim(&t1) + 2 * flag_variety_dim(&t2);
                report.equal(
                    format!("λ={lambda} t1={t1} t2={t2}: orbit+fibers = half ambient"),
                    orbit + s1 + s2,
                    half,
                );
                report.equal(
                    format!("λ={lambda} t1={t1} t2={t2}: 2·half = dim M_t1×M_t2"),
                    2 * half,
                    ambient,
                );
            }
        }
    }
    report.finish()
}
