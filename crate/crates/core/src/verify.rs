//! Verification suites. Each returns a [`VerificationReport`] whose
//! witnesses pair a value computed from a model with its independent oracle.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::combinatorics::{
    binomial, dim_gl_irrep, dim_sym_irrep, enumerate_partitions, factorial, kostka, sym_character,
    Partition,
};
use crate::error::{Error, Result};
use crate::flags::{
    component_census, count_orbits, dimension_identity_check, orbit_invariant, random_invertible,
    representative_pair, Flag, FlagType,
};
use crate::report::{ReportBuilder, VerificationReport};
use crate::rsk::{inverse_rsk_with_dims, lds, rs_shape, rsk, CompositionMatrix, Permutation};
use crate::schur::{
    build_intertwiner_space, build_schur_algebra, compose_intertwiners, verify_ginzburg_surjection,
};
use crate::tensor::{
    build_symmetric_model, build_tensor_space, joint_highest_weight_vectors,
    schur_duality_multiplicities, tensor_dimension_bookkeeping, weyl_group_action_on_zero_weight,
    zero_weight_bridge,
};

/// Seed used when a caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Pair and triple checks enumerate everything up to this many items and
/// sample beyond it.
pub const EXHAUSTIVE_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Howe,
    Schur,
    Springer,
    Dimensions,
    Convolution,
    ZeroWeight,
    Ginzburg,
    Orbits,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Howe,
        Suite::Schur,
        Suite::Springer,
        Suite::Dimensions,
        Suite::Convolution,
        Suite::ZeroWeight,
        Suite::Ginzburg,
        Suite::Orbits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Howe => "howe",
            Suite::Schur => "schur",
            Suite::Springer => "springer",
            Suite::Dimensions => "dimensions",
            Suite::Convolution => "convolution",
            Suite::ZeroWeight => "zero-weight",
            Suite::Ginzburg => "ginzburg",
            Suite::Orbits => "orbits",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Parameters shared by the suites; each suite reads the ones it needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: usize,
    pub m: usize,
    pub d: usize,
    pub k: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 2,
            m: 2,
            d: 2,
            k: None,
            a: None,
            b: None,
            seed: DEFAULT_SEED,
        }
    }
}

pub fn run_suite(suite: Suite, p: &SuiteParams, budget: &Budget) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    match suite {
        Suite::Howe => howe(p.n, p.m, p.d, budget),
        Suite::Schur => schur_duality(p.n, p.d, budget, &mut rng),
        Suite::Springer => springer(p.d, p.k, budget),
        Suite::Dimensions => dimensions(p.n, p.m, p.d),
        Suite::Convolution => {
            let k = p.k.unwrap_or(p.n);
            let top = p.n.max(p.m).max(k).max(p.d);
            let a_range = p.a.map_or(1..=top, |a| a..=a);
            let b_range = p.b.map_or(1..=top, |b| b..=b);
            let mut report = ReportBuilder::new("convolution")
                .param("n", p.n)
                .param("m", p.m)
                .param("k", k)
                .param("d", p.d);
            for a in a_range {
                for b in b_range.clone() {
                    report.extend(convolution(p.n, k, p.m, p.d, a, b, budget, &mut rng)?);
                }
            }
            Ok(report.finish())
        }
        Suite::ZeroWeight => zero_weight(p.n, p.d, budget),
        Suite::Ginzburg => verify_ginzburg_surjection(p.n, p.d, budget),
        Suite::Orbits => orbit_parameterization(p.n, p.m, p.d, 50, &mut rng),
    }
}

fn positive(what: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::Invalid(format!("{what} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `binomial(nm + d − 1, d) = Σ_{λ ∈ P^d_min(n,m)} dim V^n_λ · dim V^m_λ`.
pub fn howe_identity(n: usize, m: usize, d: usize) -> VerificationReport {
    let mut report = ReportBuilder::new("howe-identity")
        .param("n", n)
        .param("m", m)
        .param("d", d);
    let terms: Vec<BigUint> = enumerate_partitions(d, Some(n.min(m)))
        .iter()
        .map(|l| dim_gl_irrep(n, l) * dim_gl_irrep(m, l))
        .collect();
    let sum: BigUint = terms.iter().sum();
    let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
    report.equal(
        format!("dim S^{d}(C^{n}⊗C^{m}) = {}", shown.join("+")),
        binomial(n * m + d - 1, d),
        sum,
    );
    report.finish()
}

/// The symmetric model: both `gl` actions, their commutation, weights, and
/// the joint highest weight multiset `{(λ, λ) : λ ∈ P^d_min(n,m)}`.
pub fn isotypic_structure(
    n: usize,
    m: usize,
    d: usize,
    budget: &Budget,
) -> Result<VerificationReport> {
    let model = build_symmetric_model(n, m, d, budget)?;
    let mut report = ReportBuilder::new("isotypic-structure")
        .param("n", n)
        .param("m", m)
        .param("d", d);
    report.equal(
        "model dimension = binomial(nm+d−1, d)",
        model.dim(),
        binomial(n * m + d - 1, d),
    );
    model.check_gl_relations(false, &mut report)?;
    model.check_gl_relations(true, &mut report)?;
    model.check_actions_commute(&mut report)?;
    let vectors = joint_highest_weight_vectors(&model)?;
    let non_weight = vectors
        .iter()
        .filter(|v| !v.is_weight_vector_of(&model))
        .count();
    report.equal(
        "highest weight vectors that are not weight vectors",
        non_weight,
        0,
    );
    let mut got: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    for v in vectors {
        *got.entry((v.left_weight, v.right_weight)).or_insert(0) += 1;
    }
    let expected: BTreeMap<(Vec<usize>, Vec<usize>), usize> =
        enumerate_partitions(d, Some(n.min(m)))
            .iter()
            .map(|l| ((l.padded(n).unwrap(), l.padded(m).unwrap()), 1))
            .collect();
    let show = |map: &BTreeMap<(Vec<usize>, Vec<usize>), usize>| format!("{map:?}");
    report.equal(
        "joint highest weight multiset = {(λ,λ)}",
        show(&got),
        show(&expected),
    );
    Ok(report.finish())
}

pub fn howe(n: usize, m: usize, d: usize, budget: &Budget) -> Result<VerificationReport> {
    positive("n", n)?;
    positive("m", m)?;
    let mut report = ReportBuilder::new("howe")
        .param("n", n)
        .param("m", m)
        .param("d", d);
    report.extend(howe_identity(n, m, d));
    report.extend(isotypic_structure(n, m, d, budget)?);
    Ok(report.finish())
}

/// Tensor space relations, multiplicities against their oracles, the
/// commutant, and the Schur algebra structure.
pub fn schur_duality<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    budget: &Budget,
    rng: &mut R,
) -> Result<VerificationReport> {
    positive("n", n)?;
    positive("d", d)?;
    let tensor = build_tensor_space(n, d, budget)?;
    let mut report = ReportBuilder::new("schur").param("n", n).param("d", d);
    tensor.check_gl_relations(false, &mut report)?;
    tensor.check_coxeter_relations(&mut report)?;
    tensor.check_actions_commute(&mut report)?;
    let (total, sum) = tensor_dimension_bookkeeping(n, d);
    report.equal("n^d = Σ dim V^n_λ · f^λ", total, sum);
    let mult = schur_duality_multiplicities(&tensor)?;
    report.equal(
        "isotypes present",
        mult.len(),
        enumerate_partitions(d, Some(n)).len(),
    );
    for (l, mu) in &mult {
        report.equal(
            format!("multiplicity of S_{l} = dim V^{n}_{l}"),
            &mu.specht,
            dim_gl_irrep(n, l),
        );
        report.equal(
            format!("multiplicity of V^{n}_{l} = f^{l}"),
            &mu.gl,
            dim_sym_irrep(l),
        );
    }
    let algebra = build_schur_algebra(n, d, budget)?;
    report.extend(algebra.verify(budget, EXHAUSTIVE_LIMIT, rng)?);
    Ok(report.finish())
}

/// `Σ_λ (f^λ)² = d!`, the RS shape distribution, and with `k` the count of
/// permutations with no decreasing subsequence longer than `k`.
pub fn springer(d: usize, k: Option<usize>, budget: &Budget) -> Result<VerificationReport> {
    positive("d", d)?;
    let mut report = ReportBuilder::new("springer").param("d", d);
    if let Some(k) = k {
        report = report.param("k", k);
    }
    let squares: BigUint = enumerate_partitions(d, None)
        .iter()
        .map(|l| dim_sym_irrep(l).pow(2))
        .sum();
    report.equal(format!("Σ_λ (f^λ)² = {d}!"), &squares, factorial(d));

    budget.check(
        format!("S_{d}"),
        factorial(d).to_u128().unwrap_or(u128::MAX),
    )?;
    let mut shapes: BTreeMap<Partition, u64> = BTreeMap::new();
    let mut schensted = 0usize;
    let mut short = 0u64;
    for w in Permutation::all(d) {
        let shape = rs_shape(&w);
        let longest = lds(&w);
        if longest != shape.len() {
            schensted += 1;
        }
        if k.is_some_and(|k| longest <= k) {
            short += 1;
        }
        *shapes.entry(shape).or_insert(0) += 1;
    }
    report.equal(
        "permutations whose lds differs from the RS shape length",
        schensted,
        0,
    );
    for l in enumerate_partitions(d, None) {
        report.equal(
            format!("#{{w : RS shape {l}}} = (f^{l})²"),
            shapes.get(&l).copied().unwrap_or(0),
            dim_sym_irrep(&l).pow(2),
        );
    }
    if let Some(k) = k {
        let truncated: BigUint = enumerate_partitions(d, Some(k))
            .iter()
            .map(|l| dim_sym_irrep(l).pow(2))
            .sum();
        report.equal(
            format!("#{{w ∈ S_{d} : lds(w) ≤ {k}}} = Σ_{{len λ ≤ {k}}} (f^λ)²"),
            short,
            truncated,
        );
    }
    Ok(report.finish())
}

/// Component dimension identity over all strata, plus the per-orbit census
/// when every orbit is a component.
pub fn dimensions(n: usize, m: usize, d: usize) -> Result<VerificationReport> {
    positive("n", n)?;
    positive("m", m)?;
    let mut report = ReportBuilder::new("dimensions")
        .param("n", n)
        .param("m", m)
        .param("d", d);
    report.extend(dimension_identity_check(n, m, d));
    let census = component_census(n, m, d, n.min(m))?;
    let components = census.components.unwrap_or_default();
    report.equal(
        "components = orbits",
        components.len(),
        count_orbits(n, m, d).0,
    );
    let off = components
        .iter()
        .filter(|c| c.dimension != c.half_ambient_dim)
        .count();
    report.equal("components whose dimension is not half the ambient", off, 0);
    Ok(report.finish())
}

/// Composition of `a`-truncated maps `(C^k)^{⊗d} → (C^n)^{⊗d}` with
/// `b`-truncated maps `(C^m)^{⊗d} → (C^k)^{⊗d}`.
#[allow(clippy::too_many_arguments)]
pub fn convolution<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    m: usize,
    d: usize,
    a: usize,
    b: usize,
    budget: &Budget,
    rng: &mut R,
) -> Result<VerificationReport> {
    let x = build_intertwiner_space(n, k, d, a, budget)?;
    let y = build_intertwiner_space(k, m, d, b, budget)?;
    let mut report = ReportBuilder::new("convolution")
        .param("n", n)
        .param("k", k)
        .param("m", m)
        .param("d", d)
        .param("a", a)
        .param("b", b);
    report.extend(x.report(budget)?);
    report.extend(y.report(budget)?);
    let c = compose_intertwiners(&x, &y, budget)?;
    let mut inner = c.verify(budget, 500, rng)?;
    for w in &mut inner.witnesses {
        w.claim = format!("a={a} b={b}: {}", w.claim);
    }
    report.extend(inner);
    Ok(report.finish())
}

/// The bridge between zero weight monomials and words, and the Young
/// symmetrizer characters for every `λ ⊢ d`.
pub fn zero_weight(n: usize, d: usize, budget: &Budget) -> Result<VerificationReport> {
    positive("n", n)?;
    positive("d", d)?;
    let mut report = ReportBuilder::new("zero-weight")
        .param("n", n)
        .param("d", d);
    let (bridge, sym, tensor) = zero_weight_bridge(n, d, budget)?;
    report.extend(bridge.verify(&sym, &tensor)?);
    report.extend(young_characters(d, budget)?);
    Ok(report.finish())
}

pub fn young_characters(d: usize, budget: &Budget) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("young-characters").param("d", d);
    for l in enumerate_partitions(d, None) {
        let w = weyl_group_action_on_zero_weight(&l, budget)?;
        report.equal(
            format!("{l}: zero weight dimension = f^λ"),
            w.dim,
            dim_sym_irrep(&l),
        );
        report.equal(
            format!("{l}: zero weight dimension = K(λ, 1^d)"),
            w.dim,
            kostka(&l, &vec![1; d]),
        );
        for (ct, value) in &w.character {
            let expected: BigInt = sym_character(&l, ct)?;
            report.equal(format!("{l}: character at {} = χ^λ", ct.0), value, expected);
        }
    }
    Ok(report.finish())
}

/// For every orbit matrix: the representative pair has that invariant, its
/// margins are the flag types, and `samples` random elements of `GL_d` leave
/// it unchanged. Random flag pairs of every type pair obey the margin
/// contract, and RSK is checked as a bijection onto tableau pairs.
pub fn orbit_parameterization<R: Rng + ?Sized>(
    n: usize,
    m: usize,
    d: usize,
    samples: usize,
    rng: &mut R,
) -> Result<VerificationReport> {
    positive("n", n)?;
    positive("m", m)?;
    let mut report = ReportBuilder::new("orbits")
        .param("n", n)
        .param("m", m)
        .param("d", d)
        .param("samples", samples);
    let (count, labels) = count_orbits(n, m, d);
    report.equal("orbit labels = binomial(nm+d−1, d)", labels.len(), count);
    let mut wrong = 0;
    let mut moved = 0;
    let mut rsk_failures = 0;
    for a in &labels {
        let (f, g) = representative_pair(a);
        if orbit_invariant(&f, &g)? != *a
            || f.ty().steps() != a.row_sums().as_slice()
            || g.ty().steps() != a.col_sums().as_slice()
        {
            wrong += 1;
        }
        for _ in 0..samples {
            let h = random_invertible(d, rng);
            if orbit_invariant(&f.act(&h)?, &g.act(&h)?)? != *a {
                moved += 1;
            }
        }
        let (p, q) = rsk(a);
        if inverse_rsk_with_dims(&p, &q, n, m)? != *a {
            rsk_failures += 1;
        }
    }
    report.equal(
        "representatives with the wrong invariant or margins",
        wrong,
        0,
    );
    report.equal(
        format!(
            "invariants changed by a random g (of {})",
            labels.len() * samples
        ),
        moved,
        0,
    );
    report.equal("RSK roundtrip failures", rsk_failures, 0);
    let mut margins = 0;
    for t1 in FlagType::all(n, d) {
        for t2 in FlagType::all(m, d) {
            let a = orbit_invariant(&Flag::random(&t1, rng), &Flag::random(&t2, rng))?;
            if a.row_sums() != t1.steps() || a.col_sums() != t2.steps() {
                margins += 1;
            }
        }
    }
    report.equal(
        "random flag pairs violating the margin contract",
        margins,
        0,
    );
    Ok(report.finish())
}

/// RSK is a bijection from `n × m` matrices of total `d` onto pairs of
/// semistandard tableaux of one shape: roundtrip on every matrix and
/// injectivity of the image.
pub fn rsk_bijection(n: usize, m: usize, d: usize) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("rsk")
        .param("n", n)
        .param("m", m)
        .param("d", d);
    let labels = CompositionMatrix::enumerate(n, m, d);
    let mut images = std::collections::BTreeSet::new();
    let mut failures = 0;
    for a in &labels {
        let (p, q) = rsk(a);
        if p.shape() != q.shape() || inverse_rsk_with_dims(&p, &q, n, m)? != *a {
            failures += 1;
        }
        images.insert((p.rows().to_vec(), q.rows().to_vec()));
    }
    let pairs: BigUint = enumerate_partitions(d, Some(n.min(m)))
        .iter()
        .map(|l| {
            let ps: BigUint = crate::combinatorics::semistandard_tableaux(l, m)
                .len()
                .into();
            let qs: BigUint = crate::combinatorics::semistandard_tableaux(l, n)
                .len()
                .into();
            ps * qs
        })
        .sum();
    report.equal("roundtrip failures", failures, 0);
    report.equal("distinct images = matrices", images.len(), labels.len());
    report.equal(
        "matrices = tableau pairs of equal shape",
        labels.len(),
        pairs,
    );
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Budget {
        Budget::default()
    }

    fn find<'a>(r: &'a VerificationReport, prefix: &str) -> &'a crate::report::Witness {
        r.witnesses
            .iter()
            .find(|w| w.claim.starts_with(prefix))
            .unwrap()
    }

    #[test]
    fn howe_example() {
        let r = howe(2, 2, 2, &b()).unwrap();
        assert!(r.passed());
        let w = find(&r, "dim S^2(C^2⊗C^2) = 9+1");
        assert_eq!((w.left.as_str(), w.right.as_str()), ("10", "10"));
    }

    #[test]
    fn springer_examples() {
        let r = springer(4, None, &b()).unwrap();
        assert!(r.passed());
        let w = find(&r, "Σ_λ (f^λ)² = 4!");
        assert_eq!(w.left, "24");
        // f^(4) = 1, f^(3,1) = 3, f^(2,2) = 2: 1 + 9 + 4
        let r = springer(4, Some(2), &b()).unwrap();
        assert!(r.passed());
        let w = find(&r, "#{w ∈ S_4 : lds(w) ≤ 2}");
        assert_eq!((w.left.as_str(), w.right.as_str()), ("14", "14"));
        assert!(matches!(
            springer(8, None, &b()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn suites_pass_at_small_sizes() {
        let p = SuiteParams::default();
        for suite in Suite::ALL {
            let r = run_suite(suite, &p, &b()).unwrap();
            assert!(
                r.passed(),
                "{}: {:?}",
                suite.name(),
                r.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn rsk_bijection_small() {
        for (n, m, d) in [(2, 2, 3), (2, 3, 2), (3, 3, 3)] {
            assert!(rsk_bijection(n, m, d).unwrap().passed());
        }
    }

    #[test]
    fn invalid_sizes_are_errors() {
        assert!(matches!(howe(0, 2, 2, &b()), Err(Error::Invalid(_))));
        assert!(matches!(zero_weight(2, 0, &b()), Err(Error::Invalid(_))));
    }
}
