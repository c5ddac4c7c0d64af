//! The acceptance criteria, run in order with one PASS/FAIL line each.
//! Exits non-zero if any criterion fails or overruns its time limit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gl_duality::combinatorics::{dim_sym_irrep, enumerate_partitions, factorial};
use gl_duality::report::VerificationReport;
use gl_duality::rsk::{inverse_rsk, rsk, CompositionMatrix, Permutation};
use gl_duality::verify::{
    convolution, dimensions, howe_identity, isotypic_structure, orbit_parameterization,
    rsk_bijection, schur_duality, springer, young_characters, zero_weight, DEFAULT_SEED,
};
use gl_duality::{Budget, Result};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    checks: usize,
    witnesses: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checks: 0,
            witnesses: 0,
            failures: Vec::new(),
        }
    }

    fn add(&mut self, report: Result<VerificationReport>) {
        self.checks += 1;
        match report {
            Ok(r) => {
                self.witnesses += r.witnesses.len();
                for w in r.failures() {
                    self.failures.push(format!(
                        "{} {:?}: {} ({} ≠ {})",
                        r.check, r.params, w.claim, w.left, w.right
                    ));
                }
            }
            Err(e) => self.failures.push(format!("error: {e}")),
        }
    }

    fn claim(&mut self, what: String, holds: bool) {
        self.checks += 1;
        self.witnesses += 1;
        if !holds {
            self.failures.push(what);
        }
    }
}

fn howe_dimension_identity(_: &Budget) -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=4 {
        for m in 1..=4 {
            for d in 1..=6 {
                out.add(Ok(howe_identity(n, m, d)));
            }
        }
    }
    out
}

fn isotypic_decomposition(budget: &Budget) -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=3 {
        for m in 1..=3 {
            for d in 1..=4 {
                out.add(isotypic_structure(n, m, d, budget));
            }
        }
    }
    out
}

fn orbit_parameterization_and_rsk(_: &Budget) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for n in 1..=3 {
        for m in 1..=3 {
            for d in 1..=4 {
                out.add(orbit_parameterization(n, m, d, 50, &mut rng));
            }
            for d in 1..=5 {
                out.add(rsk_bijection(n, m, d));
            }
        }
    }
    for d in 1..=5 {
        let mut ok = true;
        let mut images = std::collections::BTreeSet::new();
        for w in Permutation::all(d) {
            let mut rows = vec![vec![0; d]; d];
            for (i, &x) in w.word().iter().enumerate() {
                rows[i][x - 1] = 1;
            }
            let a = CompositionMatrix::new(rows).unwrap();
            let (p, q) = rsk(&a);
            ok &= inverse_rsk(&p, &q).is_ok_and(|back| back == a);
            images.insert((p.rows().to_vec(), q.rows().to_vec()));
        }
        out.claim(format!("RS roundtrip on S_{d}"), ok);
        out.claim(
            format!("RS is injective on S_{d}"),
            BigUint::from(images.len()) == factorial(d),
        );
    }
    out
}

fn component_dimensions(_: &Budget) -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=3 {
        for m in 1..=3 {
            for d in 1..=5 {
                out.add(dimensions(n, m, d));
            }
        }
    }
    out
}

fn schur_weyl_duality(budget: &Budget) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for n in 1..=3 {
        for d in 1..=4 {
            out.add(schur_duality(n, d, budget, &mut rng));
        }
    }
    out.add(schur_duality(2, 5, budget, &mut rng));
    out
}

fn springer_correspondence(budget: &Budget) -> Outcome {
    let mut out = Outcome::new();
    for d in 1..=8 {
        let squares: BigUint = enumerate_partitions(d, None)
            .iter()
            .map(|l| dim_sym_irrep(l).pow(2))
            .sum();
        out.claim(format!("Σ (f^λ)² = {d}!"), squares == factorial(d));
    }
    // The exhaustive scan over S_8 needs 8! > the default budget.
    out.add(springer(8, None, &Budget::new(budget.max_dim.max(40_320))));
    for d in 1..=7 {
        for k in 1..=d {
            out.add(springer(d, Some(k), budget));
        }
    }
    out
}

fn ginzburg_surjection(budget: &Budget) -> Outcome {
    let mut out = Outcome::new();
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        out.add(gl_duality::schur::verify_ginzburg_surjection(n, d, budget));
    }
    out
}

fn convolution_min_rule(budget: &Budget) -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for n in 1..=2 {
        for k in 1..=2 {
            for m in 1..=2 {
                for d in 1..=3 {
                    for a in 1..=3 {
                        for b in 1..=3 {
                            out.add(convolution(n, k, m, d, a, b, budget, &mut rng));
                        }
                    }
                }
            }
        }
    }
    out
}

fn zero_weight_bridge(budget: &Budget) -> Outcome {
    let mut out = Outcome::new();
    for n in 1..=2 {
        for d in 1..=3 {
            out.add(zero_weight(n, d, budget));
        }
    }
    for d in 1..=4 {
        out.add(young_characters(d, budget));
    }
    out
}

type Criterion = (&'static str, u64, fn(&Budget) -> Outcome);

const CRITERIA: [Criterion; 9] = [
    ("1 Howe dimension identity", 1, howe_dimension_identity),
    (
        "2 isotypic structure of the symmetric model",
        30,
        isotypic_decomposition,
    ),
    (
        "3 orbit parameterization and RSK bijectivity",
        60,
        orbit_parameterization_and_rsk,
    ),
    ("4 component dimensions", 10, component_dimensions),
    ("5 Schur duality", 60, schur_weyl_duality),
    (
        "6 Springer correspondence and lds truncation",
        30,
        springer_correspondence,
    ),
    ("7 Ginzburg surjection", 120, ginzburg_surjection),
    ("8 convolution min-rule", 120, convolution_min_rule),
    (
        "9 zero-weight bridge and Young characters",
        60,
        zero_weight_bridge,
    ),
];

fn main() -> ExitCode {
    let budget = Budget::default();
    let mut all_passed = true;
    for (name, limit, run) in CRITERIA {
        let started = Instant::now();
        let outcome = run(&budget);
        let elapsed = started.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let passed = outcome.failures.is_empty() && in_time;
        all_passed &= passed;
        println!(
            "{} criterion {name}: {} checks, {} witnesses, {:.2}s (limit {limit}s)",
            if passed { "PASS" } else { "FAIL" },
            outcome.checks,
            outcome.witnesses,
            elapsed.as_secs_f64(),
        );
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
        if !in_time {
            println!("    exceeded the time limit");
        }
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
