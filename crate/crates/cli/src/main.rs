//! `duality`: runs the verification suites and exposes the calculators.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 budget exceeded, 3 malformed input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gl_duality::combinatorics::Tableau;
use gl_duality::flags::{
    component_census, count_orbits, orbit_invariant, random_invertible, Flag, FlagPairJson,
};
use gl_duality::report::SCHEMA_VERSION;
use gl_duality::rsk::{inverse_rsk, inverse_rsk_with_dims, rsk, CompositionMatrix};
use gl_duality::verify::{run_suite, Suite, SuiteParams, DEFAULT_SEED};
use gl_duality::{Budget, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const SUITES: [&str; 8] = [
    "howe",
    "schur",
    "springer",
    "dimensions",
    "convolution",
    "zero-weight",
    "ginzburg",
    "orbits",
];

#[derive(Debug, Parser)]
#[command(
    name = "duality",
    version,
    about = "Exact checks of (gl_n, gl_m)-duality at desk scale"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Limits {
    /// Largest module dimension any builder may materialize
    /// (default: $DUALITY_BUDGET, else 20000).
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and print its JSON report.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Defaults to the value of --n.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Middle rank for convolution; length bound for springer.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        limits: Limits,
    },
    /// Tabulate components (or orbit strata when k < min(n, m)).
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        /// Nilpotency bound; defaults to min(n, m).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        limits: Limits,
    },
    /// Orbit invariant of a pair of flags read from a JSON file.
    OrbitInvariant {
        file: PathBuf,
        /// Re-check the invariant under this many random elements of GL_d.
        #[arg(long)]
        check_invariance: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// RSK of a matrix, or its inverse on a tableau pair.
    Rsk {
        /// Matrix as a JSON array of arrays.
        #[arg(long, conflicts_with_all = ["p", "q"], required_unless_present_all = ["p", "q"])]
        matrix: Option<String>,
        /// Insertion tableau as a JSON array of rows.
        #[arg(long, requires = "q")]
        p: Option<String>,
        /// Recording tableau as a JSON array of rows.
        #[arg(long, requires = "p")]
        q: Option<String>,
        /// Row count of the recovered matrix (inverse only).
        #[arg(long, requires = "p")]
        rows: Option<usize>,
        /// Column count of the recovered matrix (inverse only).
        #[arg(long, requires = "p")]
        cols: Option<usize>,
    },
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Checks,
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Checks => 1,
            Failure::Library(Error::BudgetExceeded { .. }) => 2,
            Failure::Library(_) => 3,
        }
    }
}

fn budget(limits: &Limits) -> Result<Budget, Failure> {
    match limits.budget {
        Some(b) => Ok(Budget::new(b)),
        None => Ok(Budget::from_env()?),
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print_json(value: &impl serde::Serialize) {
    emit(&(serde_json::to_string_pretty(value).expect("serializable output") + "\n"));
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")).into())
}

fn cmd_verify(suite: &str, params: SuiteParams, limits: &Limits) -> Result<(), Failure> {
    let budget = budget(limits)?;
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, &params, &budget)?;
    print_json(&report);
    eprintln!("{}", report.summary());
    for w in report.failures() {
        eprintln!("  failed: {}: {} ≠ {}", w.claim, w.left, w.right);
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_census(
    n: usize,
    m: usize,
    d: usize,
    k: Option<usize>,
    csv: bool,
    limits: &Limits,
) -> Result<(), Failure> {
    let budget = budget(limits)?;
    let (orbits, _) = count_orbits(n, m, d);
    budget.check(
        format!("census of {n}×{m} matrices of total {d}"),
        u128::try_from(&orbits).unwrap_or(u128::MAX),
    )?;
    let k = k.unwrap_or(n.min(m));
    let census = component_census(n, m, d, k)?;
    let (rows, consistent): (Vec<Value>, bool) = match &census.components {
        Some(components) => (
            components
                .iter()
                .map(|c| {
                    json!({
                        "matrix": c.matrix,
                        "weight": [c.weight.0, c.weight.1],
                        "dimension": c.dimension,
                        "half_ambient_dim": c.half_ambient_dim,
                    })
                })
                .collect(),
            components.iter().all(|c| c.dimension == c.half_ambient_dim)
                && orbits == components.len().into(),
        ),
        None => (
            census
                .strata
                .iter()
                .map(|s| {
                    json!({
                        "lambda": s.lambda,
                        "weight": [s.row_type.steps(), s.col_type.steps()],
                        "dimension": s.dimension,
                        "half_ambient_dim": s.half_ambient_dim,
                    })
                })
                .collect(),
            census
                .strata
                .iter()
                .all(|s| s.dimension == s.half_ambient_dim),
        ),
    };
    let kind = if census.components.is_some() {
        "components"
    } else {
        "strata"
    };
    if csv {
        let label = if census.components.is_some() {
            "matrix"
        } else {
            "lambda"
        };
        let mut text = format!("{label},row_weight,col_weight,dimension,half_ambient_dim\n");
        for r in &rows {
            let key = r.get("matrix").or_else(|| r.get("lambda")).unwrap();
            text += &format!(
                "\"{}\",\"{}\",\"{}\",{},{}\n",
                key, r["weight"][0], r["weight"][1], r["dimension"], r["half_ambient_dim"]
            );
        }
        text += &format!(
            "total,{},orbits,{},{}\n",
            rows.len(),
            orbits,
            if consistent { "ok" } else { "mismatch" }
        );
        emit(&text);
    } else {
        print_json(&json!({
            "schema": SCHEMA_VERSION,
            "n": n,
            "m": m,
            "d": d,
            "k": k,
            "kind": kind,
            "rows": rows,
            "totals": {
                "rows": rows.len(),
                "orbits": orbits.to_string(),
                "consistent": consistent,
            },
        }));
    }
    eprintln!(
        "{} {kind} for n={n} m={m} d={d} k={k}; {orbits} orbits; {}",
        rows.len(),
        if consistent {
            "consistent"
        } else {
            "INCONSISTENT"
        }
    );
    if consistent {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn read_flags(file: &PathBuf) -> Result<(Flag, Flag), Failure> {
    let text =
        fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
    let pair: FlagPairJson = parse_json(&file.display().to_string(), &text)?;
    fn label(which: &'static str) -> impl Fn(Error) -> Error {
        move |e: Error| match e {
            Error::InvalidFlag { index, reason } => Error::InvalidFlag {
                index,
                reason: format!("{which} flag: {reason}"),
            },
            other => Error::Parse(format!("{which} flag: {other}")),
        }
    }
    let first = Flag::from_json(&pair.first).map_err(label("first"))?;
    let second = Flag::from_json(&pair.second).map_err(label("second"))?;
    Ok((first, second))
}

fn cmd_orbit_invariant(file: &PathBuf, samples: Option<usize>, seed: u64) -> Result<(), Failure> {
    let (f, g) = read_flags(file)?;
    let a = orbit_invariant(&f, &g)?;
    let mut out = json!({ "schema": SCHEMA_VERSION, "invariant": a });
    let mut preserved = true;
    if let Some(samples) = samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut changed = 0;
        for _ in 0..samples {
            let h = random_invertible(f.d(), &mut rng);
            if orbit_invariant(&f.act(&h)?, &g.act(&h)?)? != a {
                changed += 1;
            }
        }
        preserved = changed == 0;
        out["invariance"] = json!({ "samples": samples, "seed": seed, "changed": changed });
    }
    print_json(&out);
    eprintln!(
        "orbit invariant {a}{}",
        if preserved {
            ""
        } else {
            "; NOT preserved under GL_d"
        }
    );
    if preserved {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_rsk(
    matrix: Option<String>,
    p: Option<String>,
    q: Option<String>,
    rows: Option<usize>,
    cols: Option<usize>,
) -> Result<(), Failure> {
    if let Some(text) = matrix {
        let a: CompositionMatrix = parse_json("--matrix", &text)?;
        let (p, q) = rsk(&a);
        print_json(&json!({ "schema": SCHEMA_VERSION, "p": p, "q": q, "shape": p.shape() }));
        eprintln!("RSK of {a}: shape {}", p.shape());
        return Ok(());
    }
    let (p, q) = (p.expect("clap requires p"), q.expect("clap requires q"));
    let p: Tableau = parse_json("--p", &p)?;
    let q: Tableau = parse_json("--q", &q)?;
    let a = match (rows, cols) {
        (None, None) => inverse_rsk(&p, &q)?,
        (r, c) => inverse_rsk_with_dims(
            &p,
            &q,
            r.unwrap_or(q.max_entry()),
            c.unwrap_or(p.max_entry()),
        )?,
    };
    print_json(&json!({ "schema": SCHEMA_VERSION, "matrix": a }));
    eprintln!("inverse RSK: {a}");
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify {
            suite,
            n,
            m,
            d,
            k,
            a,
            b,
            seed,
            limits,
        } => {
            let params = SuiteParams {
                n,
                m: m.unwrap_or(n),
                d,
                k,
                a,
                b,
                seed,
            };
            cmd_verify(&suite, params, &limits)
        }
        Command::Census {
            n,
            m,
            d,
            k,
            json: _,
            csv,
            limits,
        } => cmd_census(n, m, d, k, csv, &limits),
        Command::OrbitInvariant {
            file,
            check_invariance,
            seed,
        } => cmd_orbit_invariant(&file, check_invariance, seed),
        Command::Rsk {
            matrix,
            p,
            q,
            rows,
            cols,
        } => cmd_rsk(matrix, p, q, rows, cols),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Failure::Library(e) = &f {
                eprintln!("error: {e}");
            }
            ExitCode::from(f.code())
        }
    }
}
