//! Command-line front end. [`run`] is a pure function of the configuration
//! and the input bytes so it can be tested without a process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::json;

use crate::binomial::{binomial_factor_search, FactorClass, FoundFactor};
use crate::bounds::{
    adaptive_delta, linear_candidates, test_linear_factor_adaptive, BoundReport, LinearCandidate,
};
use crate::dense::DensePoly2;
use crate::engine::{check_divides, factor, FactorJson};
use crate::error::{Error, Untested};
use crate::gap::{compute_c, decompose, delta_absolute, delta_rational, GapMode, GapParameters, GapPolicy};
use crate::sparse::SparsePolynomial;
use crate::univariate::find_low_degree_factors;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DENSE_LIMIT: i32 = 3;
pub const EXIT_CONFIG: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// An expression such as `3*x^5*y - 2`.
    Text,
    /// `{"terms":[{"c":"3","ex":"5","ey":"1"}, ...]}`.
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "lacunary", version, about = "Low-degree factors of sparse bivariate polynomials over Q")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Args)]
pub struct CliConfig {
    /// Degree bound for the factors.
    #[arg(short = 'd', long = "degree", default_value_t = 1, global = true)]
    pub degree: usize,
    /// Input file; standard input when absent.
    #[arg(long, global = true)]
    pub input: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Text, global = true)]
    pub format: InputFormat,
    /// Largest total degree a piece may have when made dense.
    #[arg(long, default_value_t = 2000, global = true)]
    pub dense_limit: usize,
    /// Use this gap instead of the certified one (results may be incomplete).
    #[arg(long, global = true)]
    pub heuristic_delta: Option<BigUint>,
    /// Emit JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with status 3 when some check could not be run.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// All irreducible factors of degree at most d, with multiplicities.
    Factor {
        /// Treat the input as a polynomial in one variable.
        #[arg(long)]
        univariate: bool,
    },
    /// Factors that are products of binomials.
    Binomial,
    /// Factors of a polynomial in one variable.
    Univariate,
    /// Split the input at the gap.
    Decompose,
    /// Factor-count bounds and gap lengths.
    Bounds {
        /// Number of variables in the bound.
        #[arg(long, default_value_t = 2)]
        vars: u64,
    },
    /// Test linear factors a*x + b*y + c.
    TestLinear(TestLinear),
}

#[derive(Clone, Debug, Args)]
pub struct TestLinear {
    /// One candidate as `a,b,c`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "height")]
    pub candidate: Option<String>,
    /// Every candidate with coefficients at most this in absolute value.
    #[arg(long)]
    pub height: Option<u64>,
    /// Use the gap adapted to each candidate.
    #[arg(long)]
    pub adaptive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::DenseLimitExceeded { .. } => EXIT_DENSE_LIMIT,
        _ => EXIT_CONFIG,
    }
}

fn policy(config: &CliConfig) -> GapPolicy {
    GapPolicy {
        dense_limit: config.dense_limit,
        heuristic_delta: config.heuristic_delta.clone(),
    }
}

fn validate(config: &CliConfig) -> Result<(), String> {
    if config.degree == 0 {
        return Err("degree bound must be at least 1".into());
    }
    if config.dense_limit == 0 {
        return Err("dense limit must be at least 1".into());
    }
    if config.heuristic_delta.as_ref().is_some_and(|k| *k == BigUint::ZERO) {
        return Err("heuristic delta must be at least 1".into());
    }
    Ok(())
}

fn parse_input(format: InputFormat, input: &[u8]) -> crate::Result<SparsePolynomial> {
    let text = std::str::from_utf8(input).map_err(|e| Error::parse(e.valid_up_to(), "input is not UTF-8"))?;
    match format {
        InputFormat::Text => text.trim().parse(),
        InputFormat::Json => SparsePolynomial::from_json_str(text),
    }
}

/// Runs one command on the given input.
pub fn run(config: &CliConfig, command: &Command, input: &[u8]) -> Outcome {
    if let Err(msg) = validate(config) {
        return Outcome::fail(EXIT_CONFIG, msg);
    }
    let f = match parse_input(config.format, input) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_PARSE, e),
    };
    let result = match command {
        Command::Factor { univariate: false } => run_factor(config, &f),
        Command::Factor { univariate: true } | Command::Univariate => run_univariate(config, &f),
        Command::Binomial => run_binomial(config, &f),
        Command::Decompose => run_decompose(config, &f),
        Command::Bounds { vars } => run_bounds(config, &f, *vars),
        Command::TestLinear(t) => run_test_linear(config, &f, t),
    };
    match result {
        Ok(report) => {
            let mut out = Outcome::ok(report.text);
            if !report.untested.is_empty() {
                for u in &report.untested {
                    let _ = writeln!(out.stderr, "untested: {u}");
                }
                if config.strict {
                    out.code = EXIT_DENSE_LIMIT;
                }
            }
            out
        }
        Err(e) => Outcome::fail(exit_code(&e), e),
    }
}

/// Parses command-line arguments and runs; the input is read from the
/// `--input` file or from `stdin`.
pub fn run_args<I, T>(args: I, stdin: impl FnOnce() -> std::io::Result<Vec<u8>>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_CONFIG,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let input = match &cli.config.input {
        Some(path) => std::fs::read(path),
        None => stdin(),
    };
    match input {
        Ok(bytes) => run(&cli.config, &cli.command, &bytes),
        Err(e) => Outcome::fail(EXIT_CONFIG, format!("cannot read input: {e}")),
    }
}

struct Report {
    text: String,
    untested: Vec<Untested>,
}

fn render<T: Serialize>(config: &CliConfig, value: &T, text: String, untested: Vec<Untested>) -> Report {
    let text = if config.json {
        let mut s = serde_json::to_string_pretty(value).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    };
    Report { text, untested }
}

fn delta_label(heuristic: bool) -> &'static str {
    if heuristic {
        "heuristic, unverified"
    } else {
        "certified"
    }
}

#[derive(Serialize)]
struct FactorListJson {
    x_mult: String,
    y_mult: String,
    factors: Vec<FactorJson>,
    untested: Vec<Untested>,
    delta: String,
    heuristic: bool,
}

fn factor_list_text(
    x_mult: &BigUint,
    y_mult: &BigUint,
    factors: &[FoundFactor],
    delta: &BigUint,
    heuristic: bool,
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "x multiplicity: {x_mult}");
    let _ = writeln!(s, "y multiplicity: {y_mult}");
    let _ = writeln!(s, "delta: {delta} ({})", delta_label(heuristic));
    for f in factors {
        let _ = writeln!(
            s,
            "{}  multiplicity {}  {}",
            f.poly.to_sparse(),
            f.multiplicity,
            f.class.as_str()
        );
    }
    s
}

fn factor_list(
    config: &CliConfig,
    x_mult: BigUint,
    y_mult: BigUint,
    factors: Vec<FoundFactor>,
    untested: Vec<Untested>,
    delta: BigUint,
) -> Report {
    let heuristic = config.heuristic_delta.is_some();
    let text = factor_list_text(&x_mult, &y_mult, &factors, &delta, heuristic);
    let json = FactorListJson {
        x_mult: x_mult.to_string(),
        y_mult: y_mult.to_string(),
        factors: factors
            .iter()
            .map(|f| FactorJson {
                poly: f.poly.to_sparse().to_json(),
                mult: f.multiplicity,
                class: f.class,
            })
            .collect(),
        untested: untested.clone(),
        delta: delta.to_string(),
        heuristic,
    };
    render(config, &json, text, untested)
}

fn run_factor(config: &CliConfig, f: &SparsePolynomial) -> crate::Result<Report> {
    let out = factor(f, config.degree, &policy(config))?;
    let mut report = render(
        config,
        &out.to_json(),
        factor_list_text(
            &out.x_multiplicity,
            &out.y_multiplicity,
            &out.factors,
            &out.parameters.delta,
            out.heuristic,
        ),
        out.untested.clone(),
    );
    if out.conflicts > 0 {
        report.untested.push(Untested {
            what: format!("{} disagreements between the binomial and gap searches", out.conflicts),
            required: BigUint::ZERO,
            limit: config.dense_limit,
        });
    }
    Ok(report)
}

fn run_univariate(config: &CliConfig, f: &SparsePolynomial) -> crate::Result<Report> {
    let policy = policy(config);
    let out = find_low_degree_factors(f, config.degree, &policy)?;
    let (_, _, g) = f.strip_monomial()?;
    let delta = policy.delta(&g, config.degree)?;
    let (x_mult, y_mult) = match out.var {
        crate::Var::X => (out.z_multiplicity.clone(), BigUint::ZERO),
        crate::Var::Y => (BigUint::ZERO, out.z_multiplicity.clone()),
    };
    let factors = out
        .factors
        .iter()
        .map(|u| FoundFactor {
            poly: DensePoly2::from_univariate(&u.poly, out.var),
            multiplicity: u.multiplicity,
            class: if u.cyclotomic {
                FactorClass::Cyclotomic
            } else {
                FactorClass::Binomial
            },
        })
        .collect();
    Ok(factor_list(config, x_mult, y_mult, factors, out.untested, delta))
}

fn run_binomial(config: &CliConfig, f: &SparsePolynomial) -> crate::Result<Report> {
    let policy = policy(config);
    let (a, b, g) = f.strip_monomial()?;
    let delta = if g.is_constant() {
        BigUint::ZERO
    } else {
        policy.delta(&g, config.degree)?
    };
    let out = binomial_factor_search(&g, config.degree, &policy)?;
    Ok(factor_list(config, a, b, out.factors, out.untested, delta))
}

fn run_decompose(config: &CliConfig, f: &SparsePolynomial) -> crate::Result<Report> {
    let delta = policy(config).delta(f, config.degree)?;
    let dec = decompose(f, &delta, &delta)?;
    let mut text = String::new();
    let _ = writeln!(text, "delta: {delta} ({})", delta_label(config.heuristic_delta.is_some()));
    for p in &dec.pieces {
        let _ = writeln!(text, "x^{}*y^{} * ({})", p.gamma, p.delta_off, p.poly);
    }
    Ok(render(config, &dec.to_json(), text, Vec::new()))
}

fn run_bounds(config: &CliConfig, f: &SparsePolynomial, vars: u64) -> crate::Result<Report> {
    if vars == 0 {
        return Err(Error::InvalidArgument("number of variables must be at least 1".into()));
    }
    let (_, _, g) = f.strip_monomial()?;
    let mut report = BoundReport::for_polynomial(&g)?;
    if vars != report.n {
        report = BoundReport::new(vars, report.h1_upper, report.degree);
    }
    let d = config.degree;
    let padded = GapParameters::padded(f, d, GapMode::Rational)?;
    let c = compute_c(&g)?;
    let rational = delta_rational(d, &c);
    let absolute = delta_absolute(d, &c);
    let j = report.to_json();
    let value = json!({
        "n": j.n,
        "h1_upper": j.h1_upper,
        "degree": j.degree,
        "bound_rational": j.bound_rational,
        "bound_absolute": j.bound_absolute,
        "delta_rational": rational.to_string(),
        "delta_absolute": absolute.to_string(),
        "delta_padded": padded.delta.to_string(),
    });
    let mut text = String::new();
    let _ = writeln!(text, "height bound c: {:.6}", crate::numeric::to_f64(&c));
    let _ = writeln!(text, "total degree: {}", j.degree);
    let _ = writeln!(text, "factor count bound over Q: {}", j.bound_rational);
    let _ = writeln!(text, "factor count bound over the closure: {}", j.bound_absolute);
    let _ = writeln!(text, "gap for degree {d} over Q: {rational}");
    let _ = writeln!(text, "gap for degree {d} over the closure: {absolute}");
    let _ = writeln!(text, "gap padded for derivatives: {}", padded.delta);
    Ok(render(config, &value, text, Vec::new()))
}

fn parse_candidate(s: &str) -> crate::Result<LinearCandidate> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::InvalidCandidate(format!("expected a,b,c but got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let v: Vec<BigInt> = parts
        .iter()
        .map(|p| p.parse::<BigInt>().map_err(|_| bad()))
        .collect::<crate::Result<_>>()?;
    LinearCandidate::new(v[0].clone(), v[1].clone(), v[2].clone())
}

#[derive(Serialize)]
struct LinearResultJson {
    a: String,
    b: String,
    c: String,
    divides: bool,
    delta: String,
}

fn run_test_linear(config: &CliConfig, f: &SparsePolynomial, t: &TestLinear) -> crate::Result<Report> {
    let candidates = match (&t.candidate, t.height) {
        (Some(c), None) => vec![parse_candidate(c)?],
        (None, Some(h)) if h >= 1 => linear_candidates(h),
        _ => {
            return Err(Error::InvalidArgument(
                "give either --candidate a,b,c or --height H >= 1".into(),
            ))
        }
    };
    let (_, _, g) = f.strip_monomial()?;
    let general = delta_rational(1, &compute_c(&g)?);
    let mut results = Vec::new();
    let mut untested = Vec::new();
    let mut text = String::new();
    for p in candidates {
        let delta = if t.adaptive { adaptive_delta(&g, &p)? } else { general.clone() };
        let outcome = if t.adaptive {
            test_linear_factor_adaptive(&g, &p, config.dense_limit)
        } else {
            check_divides(&g, &p.to_dense(), &delta, config.dense_limit)
        };
        let (a, b, c) = p.coefficients();
        let divides = match outcome {
            Ok(v) => v,
            Err(e) => {
                untested.push(Untested::from_error(format!("candidate {a},{b},{c}"), e)?);
                continue;
            }
        };
        if divides {
            let _ = writeln!(text, "{}  divides  (delta {delta})", p.to_dense().to_sparse());
        }
        results.push(LinearResultJson {
            a: a.to_string(),
            b: b.to_string(),
            c: c.to_string(),
            divides,
            delta: delta.to_string(),
        });
    }
    if text.is_empty() {
        text.push_str("no linear factor among the candidates\n");
    }
    let value = json!({ "results": results, "untested": untested });
    Ok(render(config, &value, text, untested))
}
