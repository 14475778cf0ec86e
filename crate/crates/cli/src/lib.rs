//! Command-line front end: argument parsing, dispatch, and text, JSON or
//! DOT rendering of the results.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lyubeznik_core::invariants::{bound_b, hochster_huneke_graph, multiplicities};
use lyubeznik_core::monomial::{parse_ideal, parse_ideal_in};
use lyubeznik_core::verify::{check_complex, check_ideal, generate_corpus, golden, CheckReport, CorpusConfig, Reports};
use lyubeznik_core::{Error, FieldSpec, LocalCohomology, MonomialIdeal, PolynomialRing, SimplicialComplex, Subset};

pub use render::{render_dot, render_reports, render_table};

/// Rings with more variables are refused; every computation walks all
/// subsets of the variables.
pub const MAX_CLI_VARIABLES: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "lyubeznik", version, about = "Lyubeznik numbers of monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Characteristic of the coefficient field, 0 or a prime.
    #[arg(long = "char", global = true, default_value_t = 0)]
    pub characteristic: u64,
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct IdealInput {
    /// Generators such as "x^2*y, y*z", optionally preceded by "ring: x, y, z;".
    pub ideal: Option<String>,
    /// Comma-separated variable names, in order.
    #[arg(long, value_delimiter = ',')]
    pub ring: Option<Vec<String>>,
    /// Read the ideal from this file.
    #[arg(long, conflicts_with = "ideal")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lyubeznik table of S/I.
    Table(IdealInput),
    /// Lyubeznik table of S/I localized at a monomial prime.
    Localize {
        #[command(flatten)]
        input: IdealInput,
        /// Variables generating the prime; it must contain the radical of I.
        #[arg(long, value_delimiter = ',', required = true)]
        at: Vec<String>,
    },
    /// Standard polarization and its height shift.
    Polarize(IdealInput),
    /// Multiplicities m, and the gamma and lambda^0 tables.
    Gamma(IdealInput),
    /// Generalized Lyubeznik numbers lambda^0_j.
    Genlyu(IdealInput),
    /// Hochster-Huneke graph of S/sqrt(I).
    Hhgraph {
        #[command(flatten)]
        input: IdealInput,
        /// Emit the graph in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Upper bound B for Lyubeznik numbers at every prime.
    Bound(IdealInput),
    /// Run the executable checks on a seeded random corpus.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random complexes.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Number of random monomial ideals [default: count / 4, at least 1].
        #[arg(long)]
        ideals: Option<usize>,
        /// Vertex limit for random complexes (at most 8).
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        /// Comma-separated characteristics.
        #[arg(long, value_delimiter = ',', default_value = "0,2")]
        chars: Vec<u64>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for internal failures, 2 for bad input.
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(
                Error::InternalInconsistency(_)
                | Error::NotAComplex
                | Error::NotAChainMap
                | Error::NotCommutative { .. },
            ) => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }
}

/// Text to print and whether the command succeeded (a failed `verify` still
/// prints its report).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub success: bool,
}

#[derive(Serialize)]
struct Envelope<'a, R: Serialize> {
    version: &'static str,
    ring: Vec<String>,
    generators: &'a [Vec<u32>],
    char: serde_json::Value,
    result: R,
}

#[derive(Debug, Serialize)]
pub struct TableResult {
    pub d: usize,
    pub entries: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct LocalizedResult {
    pub at: Vec<String>,
    pub d: usize,
    pub entries: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
pub struct PolarizeResult {
    pub ring: Vec<String>,
    pub generators: Vec<Vec<u32>>,
    pub text: String,
    pub height_shift: usize,
}

#[derive(Debug, Serialize)]
pub struct MultiplicityEntry {
    pub j: usize,
    pub sigma: Vec<String>,
    pub m: usize,
}

#[derive(Debug, Serialize)]
pub struct GammaResult {
    pub n: usize,
    pub m: Vec<MultiplicityEntry>,
    pub gamma: Vec<Vec<usize>>,
    pub lambda0: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct GenlyuResult {
    pub lambda0: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct GraphResult {
    /// Generators of the minimal prime behind each vertex.
    pub vertices: Vec<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
    pub components: Vec<usize>,
    pub component_count: usize,
}

#[derive(Debug, Serialize)]
pub struct BoundResult {
    pub bound: usize,
}

#[derive(Debug, Serialize)]
pub struct VerifyResult {
    pub passed: bool,
    pub seed: u64,
    pub complexes: usize,
    pub ideals: usize,
    pub reports: Vec<CheckReport>,
}

fn read_ideal(input: &IdealInput) -> Result<MonomialIdeal, CliError> {
    let text = match (&input.ideal, &input.file) {
        (Some(text), _) => text.clone(),
        (None, Some(path)) => {
            std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?
        }
        (None, None) => return Err(CliError::Usage("no ideal given; pass it inline or with --file".into())),
    };
    if let Some(names) = &input.ring {
        guard_size(names.len())?;
        let ring = PolynomialRing::new(names.iter().map(|s| s.trim().to_string()).collect())?;
        return Ok(parse_ideal_in(&ring, &text)?);
    }
    let ideal = parse_ideal(&text)?;
    guard_size(ideal.n())?;
    Ok(ideal)
}

fn guard_size(n: usize) -> Result<(), CliError> {
    if n > MAX_CLI_VARIABLES {
        return Err(CliError::Usage(format!(
            "{n} variables given; at most {MAX_CLI_VARIABLES} are supported because the computation enumerates all subsets"
        )));
    }
    Ok(())
}

fn names_of(ring: &PolynomialRing, s: Subset) -> Vec<String> {
    s.iter().map(|i| ring.name(i).to_string()).collect()
}

fn complex_of(ideal: &MonomialIdeal) -> Result<SimplicialComplex, CliError> {
    Ok(ideal.radical().stanley_reisner()?)
}

fn envelope<R: Serialize>(ideal: Option<&MonomialIdeal>, char: serde_json::Value, result: R) -> String {
    let env = Envelope {
        version: env!("CARGO_PKG_VERSION"),
        ring: ideal.map(|i| i.ring().names().to_vec()).unwrap_or_default(),
        generators: ideal.map(|i| i.generators()).unwrap_or(&[]),
        char,
        result,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("plain data serializes");
    s.push('\n');
    s
}

fn field_label(field: FieldSpec) -> String {
    match field.characteristic() {
        0 => "Q".to_string(),
        p => format!("GF({p})"),
    }
}

/// Runs one parsed command line.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let field = FieldSpec::new(cli.characteristic)?;
    let char_json = serde_json::Value::from(cli.characteristic);
    let done = |text: String| Ok(Outcome { text, success: true });
    match &cli.command {
        Command::Table(input) => {
            let ideal = read_ideal(input)?;
            let delta = complex_of(&ideal)?;
            let table = with_lc(&delta, field, |lc| Ok(lc.table()))?;
            let result = TableResult { d: table.d(), entries: table.entries().to_vec() };
            if cli.json {
                return done(envelope(Some(&ideal), char_json, result));
            }
            done(format!("d = {} over {}\n{}", result.d, field_label(field), render_table(&result.entries)))
        }
        Command::Localize { input, at } => {
            let ideal = read_ideal(input)?;
            let ring = ideal.ring();
            let mut prime = Subset::EMPTY;
            for name in at {
                let name = name.trim();
                let i = ring.index_of(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                prime = prime.with(i);
            }
            let face = prime.complement(ring.n());
            let delta = complex_of(&ideal)?;
            if !delta.is_face(face) {
                return Err(CliError::Usage(format!(
                    "the prime ({}) does not contain the radical of the ideal",
                    names_of(ring, prime).join(", ")
                )));
            }
            let table = with_lc(&delta, field, |lc| lc.table_at_face(face))?;
            let result = LocalizedResult { at: names_of(ring, prime), d: table.d(), entries: table.entries().to_vec() };
            if cli.json {
                return done(envelope(Some(&ideal), char_json, result));
            }
            done(format!(
                "at ({}): d = {} over {}\n{}",
                result.at.join(", "),
                result.d,
                field_label(field),
                render_table(&result.entries)
            ))
        }
        Command::Polarize(input) => {
            let ideal = read_ideal(input)?;
            let pol = ideal.polarize();
            let result = PolarizeResult {
                ring: pol.ideal.ring().names().to_vec(),
                generators: pol.ideal.generators().to_vec(),
                text: pol.ideal.generators_text(),
                height_shift: pol.height_shift,
            };
            if cli.json {
                return done(envelope(Some(&ideal), char_json, result));
            }
            done(format!("ring: {}\n{}\nh = {}\n", result.ring.join(", "), result.text, result.height_shift))
        }
        Command::Gamma(input) | Command::Genlyu(input) => {
            let ideal = read_ideal(input)?;
            let table = multiplicities(&complex_of(&ideal)?, field)?;
            if matches!(cli.command, Command::Genlyu(_)) {
                let result = GenlyuResult { lambda0: table.lambda0 };
                if cli.json {
                    return done(envelope(Some(&ideal), char_json, result));
                }
                let parts: Vec<String> =
                    result.lambda0.iter().enumerate().map(|(j, v)| format!("lambda0_{j} = {v}")).collect();
                return done(format!("{}\n", parts.join("\n")));
            }
            let mut m = Vec::new();
            for (j, row) in table.m.iter().enumerate() {
                for (&sigma, &v) in row {
                    m.push(MultiplicityEntry { j, sigma: names_of(ideal.ring(), sigma), m: v });
                }
            }
            let result = GammaResult { n: table.n, m, gamma: table.gamma, lambda0: table.lambda0 };
            if cli.json {
                return done(envelope(Some(&ideal), char_json, result));
            }
            let mut out = String::from("m_{j,sigma} (H^j_I(S) factor supported on the prime of sigma):\n");
            for e in &result.m {
                out.push_str(&format!("  j = {}  sigma = {{{}}}  m = {}\n", e.j, e.sigma.join(","), e.m));
            }
            out.push_str("gamma_{i,j}:\n");
            out.push_str(&render_table(&result.gamma));
            out.push_str(&format!("lambda0: {:?}\n", result.lambda0));
            done(out)
        }
        Command::Hhgraph { input, dot } => {
            let ideal = read_ideal(input)?;
            let graph = hochster_huneke_graph(&complex_of(&ideal)?)?;
            let n = ideal.n();
            let result = GraphResult {
                vertices: graph.vertices.iter().map(|f| names_of(ideal.ring(), f.complement(n))).collect(),
                edges: graph.edges.iter().map(|&(a, b)| [a, b]).collect(),
                components: graph.components,
                component_count: graph.component_count,
            };
            if cli.json {
                return done(envelope(Some(&ideal), char_json, result));
            }
            if *dot {
                return done(render_dot(&result));
            }
            done(format!("components: {}\n", result.component_count))
        }
        Command::Bound(input) => {
            let ideal = read_ideal(input)?;
            let result = BoundResult { bound: bound_b(&complex_of(&ideal)?, field)? };
            if cli.json {
                return done(envelope(Some(&ideal), char_json, result));
            }
            done(format!("{}\n", result.bound))
        }
        Command::Verify { seed, count, ideals, max_vertices, chars, threads } => {
            if *threads == 0 {
                return Err(CliError::Usage("--threads must be at least 1".into()));
            }
            if *max_vertices == 0 || *max_vertices > 8 {
                return Err(CliError::Usage("--max-vertices must lie in 1..=8".into()));
            }
            let fields = chars.iter().map(|&c| FieldSpec::new(c)).collect::<Result<Vec<_>, _>>()?;
            let config = CorpusConfig {
                seed: *seed,
                complex_count: *count,
                max_vertices: *max_vertices,
                ideal_count: ideals.unwrap_or((count / 4).max(1)),
                max_vars: 4,
                max_exponent: 3,
                fields,
            };
            let reports = run_suite_parallel(&config, *threads);
            let passed = reports.iter().all(CheckReport::passed);
            let result = VerifyResult {
                passed,
                seed: config.seed,
                complexes: config.complex_count,
                ideals: config.ideal_count,
                reports,
            };
            let text = if cli.json {
                envelope(None, serde_json::Value::from(chars.clone()), &result)
            } else {
                render_reports(&result.reports)
            };
            Ok(Outcome { text, success: passed })
        }
    }
}

fn with_lc<T>(
    delta: &SimplicialComplex,
    field: FieldSpec,
    run: impl FnOnce(&dyn TableSource) -> Result<T, Error>,
) -> Result<T, CliError> {
    if field.is_rational() {
        let lc = LocalCohomology::new(lyubeznik_core::Rationals, delta)?;
        Ok(run(&lc)?)
    } else {
        let lc = LocalCohomology::new(lyubeznik_core::PrimeField::new(field.characteristic()), delta)?;
        Ok(run(&lc)?)
    }
}

/// The two table paths needed here, independent of the field type.
trait TableSource {
    fn table(&self) -> lyubeznik_core::LyubeznikTable;
    fn table_at_face(&self, face: Subset) -> Result<lyubeznik_core::LyubeznikTable, Error>;
}

impl<F: lyubeznik_core::Field> TableSource for LocalCohomology<F> {
    fn table(&self) -> lyubeznik_core::LyubeznikTable {
        LocalCohomology::table(self)
    }

    fn table_at_face(&self, face: Subset) -> Result<lyubeznik_core::LyubeznikTable, Error> {
        LocalCohomology::table_at_face(self, face)
    }
}

enum Job<'a> {
    Complex(&'a SimplicialComplex),
    Ideal(&'a MonomialIdeal),
}

/// Same reports as `verify::run_suite`, with instances spread over
/// `threads` workers and merged back in corpus order.
pub fn run_suite_parallel(config: &CorpusConfig, threads: usize) -> Vec<CheckReport> {
    if config.fields.is_empty() {
        return Vec::new();
    }
    let corpus = generate_corpus(config);
    let jobs: Vec<Job<'_>> =
        corpus.complexes.iter().map(Job::Complex).chain(corpus.ideals.iter().map(Job::Ideal)).collect();
    let fields = &config.fields;
    let run = |job: &Job<'_>| match job {
        Job::Complex(d) => check_complex(d, fields),
        Job::Ideal(i) => check_ideal(i, fields),
    };
    let chunk = jobs.len().div_ceil(threads.max(1)).max(1);
    let partials: Vec<Vec<Reports>> = thread::scope(|s| {
        let handles: Vec<_> = jobs.chunks(chunk).map(|c| s.spawn(move || c.iter().map(run).collect())).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut reports = Reports::new();
    for r in partials.into_iter().flatten() {
        reports.merge(r);
    }
    reports.merge(golden::check_goldens(fields));
    reports.into_sorted()
}
