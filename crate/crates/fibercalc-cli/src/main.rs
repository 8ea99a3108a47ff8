//! fibercalc: exact invariants of fibered links from scene files.
//!
//! Subcommands map onto the library: `invariants`, `family-table`,
//! `alexander`, `certify`, and `bound`. Every command prints a human
//! report by default and canonical JSON (`fibercalc-report/1`) with
//! `--json`: keys sorted, compact separators, plain integers, and `d3`
//! rendered as `{"den": 2, "num": <2*d3>}`. JSON output is byte-stable
//! across runs and platforms.
//!
//! Exit codes: 0 success, 2 parse error, 3 domain-invariant violation,
//! 4 usage or feasibility error, 5 internal verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use fibercalc::certify::{self, CertifyError};
use fibercalc::family::{FamilyError, FamilyRow};
use fibercalc::homology::{alexander_polynomial, evaluate_word, IntPolynomial, SymplecticMatrix};
use fibercalc::ledger::{self, LedgerError, StabilizationRecord};
use fibercalc::scene::{Scene, SceneError};
use fibercalc::state::{FiberState, HalfInteger};

const REPORT_SCHEMA: &str = "fibercalc-report/1";

// input caps keeping all downstream i64 arithmetic overflow-free
const MAX_STATE_VALUE: i64 = 1 << 40;
const MAX_PARAM_VALUE: i64 = 1 << 20;

#[derive(Parser)]
#[command(name = "fibercalc", version, about = "Exact invariants of fibered links in the 3-sphere")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic, Hopf invariant, d3, lambda, and the
    /// stabilization-height lower bound of the scene's state
    Invariants {
        scene: PathBuf,
        /// Emit canonical JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Tabulate the scene's twist family over n in [from, to]
    FamilyTable {
        scene: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long)]
        json: bool,
    },
    /// Alexander polynomial of the scene's monodromy word
    Alexander {
        scene: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Homological single-commutator certificate and scl bound for the
    /// family member at twist parameter n
    Certify {
        scene: PathBuf,
        #[arg(short, allow_negative_numbers = true)]
        n: i64,
        /// Upper bound on cl(psi_0), turning the symbolic bound numeric
        #[arg(long)]
        cl0: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Stabilization-height lower bound for a (chi, hopf) state, with an
    /// optional brute-force cross-check
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        chi: i64,
        #[arg(long, allow_negative_numbers = true)]
        hopf: i64,
        /// Enumerate all records with alpha+ + alpha- <= budget
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug)]
enum CliError {
    Scene(SceneError),
    Family(FamilyError),
    Certify(CertifyError),
    Ledger(LedgerError),
    Usage(String),
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Scene(e) if e.is_parse() => 2,
            CliError::Scene(e) if e.is_usage() => 4,
            CliError::Scene(_) => 3,
            CliError::Family(_) => 3,
            CliError::Certify(CertifyError::VerificationFailure { .. }) => 5,
            CliError::Certify(_) => 3,
            CliError::Ledger(LedgerError::BudgetTooSmall { .. }) => 4,
            CliError::Ledger(LedgerError::OracleDisagreement { .. }) => 5,
            CliError::Ledger(_) => 3,
            CliError::Usage(_) => 4,
            CliError::Domain(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Scene(e) => e.to_string(),
            CliError::Family(e) => e.to_string(),
            CliError::Certify(e) => e.to_string(),
            CliError::Ledger(e) => e.to_string(),
            CliError::Usage(m) | CliError::Domain(m) => m.clone(),
        }
    }
}

impl From<SceneError> for CliError {
    fn from(e: SceneError) -> CliError {
        CliError::Scene(e)
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> CliError {
        CliError::Family(e)
    }
}

impl From<CertifyError> for CliError {
    fn from(e: CertifyError) -> CliError {
        CliError::Certify(e)
    }
}

impl From<LedgerError> for CliError {
    fn from(e: LedgerError) -> CliError {
        CliError::Ledger(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Invariants { scene, json } => cmd_invariants(&scene, json),
        Command::FamilyTable { scene, from, to, json } => cmd_family_table(&scene, from, to, json),
        Command::Alexander { scene, json } => cmd_alexander(&scene, json),
        Command::Certify { scene, n, cl0, json } => cmd_certify(&scene, n, cl0, json),
        Command::Bound { chi, hopf, budget, json } => cmd_bound(chi, hopf, budget, json),
    }
}

fn check_param(name: &str, value: i64, max: i64) -> Result<(), CliError> {
    if value.abs() > max {
        return Err(CliError::Usage(format!(
            "{name} = {value} is outside the supported range [-{max}, {max}]"
        )));
    }
    Ok(())
}

fn half_integer_json(h: HalfInteger) -> Value {
    json!({"den": 2, "num": h.twice()})
}

fn bigint_json(value: &BigInt) -> Result<Value, CliError> {
    i64::try_from(value)
        .map(Value::from)
        .map_err(|_| CliError::Domain(format!("value {value} exceeds the reportable integer range")))
}

fn matrix_json(m: &SymplecticMatrix) -> Result<Value, CliError> {
    let rows = m
        .rows()
        .iter()
        .map(|row| row.iter().map(bigint_json).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Value::from(rows))
}

fn record_json(record: &StabilizationRecord) -> Value {
    json!({
        "alpha_plus": record.alpha_plus,
        "alpha_minus": record.alpha_minus,
        "beta_plus": record.beta_plus,
        "beta_minus": record.beta_minus,
    })
}

fn emit(mut report: Map<String, Value>, command: &str) {
    report.insert("schema".to_owned(), Value::from(REPORT_SCHEMA));
    report.insert("command".to_owned(), Value::from(command));
    println!("{}", Value::Object(report));
}

fn cmd_invariants(path: &Path, as_json: bool) -> Result<(), CliError> {
    let scene = Scene::from_path(path)?;
    let state = scene.require_state()?;
    let mirror_hopf = state.mirror().hopf();
    let bound = ledger::height_lower_bound(state);
    let b1 = scene.surface().map(|s| s.first_betti());

    if as_json {
        let mut report = Map::new();
        report.insert("chi".to_owned(), Value::from(state.euler_char()));
        if let Some(b1) = b1 {
            report.insert("b1".to_owned(), Value::from(b1));
        }
        report.insert("hopf".to_owned(), Value::from(state.hopf()));
        report.insert("d3".to_owned(), half_integer_json(state.d3()));
        report.insert("lambda".to_owned(), Value::from(state.lambda()));
        report.insert("mirror_hopf".to_owned(), Value::from(mirror_hopf));
        report.insert("height_lower_bound".to_owned(), Value::from(bound));
        emit(report, "invariants");
    } else {
        println!("chi: {}", state.euler_char());
        if let Some(b1) = b1 {
            println!("b1: {b1}");
        }
        println!("hopf: {}", state.hopf());
        println!("d3: {}", state.d3());
        println!("lambda: {}", state.lambda());
        println!("mirror_hopf: {mirror_hopf}");
        println!("height_lower_bound: {bound}");
    }
    Ok(())
}

fn cmd_family_table(path: &Path, from: i64, to: i64, as_json: bool) -> Result<(), CliError> {
    check_param("--from", from, MAX_PARAM_VALUE)?;
    check_param("--to", to, MAX_PARAM_VALUE)?;
    if from > to {
        return Err(CliError::Usage(format!("empty range: --from {from} > --to {to}")));
    }
    let scene = Scene::from_path(path)?;
    let family = scene.require_family()?;
    let rows = family.table(from, to)?;

    if as_json {
        let row_values: Vec<Value> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "hopf": r.hopf,
                    "d3": half_integer_json(r.d3),
                    "lambda": r.lambda,
                    "height_lower_bound": r.height_lower_bound,
                    "word_length": r.word_length,
                })
            })
            .collect();
        let mut report = Map::new();
        report.insert("from".to_owned(), Value::from(from));
        report.insert("to".to_owned(), Value::from(to));
        if let Some(tag) = family.twist_type() {
            report.insert("twist_type".to_owned(), Value::from(tag));
        }
        report.insert("rows".to_owned(), Value::from(row_values));
        emit(report, "family-table");
    } else {
        if let Some(tag) = family.twist_type() {
            println!("twist_type: {tag}");
        }
        print_table(&rows);
    }
    Ok(())
}

fn print_table(rows: &[FamilyRow]) {
    let header = ["n", "H", "d3", "lambda", "h_lower_bound"];
    let rendered: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.hopf.to_string(),
                r.d3.to_string(),
                r.lambda.to_string(),
                r.height_lower_bound.to_string(),
            ]
        })
        .collect();
    let widths: Vec<usize> = (0..5)
        .map(|i| {
            rendered
                .iter()
                .map(|row| row[i].len())
                .chain(std::iter::once(header[i].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    println!("{}", line(&header.map(String::from)));
    for row in rendered {
        println!("{}", line(&row));
    }
}

fn cmd_alexander(path: &Path, as_json: bool) -> Result<(), CliError> {
    let scene = Scene::from_path(path)?;
    let curves = scene.require_curves()?;
    let matrix = evaluate_word(scene.word(), curves).map_err(|e| CliError::Domain(e.to_string()))?;
    let poly = alexander_polynomial(&matrix);

    if as_json {
        let coefficients = poly
            .coeffs()
            .iter()
            .map(bigint_json)
            .collect::<Result<Vec<_>, _>>()?;
        let mut report = Map::new();
        report.insert("coefficients".to_owned(), Value::from(coefficients));
        report.insert("degree".to_owned(), Value::from(poly.degree()));
        report.insert("polynomial".to_owned(), Value::from(poly.to_string()));
        report.insert("at_one".to_owned(), bigint_json(&poly.at_one())?);
        report.insert("at_minus_one".to_owned(), bigint_json(&poly.at_minus_one())?);
        emit(report, "alexander");
    } else {
        println!("polynomial: {poly}");
        println!("coefficients (lowest degree first): {}", coeff_list(&poly));
        println!("Delta(1) = {}", poly.at_one());
        println!("Delta(-1) = {}", poly.at_minus_one());
    }
    Ok(())
}

fn coeff_list(poly: &IntPolynomial) -> String {
    let parts: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn cmd_certify(path: &Path, n: i64, cl0: Option<u64>, as_json: bool) -> Result<(), CliError> {
    check_param("-n", n, MAX_PARAM_VALUE)?;
    let scene = Scene::from_path(path)?;
    let family = scene.require_family()?;
    let report = certify::scl_upper_bound(family, n, cl0)?;
    let (loop1, loop2) = family.loop_names();

    if as_json {
        let mut out = Map::new();
        out.insert("kind".to_owned(), Value::from(certify::CERTIFICATE_KIND));
        out.insert("n".to_owned(), Value::from(n));
        out.insert("loop1".to_owned(), Value::from(loop1));
        out.insert("loop2".to_owned(), Value::from(loop2));
        out.insert(
            "transporter".to_owned(),
            matrix_json(&report.certificate.transporter)?,
        );
        out.insert("verified".to_owned(), Value::from(report.certificate.verified));
        out.insert("bound_form".to_owned(), Value::from(report.bound_form));
        if let Some(bound) = report.numeric_bound {
            out.insert("numeric_bound".to_owned(), Value::from(bound));
        }
        out.insert("uniform_in_n".to_owned(), Value::from(true));
        out.insert("note".to_owned(), Value::from(certify::SINGLE_TWIST_REMARK));
        emit(out, "certify");
    } else {
        println!("{} for n = {n}, loops ({loop1}, {loop2})", certify::CERTIFICATE_KIND);
        println!("transporter G (G . {loop1} = {loop2}):");
        print!("{}", report.certificate.transporter);
        println!(
            "verified: {} (T_{loop1}^-n T_{loop2}^n == [T_{loop1}^-n, G])",
            report.certificate.verified
        );
        match report.numeric_bound {
            Some(bound) => println!("scl bound: {} = {bound}, uniform in n", report.bound_form),
            None => println!("scl bound: {}, uniform in n", report.bound_form),
        }
        println!("note: {}", certify::SINGLE_TWIST_REMARK);
    }
    Ok(())
}

fn cmd_bound(chi: i64, hopf: i64, budget: Option<u64>, as_json: bool) -> Result<(), CliError> {
    check_param("--chi", chi, MAX_STATE_VALUE)?;
    check_param("--hopf", hopf, MAX_STATE_VALUE)?;
    if let Some(budget) = budget {
        if budget > MAX_PARAM_VALUE as u64 {
            return Err(CliError::Usage(format!(
                "--budget {budget} is outside the supported range [0, {MAX_PARAM_VALUE}]"
            )));
        }
    }
    let state =
        FiberState::new("cli", chi, hopf).map_err(|e| CliError::Domain(e.to_string()))?;
    let closed_form = ledger::height_lower_bound(&state);
    let oracle = budget
        .map(|b| ledger::height_lower_bound_oracle(&state, b))
        .transpose()?;

    if as_json {
        let mut report = Map::new();
        report.insert("chi".to_owned(), Value::from(chi));
        report.insert("hopf".to_owned(), Value::from(hopf));
        report.insert("closed_form".to_owned(), Value::from(closed_form));
        if let Some(oracle) = &oracle {
            report.insert("brute_force".to_owned(), Value::from(oracle.brute_force));
            if let Some(witness) = &oracle.witness {
                report.insert("witness".to_owned(), record_json(witness));
            }
        }
        emit(report, "bound");
    } else {
        println!("closed_form: {closed_form}");
        if let Some(oracle) = &oracle {
            println!("brute_force: {}", oracle.brute_force.expect("oracle ran"));
            if let Some(w) = &oracle.witness {
                println!(
                    "witness: alpha = ({}, {}), beta = ({}, {})",
                    w.alpha_plus, w.alpha_minus, w.beta_plus, w.beta_minus
                );
            }
        }
    }
    Ok(())
}
