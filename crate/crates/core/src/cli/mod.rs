//! The `leibniz` command-line interface.
//!
//! Exit codes: `0` every check passed, `1` a mathematical check failed,
//! `2` the input could not be read or was malformed.

pub mod formats;
pub mod selftest;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::LeibnizAlgebra;
use crate::bialgebra::{
    check_bialgebra, check_dual_pairing, classify, delta_from_r, double_canonical_r, double_algebra,
    dual_bracket, factorize, recombine, LeibnizBialgebra,
};
use crate::catalog;
use crate::error::Error;
use crate::linear::{basis_vector, format_combination, format_rational, parse_rational, Matrix, Rational, TwoTensor, Vector};
use crate::report::{Check, Report, Violation};
use crate::rota_baxter::{
    check_mirror_diagram, check_quadratic_rb, phase_space_quadratic_rb, quadratic_rb_from_factorizable,
    rb_report, rb_to_double_factorizable, QuadraticRBData,
};
use crate::yang_baxter::{clybe_check, invariance_check};
use formats::{AlgebraFile, TensorFile, TensorKind};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about = "Exact checks for Leibniz algebras, bialgebras and Rota-Baxter operators")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct Weight {
    /// The weight λ as "p/q" (use `-- -1` or `--lambda -1` for negative values).
    #[arg(allow_negative_numbers = true)]
    pub lambda: Option<String>,
    #[arg(long = "lambda", value_name = "P/Q", allow_negative_numbers = true)]
    pub lambda_flag: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verify an identity.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Coboundary bialgebras built from a 2-tensor.
    #[command(subcommand)]
    Bialgebra(BialgebraCommand),
    /// The double of the bialgebra `(A, Δ_r)`.
    #[command(subcommand)]
    Double(DoubleCommand),
    /// Split `x = x1 - x2` along a factorizable `r`.
    Factorize { algebra: String, r: PathBuf, vector: String },
    /// Rota-Baxter operators.
    #[command(subcommand)]
    Rb(RbCommand),
    /// Commutative diagrams.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// The built-in registry.
    #[command(subcommand)]
    Examples(ExamplesCommand),
    /// Run the invariant suite over the fixture catalog.
    Selftest {
        /// Read fixture files from this directory instead of the built-in copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Random tensors per algebra.
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// The left Leibniz identity.
    Leibniz { algebra: String },
    /// `[[r, r]] = 0`.
    Clybe { algebra: String, r: PathBuf },
    /// `F(x) t = 0` for all `x`.
    Invariance { algebra: String, t: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum BialgebraCommand {
    /// Build `Δ_r` and check the bialgebra axioms.
    Build { algebra: String, r: PathBuf },
    /// Quasi-triangular, triangular, factorizable.
    Classify { algebra: String, r: PathBuf },
    /// The bracket `[-,-]_r` on `A*`.
    Dual { algebra: String, r: PathBuf },
    /// Quadratic Rota-Baxter data from a factorizable `r`.
    ToRb {
        algebra: String,
        r: PathBuf,
        #[command(flatten)]
        weight: Weight,
    },
}

#[derive(Subcommand, Debug)]
pub enum DoubleCommand {
    /// The double and its canonical `r`.
    Build { algebra: String, r: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum RbCommand {
    /// `[βx,βy] = β([x,βy] + [βx,y] + λ[x,y])`.
    Check {
        algebra: String,
        beta: PathBuf,
        #[command(flatten)]
        weight: Weight,
    },
    /// The quadratic Rota-Baxter structure on `A ⋉ A*`.
    PhaseSpace {
        algebra: String,
        beta: PathBuf,
        #[command(flatten)]
        weight: Weight,
    },
    /// The factorizable bialgebra on `A ⋉ A*`.
    ToFactorizable {
        algebra: String,
        beta: PathBuf,
        #[command(flatten)]
        weight: Weight,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// The mirror square for a factorizable `r`.
    Mirror {
        algebra: String,
        r: PathBuf,
        #[command(flatten)]
        weight: Weight,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExamplesCommand {
    /// List registry entries.
    List,
    /// Show the bracket table of an entry.
    Show { name: String },
    /// Print an entry in the algebra file format.
    Export { name: String },
}

/// Failures before any check could run.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Math(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. }
            | Error::Parse(_)
            | Error::ShapeMismatch(_)
            | Error::DimensionMismatch(_)
            | Error::TagMismatch(_)
            | Error::NotLeibniz { .. } => CliError::Input(e.to_string()),
            other => CliError::Math(other.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a command produced: named text sections, checks, and a JSON payload.
#[derive(Default)]
pub struct Outcome {
    pub command: String,
    pub sections: Vec<(String, String)>,
    pub checks: Vec<Check>,
    pub data: Value,
    /// Printed verbatim instead of the usual layout.
    pub raw: Option<String>,
}

impl Outcome {
    fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            data: Value::Null,
            ..Default::default()
        }
    }

    fn section(mut self, title: &str, body: String) -> Self {
        self.sections.push((title.into(), body));
        self
    }

    fn checks<R: Report + ?Sized>(mut self, r: &R) -> Self {
        self.checks.extend(r.checks().into_iter().cloned());
        self
    }

    fn data(mut self, v: Value) -> Self {
        self.data = v;
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    fn render_text(&self) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let mut out = String::new();
        for (title, body) in &self.sections {
            if !title.is_empty() {
                out.push_str(title);
                out.push_str(":\n");
                for line in body.lines() {
                    out.push_str("  ");
                    out.push_str(line);
                    out.push('\n');
                }
            } else {
                out.push_str(body);
                out.push('\n');
            }
        }
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let checks: Vec<Value> = self.checks.iter().map(check_json).collect();
        let mut v = json!({
            "command": self.command,
            "passed": self.passed(),
            "checks": checks,
        });
        if !self.data.is_null() {
            v["result"] = self.data.clone();
        }
        if let Some(raw) = &self.raw {
            v["text"] = Value::String(raw.clone());
        }
        serde_json::to_string_pretty(&v).expect("json") + "\n"
    }
}

fn coords(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(format_rational(c))).collect())
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "identity": v.identity,
        "indices": v.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "lhs": coords(&v.lhs),
        "rhs": coords(&v.rhs),
    })
}

pub fn check_json(c: &Check) -> Value {
    json!({
        "name": c.name,
        "passed": c.passed(),
        "violations": c.violation_count,
        "witnesses": c.violations.iter().map(violation_json).collect::<Vec<_>>(),
    })
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| coords(m.row(i))).collect())
}

fn matrix_text(m: &Matrix) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(format_rational).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|row| {
            let row: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            format!("[{}]", row.join(" "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn tensor_labels(names: &[String]) -> Vec<String> {
    names
        .iter()
        .flat_map(|a| names.iter().map(move |b| format!("{a}⊗{b}")))
        .collect()
}

fn tensor_text(t: &TwoTensor, names: &[String]) -> String {
    format_combination(t.as_flat(), &tensor_labels(names))
}

fn tensor_json(t: &TwoTensor) -> Value {
    Value::Array(
        t.nonzero_terms()
            .map(|(i, j, c)| json!([i + 1, j + 1, format_rational(c)]))
            .collect(),
    )
}

fn table_text(alg: &LeibnizAlgebra) -> String {
    let names = alg.names();
    let lines: Vec<String> = alg
        .nonzero_products()
        .into_iter()
        .map(|(i, j, v)| format!("[{}, {}] = {}", names[i], names[j], format_combination(&v, names)))
        .collect();
    if lines.is_empty() {
        "all products vanish".into()
    } else {
        lines.join("\n")
    }
}

fn table_json(alg: &LeibnizAlgebra) -> Value {
    serde_json::to_value(AlgebraFile::from_algebra(alg, None)).expect("json")
}

fn load_algebra_file(arg: &str, checked: bool) -> CliResult<LeibnizAlgebra> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Some(a) = catalog::lookup(arg) {
            return Ok(a);
        }
    }
    let alg = if checked {
        formats::parse_algebra(path)
    } else {
        formats::parse_algebra_unchecked(path)
    };
    alg.map_err(|e| match e {
        Error::NotLeibniz { .. } => CliError::Input(format!("{}: {e}", path.display())),
        other => other.into(),
    })
}

fn load_algebra(arg: &str) -> CliResult<LeibnizAlgebra> {
    load_algebra_file(arg, true)
}

fn dim_check(what: &str, got: usize, alg: &LeibnizAlgebra) -> CliResult<()> {
    if got != alg.dim() {
        return Err(CliError::Input(format!(
            "{what} has dimension {got}, the algebra has dimension {}",
            alg.dim()
        )));
    }
    Ok(())
}

fn load_tensor(path: &Path, alg: &LeibnizAlgebra) -> CliResult<TwoTensor> {
    let t = formats::read_tensor_file(path)?.to_tensor()?;
    dim_check(&path.display().to_string(), t.dim(), alg)?;
    Ok(t)
}

fn load_matrix(path: &Path, alg: &LeibnizAlgebra) -> CliResult<Matrix> {
    let m = formats::read_tensor_file(path)?.to_matrix()?;
    dim_check(&path.display().to_string(), m.rows(), alg)?;
    Ok(m)
}

/// A vector file, a basis element name, or comma-separated coordinates.
fn load_vector(arg: &str, alg: &LeibnizAlgebra) -> CliResult<Vector> {
    let path = Path::new(arg);
    if path.exists() {
        let v = formats::read_tensor_file(path)?.to_vector()?;
        dim_check(arg, v.len(), alg)?;
        return Ok(v);
    }
    if let Some(i) = alg.names().iter().position(|n| n == arg) {
        return Ok(basis_vector(alg.dim(), i));
    }
    let v: Option<Vector> = arg.split(',').map(parse_rational).collect();
    let v = v.ok_or_else(|| CliError::Input(format!("cannot read {arg:?} as a vector")))?;
    dim_check("vector", v.len(), alg)?;
    Ok(v)
}

fn weight(w: &Weight) -> CliResult<Rational> {
    let s = match (&w.lambda, &w.lambda_flag) {
        (Some(s), None) | (None, Some(s)) => s,
        (Some(_), Some(_)) => return Err(CliError::Input("λ given twice".into())),
        (None, None) => return Err(CliError::Input("the weight λ is required".into())),
    };
    parse_rational(s).ok_or_else(|| CliError::Input(format!("invalid rational λ {s:?}")))
}

fn quadratic_sections(out: Outcome, data: &QuadraticRBData) -> Outcome {
    let alg = data.algebra();
    out.section("ω", matrix_text(data.omega()))
        .section("β", matrix_text(data.beta()))
        .data(json!({
            "basis": alg.names(),
            "omega": matrix_json(data.omega()),
            "beta": matrix_json(data.beta()),
            "weight": format_rational(data.weight()),
        }))
}

fn execute(cli: &Cli) -> CliResult<Outcome> {
    Ok(match &cli.command {
        Command::Check(CheckCommand::Leibniz { algebra }) => {
            let alg = load_algebra_file(algebra, false)?;
            Outcome::new("check leibniz")
                .checks(&alg.check_leibniz())
                .data(json!({ "dim": alg.dim() }))
        }
        Command::Check(CheckCommand::Clybe { algebra, r }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            Outcome::new("check clybe").checks(&clybe_check(&alg, &r)?)
        }
        Command::Check(CheckCommand::Invariance { algebra, t }) => {
            let alg = load_algebra(algebra)?;
            let t = load_tensor(t, &alg)?;
            Outcome::new("check invariance").checks(&invariance_check(&alg, &t)?)
        }
        Command::Bialgebra(BialgebraCommand::Build { algebra, r }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            let delta = delta_from_r(&alg, &r)?;
            let names = alg.names();
            let lines: Vec<String> = (0..alg.dim())
                .map(|i| format!("Δ({}) = {}", names[i], tensor_text(&delta.apply_basis(i), names)))
                .collect();
            let images: Vec<Value> = (0..alg.dim()).map(|i| tensor_json(&delta.apply_basis(i))).collect();
            Outcome::new("bialgebra build")
                .section("Δ_r", lines.join("\n"))
                .checks(&check_bialgebra(&alg, &delta)?)
                .data(json!({ "delta": images }))
        }
        Command::Bialgebra(BialgebraCommand::Classify { algebra, r }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            let c = classify(&alg, &r)?;
            Outcome::new("bialgebra classify").section("", c.to_string()).data(json!({
                "is_bialgebra": c.is_bialgebra,
                "quasi_triangular": c.quasi_triangular,
                "triangular": c.triangular,
                "factorizable": c.factorizable,
            }))
        }
        Command::Bialgebra(BialgebraCommand::Dual { algebra, r }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            let dual = dual_bracket(&alg, &r)?;
            let mut leib = dual.check_leibniz();
            leib.name = "Leibniz identity on A*".into();
            Outcome::new("bialgebra dual")
                .section("[-,-]_r on A*", table_text(&dual))
                .checks(&check_dual_pairing(&alg, &r)?)
                .checks(&leib)
                .data(table_json(&dual))
        }
        Command::Bialgebra(BialgebraCommand::ToRb { algebra, r, weight: w }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            let lambda = weight(w)?;
            let data = quadratic_rb_from_factorizable(&alg, &r, &lambda)?;
            let report = check_quadratic_rb(&alg, data.omega(), data.beta(), &lambda)?;
            quadratic_sections(Outcome::new("bialgebra to-rb"), &data).checks(&report)
        }
        Command::Double(DoubleCommand::Build { algebra, r }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            let b = LeibnizBialgebra::from_r(alg, r)?;
            let (d, canonical) = double_canonical_r(&b)?;
            debug_assert_eq!(d, double_algebra(&b)?);
            let c = classify(&d, &canonical)?;
            let mut factorizable = Check::new("canonical r on the double is factorizable");
            if !c.factorizable {
                factorizable.push(Violation {
                    identity: c.to_string(),
                    indices: vec![],
                    lhs: vec![],
                    rhs: vec![],
                });
            }
            Outcome::new("double build")
                .section("double", table_text(&d))
                .section("canonical r", tensor_text(&canonical, d.names()))
                .section("", c.to_string())
                .checks(&d.check_leibniz())
                .checks(&factorizable)
                .data(json!({ "algebra": table_json(&d), "r": tensor_json(&canonical) }))
        }
        Command::Factorize { algebra, r, vector } => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            let x = load_vector(vector, &alg)?;
            let (x1, x2) = factorize(&alg, &r, &x)?;
            let mut check = Check::new("x = x1 - x2");
            check.compare("x = x1 - x2", &[], recombine(&x1, &x2), x.clone());
            let names = alg.names();
            Outcome::new("factorize")
                .section("x1", format_combination(&x1, names))
                .section("x2", format_combination(&x2, names))
                .checks(&check)
                .data(json!({ "x1": coords(&x1), "x2": coords(&x2) }))
        }
        Command::Rb(RbCommand::Check { algebra, beta, weight: w }) => {
            let alg = load_algebra(algebra)?;
            let beta = load_matrix(beta, &alg)?;
            Outcome::new("rb check").checks(&rb_report(&alg, &beta, &weight(w)?)?)
        }
        Command::Rb(RbCommand::PhaseSpace { algebra, beta, weight: w }) => {
            let alg = load_algebra(algebra)?;
            let beta = load_matrix(beta, &alg)?;
            let lambda = weight(w)?;
            let data = phase_space_quadratic_rb(&alg, &beta, &lambda)?;
            let report = check_quadratic_rb(data.algebra(), data.omega(), data.beta(), &lambda)?;
            quadratic_sections(Outcome::new("rb phase-space"), &data)
                .section("A ⋉ A*", table_text(data.algebra()))
                .checks(&report)
        }
        Command::Rb(RbCommand::ToFactorizable { algebra, beta, weight: w }) => {
            let alg = load_algebra(algebra)?;
            let beta = load_matrix(beta, &alg)?;
            let b = rb_to_double_factorizable(&alg, &beta, &weight(w)?)?;
            let r = b.r.clone().expect("built from r");
            let c = classify(&b.algebra, &r)?;
            Outcome::new("rb to-factorizable")
                .section("A ⋉ A*", table_text(&b.algebra))
                .section("r", tensor_text(&r, b.algebra.names()))
                .section("", c.to_string())
                .checks(&check_bialgebra(&b.algebra, &b.delta)?)
                .data(json!({ "algebra": table_json(&b.algebra), "r": tensor_json(&r) }))
        }
        Command::Verify(VerifyCommand::Mirror { algebra, r, weight: w }) => {
            let alg = load_algebra(algebra)?;
            let r = load_tensor(r, &alg)?;
            Outcome::new("verify mirror").checks(&check_mirror_diagram(&alg, &r, &weight(w)?)?)
        }
        Command::Examples(ExamplesCommand::List) => {
            let lines: Vec<String> = catalog::FIXTURES
                .iter()
                .map(|f| format!("{:<12} dim {}  {}", f.name, (f.algebra)().dim(), f.description))
                .collect();
            let entries: Vec<Value> = catalog::FIXTURES
                .iter()
                .map(|f| json!({ "name": f.name, "dim": (f.algebra)().dim(), "description": f.description }))
                .collect();
            Outcome::new("examples list")
                .section("", lines.join("\n"))
                .data(Value::Array(entries))
        }
        Command::Examples(ExamplesCommand::Show { name }) => {
            let alg = catalog::lookup(name).ok_or_else(|| CliError::Input(format!("no example named {name:?}")))?;
            let mut leib = alg.check_leibniz();
            leib.name = format!("{name}: Leibniz identity");
            Outcome::new("examples show")
                .section(name, table_text(&alg))
                .checks(&leib)
                .data(table_json(&alg))
        }
        Command::Examples(ExamplesCommand::Export { name }) => {
            let alg = catalog::lookup(name).ok_or_else(|| CliError::Input(format!("no example named {name:?}")))?;
            let mut out = Outcome::new("examples export");
            out.raw = Some(AlgebraFile::from_algebra(&alg, Some(name)).to_text());
            out
        }
        Command::Selftest { fixtures, samples } => {
            let files = match fixtures {
                Some(dir) => selftest::files_from_dir(dir)?,
                None => selftest::embedded_files(),
            };
            Outcome::new("selftest").checks(&selftest::run_selftest(&files, cli.seed, *samples)?)
        }
    })
}

/// Writes a tensor, matrix or form file for `m` in canonical form.
pub fn matrix_file_text(m: &Matrix, kind: TensorKind) -> String {
    TensorFile::from_matrix(m, kind).to_text()
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_INPUT
                }
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Text => outcome.render_text(),
                Format::Json => outcome.render_json(),
            };
            let _ = out.write_all(text.as_bytes());
            if outcome.passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(CliError::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(CliError::Math(msg)) => {
            if cli.format == Format::Json {
                let v = json!({ "passed": false, "error": msg });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
            }
            let _ = writeln!(err, "check failed: {msg}");
            EXIT_FAIL
        }
    }
}
