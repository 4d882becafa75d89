//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use uhosp_core::duality::{BorelIndex, DualGen, DualPoly, Pairing, PairingSign};
use uhosp_core::hopf::Hopf;
use uhosp_core::pbw::{Element, Engine};

use crate::eval::{engine_for, evaluate_in};
use crate::expr::parse;
use crate::report::Report;
use crate::suites::{run_suites, MapSelection, Settings, Suite, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "uhosp", version, about = "Exact verification and computation in U_h(osp(2/1))")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Truncation order N: series are kept through h^N.
    #[arg(long, global = true, default_value_t = 6)]
    pub order: usize,
    /// Degree cutoff D for dual-side computations.
    #[arg(long, global = true, default_value_t = 6)]
    pub degree: usize,
    #[arg(long, global = true, value_enum, default_value_t = MapArg::Both)]
    pub map: MapArg,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled words and random maps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also write the output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
    },
    /// PBW normal form of an expression.
    Nf { expr: String },
    /// Coproduct of an expression.
    Delta { expr: String },
    /// Antipode of an expression.
    Antipode { expr: String },
    /// Pairing of the Borel basis element H^k X^l V+^m with x^p y^q z^r.
    Pair {
        #[arg(value_parser = parse_triple)]
        borel: Triple,
        #[arg(value_parser = parse_triple)]
        dual: Triple,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Relations,
    Hopf,
    Reps,
    Maps,
    Twist,
    Tensorops,
    Duality,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Relations => vec![Suite::Relations],
            SuiteArg::Hopf => vec![Suite::Hopf],
            SuiteArg::Reps => vec![Suite::Reps],
            SuiteArg::Maps => vec![Suite::Maps],
            SuiteArg::Twist => vec![Suite::Twist],
            SuiteArg::Tensorops => vec![Suite::Tensorops],
            SuiteArg::Duality => vec![Suite::Duality],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    First,
    Second,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Three exponents `a,b,c`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Triple(pub [u16; 3]);

fn parse_triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [a, b, c] = parts.as_slice() else {
        return Err(format!("expected three comma-separated integers, got '{s}'"));
    };
    let p = |x: &str| x.parse::<u16>().map_err(|_| format!("'{x}' is not a small non-negative integer"));
    Ok(Triple([p(a)?, p(b)?, p(c)?]))
}

#[derive(Serialize)]
struct Computation<'a> {
    command: &'a str,
    input: String,
    order: usize,
    result: String,
}

/// Output text and exit code of one invocation.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(code: i32, stderr: String) -> Self {
        Outcome { stdout: String::new(), stderr, code }
    }
}

fn settings(cli: &Cli) -> Settings {
    let maps = match cli.map {
        MapArg::First => MapSelection::First,
        MapArg::Second => MapSelection::Second,
        MapArg::Both => MapSelection::Both,
    };
    Settings { order: cli.order, degree: cli.degree, maps, seed: cli.seed }
}

/// `+ O(h^{N+1})` when the element carries any positive power of `h`.
fn with_truncation(e: &Element) -> String {
    let truncated = e.terms().any(|(_, c)| !c.coeffs().iter().skip(1).all(num_traits::Zero::is_zero));
    if truncated {
        format!("{e} + O(h^{})", e.order() + 1)
    } else {
        e.to_string()
    }
}

fn render(cli: &Cli, command: &str, input: String, result: String) -> String {
    match cli.format {
        Format::Text => format!("{result}\n"),
        Format::Json => {
            let c = Computation { command, input, order: cli.order, result };
            format!("{}\n", serde_json::to_string_pretty(&c).expect("serializes"))
        }
    }
}

fn compute(
    cli: &Cli,
    command: &str,
    text: &str,
    f: impl Fn(&Engine, &Element) -> Result<String, String>,
) -> Outcome {
    let expr = match parse(text) {
        Ok(e) => e,
        Err(e) => return Outcome::error(EXIT_USAGE, format!("error: {e}\n")),
    };
    let engine = engine_for(&expr, cli.order);
    match evaluate_in(&engine, &expr).map_err(|e| e.to_string()).and_then(|el| f(&engine, &el)) {
        Ok(result) => Outcome::ok(render(cli, command, text.to_string(), result)),
        Err(e) => Outcome::error(EXIT_FAIL, format!("error: {e}\n")),
    }
}

fn execute(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Verify { suite } => {
            let s = settings(cli);
            let report = Report::new(&run_suites(&suite.suites(), &s), &s);
            let text = match cli.format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            Outcome {
                stdout: text,
                stderr: String::new(),
                code: if report.failed() { EXIT_FAIL } else { EXIT_OK },
            }
        }
        Command::Nf { expr } => compute(cli, "nf", expr, |_, el| Ok(with_truncation(el))),
        Command::Delta { expr } => compute(cli, "delta", expr, |engine, el| {
            Hopf::new(engine).delta(el).map(|t| t.to_string()).map_err(|e| e.to_string())
        }),
        Command::Antipode { expr } => compute(cli, "antipode", expr, |engine, el| {
            Hopf::new(engine).antipode(el).map(|a| with_truncation(&a)).map_err(|e| e.to_string())
        }),
        Command::Pair { borel, dual } => {
            let engine = Engine::deformed(cli.order);
            let pairing = Pairing::new(&engine, PairingSign::Plain);
            let [p, q, r] = dual.0.map(usize::from);
            let x = DualPoly::gen(cli.order, DualGen::X).pow(p);
            let y = DualPoly::gen(cli.order, DualGen::Y).pow(q);
            let z = DualPoly::gen(cli.order, DualGen::Z).pow(r);
            let poly = DualPoly::product(cli.order, &[&x, &y, &z]);
            let [k, l, mm] = borel.0;
            let m = BorelIndex::new(k, l, mm).monomial();
            let value = pairing.pair(m, &poly);
            let input = format!("{k},{l},{mm} {p},{q},{r}");
            let text = if value.coeffs().iter().skip(1).all(num_traits::Zero::is_zero) {
                value.coeff(0).to_string()
            } else {
                value.to_string()
            };
            Outcome::ok(render(cli, "pair", input, text))
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK { Outcome::ok(text) } else { Outcome::error(code, text) };
        }
    };
    let mut outcome = execute(&cli);
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.stdout) {
            outcome.stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
            outcome.code = outcome.code.max(EXIT_FAIL);
        }
    }
    outcome
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = run(args);
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    outcome.code
}
