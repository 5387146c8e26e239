//! The `sqfree` command line. [`run`] does all the work and returns the
//! exit code and both output streams, so the binary is a thin shim and the
//! behaviour is testable in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 missing domain capability.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::document;
use crate::domain::DomainId;
use crate::error::{Error, Result};
use crate::factorization::{convert, factorize, Form};
use crate::instances::parse;
use crate::verification::{check_well_formed, equivalent, run_census, Side, WellFormedReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sqfree", version, about = "Square-free factorizations over Z, Z[i], Q[x] and Z[sqrt(-5)]")]
pub struct Request {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one form of an element and print it as a document.
    Factor(FactorArgs),
    /// Convert a document to another form.
    Convert(ConvertArgs),
    /// Check a document, and optionally its equivalence with another.
    Verify(VerifyArgs),
    /// Run the seeded lemma suites and print the census.
    CheckProperties(CheckArgs),
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    #[arg(long)]
    pub domain: DomainId,
    #[arg(long)]
    pub form: Form,
    /// Element text.
    #[arg(long, required_unless_present = "file", conflicts_with = "file", allow_hyphen_values = true)]
    pub input: Option<String>,
    /// File holding the element text.
    #[arg(long = "in", id = "file")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long = "in")]
    pub file: PathBuf,
    #[arg(long)]
    pub to: Form,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub file: PathBuf,
    /// Second document to compare against.
    #[arg(long)]
    pub other: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub domain: DomainId,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Non-vacuous cases per property.
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Capability { .. } => EXIT_CAPABILITY,
            Error::Validation(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses `args` (including the program name) and executes the request.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let request = match Request::try_parse_from(args) {
        Ok(r) => r,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(EXIT_OK, text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    execute(&request).unwrap_or_else(|e| Outcome::error(&e))
}

pub fn execute(request: &Request) -> Result<Outcome> {
    match &request.command {
        Command::Factor(a) => {
            let text = match (&a.input, &a.file) {
                (Some(t), _) => t.clone(),
                (None, Some(path)) => read(path)?,
                (None, None) => return Err(Error::usage("--input or --in required")),
            };
            let element = parse(a.domain, text.trim_end_matches(['\n', '\r']))?;
            Ok(Outcome::ok(EXIT_OK, document::to_json(&factorize(&element, a.form)?)))
        }
        Command::Convert(a) => {
            let f = document::from_json(&read(&a.file)?)?;
            Ok(Outcome::ok(EXIT_OK, document::to_json(&convert(&f, a.to)?)))
        }
        Command::Verify(a) => verify(a),
        Command::CheckProperties(a) => check_properties(a),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))
}

#[derive(Serialize)]
struct WellFormedOut {
    well_formed: bool,
    violations: Vec<String>,
}

impl From<&WellFormedReport> for WellFormedOut {
    fn from(r: &WellFormedReport) -> Self {
        WellFormedOut { well_formed: r.well_formed, violations: r.violations.iter().map(|v| v.to_string()).collect() }
    }
}

#[derive(Serialize)]
struct PairingOut {
    left: usize,
    right: usize,
    unit: String,
}

#[derive(Serialize)]
struct PaddingOut {
    side: &'static str,
    index: usize,
}

#[derive(Serialize)]
struct EquivalenceOut {
    equivalent: bool,
    compared_as: String,
    pairing: Vec<PairingOut>,
    padding_units: Vec<PaddingOut>,
    reason: Option<String>,
}

#[derive(Serialize)]
struct VerifyOut {
    well_formed: bool,
    violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    other: Option<WellFormedOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivalence: Option<EquivalenceOut>,
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let f = document::from_json(&read(&a.file)?)?;
    let report = WellFormedOut::from(&check_well_formed(&f));
    let mut ok = report.well_formed;
    let mut out = VerifyOut { well_formed: report.well_formed, violations: report.violations, other: None, equivalence: None };
    if let Some(path) = &a.other {
        let g = document::from_json(&read(path)?)?;
        let other = WellFormedOut::from(&check_well_formed(&g));
        ok &= other.well_formed;
        out.other = Some(other);
        let eq = equivalent(&f, &g)?;
        ok &= eq.equivalent;
        out.equivalence = Some(EquivalenceOut {
            equivalent: eq.equivalent,
            compared_as: eq.compared_as.to_string(),
            pairing: eq
                .pairing
                .iter()
                .map(|p| PairingOut { left: p.left, right: p.right, unit: p.unit.to_string() })
                .collect(),
            padding_units: eq
                .padding_units
                .iter()
                .map(|&(side, index)| PaddingOut {
                    side: match side {
                        Side::Left => "left",
                        Side::Right => "right",
                    },
                    index,
                })
                .collect(),
            reason: eq.reason,
        });
    }
    Ok(Outcome::ok(if ok { EXIT_OK } else { EXIT_FAILED }, json(&out)))
}

#[derive(Serialize)]
struct TallyOut {
    property: String,
    pass: u64,
    fail: u64,
    vacuous: u64,
}

#[derive(Serialize)]
struct FailureOut {
    property: String,
    inputs: Vec<String>,
}

#[derive(Serialize)]
struct CensusOut {
    domain: String,
    seed: u64,
    count: u64,
    properties: Vec<TallyOut>,
    failures: Vec<FailureOut>,
}

fn check_properties(a: &CheckArgs) -> Result<Outcome> {
    let census = run_census(a.domain, a.seed, a.count)?;
    let mut failures: Vec<_> = census.failures.iter().collect();
    failures.sort_by_key(|c| c.property);
    let out = CensusOut {
        domain: a.domain.to_string(),
        seed: a.seed,
        count: a.count,
        properties: census
            .tallies
            .iter()
            .map(|(p, t)| TallyOut { property: p.to_string(), pass: t.pass, fail: t.fail, vacuous: t.vacuous })
            .collect(),
        failures: failures
            .into_iter()
            .map(|c| FailureOut { property: c.property.to_string(), inputs: c.inputs.iter().map(|x| x.to_string()).collect() })
            .collect(),
    };
    let code = if census.total_failures() == 0 { EXIT_OK } else { EXIT_FAILED };
    Ok(Outcome::ok(code, json(&out)))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}
