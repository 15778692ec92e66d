//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a mismatch,
//! 2 on usage errors. All numbers are printed as full decimal integers.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::confighomology::{
    braid_betti, builtin_surfaces, config_betti, verify_braid_decomposition, verify_n_independence,
    ManifoldData,
};
use crate::gradedcount::PoincareSeries;
use crate::mcgseries::{mcg_rp2_series, verify_k2_dihedral, McgQuery};
use crate::report::VerificationReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "confspace",
    version,
    about = "Mod-2 homology of configuration spaces of surfaces, braid groups and mapping class groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the document to FILE instead of stdout
    #[arg(long, value_name = "FILE", global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti numbers of the unordered configuration space F_k(M)/Σ_k
    Betti {
        /// rp2 | klein | sphere | nonorientable:g (g ≥ 1) | orientable:g (g ≥ 0)
        #[arg(long, value_parser = parse_surface)]
        surface: ManifoldData,
        #[arg(long)]
        k: usize,
    },
    /// Betti numbers of Artin's braid group B_k
    Braid {
        #[arg(long)]
        k: usize,
    },
    /// Poincaré series of the mapping class group Γ^k(ℝP²), k ≥ 2
    Mcg {
        #[arg(long)]
        k: usize,
        #[arg(long = "qmax")]
        q_max: usize,
    },
    /// Run internal cross-checks
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest number of points for braid-decomposition and n-independence
        #[arg(long = "kmax", default_value_t = 12)]
        k_max: usize,
        /// Truncation degree for the dihedral check
        #[arg(long = "qmax", default_value_t = 30)]
        q_max: usize,
        /// Label sphere dimensions for n-independence
        #[arg(long = "n", value_delimiter = ',', default_value = "1,2,3",
              value_parser = clap::value_parser!(u64).range(1..))]
        n_values: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    BraidDecomposition,
    NIndependence,
    Dihedral,
}

/// Parses `rp2 | klein | sphere | nonorientable:g | orientable:g`.
pub fn parse_surface(spec: &str) -> Result<ManifoldData, String> {
    match spec {
        "rp2" => return Ok(ManifoldData::projective_plane()),
        "klein" => return Ok(ManifoldData::klein_bottle()),
        "sphere" => return Ok(ManifoldData::sphere()),
        _ => {}
    }
    let (kind, genus) = spec
        .split_once(':')
        .ok_or_else(|| format!("unknown surface `{spec}`"))?;
    let genus: u32 = genus
        .parse()
        .map_err(|_| format!("genus in `{spec}` must be a nonnegative integer"))?;
    match kind {
        "orientable" => Ok(ManifoldData::orientable(genus)),
        "nonorientable" => ManifoldData::nonorientable(genus).map_err(|e| e.to_string()),
        _ => Err(format!("unknown surface kind `{kind}`")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchRow {
    pub context: String,
    pub k: usize,
    pub q: usize,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite: String,
    pub passed: bool,
    pub cells_checked: u64,
    pub mismatches: Vec<MismatchRow>,
}

impl From<&VerificationReport> for SuiteResult {
    fn from(report: &VerificationReport) -> Self {
        Self {
            suite: report.suite.clone(),
            passed: report.passed(),
            cells_checked: report.cells_checked,
            mismatches: report
                .mismatches
                .iter()
                .map(|m| MismatchRow {
                    context: m.context.clone(),
                    k: m.k,
                    q: m.q,
                    expected: m.expected.to_string(),
                    actual: m.actual.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Series {
        /// CSV column name: `rank` for homology tables, `coefficient` for series.
        column: String,
        values: Vec<String>,
    },
    Verification {
        passed: bool,
        suites: Vec<SuiteResult>,
    },
}

/// Everything a command emits; rendered as text, CSV or JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema: u32,
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub format: Format,
    pub result: Payload,
}

impl OutputDocument {
    fn series(
        command: &str,
        parameters: BTreeMap<String, String>,
        format: Format,
        column: &str,
        series: &PoincareSeries,
    ) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            parameters,
            format,
            result: Payload::Series {
                column: column.to_string(),
                values: series
                    .coefficients()
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            },
        }
    }

    pub fn passed(&self) -> bool {
        match &self.result {
            Payload::Series { .. } => true,
            Payload::Verification { passed, .. } => *passed,
        }
    }

    pub fn render(&self) -> String {
        match self.format {
            Format::Json => {
                let mut out =
                    serde_json::to_string_pretty(self).expect("document is always serializable");
                out.push('\n');
                out
            }
            Format::Csv => self.render_csv(),
            Format::Text => self.render_text(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Payload::Series { column, values } => {
                writeln!(out, "q,{column}").unwrap();
                for (q, v) in values.iter().enumerate() {
                    writeln!(out, "{q},{v}").unwrap();
                }
            }
            Payload::Verification { suites, .. } => {
                writeln!(out, "suite,cells_checked,mismatches,status").unwrap();
                for s in suites {
                    let status = if s.passed { "pass" } else { "fail" };
                    writeln!(
                        out,
                        "{},{},{},{status}",
                        s.suite,
                        s.cells_checked,
                        s.mismatches.len()
                    )
                    .unwrap();
                }
            }
        }
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Payload::Series { values, .. } => {
                writeln!(out, "{}", values.join(",")).unwrap();
            }
            Payload::Verification { passed, suites } => {
                for s in suites {
                    let status = if s.passed { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{status} {} ({} cells checked)",
                        s.suite, s.cells_checked
                    )
                    .unwrap();
                    for m in &s.mismatches {
                        writeln!(
                            out,
                            "  mismatch [{}] k={} q={}: expected {}, got {}",
                            m.context, m.k, m.q, m.expected, m.actual
                        )
                        .unwrap();
                    }
                }
                let verdict = if *passed {
                    "all suites passed"
                } else {
                    "verification FAILED"
                };
                writeln!(out, "{verdict}").unwrap();
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.into(),
        }
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn run_verify(
    suite: Suite,
    k_max: usize,
    q_max: usize,
    n_values: &[u64],
) -> Result<Vec<VerificationReport>, String> {
    let mut reports = Vec::new();
    if matches!(suite, Suite::All | Suite::BraidDecomposition) {
        if k_max == 0 {
            return Err("braid-decomposition needs --kmax ≥ 1".to_string());
        }
        reports.push(verify_braid_decomposition(k_max).map_err(|e| e.to_string())?);
    }
    if matches!(suite, Suite::All | Suite::NIndependence) {
        let surfaces = builtin_surfaces();
        let per_surface: Vec<Result<VerificationReport, String>> = thread::scope(|scope| {
            let handles: Vec<_> = surfaces
                .iter()
                .map(|surface| {
                    scope.spawn(move || {
                        let mut acc = VerificationReport::new("n-independence");
                        for k in 0..=k_max {
                            acc.absorb(
                                verify_n_independence(surface, k, n_values)
                                    .map_err(|e| e.to_string())?,
                            );
                        }
                        Ok(acc)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification thread panicked"))
                .collect()
        });
        let mut merged = VerificationReport::new("n-independence");
        for r in per_surface {
            merged.absorb(r?);
        }
        reports.push(merged);
    }
    if matches!(suite, Suite::All | Suite::Dihedral) {
        reports.push(verify_k2_dihedral(q_max).map_err(|e| e.to_string())?);
    }
    Ok(reports)
}

fn build_document(cli: &Cli) -> Result<OutputDocument, String> {
    let format = cli.format;
    let doc = match &cli.command {
        Command::Betti { surface, k } => {
            let series = config_betti(surface, *k).map_err(|e| e.to_string())?;
            OutputDocument::series(
                "betti",
                params([
                    ("surface", surface.name().to_string()),
                    ("k", k.to_string()),
                ]),
                format,
                "rank",
                &series,
            )
        }
        Command::Braid { k } => {
            let series = braid_betti(*k).map_err(|e| e.to_string())?;
            OutputDocument::series(
                "braid",
                params([("k", k.to_string())]),
                format,
                "rank",
                &series,
            )
        }
        Command::Mcg { k, q_max } => {
            let query = McgQuery::new(*k, *q_max).map_err(|e| e.to_string())?;
            let series = mcg_rp2_series(&query).map_err(|e| e.to_string())?;
            OutputDocument::series(
                "mcg",
                params([("k", k.to_string()), ("qmax", q_max.to_string())]),
                format,
                "coefficient",
                &series,
            )
        }
        Command::Verify {
            suite,
            k_max,
            q_max,
            n_values,
        } => {
            let reports = run_verify(*suite, *k_max, *q_max, n_values)?;
            let suite_name = suite
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            let n_list: Vec<String> = n_values.iter().map(u64::to_string).collect();
            OutputDocument {
                schema: SCHEMA_VERSION,
                command: "verify".to_string(),
                parameters: params([
                    ("suite", suite_name),
                    ("kmax", k_max.to_string()),
                    ("qmax", q_max.to_string()),
                    ("n", n_list.join(",")),
                ]),
                format,
                result: Payload::Verification {
                    passed: reports.iter().all(VerificationReport::passed),
                    suites: reports.iter().map(SuiteResult::from).collect(),
                },
            }
        }
    };
    Ok(doc)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                Outcome::usage(rendered)
            } else {
                // --help / --version
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let doc = match build_document(&cli) {
        Ok(doc) => doc,
        Err(message) => return Outcome::usage(format!("error: {message}\n")),
    };
    let code = if doc.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    };
    let rendered = doc.render();
    match &cli.output {
        Some(path) => match std::fs::write(path, &rendered) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::usage(format!("error: cannot write {}: {e}\n", path.display())),
        },
        None => Outcome {
            code,
            stdout: rendered,
            stderr: String::new(),
        },
    }
}
