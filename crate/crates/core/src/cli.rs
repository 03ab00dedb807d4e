//! Command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{catalog, default_suite, HolonomyKind};
use crate::clifford::{build_rep, CliffordRep};
use crate::error::Result;
use crate::parallel::{verify_table, ReportRow, VerifyOptions};
use crate::scalar::GaussianRational;
use crate::signature::Signature;
use crate::spin_lie::{lift_certificate_holds, so_basis};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "holospin", version, about = "Exact spinor representations and parallel spinors of holonomy algebras")]
pub struct CommandConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Seed for the Cayley conjugation parameters.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    /// Write the report to FILE instead of standard output.
    #[arg(long, value_name = "FILE", global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    /// Number of negative directions.
    #[arg(long)]
    pub p: usize,
    /// Number of positive directions.
    #[arg(long)]
    pub q: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Clifford generators and check their relations.
    Rep(SignatureArgs),
    /// Compute the parallel spinors of one catalog entry.
    Holonomy {
        #[arg(long)]
        name: String,
        #[arg(long)]
        pprime: Option<usize>,
        #[arg(long)]
        qprime: Option<usize>,
    },
    /// Verify the full table of holonomy algebras.
    Table1,
    /// Run the adjointness, lift and Clifford relation checks.
    Props(SignatureArgs),
}

/// Rendered output and whether every check in scope passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    name: &'a str,
    signature: [usize; 2],
    algebra_dim: usize,
    #[serde(rename = "N_expected")]
    n_expected: usize,
    #[serde(rename = "N_computed")]
    n_computed: usize,
    #[serde(rename = "match")]
    matches: bool,
    conjugation_stable: bool,
    basis: &'a [Vec<GaussianRational>],
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<&'a str>,
}

impl<'a> From<&'a ReportRow> for JsonRow<'a> {
    fn from(r: &'a ReportRow) -> Self {
        JsonRow {
            name: &r.name,
            signature: [r.signature.p, r.signature.q],
            algebra_dim: r.algebra_dim,
            n_expected: r.n_expected,
            n_computed: r.n_computed,
            matches: r.matches,
            conjugation_stable: r.conjugation_stable,
            basis: &r.basis,
            error: r.error.as_deref(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Serializes a verification report as JSON or an aligned text table.
pub fn serialize_report(rows: &[ReportRow], format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<JsonRow> = rows.iter().map(JsonRow::from).collect();
            to_json(&rows)
        }
        Format::Text => {
            let header = ["name", "signature", "dim", "N expected", "N computed", "match", "conjugation stable"];
            let cells: Vec<[String; 7]> = rows
                .iter()
                .map(|r| {
                    [
                        r.name.clone(),
                        r.signature.to_string(),
                        r.algebra_dim.to_string(),
                        r.n_expected.to_string(),
                        r.n_computed.to_string(),
                        r.matches.to_string(),
                        r.conjugation_stable.to_string(),
                    ]
                })
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|c| {
                    cells
                        .iter()
                        .map(|r| r[c].chars().count())
                        .chain([header[c].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut out = String::new();
            let mut line = |fields: &[&str]| {
                let padded: Vec<String> = fields
                    .iter()
                    .zip(&widths)
                    .map(|(f, w)| format!("{f:<w$}"))
                    .collect();
                out.push_str(padded.join("  ").trim_end());
                out.push('\n');
            };
            line(&header);
            for r in &cells {
                line(&r.iter().map(String::as_str).collect::<Vec<_>>());
            }
            for r in rows {
                if let Some(e) = &r.error {
                    writeln!(out, "error in {}: {e}", r.name).unwrap();
                }
            }
            out
        }
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn run_rep(sig: Signature, format: Format) -> Result<Outcome> {
    let rep = build_rep(sig)?;
    let anti = rep.anticommutation_holds();
    let output = match format {
        Format::Json => {
            #[derive(Serialize)]
            struct RepJson {
                signature: [usize; 2],
                spinor_dim: usize,
                generators: Vec<Vec<Vec<GaussianRational>>>,
                anticommutation: bool,
            }
            to_json(&RepJson {
                signature: [sig.p, sig.q],
                spinor_dim: rep.spinor_dim(),
                generators: (0..sig.dim()).map(|i| rep.gamma_dense(i).row_vecs()).collect(),
                anticommutation: anti,
            })
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "signature = {sig}").unwrap();
            writeln!(out, "spinor dimension = {}", rep.spinor_dim()).unwrap();
            for i in 0..sig.dim() {
                writeln!(out, "Φ(e{}) =\n{}", i + 1, rep.gamma_dense(i)).unwrap();
            }
            writeln!(out, "anticommutation: {}", ok(anti)).unwrap();
            out
        }
    };
    Ok(Outcome {
        output,
        success: anti,
    })
}

fn lift_certificates(rep: &CliffordRep) -> Result<bool> {
    for b in so_basis(rep.signature()) {
        if !lift_certificate_holds(rep, &b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn run_props(sig: Signature, format: Format) -> Result<Outcome> {
    let rep = build_rep(sig)?;
    let checks = [
        ("anticommutation", rep.anticommutation_holds()),
        ("adjointness", rep.adjointness_holds()),
        ("lift certificate", lift_certificates(&rep)?),
    ];
    let success = checks.iter().all(|(_, b)| *b);
    let output = match format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = checks
                .iter()
                .map(|(k, v)| (k.replace(' ', "_"), serde_json::Value::Bool(*v)))
                .collect();
            to_json(&serde_json::json!({ "signature": [sig.p, sig.q], "checks": map }))
        }
        Format::Text => {
            let mut out = format!("signature = {sig}\n");
            for (k, v) in checks {
                writeln!(out, "{k}: {}", ok(v)).unwrap();
            }
            out
        }
    };
    Ok(Outcome { output, success })
}

fn run_holonomy(
    name: &str,
    pprime: Option<usize>,
    qprime: Option<usize>,
    cfg: &CommandConfig,
) -> Result<Outcome> {
    let kind: HolonomyKind = name.parse()?;
    let params = match (pprime, qprime) {
        (None, None) => None,
        (Some(a), Some(b)) => Some((a, b)),
        (a, b) => Some((a.unwrap_or(0), b.unwrap_or(0))),
    };
    let h = catalog(kind, params)?;
    let opts = VerifyOptions {
        seed: cfg.seed,
        conjugations: 1,
    };
    let rows = verify_table(std::slice::from_ref(&h), opts);
    let row = &rows[0];
    let success = row.matches && row.conjugation_stable;
    let output = match cfg.format {
        Format::Json => to_json(&JsonRow::from(row)),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "name = {}", row.name).unwrap();
            writeln!(out, "signature = {}", row.signature).unwrap();
            writeln!(out, "algebra dim = {}", row.algebra_dim).unwrap();
            writeln!(out, "computed N = {}", row.n_computed).unwrap();
            writeln!(out, "expected N = {}", row.n_expected).unwrap();
            writeln!(out, "match = {}", row.matches).unwrap();
            writeln!(out, "conjugation stable = {}", row.conjugation_stable).unwrap();
            for (k, v) in row.basis.iter().enumerate() {
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, z)| !num_traits::Zero::is_zero(*z))
                    .map(|(i, z)| format!("({z})·b{i}"))
                    .collect();
                writeln!(out, "spinor {} = {}", k + 1, terms.join(" + ")).unwrap();
            }
            if let Some(e) = &row.error {
                writeln!(out, "error: {e}").unwrap();
            }
            out
        }
    };
    Ok(Outcome { output, success })
}

/// Executes one command.
pub fn run(cfg: &CommandConfig) -> Result<Outcome> {
    match &cfg.command {
        Command::Rep(s) => run_rep(Signature::new(s.p, s.q), cfg.format),
        Command::Props(s) => run_props(Signature::new(s.p, s.q), cfg.format),
        Command::Holonomy {
            name,
            pprime,
            qprime,
        } => run_holonomy(name, *pprime, *qprime, cfg),
        Command::Table1 => {
            let rows = verify_table(
                &default_suite()?,
                VerifyOptions {
                    seed: cfg.seed,
                    conjugations: 1,
                },
            );
            let success = rows.iter().all(|r| r.matches && r.conjugation_stable);
            Ok(Outcome {
                output: serialize_report(&rows, cfg.format),
                success,
            })
        }
    }
}

/// Parses arguments, runs, writes output; returns the process exit code.
pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CommandConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match run(&cfg) {
        Ok(outcome) => {
            if let Some(path) = &cfg.out {
                if let Err(e) = std::fs::write(path, &outcome.output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                print!("{}", outcome.output);
            }
            if outcome.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
