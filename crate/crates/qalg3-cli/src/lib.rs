//! CLI surface for the qalg3 engine: definition-file parsing, command
//! dispatch and deterministic report emission.

pub mod commands;
pub mod definition;
pub mod presets;
pub mod report;

use std::collections::BTreeMap;

use clap::{Parser, Subcommand, ValueEnum};

use definition::CaseDefinition;
use report::{ReportDocument, Verdict};

#[derive(Debug, Parser)]
#[command(
    name = "qalg3",
    about = "Exact verification, quantization and classification of three-dimensional quantum algebras",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, clap::Args)]
pub struct CaseArgs {
    /// Catalog preset name (see `qalg3 catalog`), or `all` for a batch.
    #[arg(long)]
    pub preset: Option<String>,
    /// Path to a JSON definition file.
    #[arg(long)]
    pub file: Option<String>,
    /// Truncation order N (default 6).
    #[arg(long)]
    pub order: Option<usize>,
    /// Comma-separated overrides, e.g. `rho=2,c1=1/3`.
    #[arg(long)]
    pub params: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value = "human")]
    pub format: Format,
    /// Worker threads for batch verification.
    #[arg(long, default_value = "1")]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every Hopf-axiom check on a case.
    Verify(CaseArgs),
    /// Derive first-order constraints and integrate the deformed brackets.
    Quantize(CaseArgs),
    /// Jacobson type, bialgebra cocycle status and coboundary status.
    Classify(CaseArgs),
    /// Schouten-classify the case's r-matrix candidate.
    Rmatrix(CaseArgs),
    /// Apply a coproduct-preserving transformation (coefficients via
    /// --params alpha=..,beta=..,gamma=..,delta=..,mu=..,nu=..,eta=..,
    /// optional expect=CASE).
    Transform(CaseArgs),
    /// List catalog presets or print one.
    Catalog(CaseArgs),
}

fn parse_params(s: &str) -> Result<BTreeMap<String, String>, String> {
    let mut out = BTreeMap::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let Some((k, v)) = piece.split_once('=') else {
            return Err(format!("--params entries must be key=value, got `{piece}`"));
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

/// Build the effective definition from preset/file plus command-line
/// overrides.
fn build_definition(args: &CaseArgs) -> Result<CaseDefinition, String> {
    let mut raw = match (&args.preset, &args.file) {
        (Some(_), Some(_)) => return Err("give either --preset or --file, not both".into()),
        (Some(name), None) => presets::load(name).ok_or_else(|| {
            format!(
                "unknown preset `{name}`; available: {}",
                presets::names().join(", ")
            )
        })?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {path}: {e}"))?;
            serde_json::from_str::<definition::RawDefinition>(&text).map_err(|e| {
                format!(
                    "{path}: parse error at line {}, column {}: {e}",
                    e.line(),
                    e.column()
                )
            })?
        }
        (None, None) => return Err("give --preset NAME or --file DEF.json".into()),
    };

    if let Some(n) = args.order {
        raw.truncation = Some(n);
    }
    if let Some(params) = &args.params {
        for (k, v) in parse_params(params)? {
            match k.as_str() {
                "rho" => raw.rho = Some(v),
                "weight_b" | "weight_c" => {
                    let mut c = raw.coproduct.clone().unwrap_or(definition::CoproductOverride {
                        weight_b: None,
                        weight_c: None,
                    });
                    if k == "weight_b" {
                        c.weight_b = Some(v);
                    } else {
                        c.weight_c = Some(v);
                    }
                    raw.coproduct = Some(c);
                }
                // transform coefficients are handled by the command itself
                "alpha" | "beta" | "gamma" | "delta" | "mu" | "nu" | "eta" | "expect" => {}
                _ => {
                    raw.constants.insert(k, v);
                }
            }
        }
    }
    definition::validate(raw).map_err(|e| e.to_string())
}

fn emit(doc: &ReportDocument, format: Format) -> i32 {
    match format {
        Format::Machine => print!("{}", doc.machine()),
        Format::Human => print!("{}", doc.human()),
    }
    match doc.verdict() {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
    }
}

type Runner = Box<dyn Fn(&CaseDefinition) -> Result<ReportDocument, commands::CommandError>>;

/// Entry point; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let (args, runner): (&CaseArgs, Runner) = match &cli.command {
        Command::Verify(a) => (a, Box::new(commands::cmd_verify)),
        Command::Quantize(a) => (a, Box::new(commands::cmd_quantize)),
        Command::Classify(a) => (a, Box::new(commands::cmd_classify)),
        Command::Rmatrix(a) => (a, Box::new(commands::cmd_rmatrix)),
        Command::Transform(a) => {
            let params = match &a.params {
                Some(s) => match parse_params(s) {
                    Ok(p) => p,
                    Err(e) => {
                        eprintln!("error: {e}");
                        return 2;
                    }
                },
                None => BTreeMap::new(),
            };
            (
                a,
                Box::new(move |def| commands::cmd_transform(def, &params)),
            )
        }
        Command::Catalog(a) => {
            let order = a.order.unwrap_or(6);
            match commands::cmd_catalog(a.preset.as_deref(), order) {
                Ok(doc) => return emit(&doc, a.format),
                Err(e) => {
                    eprintln!("error: {}", e.message);
                    return if e.input { 2 } else { 1 };
                }
            }
        }
    };

    // batch mode: --preset all
    if matches!(&cli.command, Command::Verify(_)) && args.preset.as_deref() == Some("all") {
        let mut defs = Vec::new();
        for name in presets::names() {
            let mut sub = args.clone();
            sub.preset = Some(name.to_string());
            match build_definition(&sub) {
                Ok(d) => defs.push(d),
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
        }
        return match commands::cmd_verify_all(defs, args.jobs) {
            Ok(doc) => emit(&doc, args.format),
            Err(e) => {
                eprintln!("error: {}", e.message);
                if e.input {
                    2
                } else {
                    1
                }
            }
        };
    }

    let def = match build_definition(args) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match runner(&def) {
        Ok(doc) => emit(&doc, args.format),
        Err(e) => {
            eprintln!("error: {}", e.message);
            if e.input {
                2
            } else {
                1
            }
        }
    }
}
