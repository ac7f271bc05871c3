use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cogroups::lattice::{parse_seed_file, shipped_seeds};
use cogroups::report::{
    render_report_csv, render_report_json, render_report_text, render_scan_csv, render_scan_json,
    render_scan_text,
};
use cogroups::verify::render_summary_csv;
use cogroups::{
    build, derived_series_solvable, parse_spec, parse_table1, report_for, scan_document,
    subgroup_classes, verify_theorem, ElementCap, Error, Group, GroupSpec, Table1Data,
    VerificationSummary, VerifyOptions,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cogroups",
    version,
    about = "Class numbers versus element orders in finite groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest group order that may be enumerated.
    #[arg(long, global = true, default_value_t = ElementCap::DEFAULT.max_elements)]
    cap: u64,
    /// Print only the summary line (verify-theorem) or nothing on success.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Class table, element orders and co value for each group.
    Report {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Run every claim of the co(1) classification check.
    VerifyTheorem {
        /// Replacement centralizer table.
        #[arg(long)]
        table1: Option<PathBuf>,
        /// Also scan the subgroups of S7.
        #[arg(long)]
        extended: bool,
    },
    /// Subgroup classes of an ambient group with their co values.
    Scan {
        ambient: String,
        /// Perfect-subgroup seed file.
        #[arg(long)]
        seeds: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn from_error(context: &str, err: Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: format!("{context}: {err}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = ElementCap::new(cli.cap);
    let result = match &cli.command {
        Command::Report { specs } => cmd_report(specs, cli.format, cap, cli.quiet),
        Command::VerifyTheorem { table1, extended } => {
            cmd_verify(table1.as_ref(), *extended, cli.format, cap, cli.quiet)
        }
        Command::Scan { ambient, seeds } => {
            cmd_scan(ambient, seeds.as_ref(), cli.format, cap, cli.quiet)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(quiet: bool, text: &str) {
    if !quiet {
        print!("{text}");
        if !text.ends_with('\n') {
            println!();
        }
    }
}

fn cmd_report(
    specs: &[String],
    format: Format,
    cap: ElementCap,
    quiet: bool,
) -> Result<u8, Failure> {
    let docs = specs
        .iter()
        .map(|s| report_for(s, cap).map_err(|e| Failure::from_error(&format!("spec `{s}`"), e)))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match format {
        Format::Table => render_report_text(&docs),
        Format::Json => render_report_json(&docs),
        Format::Csv => render_report_csv(&docs).map_err(|e| Failure::from_error("csv", e))?,
    };
    emit(quiet, &text);
    Ok(0)
}

fn load_table1(path: &PathBuf) -> Result<Table1Data, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_table1(&text).unwrap_or_else(|e| {
        eprintln!(
            "warning: {}: {e}; centralizer claims will fail",
            path.display()
        );
        Table1Data {
            version: cogroups::table1::TABLE1_VERSION,
            columns: Default::default(),
        }
    }))
}

fn render_summary(
    summary: &VerificationSummary,
    format: Format,
    quiet: bool,
) -> Result<String, Failure> {
    let passed = summary.records.iter().filter(|r| r.pass).count();
    let status = if summary.overall_pass { "PASS" } else { "FAIL" };
    let footer = format!("{status}: {passed}/{} claims passed", summary.records.len());
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(summary).expect("summary serializes"),
        Format::Csv => render_summary_csv(summary).map_err(|e| Failure::from_error("csv", e))?,
        Format::Table if quiet => {
            let mut out = String::new();
            for r in summary.failures() {
                out.push_str(&format!(
                    "FAIL {}: expected {}, computed {}\n",
                    r.id, r.expected, r.computed
                ));
            }
            out + &footer
        }
        Format::Table => {
            let mut out = String::new();
            for r in &summary.records {
                let mark = if r.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!("{mark} {:<40} {}", r.id, r.computed));
                if !r.pass {
                    out.push_str(&format!("  (expected {})", r.expected));
                }
                out.push('\n');
            }
            out + &footer
        }
    })
}

fn cmd_verify(
    table1: Option<&PathBuf>,
    extended: bool,
    format: Format,
    cap: ElementCap,
    quiet: bool,
) -> Result<u8, Failure> {
    let mut opts = VerifyOptions {
        cap,
        extended,
        ..VerifyOptions::default()
    };
    if let Some(path) = table1 {
        opts.table1 = load_table1(path)?;
    }
    let summary = verify_theorem(&opts);
    let text = render_summary(&summary, format, quiet)?;
    // quiet still prints the one-line verdict for the table format
    emit(quiet && format != Format::Table, &text);
    Ok(if summary.overall_pass {
        0
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn default_seeds(
    spec: &GroupSpec,
    ambient: &Group,
    cap: ElementCap,
) -> Result<Vec<Group>, Failure> {
    if let GroupSpec::Symmetric(n) = spec {
        if let Some(text) = shipped_seeds(*n as usize) {
            return parse_seed_file(text).map_err(|e| Failure::from_error("shipped seeds", e));
        }
    }
    let solvable =
        derived_series_solvable(ambient, cap).map_err(|e| Failure::from_error("ambient", e))?;
    if solvable {
        Ok(vec![Group::trivial(ambient.degree())])
    } else {
        Err(Failure::usage(format!(
            "no shipped seeds for non-solvable {spec}; pass --seeds FILE"
        )))
    }
}

fn cmd_scan(
    ambient: &str,
    seeds: Option<&PathBuf>,
    format: Format,
    cap: ElementCap,
    quiet: bool,
) -> Result<u8, Failure> {
    let context = format!("ambient `{ambient}`");
    let spec = parse_spec(ambient).map_err(|e| Failure::from_error(&context, e))?;
    let group = build(&spec, cap).map_err(|e| Failure::from_error(&context, e))?;
    let seeds = match seeds {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Failure::usage(format!("cannot read seed file {}: {e}", path.display()))
            })?;
            parse_seed_file(&text)
                .map_err(|e| Failure::from_error(&path.display().to_string(), e))?
        }
        None => default_seeds(&spec, &group, cap)?,
    };
    let list =
        subgroup_classes(&group, &seeds, cap).map_err(|e| Failure::from_error(&context, e))?;
    let doc = scan_document(ambient, &list, cap).map_err(|e| Failure::from_error(&context, e))?;
    let text = match format {
        Format::Table => render_scan_text(&doc),
        Format::Json => render_scan_json(&doc),
        Format::Csv => render_scan_csv(&doc).map_err(|e| Failure::from_error("csv", e))?,
    };
    emit(quiet, &text);
    Ok(0)
}
