//! Serializable reports and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::catalog::{match_theorem, theorem_fingerprints};
use crate::classes::{conjugacy_classes, ClassTable, CoReport};
use crate::constructions::{build, parse_spec};
use crate::error::{Error, Result};
use crate::group::{ElementCap, Group};
use crate::lattice::SubgroupClassList;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const CONVENTION: &str = "left-to-right composition";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    /// 1-based cycle notation.
    pub representative: String,
    pub size: u64,
    pub element_order: u64,
    pub centralizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub spec: String,
    pub degree: usize,
    pub order: u64,
    pub k: usize,
    pub pi_e: Vec<u64>,
    pub co: usize,
    pub split_profile: Vec<(u64, usize)>,
    pub classes: Vec<ClassRow>,
    pub tool_version: String,
    pub convention: String,
}

impl ReportDocument {
    pub fn new(spec: &str, group: &Group, table: &ClassTable) -> Self {
        let CoReport {
            k,
            pi_e,
            co,
            split_profile,
        } = table.co_report();
        ReportDocument {
            schema: SCHEMA_VERSION,
            spec: spec.to_string(),
            degree: group.degree(),
            order: group.order(),
            k,
            pi_e,
            co,
            split_profile,
            classes: table
                .classes
                .iter()
                .map(|c| ClassRow {
                    representative: c.representative.to_string(),
                    size: c.size,
                    element_order: c.element_order,
                    centralizer_order: c.centralizer_order,
                })
                .collect(),
            tool_version: TOOL_VERSION.to_string(),
            convention: CONVENTION.to_string(),
        }
    }
}

/// Parses, builds and tabulates `text`. The spec field keeps the text as
/// given.
pub fn report_for(text: &str, cap: ElementCap) -> Result<ReportDocument> {
    let spec = parse_spec(text)?;
    let group = build(&spec, cap)?;
    let table = conjugacy_classes(&group, cap)?;
    Ok(ReportDocument::new(text.trim(), &group, &table))
}

pub fn join_orders(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}

pub fn join_split(v: &[(u64, usize)]) -> String {
    v.iter()
        .map(|(o, c)| format!("{o}:{c}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn render_report_text(docs: &[ReportDocument]) -> String {
    let mut out = String::new();
    for (i, d) in docs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "{}  (degree {}, order {})", d.spec, d.degree, d.order);
        let _ = writeln!(
            out,
            "k = {}  pi_e = {{{}}}  co = {}  split = [{}]",
            d.k,
            d.pi_e
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
            d.co,
            d.split_profile
                .iter()
                .map(|(o, c)| format!("({o},{c})"))
                .collect::<Vec<_>>()
                .join(",")
        );
        let _ = writeln!(
            out,
            "{:>5} {:>8} {:>12}  representative",
            "order", "size", "centralizer"
        );
        for c in &d.classes {
            let _ = writeln!(
                out,
                "{:>5} {:>8} {:>12}  {}",
                c.element_order, c.size, c.centralizer_order, c.representative
            );
        }
    }
    out
}

pub fn render_report_json(docs: &[ReportDocument]) -> String {
    serde_json::to_string_pretty(docs).expect("reports serialize")
}

pub(crate) fn csv_string(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::InvalidData(e.to_string());
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(&row).map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidData(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Columns: spec, order, k, pi_e, co, split.
pub fn render_report_csv(docs: &[ReportDocument]) -> Result<String> {
    csv_string(
        &["spec", "order", "k", "pi_e", "co", "split"],
        docs.iter().map(|d| {
            vec![
                d.spec.clone(),
                d.order.to_string(),
                d.k.to_string(),
                join_orders(&d.pi_e),
                d.co.to_string(),
                join_split(&d.split_profile),
            ]
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub order: u64,
    pub class_size: u64,
    pub co: usize,
    pub split_profile: Vec<(u64, usize)>,
    /// Name of the co(1) catalog group with the same fingerprint, if any.
    pub theorem_match: Option<String>,
    /// Generators of the representative in 1-based cycle notation.
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanDocument {
    pub schema: u32,
    pub ambient: String,
    pub ambient_order: u64,
    pub total_subgroups: u64,
    pub rows: Vec<ScanRow>,
    pub tool_version: String,
}

pub fn scan_document(
    ambient: &str,
    list: &SubgroupClassList,
    cap: ElementCap,
) -> Result<ScanDocument> {
    use rayon::prelude::*;
    let theorem = theorem_fingerprints(cap)?;
    let rows = list
        .entries
        .par_iter()
        .map(|e| {
            let table = conjugacy_classes(&e.representative, cap)?;
            let report = table.co_report();
            Ok(ScanRow {
                order: e.order,
                class_size: e.class_size,
                co: report.co,
                split_profile: report.split_profile,
                theorem_match: match_theorem(&table.fingerprint(), &theorem).map(str::to_string),
                generators: e
                    .representative
                    .nontrivial_generators()
                    .map(ToString::to_string)
                    .collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanDocument {
        schema: SCHEMA_VERSION,
        ambient: ambient.trim().to_string(),
        ambient_order: list.ambient_order,
        total_subgroups: list.total_subgroups(),
        rows,
        tool_version: TOOL_VERSION.to_string(),
    })
}

pub const NO_MATCH: &str = "—";

pub fn render_scan_text(doc: &ScanDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} (order {}): {} classes, {} subgroups",
        doc.ambient,
        doc.ambient_order,
        doc.rows.len(),
        doc.total_subgroups
    );
    let _ = writeln!(out, "order  class  co  split            match");
    for r in &doc.rows {
        let _ = writeln!(
            out,
            "{:>5} {:>6} {:>3}  {:<16} {}",
            r.order,
            r.class_size,
            r.co,
            join_split(&r.split_profile),
            r.theorem_match.as_deref().unwrap_or(NO_MATCH)
        );
    }
    out
}

pub fn render_scan_json(doc: &ScanDocument) -> String {
    serde_json::to_string_pretty(doc).expect("scan serializes")
}

/// Columns: order, class_size, co, split, match.
pub fn render_scan_csv(doc: &ScanDocument) -> Result<String> {
    csv_string(
        &["order", "class_size", "co", "split", "match"],
        doc.rows.iter().map(|r| {
            vec![
                r.order.to_string(),
                r.class_size.to_string(),
                r.co.to_string(),
                join_split(&r.split_profile),
                r.theorem_match
                    .clone()
                    .unwrap_or_else(|| NO_MATCH.to_string()),
            ]
        }),
    )
}
