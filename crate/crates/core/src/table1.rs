//! Embedded centralizer data for simple groups and a cross-check against
//! computed class tables.
//!
//! File format: `#` starts a comment, the first content line is
//! `version: 1`, then one line per group: a name accepted by
//! [`parse_spec`](crate::constructions::parse_spec) followed by
//! whitespace-separated `order:centralizer` pairs, one per class.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classes::conjugacy_classes;
use crate::constructions::build_text;
use crate::error::{Error, Result};
use crate::group::ElementCap;

pub const TABLE1_VERSION: u32 = 1;
pub const EMBEDDED_TABLE1: &str = include_str!("../data/table1.txt");

/// Names in the order they appear in the embedded file.
pub const TABLE1_GROUPS: &[&str] = &["A5", "A6", "L2(16)", "L2(27)"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Data {
    pub version: u32,
    /// Group name to sorted `(element order, centralizer order)` pairs.
    pub columns: BTreeMap<String, Vec<(u64, u64)>>,
}

impl Table1Data {
    pub fn embedded() -> Self {
        parse_table1(EMBEDDED_TABLE1).expect("embedded table parses")
    }
}

pub fn parse_table1(text: &str) -> Result<Table1Data> {
    let mut version = None;
    let mut columns = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::InvalidData(format!("line {}: {msg}", lineno + 1));
        if version.is_none() {
            let v = line
                .strip_prefix("version:")
                .ok_or_else(|| bad("expected a version header"))?
                .trim()
                .parse::<u32>()
                .map_err(|_| bad("bad version number"))?;
            if v != TABLE1_VERSION {
                return Err(bad(&format!("unsupported version {v}")));
            }
            version = Some(v);
            continue;
        }
        let mut words = line.split_whitespace();
        let name = words.next().unwrap().to_string();
        let mut pairs = words
            .map(|w| {
                let (o, c) = w
                    .split_once(':')
                    .ok_or_else(|| bad("expected order:centralizer"))?;
                Ok((
                    o.parse().map_err(|_| bad("bad element order"))?,
                    c.parse().map_err(|_| bad("bad centralizer order"))?,
                ))
            })
            .collect::<Result<Vec<(u64, u64)>>>()?;
        pairs.sort_unstable();
        if columns.insert(name.clone(), pairs).is_some() {
            return Err(bad(&format!("duplicate group {name}")));
        }
    }
    Ok(Table1Data {
        version: version.ok_or_else(|| Error::InvalidData("missing version header".into()))?,
        columns,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub name: String,
    pub expected: Vec<(u64, u64)>,
    pub computed: Vec<(u64, u64)>,
    pub pass: bool,
}

/// Compares the computed `(element order, centralizer order)` multiset of
/// `name` with its column in `data`. A missing column fails the check.
pub fn table1_crosscheck(name: &str, data: &Table1Data, cap: ElementCap) -> Result<Table1Report> {
    let table = conjugacy_classes(&build_text(name, cap)?, cap)?;
    let mut computed: Vec<(u64, u64)> = table
        .classes
        .iter()
        .map(|c| (c.element_order, c.centralizer_order))
        .collect();
    computed.sort_unstable();
    let expected = data.columns.get(name).cloned().unwrap_or_default();
    Ok(Table1Report {
        name: name.to_string(),
        pass: expected == computed,
        expected,
        computed,
    })
}
