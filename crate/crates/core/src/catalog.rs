//! The ten co(1) groups, named non-examples, and a catalog of small groups.

use serde::Serialize;

use crate::classes::{fingerprint, Fingerprint};
use crate::constructions::{build, parse_spec, GroupSpec};
use crate::error::Result;
use crate::group::{ElementCap, Group};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Expectation {
    /// co(1) with the given split order.
    Co1 { split_order: u64 },
    /// Exactly this co value.
    Co(usize),
    /// Anything but co(1).
    NotCo1,
}

impl Expectation {
    pub fn describe(&self) -> String {
        match self {
            Expectation::Co1 { split_order } => format!("co=1 split=[{split_order}:2]"),
            Expectation::Co(c) => format!("co={c}"),
            Expectation::NotCo1 => "co!=1".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Conventional name, e.g. `L2(7)`.
    pub name: &'static str,
    /// Spec text accepted by [`parse_spec`].
    pub text: &'static str,
    pub spec: GroupSpec,
    pub expected: Expectation,
}

impl CatalogEntry {
    fn new(name: &'static str, text: &'static str, expected: Expectation) -> Self {
        CatalogEntry {
            name,
            text,
            spec: parse_spec(text).expect("catalog specs parse"),
            expected,
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self.expected, Expectation::Co1 { .. })
    }

    pub fn build(&self, cap: ElementCap) -> Result<Group> {
        build(&self.spec, cap)
    }
}

/// The ten co(1) groups followed by the named negatives.
pub fn theorem_catalog() -> Vec<CatalogEntry> {
    use Expectation::*;
    let co1 = |split_order| Co1 { split_order };
    vec![
        CatalogEntry::new("A5", "A5", co1(5)),
        CatalogEntry::new("L2(7)", "PSL(2,7)", co1(7)),
        CatalogEntry::new("S5", "S5", co1(2)),
        CatalogEntry::new("S4", "S4", co1(2)),
        CatalogEntry::new("A4", "A4", co1(3)),
        CatalogEntry::new("D10", "D10", co1(5)),
        CatalogEntry::new("Hol(Z5)", "Hol(Z5)", co1(4)),
        CatalogEntry::new("Z3:Z4", "Z3:Z4", co1(4)),
        CatalogEntry::new("Z3", "Z3", co1(3)),
        CatalogEntry::new("Z4", "Z4", co1(4)),
        CatalogEntry::new("1", "1", Co(0)),
        CatalogEntry::new("Z2", "Z2", Co(0)),
        CatalogEntry::new("S3", "S3", Co(0)),
        CatalogEntry::new("Z6", "Z6", NotCo1),
        CatalogEntry::new("A6", "A6", Co(2)),
        CatalogEntry::new("Z15", "Z15", NotCo1),
        CatalogEntry::new("S3xZ2", "S3 x Z2", Co(2)),
        CatalogEntry::new("SL(2,5)", "SL(2,5)", NotCo1),
        CatalogEntry::new("A5xZ2", "A5 x Z2", NotCo1),
        CatalogEntry::new("A7", "A7", NotCo1),
        CatalogEntry::new("A8", "A8", NotCo1),
        CatalogEntry::new("L2(8)", "PSL(2,8)", NotCo1),
        CatalogEntry::new("S6", "S6", NotCo1),
    ]
}

/// Groups of order at most 24 expressible in the spec language. Several
/// isomorphism types appear more than once under different constructions.
pub const SMALL_GROUPS: &[&str] = &[
    "1",
    "Z2",
    "Z3",
    "Z4",
    "Z2 x Z2",
    "Z5",
    "Z6",
    "S3",
    "D6",
    "Hol(Z3)",
    "Z7",
    "Z8",
    "Z4 x Z2",
    "Z2 x Z2 x Z2",
    "D8",
    "Hol(Z4)",
    "Z9",
    "Z3 x Z3",
    "Z10",
    "D10",
    "Z11",
    "Z12",
    "Z6 x Z2",
    "D12",
    "Hol(Z6)",
    "A4",
    "PSL(2,3)",
    "Z3:Z4",
    "Z13",
    "Z14",
    "D14",
    "Z15",
    "Z16",
    "Z4 x Z4",
    "Z8 x Z2",
    "Z4 x Z2 x Z2",
    "Z2 x Z2 x Z2 x Z2",
    "D16",
    "Z8:Z2@3",
    "Z8:Z2@5",
    "Z4:Z4",
    "D8 x Z2",
    "Z17",
    "Z18",
    "D18",
    "S3 x Z3",
    "Z6 x Z3",
    "Z19",
    "Z20",
    "D20",
    "Z10 x Z2",
    "Z5:Z4",
    "Hol(Z5)",
    "Z7:Z3@2",
    "Z21",
    "Z22",
    "D22",
    "Z23",
    "Z24",
    "S4",
    "SL(2,3)",
    "Z3:Z8@2",
    "Z3:Z4 x Z2",
    "D24",
    "A4 x Z2",
    "S3 x Z4",
    "D12 x Z2",
    "Z12 x Z2",
    "S3 x Z2 x Z2",
    "PSL(2,2)",
];

/// Fingerprints of the ten co(1) groups, in catalog order.
pub fn theorem_fingerprints(cap: ElementCap) -> Result<Vec<(&'static str, Fingerprint)>> {
    theorem_catalog()
        .into_iter()
        .filter(CatalogEntry::is_positive)
        .map(|e| Ok((e.name, fingerprint(&e.build(cap)?, cap)?)))
        .collect()
}

/// Name of the theorem group whose fingerprint equals `fp`.
pub fn match_theorem<'a>(
    fp: &Fingerprint,
    theorem: &'a [(&'static str, Fingerprint)],
) -> Option<&'a str> {
    theorem.iter().find(|(_, f)| f == fp).map(|(n, _)| *n)
}
