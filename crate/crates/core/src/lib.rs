//! Conjugacy classes versus element orders in finite permutation groups.
//!
//! A group is *co(k)* when its class number exceeds the number of distinct
//! element orders by `k`. This crate builds permutation groups, computes
//! their class structure and the co value, and checks the structural facts
//! that the classification of co(1) groups rests on.

pub mod catalog;
pub mod classes;
pub mod constructions;
pub mod error;
pub mod field;
pub mod group;
pub mod lattice;
pub mod lemmas;
pub mod perm;
pub mod report;
pub mod subgroups;
pub mod table1;
pub mod verify;

pub use catalog::{
    match_theorem, theorem_catalog, theorem_fingerprints, CatalogEntry, Expectation, SMALL_GROUPS,
};
pub use classes::{
    co_report, conjugacy_classes, fingerprint, is_co1, order_spectrum, ClassTable, CoReport,
    ConjClass, Fingerprint,
};
pub use constructions::{build, build_text, construct, parse_spec, ConstructionReport, GroupSpec};
pub use error::{Error, Result};
pub use group::{group_from_generators, ElementCap, Elements, Group, StabChain};
pub use lattice::{parse_seed_file, subgroup_classes, SubgroupClass, SubgroupClassList};
pub use lemmas::{
    check_fusion_identity, check_quotient_bounds, check_split_propagation, class_equation_audit,
    degree_sum_feasible, DegreeSumQuery,
};
pub use perm::{compose, element_order, Permutation};
pub use report::{report_for, scan_document, ReportDocument, ScanDocument};
pub use subgroups::{
    center, centralizer_subgroup, derived_series_solvable, is_elementary_abelian, normal_subgroups,
    quotient, NormalSubgroupList,
};
pub use table1::{parse_table1, table1_crosscheck, Table1Data};
pub use verify::{verify_theorem, ClaimRecord, VerificationSummary, VerifyOptions};
