//! Conjugacy classes, the element-order spectrum and the co value.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::group::{ElementCap, Group};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    /// First member in the group's breadth-first enumeration order.
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
    pub centralizer_order: u64,
    pub members: Vec<Permutation>,
}

/// Conjugacy classes sorted by element order, then size, then representative.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub group_order: u64,
    pub classes: Vec<ConjClass>,
    lookup: HashMap<Permutation, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoReport {
    pub k: usize,
    pub pi_e: Vec<u64>,
    pub co: usize,
    /// `(order, class count)` for every order realised by two or more classes.
    pub split_profile: Vec<(u64, usize)>,
}

impl CoReport {
    pub fn is_co1(&self) -> bool {
        self.co == 1
    }

    /// The unique split order of a co(1) group.
    pub fn split_order(&self) -> Option<u64> {
        match self.split_profile.as_slice() {
            [(n, 2)] => Some(*n),
            _ => None,
        }
    }
}

/// Conjugation-invariant summary used to recognise groups up to the
/// resolution the catalog needs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub group_order: u64,
    pub pi_e: Vec<u64>,
    /// Sorted multiset of `(element order, class size)`.
    pub order_size: Vec<(u64, u64)>,
}

impl ClassTable {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `p`, if `p` is in the group.
    pub fn class_index(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn spectrum(&self) -> BTreeSet<u64> {
        self.classes.iter().map(|c| c.element_order).collect()
    }

    /// Number of classes per element order (the same-order partition).
    pub fn classes_per_order(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for c in &self.classes {
            *out.entry(c.element_order).or_insert(0) += 1;
        }
        out
    }

    pub fn co_report(&self) -> CoReport {
        let per_order = self.classes_per_order();
        let k = self.k();
        let co = k - per_order.len();
        let split_profile: Vec<(u64, usize)> = per_order
            .iter()
            .filter(|(_, &c)| c >= 2)
            .map(|(&o, &c)| (o, c))
            .collect();
        debug_assert_eq!(split_profile.iter().map(|(_, c)| c - 1).sum::<usize>(), co);
        CoReport {
            k,
            pi_e: per_order.into_keys().collect(),
            co,
            split_profile,
        }
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut order_size: Vec<(u64, u64)> = self
            .classes
            .iter()
            .map(|c| (c.element_order, c.size))
            .collect();
        order_size.sort_unstable();
        Fingerprint {
            group_order: self.group_order,
            pi_e: self.spectrum().into_iter().collect(),
            order_size,
        }
    }
}

/// Partitions the group into conjugacy classes by closing each element under
/// conjugation by the generators.
pub fn conjugacy_classes(g: &Group, cap: ElementCap) -> Result<ClassTable> {
    let els = g.enumerate(cap)?;
    let n = els.len();
    let gens: Vec<&Permutation> = g.nontrivial_generators().collect();
    let mut class_of = vec![usize::MAX; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = raw.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            let x = &els.elements[members[i]];
            for s in &gens {
                let y = els.index[&x.conjugate_by(s)];
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            i += 1;
        }
        raw.push(members);
    }

    let order = g.order();
    let mut classes: Vec<ConjClass> = raw
        .into_iter()
        .map(|members| {
            let representative = els.elements[members[0]].clone();
            let size = members.len() as u64;
            ConjClass {
                element_order: representative.order(),
                representative,
                size,
                centralizer_order: order / size,
                members: members
                    .into_iter()
                    .map(|i| els.elements[i].clone())
                    .collect(),
            }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.element_order, a.size, &a.representative).cmp(&(
            b.element_order,
            b.size,
            &b.representative,
        ))
    });
    let mut lookup = HashMap::with_capacity(n);
    for (i, c) in classes.iter().enumerate() {
        for m in &c.members {
            lookup.insert(m.clone(), i);
        }
    }
    Ok(ClassTable {
        group_order: order,
        classes,
        lookup,
    })
}

/// Set of element orders, computed directly from the element list.
pub fn order_spectrum(g: &Group, cap: ElementCap) -> Result<BTreeSet<u64>> {
    Ok(g.all_elements(cap)?
        .iter()
        .map(Permutation::order)
        .collect())
}

pub fn co_report(g: &Group, cap: ElementCap) -> Result<CoReport> {
    Ok(conjugacy_classes(g, cap)?.co_report())
}

/// Whether `g` is a co(1) group. The equivalence between `co = 1` and a
/// split profile of exactly one `(n, 2)` entry is checked on every call.
pub fn is_co1(g: &Group, cap: ElementCap) -> Result<bool> {
    let report = co_report(g, cap)?;
    let by_profile = report.split_order().is_some();
    assert_eq!(
        report.is_co1(),
        by_profile,
        "co value and split profile disagree: {report:?}"
    );
    Ok(report.is_co1())
}

pub fn fingerprint(g: &Group, cap: ElementCap) -> Result<Fingerprint> {
    Ok(conjugacy_classes(g, cap)?.fingerprint())
}
