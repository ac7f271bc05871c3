//! Centralizers, normal subgroups, quotients and solvability.

use std::collections::{BTreeSet, HashSet};

use crate::classes::{conjugacy_classes, ClassTable};
use crate::error::{Error, Result};
use crate::group::{ElementCap, Group};
use crate::perm::Permutation;

/// `C_G(x)`.
pub fn centralizer_subgroup(g: &Group, x: &Permutation, cap: ElementCap) -> Result<Group> {
    g.check_degree(x)?;
    if !g.has(x) {
        return Err(Error::NotMember);
    }
    let els = g.all_elements(cap)?;
    Ok(Group::generated_by(
        g.degree(),
        els.iter().filter(|h| h.commutes_with(x)),
    ))
}

/// `Z(G)`: elements commuting with every generator.
pub fn center(g: &Group, cap: ElementCap) -> Result<Group> {
    let els = g.all_elements(cap)?;
    let gens: Vec<&Permutation> = g.nontrivial_generators().collect();
    Ok(Group::generated_by(
        g.degree(),
        els.iter()
            .filter(|h| gens.iter().all(|s| h.commutes_with(s))),
    ))
}

pub fn is_normal(parent: &Group, sub: &Group) -> bool {
    parent.contains_group(sub)
        && parent.nontrivial_generators().all(|s| {
            sub.nontrivial_generators()
                .all(|n| sub.has(&n.conjugate_by(s)))
        })
}

/// Smallest subgroup containing `seeds` that is closed under conjugation by
/// every element of `conjugators`.
pub fn normal_closure<'a, I>(degree: usize, seeds: I, conjugators: &[Permutation]) -> Group
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut h = Group::generated_by(degree, seeds);
    let mut i = 0;
    // h's generator list only grows; scan it like a queue
    while i < h.generators().len() {
        let n = h.generators()[i].clone();
        for s in conjugators {
            let c = n.conjugate_by(s);
            if !h.has(&c) {
                h = h.with_generator(&c);
            }
        }
        i += 1;
    }
    h
}

#[derive(Clone, Debug)]
pub struct NormalSubgroupList {
    pub parent_order: u64,
    /// Sorted by order; trivial first, the whole group last.
    pub entries: Vec<Group>,
}

/// Every normal subgroup, as joins of normal closures of single classes.
pub fn normal_subgroups(g: &Group, cap: ElementCap) -> Result<NormalSubgroupList> {
    let table = conjugacy_classes(g, cap)?;
    Ok(normal_subgroups_with(g, &table))
}

/// Same as [`normal_subgroups`] with a precomputed class table.
pub fn normal_subgroups_with(g: &Group, table: &ClassTable) -> NormalSubgroupList {
    let gens: Vec<Permutation> = g.nontrivial_generators().cloned().collect();
    let nclasses = table.k();
    // a normal subgroup is the union of the classes it contains
    let class_set = |h: &Group| -> Vec<bool> {
        table
            .classes
            .iter()
            .map(|c| h.has(&c.representative))
            .collect()
    };

    let mut found: Vec<(Vec<bool>, Group)> = Vec::new();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut push = |h: Group, found: &mut Vec<(Vec<bool>, Group)>| {
        let key = class_set(&h);
        if seen.insert(key.clone()) {
            found.push((key, h));
        }
    };
    push(Group::trivial(g.degree()), &mut found);
    for c in &table.classes {
        push(normal_closure(g.degree(), &c.members, &gens), &mut found);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let (ki, kj) = (&found[i].0, &found[j].0);
            if (0..nclasses).all(|c| !kj[c] || ki[c]) || (0..nclasses).all(|c| !ki[c] || kj[c]) {
                continue;
            }
            let mut join = found[i].1.clone();
            for s in found[j].1.nontrivial_generators() {
                join = join.with_generator(s);
            }
            push(join, &mut found);
        }
        i += 1;
    }
    let mut entries: Vec<(Vec<bool>, Group)> = found;
    entries.sort_by(|a, b| a.1.order().cmp(&b.1.order()).then_with(|| b.0.cmp(&a.0)));
    NormalSubgroupList {
        parent_order: g.order(),
        entries: entries.into_iter().map(|(_, h)| h).collect(),
    }
}

/// Whether `n` is elementary abelian, with its prime. The trivial group
/// counts as elementary abelian with no prime.
pub fn is_elementary_abelian(n: &Group) -> (bool, Option<u64>) {
    if n.is_trivial() {
        return (true, None);
    }
    if !n.is_abelian() {
        return (false, None);
    }
    // an abelian group generated by elements of prime order p has exponent p
    let orders: BTreeSet<u64> = n.nontrivial_generators().map(Permutation::order).collect();
    match orders.iter().collect::<Vec<_>>().as_slice() {
        [&p] if is_prime(p) => (true, Some(p)),
        _ => (false, None),
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `G/N` as the action of `G` on the right cosets of `N`.
pub fn quotient(g: &Group, n: &Group, cap: ElementCap) -> Result<Group> {
    if n.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: n.degree(),
        });
    }
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let g_els = g.enumerate(cap)?;
    let n_els = n.all_elements(cap)?;
    let mut coset_of = vec![usize::MAX; g_els.len()];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..g_els.len() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(i);
        for m in &n_els {
            let j = g_els.index[&m.then(&g_els.elements[i])];
            coset_of[j] = id;
        }
    }
    let degree = reps.len();
    let gens: Vec<Permutation> = g
        .nontrivial_generators()
        .map(|s| {
            let images = reps
                .iter()
                .map(|&r| coset_of[g_els.index[&g_els.elements[r].then(s)]] as u32)
                .collect();
            Permutation::from_images(images).expect("coset action is a permutation")
        })
        .collect();
    if gens.is_empty() {
        return Ok(Group::trivial(degree));
    }
    Group::from_generators(gens)
}

/// Image order of `x` in `G/N`: least `k ≥ 1` with `xᵏ ∈ N`.
pub fn image_order(x: &Permutation, n: &Group) -> u64 {
    let mut k = 1;
    let mut y = x.clone();
    while !n.has(&y) {
        y = y.then(x);
        k += 1;
    }
    k
}

/// Commutator subgroup `[H, H]`.
pub fn derived_subgroup(h: &Group) -> Group {
    let gens: Vec<Permutation> = h.nontrivial_generators().cloned().collect();
    let mut commutators = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().then(&b.inverse()).then(a).then(b);
            if !c.is_identity() {
                commutators.push(c);
            }
        }
    }
    normal_closure(h.degree(), &commutators, &gens)
}

/// Successive derived subgroups until they stabilise.
pub fn derived_series(g: &Group) -> Vec<Group> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            return series;
        }
        let done = next.is_trivial();
        series.push(next);
        if done {
            return series;
        }
    }
}

pub fn derived_series_solvable(g: &Group, cap: ElementCap) -> Result<bool> {
    cap.check(g.order())?;
    Ok(derived_series(g).last().unwrap().is_trivial())
}
