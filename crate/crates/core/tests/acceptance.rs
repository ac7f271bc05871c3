//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::process::ExitCode;

use cogroups::catalog::{theorem_catalog, Expectation, SMALL_GROUPS};
use cogroups::lattice::{parse_seed_file, shipped_seeds};
use cogroups::lemmas::FusionOutcome;
use cogroups::table1::TABLE1_GROUPS;
use cogroups::verify::closure_count;
use cogroups::*;

fn cap() -> ElementCap {
    ElementCap::default()
}

fn g(text: &str) -> Group {
    build_text(text, cap()).unwrap_or_else(|e| panic!("{text}: {e}"))
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Elements with a multiplication table, built by plain closure.
struct Table {
    elements: Vec<Permutation>,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

impl Table {
    fn new(group: &Group) -> Self {
        let id = Permutation::identity(group.degree());
        let mut index = HashMap::from([(id.clone(), 0)]);
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for s in group.generators() {
                let y = elements[i].then(s);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let inv = elements.iter().map(|a| index[&a.inverse()]).collect();
        Table { elements, mul, inv }
    }

    fn len(&self) -> usize {
        self.elements.len()
    }

    fn conj(&self, x: usize, by: usize) -> usize {
        self.mul[self.mul[self.inv[by]][x]][by]
    }

    /// (k, distinct element orders, (order, class size) multiset) by
    /// conjugating every element by every element.
    fn class_data(&self) -> (usize, BTreeSet<u64>, Vec<(u64, u64)>) {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n).map(|y| self.conj(x, y)).collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push((self.elements[x].order(), class.len() as u64));
        }
        let orders = classes.iter().map(|c| c.0).collect();
        classes.sort_unstable();
        (classes.len(), orders, classes)
    }

    /// Every subgroup, as sorted element-index lists, found by repeatedly
    /// adjoining one element and closing.
    fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let close = |seed: &[usize]| -> Vec<usize> {
            let mut set: BTreeSet<usize> = seed.iter().copied().collect();
            set.insert(0);
            let mut frontier: Vec<usize> = set.iter().copied().collect();
            while let Some(a) = frontier.pop() {
                for &b in seed {
                    let c = self.mul[a][b];
                    if set.insert(c) {
                        frontier.push(c);
                    }
                }
            }
            set.into_iter().collect()
        };
        let mut found: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
        let mut queue = vec![vec![0]];
        while let Some(h) = queue.pop() {
            let members: HashSet<usize> = h.iter().copied().collect();
            for x in 0..self.len() {
                if members.contains(&x) {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(x);
                let k = close(&seed);
                if found.insert(k.clone()) {
                    queue.push(k);
                }
            }
        }
        found.into_iter().collect()
    }

    /// (order, class size) of every conjugacy class of subgroups.
    fn subgroup_class_shape(&self) -> Vec<(u64, u64)> {
        let subgroups = self.all_subgroups();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut shape = Vec::new();
        for h in &subgroups {
            if seen.contains(h) {
                continue;
            }
            let orbit: HashSet<Vec<usize>> = (0..self.len())
                .map(|y| {
                    let mut img: Vec<usize> = h.iter().map(|&x| self.conj(x, y)).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            shape.push((h.len() as u64, orbit.len() as u64));
            seen.extend(orbit);
        }
        shape.sort_unstable();
        shape
    }

    fn subgroup(&self, members: &[usize], degree: usize) -> Group {
        Group::generated_by(degree, members.iter().map(|&i| &self.elements[i]))
    }
}

fn library_shape(ambient: &Group, n: usize) -> Vec<(u64, u64)> {
    let seeds = parse_seed_file(shipped_seeds(n).unwrap()).unwrap();
    let mut shape: Vec<(u64, u64)> = subgroup_classes(ambient, &seeds, cap())
        .unwrap()
        .entries
        .iter()
        .map(|e| (e.order, e.class_size))
        .collect();
    shape.sort_unstable();
    shape
}

fn criterion_1() -> Outcome {
    let positives: Vec<_> = theorem_catalog()
        .into_iter()
        .filter(|e| e.is_positive())
        .collect();
    ensure(positives.len() == 10, || {
        format!("{} positives", positives.len())
    })?;
    for e in &positives {
        let Expectation::Co1 { split_order } = e.expected else {
            unreachable!()
        };
        let grp = e.build(cap()).unwrap();
        let report = co_report(&grp, cap()).unwrap();
        ensure(
            report.co == 1 && report.split_profile == vec![(split_order, 2)],
            || format!("{}: {report:?}", e.name),
        )?;
        let (k, orders, shape) = Table::new(&grp).class_data();
        ensure(k == orders.len() + 1, || {
            format!("{}: oracle k={k}", e.name)
        })?;
        ensure(
            fingerprint(&grp, cap()).unwrap().order_size == shape,
            || format!("{}: class sizes differ from oracle", e.name),
        )?;
    }
    Ok("A5 L2(7) S5 S4 A4 D10 Hol(Z5) Z3:Z4 Z3 Z4 are co(1) with the listed split orders".into())
}

fn criterion_2() -> Outcome {
    let reference: BTreeSet<Fingerprint> = ["1", "Z2", "S3"]
        .iter()
        .map(|t| fingerprint(&g(t), cap()).unwrap())
        .collect();
    let mut groups: Vec<Group> = SMALL_GROUPS.iter().map(|t| g(t)).collect();
    let s4 = g("S4");
    let table = Table::new(&s4);
    let subgroups = table.all_subgroups();
    groups.extend(subgroups.iter().map(|h| table.subgroup(h, 4)));
    let mut found = BTreeSet::new();
    for grp in &groups {
        let co = co_report(grp, cap()).unwrap().co;
        let (k, orders, _) = Table::new(grp).class_data();
        ensure(k - orders.len() == co, || {
            format!("oracle co {} vs {co}", k - orders.len())
        })?;
        if co == 0 {
            found.insert(fingerprint(grp, cap()).unwrap());
        }
    }
    ensure(found == reference, || {
        format!("co(0) fingerprints {found:?}")
    })?;
    Ok(format!(
        "{} groups, co(0) ones are exactly 1, Z2, S3",
        groups.len()
    ))
}

fn criterion_3() -> Outcome {
    let frozen: &[(&str, usize)] = &[
        ("Z6", 2),
        ("Z15", 11),
        ("A6", 2),
        ("S3 x Z2", 2),
        ("SL(2,5)", 2),
        ("A5 x Z2", 4),
        ("S6", 5),
        ("A7", 2),
        ("A8", 6),
        ("PSL(2,8)", 4),
    ];
    for &(text, co) in frozen {
        let got = co_report(&g(text), cap()).unwrap().co;
        ensure(got == co, || format!("{text}: co={got}, want {co}"))?;
    }
    for e in theorem_catalog().iter().filter(|e| !e.is_positive()) {
        let got = co_report(&e.build(cap()).unwrap(), cap()).unwrap().co;
        let ok = match e.expected {
            Expectation::Co(c) => got == c,
            Expectation::NotCo1 => got != 1,
            Expectation::Co1 { .. } => false,
        };
        ensure(ok, || format!("{}: co={got}", e.name))?;
    }
    Ok("all named negatives have co != 1 (A6 co=2)".into())
}

fn criterion_4() -> Outcome {
    let mut groups: Vec<(String, Group)> = theorem_catalog()
        .iter()
        .map(|e| (e.name.to_string(), e.build(cap()).unwrap()))
        .collect();
    for n in [5, 6] {
        let ambient = g(&format!("S{n}"));
        let seeds = parse_seed_file(shipped_seeds(n).unwrap()).unwrap();
        for (i, e) in subgroup_classes(&ambient, &seeds, cap())
            .unwrap()
            .entries
            .into_iter()
            .enumerate()
        {
            groups.push((format!("S{n}#{i}"), e.representative));
        }
    }
    let mut checked = 0;
    for (label, grp) in &groups {
        for r in check_quotient_bounds(grp, label, cap()).unwrap() {
            checked += 1;
            ensure(r.holds(), || format!("violation: {r:?}"))?;
            ensure(r.t >= 1, || format!("empty class count: {r:?}"))?;
        }
    }
    ensure(checked > 0, || "no quotients checked".into())?;
    Ok(format!(
        "{} groups, {checked} elementary abelian quotients, 0 violations",
        groups.len()
    ))
}

fn normal_of_order(grp: &Group, order: u64) -> Group {
    normal_subgroups(grp, cap())
        .unwrap()
        .entries
        .into_iter()
        .find(|n| n.order() == order)
        .unwrap()
}

fn criterion_5() -> Outcome {
    let triples: &[(&str, u64, u64, (u64, u64))] = &[
        ("S5", 60, 5, (2, 1)),
        ("S4", 12, 3, (2, 1)),
        ("S4", 4, 2, (3, 2)),
        ("A4", 4, 2, (3, 1)),
        ("Hol(Z5)", 5, 5, (4, 1)),
        ("S5", 60, 2, (1, 2)),
    ];
    for &(text, n, m, (fused, index)) in triples {
        let grp = g(text);
        let normal = normal_of_order(&grp, n);
        match check_fusion_identity(&grp, &normal, m, cap()).unwrap() {
            FusionOutcome::Applicable(r) => ensure(
                r.holds && r.m_fused == fused && r.centralizer_index == index,
                || format!("{text}/{n}/{m}: {r:?}"),
            )?,
            FusionOutcome::NotApplicable(why) => return Err(format!("{text}/{n}/{m}: {why}")),
        }
    }
    Ok(format!("{} applicable triples hold", triples.len()))
}

fn naive(target: u64, count: usize, allowed: &[u64]) -> bool {
    if count == 0 {
        return target == 0;
    }
    allowed
        .iter()
        .any(|&d| d * d <= target && naive(target - d * d, count - 1, allowed))
}

fn criterion_6() -> Outcome {
    let cases = [
        DegreeSumQuery::ito(36, 3, 6),
        DegreeSumQuery::lagrange(24, 1, 48),
        DegreeSumQuery::lagrange(24, 2, 48),
        DegreeSumQuery::lagrange(20, 1, 40),
    ];
    for q in &cases {
        ensure(degree_sum_feasible(q) == (false, None), || {
            format!("feasible: {q:?}")
        })?;
    }
    let q = DegreeSumQuery::explicit(25, 2, &[1, 2, 3, 4, 5]).unwrap();
    ensure(degree_sum_feasible(&q) == (true, Some(vec![3, 4])), || {
        "25 = 9 + 16 missed".into()
    })?;
    let mut compared = 0;
    for index in 1..=36 {
        for target in 0..=200 {
            for count in 0..=4 {
                let q = DegreeSumQuery::ito(target, count, index);
                let (ok, _) = degree_sum_feasible(&q);
                ensure(ok == naive(target, count, &q.allowed), || {
                    format!("disagree on {q:?}")
                })?;
                compared += 1;
            }
        }
    }
    Ok(format!(
        "known cases infeasible, {compared} queries agree with naive enumeration"
    ))
}

fn criterion_7() -> Outcome {
    let data = Table1Data::embedded();
    for name in TABLE1_GROUPS {
        let r = table1_crosscheck(name, &data, cap()).unwrap();
        ensure(r.pass, || format!("{name}: computed {:?}", r.computed))?;
    }
    let count = |name: &str, pair| data.columns[name].iter().filter(|p| **p == pair).count();
    ensure(
        count("L2(16)", (17, 17)) == 8 && count("L2(27)", (13, 13)) == 6,
        || "column multiplicities".into(),
    )?;
    Ok("A5, A6, L2(16), L2(27) match the embedded centralizer table".into())
}

fn criterion_8() -> Outcome {
    for (n, classes) in [(4, 11), (5, 19)] {
        let ambient = g(&format!("S{n}"));
        let lib = library_shape(&ambient, n);
        let oracle = Table::new(&ambient).subgroup_class_shape();
        ensure(lib.len() == classes && lib == oracle, || {
            format!(
                "S{n}: library {} classes, oracle {}",
                lib.len(),
                oracle.len()
            )
        })?;
    }
    let want: BTreeSet<&str> = ["Z3", "Z4", "A4", "D10", "Hol(Z5)", "S4", "A5", "S5"].into();
    for n in [5, 6] {
        let ambient = g(&format!("S{n}"));
        let seeds = parse_seed_file(shipped_seeds(n).unwrap()).unwrap();
        let list = subgroup_classes(&ambient, &seeds, cap()).unwrap();
        let doc = scan_document(&format!("S{n}"), &list, cap()).unwrap();
        let mut matched = BTreeSet::new();
        for row in doc.rows.iter().filter(|r| r.co == 1) {
            let name = row
                .theorem_match
                .as_deref()
                .ok_or_else(|| format!("S{n}: unmatched co(1) row {row:?}"))?;
            matched.insert(name);
        }
        ensure(matched == want, || format!("S{n}: matched {matched:?}"))?;
    }
    Ok("S4 = 11 and S5 = 19 classes as the closure oracle; co(1) classes of S5, S6 all in the catalog".into())
}

fn criterion_9() -> Outcome {
    let mut groups: Vec<Group> = theorem_catalog()
        .iter()
        .map(|e| e.build(cap()).unwrap())
        .collect();
    groups.extend(SMALL_GROUPS.iter().map(|t| g(t)));
    groups.extend(TABLE1_GROUPS.iter().map(|t| g(t)));
    let mut chain_checked = 0;
    for grp in &groups {
        let audit = class_equation_audit(grp, cap()).unwrap();
        ensure(audit.holds(), || {
            format!("class equation fails for order {}", grp.order())
        })?;
        if grp.order() <= 5040 {
            chain_checked += 1;
            ensure(
                closure_count(grp, 5040) == Some(grp.order() as usize),
                || format!("chain order {} differs from closure", grp.order()),
            )?;
        }
    }
    Ok(format!(
        "{} class equations, {chain_checked} chain orders match closure",
        groups.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("ten co(1) groups", criterion_1),
        ("co(0) exactness", criterion_2),
        ("named negatives", criterion_3),
        ("quotient bounds", criterion_4),
        ("fusion identity", criterion_5),
        ("degree-sum infeasibility", criterion_6),
        ("centralizer table", criterion_7),
        ("subgroup scans", criterion_8),
        ("engine self-consistency", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
