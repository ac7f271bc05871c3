//! Executable checks of the structural facts behind the co(1) classification.
//!
//! Each check evaluates the statement on concrete groups and returns a
//! report carrying the numbers involved, so callers can print the arithmetic.

use serde::Serialize;

use crate::classes::{conjugacy_classes, CoReport};
use crate::error::{Error, Result};
use crate::group::{ElementCap, Group};
use crate::subgroups::{
    centralizer_subgroup, image_order, is_elementary_abelian, is_normal, normal_subgroups_with,
    quotient,
};

/// Quotient co-bounds for one normal elementary abelian `N`: the quotient
/// co value never exceeds the parent's, and drops by at least `t − 1` when
/// `N ∖ {1}` meets `t` classes of the parent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientBoundReport {
    pub parent: String,
    pub n_order: u64,
    pub prime: u64,
    /// Number of parent classes inside `N ∖ {1}`.
    pub t: usize,
    pub co_parent: usize,
    pub co_quotient: usize,
    /// `co_quotient ≤ co_parent`
    pub bound_22: bool,
    /// `co_quotient ≤ co_parent − t + 1`
    pub bound_23: bool,
}

impl QuotientBoundReport {
    pub fn holds(&self) -> bool {
        self.bound_22 && self.bound_23
    }
}

pub fn check_quotient_bounds(
    g: &Group,
    label: &str,
    cap: ElementCap,
) -> Result<Vec<QuotientBoundReport>> {
    let table = conjugacy_classes(g, cap)?;
    let co_parent = table.co_report().co;
    let normals = normal_subgroups_with(g, &table);
    let mut out = Vec::new();
    for n in &normals.entries {
        if n.is_trivial() || n.order() == g.order() {
            continue;
        }
        let (true, Some(prime)) = is_elementary_abelian(n) else {
            continue;
        };
        let t = table
            .classes
            .iter()
            .filter(|c| !c.representative.is_identity() && n.has(&c.representative))
            .count();
        let q = quotient(g, n, cap)?;
        let co_quotient = conjugacy_classes(&q, cap)?.co_report().co;
        out.push(QuotientBoundReport {
            parent: label.to_string(),
            n_order: n.order(),
            prime,
            t,
            co_parent,
            co_quotient,
            bound_22: co_quotient <= co_parent,
            bound_23: co_quotient as i64 <= co_parent as i64 - t as i64 + 1,
        });
    }
    Ok(out)
}

/// Index identity `|G:N| = m·|C_G(a):C_N(a)|` for an element order whose
/// `N`-classes (all of one size, `m` of them) fuse into one `G`-class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionIdentityReport {
    pub element_order: u64,
    pub m_fused: u64,
    /// `|G:N|`
    pub lhs: u64,
    /// `|C_G(a):C_N(a)|`
    pub centralizer_index: u64,
    /// `m_fused · |C_G(a):C_N(a)|`
    pub rhs: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FusionOutcome {
    Applicable(FusionIdentityReport),
    NotApplicable(String),
}

pub fn check_fusion_identity(
    g: &Group,
    n: &Group,
    m: u64,
    cap: ElementCap,
) -> Result<FusionOutcome> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let na = |why: String| Ok(FusionOutcome::NotApplicable(why));
    if m <= 1 {
        return na("element order must exceed 1".into());
    }
    let n_table = conjugacy_classes(n, cap)?;
    let n_classes: Vec<_> = n_table
        .classes
        .iter()
        .filter(|c| c.element_order == m)
        .collect();
    let Some(first) = n_classes.first() else {
        return na(format!("N has no elements of order {m}"));
    };
    if n_classes.iter().any(|c| c.size != first.size) {
        return na(format!("N-classes of order-{m} elements differ in size"));
    }
    let g_table = conjugacy_classes(g, cap)?;
    let target = g_table.class_index(&first.representative);
    if n_classes
        .iter()
        .any(|c| g_table.class_index(&c.representative) != target)
    {
        return na(format!("order-{m} elements of N meet several G-classes"));
    }
    let a = &first.representative;
    let c_g = centralizer_subgroup(g, a, cap)?.order();
    let c_n = centralizer_subgroup(n, a, cap)?.order();
    let m_fused = n_classes.len() as u64;
    let lhs = g.order() / n.order();
    let centralizer_index = c_g / c_n;
    let rhs = m_fused * centralizer_index;
    Ok(FusionOutcome::Applicable(FusionIdentityReport {
        element_order: m,
        m_fused,
        lhs,
        centralizer_index,
        rhs,
        holds: lhs == rhs && c_g % c_n == 0,
    }))
}

/// For co(1) `G` and co(1) `G/N`, the quotient's split order is the image
/// order of one of `G`'s two split class representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitPropagationReport {
    pub parent_split_order: u64,
    pub quotient_split_order: u64,
    /// Orders in `G/N` of the two split class representatives of `G`.
    pub image_orders: (u64, u64),
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SplitOutcome {
    Applicable(SplitPropagationReport),
    NotApplicable(String),
}

pub fn check_split_propagation(g: &Group, n: &Group, cap: ElementCap) -> Result<SplitOutcome> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    if !is_elementary_abelian(n).0 {
        return Err(Error::NotElementaryAbelian);
    }
    let na = |why: &str| Ok(SplitOutcome::NotApplicable(why.to_string()));
    if n.is_trivial() {
        return na("N is trivial");
    }
    let table = conjugacy_classes(g, cap)?;
    let Some(parent_split) = table.co_report().split_order() else {
        return na("G is not co(1)");
    };
    let q_report: CoReport = conjugacy_classes(&quotient(g, n, cap)?, cap)?.co_report();
    let Some(quotient_split) = q_report.split_order() else {
        return na("G/N is not co(1)");
    };
    let reps: Vec<_> = table
        .classes
        .iter()
        .filter(|c| c.element_order == parent_split)
        .map(|c| &c.representative)
        .collect();
    let image_orders = (image_order(reps[0], n), image_order(reps[1], n));
    Ok(SplitOutcome::Applicable(SplitPropagationReport {
        parent_split_order: parent_split,
        quotient_split_order: quotient_split,
        image_orders,
        holds: quotient_split == image_orders.0 || quotient_split == image_orders.1,
    }))
}

/// Where the allowed character degrees came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DegreeBasis {
    /// Divisors of `|G:A|` for an abelian normal `A`.
    Ito { index: u64 },
    /// Divisors of `|G|`.
    Lagrange { order: u64 },
    /// Caller-supplied set, e.g. an upper bound `χ(1) ≤ |G:A|` for a
    /// non-normal abelian `A`.
    Explicit,
}

/// Can `target` be written as a sum of `count` squares of allowed degrees?
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSumQuery {
    pub target: u64,
    pub count: usize,
    /// Ascending, distinct, positive.
    pub allowed: Vec<u64>,
    pub basis: DegreeBasis,
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

impl DegreeSumQuery {
    pub fn ito(target: u64, count: usize, index: u64) -> Self {
        DegreeSumQuery {
            target,
            count,
            allowed: divisors(index),
            basis: DegreeBasis::Ito { index },
        }
    }

    pub fn lagrange(target: u64, count: usize, order: u64) -> Self {
        DegreeSumQuery {
            target,
            count,
            allowed: divisors(order),
            basis: DegreeBasis::Lagrange { order },
        }
    }

    pub fn explicit(target: u64, count: usize, allowed: &[u64]) -> Result<Self> {
        let mut allowed = allowed.to_vec();
        allowed.sort_unstable();
        allowed.dedup();
        if allowed.is_empty() || allowed[0] == 0 {
            return Err(Error::InvalidParameter(
                "allowed degrees must be a nonempty set of positive integers".into(),
            ));
        }
        Ok(DegreeSumQuery {
            target,
            count,
            allowed,
            basis: DegreeBasis::Explicit,
        })
    }

    /// Query for `|G/N|(|N| − 1) = Σ χᵢ(1)²` over the `k(G) − k(G/N)`
    /// characters of `G` not inflated from `G/N`.
    pub fn from_quotient(
        group_order: u64,
        n_order: u64,
        k_group: usize,
        k_quotient: usize,
        basis_index: u64,
    ) -> Self {
        let target = (group_order / n_order) * (n_order - 1);
        DegreeSumQuery::ito(target, k_group - k_quotient, basis_index)
    }
}

/// Exhaustive search over multisets with pruning. Returns the ascending
/// witness when one exists.
pub fn degree_sum_feasible(q: &DegreeSumQuery) -> (bool, Option<Vec<u64>>) {
    fn search(
        squares: &[(u64, u64)],
        start: usize,
        count: usize,
        target: u64,
        acc: &mut Vec<u64>,
    ) -> bool {
        if count == 0 {
            return target == 0;
        }
        let smallest = squares.last().unwrap().1;
        if smallest.saturating_mul(count as u64) > target {
            return false;
        }
        for (i, &(d, s)) in squares.iter().enumerate().skip(start) {
            if s > target {
                continue;
            }
            // remaining parts are no larger than this one
            if s.saturating_mul(count as u64) < target {
                break;
            }
            acc.push(d);
            if search(squares, i, count - 1, target - s, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }

    if q.allowed.is_empty() {
        return (false, None);
    }
    let mut squares: Vec<(u64, u64)> = q.allowed.iter().map(|&d| (d, d * d)).collect();
    squares.sort_unstable_by(|a, b| b.cmp(a));
    let mut acc = Vec::with_capacity(q.count);
    if search(&squares, 0, q.count, q.target, &mut acc) {
        acc.reverse();
        (true, Some(acc))
    } else {
        (false, None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEquationReport {
    pub group_order: u64,
    /// Sizes of the non-identity classes.
    pub nonidentity_sizes: Vec<u64>,
    pub sums_to_order: bool,
    pub sizes_divide_order: bool,
}

impl ClassEquationReport {
    pub fn holds(&self) -> bool {
        self.sums_to_order && self.sizes_divide_order
    }
}

pub fn class_equation_audit(g: &Group, cap: ElementCap) -> Result<ClassEquationReport> {
    let table = conjugacy_classes(g, cap)?;
    let order = g.order();
    let identity_classes = table
        .classes
        .iter()
        .filter(|c| c.representative.is_identity())
        .count();
    let nonidentity_sizes: Vec<u64> = table
        .classes
        .iter()
        .filter(|c| !c.representative.is_identity())
        .map(|c| c.size)
        .collect();
    Ok(ClassEquationReport {
        group_order: order,
        sums_to_order: identity_classes == 1 && 1 + nonidentity_sizes.iter().sum::<u64>() == order,
        sizes_divide_order: nonidentity_sizes.iter().all(|&s| order.is_multiple_of(s)),
        nonidentity_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_text;
    use crate::perm::Permutation;
    use crate::subgroups::normal_subgroups;
    use proptest::prelude::*;

    fn cap() -> ElementCap {
        ElementCap::default()
    }

    fn g(text: &str) -> Group {
        build_text(text, cap()).unwrap()
    }

    fn normal_of_order(grp: &Group, order: u64) -> Group {
        normal_subgroups(grp, cap())
            .unwrap()
            .entries
            .into_iter()
            .find(|n| n.order() == order)
            .unwrap()
    }

    #[test]
    fn quotient_bounds_examples() {
        let r = check_quotient_bounds(&g("S4"), "S4", cap()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(
            (r[0].n_order, r[0].t, r[0].co_parent, r[0].co_quotient),
            (4, 1, 1, 0)
        );
        assert!(r[0].holds());

        let r = check_quotient_bounds(&g("A4"), "A4", cap()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].t, r[0].co_parent, r[0].co_quotient), (1, 1, 1));
        assert!(r[0].bound_23);

        let r = check_quotient_bounds(&g("Z4"), "Z4", cap()).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(
            (r[0].n_order, r[0].t, r[0].co_parent, r[0].co_quotient),
            (2, 1, 1, 0)
        );

        assert!(check_quotient_bounds(&g("A5"), "A5", cap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn fusion_examples() {
        let s5 = g("S5");
        let a5 = normal_of_order(&s5, 60);
        let FusionOutcome::Applicable(r) = check_fusion_identity(&s5, &a5, 5, cap()).unwrap()
        else {
            panic!()
        };
        assert_eq!((r.m_fused, r.lhs, r.centralizer_index, r.rhs), (2, 2, 1, 2));
        assert!(r.holds);

        let s4 = g("S4");
        let a4 = normal_of_order(&s4, 12);
        let FusionOutcome::Applicable(r) = check_fusion_identity(&s4, &a4, 3, cap()).unwrap()
        else {
            panic!()
        };
        assert_eq!((r.m_fused, r.lhs, r.centralizer_index), (2, 2, 1));
        assert!(r.holds);

        let v4 = normal_of_order(&s4, 4);
        let FusionOutcome::Applicable(r) = check_fusion_identity(&s4, &v4, 2, cap()).unwrap()
        else {
            panic!()
        };
        assert_eq!((r.m_fused, r.lhs, r.centralizer_index, r.rhs), (3, 6, 2, 6));

        assert!(matches!(
            check_fusion_identity(&s4, &v4, 3, cap()).unwrap(),
            FusionOutcome::NotApplicable(_)
        ));
        // order-5 elements of Z5 stay in two classes of D10
        let d10 = g("D10");
        let z5 = normal_of_order(&d10, 5);
        assert!(matches!(
            check_fusion_identity(&d10, &z5, 5, cap()).unwrap(),
            FusionOutcome::NotApplicable(_)
        ));
        let not_normal =
            Group::from_generators(vec![Permutation::parse_cycles(4, "(1,2)").unwrap()]).unwrap();
        assert_eq!(
            check_fusion_identity(&s4, &not_normal, 2, cap()).unwrap_err(),
            Error::NotNormal
        );
    }

    #[test]
    fn split_propagation_examples() {
        let hol = g("Hol(Z5)");
        let z5 = normal_of_order(&hol, 5);
        let SplitOutcome::Applicable(r) = check_split_propagation(&hol, &z5, cap()).unwrap() else {
            panic!()
        };
        assert_eq!((r.parent_split_order, r.quotient_split_order), (4, 4));
        assert_eq!(r.image_orders, (4, 4));
        assert!(r.holds);

        let a4 = g("A4");
        let v4 = normal_of_order(&a4, 4);
        let SplitOutcome::Applicable(r) = check_split_propagation(&a4, &v4, cap()).unwrap() else {
            panic!()
        };
        assert_eq!((r.parent_split_order, r.quotient_split_order), (3, 3));
        assert!(r.holds);

        let s4 = g("S4");
        let v4 = normal_of_order(&s4, 4);
        assert!(matches!(
            check_split_propagation(&s4, &v4, cap()).unwrap(),
            SplitOutcome::NotApplicable(_)
        ));
        let a4_in_s4 = normal_of_order(&s4, 12);
        assert_eq!(
            check_split_propagation(&s4, &a4_in_s4, cap()).unwrap_err(),
            Error::NotElementaryAbelian
        );
    }

    #[test]
    fn degree_sum_examples() {
        let q = DegreeSumQuery::ito(36, 3, 6);
        assert_eq!(q.allowed, vec![1, 2, 3, 6]);
        assert_eq!(degree_sum_feasible(&q), (false, None));
        assert_eq!(
            degree_sum_feasible(&DegreeSumQuery::lagrange(24, 1, 24)),
            (false, None)
        );
        let q = DegreeSumQuery::explicit(25, 2, &[1, 2, 3, 4, 5]).unwrap();
        assert_eq!(degree_sum_feasible(&q), (true, Some(vec![3, 4])));
        assert_eq!(
            degree_sum_feasible(&DegreeSumQuery::ito(0, 0, 6)),
            (true, Some(vec![]))
        );
        assert_eq!(
            degree_sum_feasible(&DegreeSumQuery::ito(1, 0, 6)),
            (false, None)
        );
        assert!(DegreeSumQuery::explicit(4, 1, &[]).is_err());
        assert!(DegreeSumQuery::explicit(4, 1, &[0, 2]).is_err());
        // without the divisibility restriction 36 = 16 + 16 + 4 is reachable
        let q = DegreeSumQuery::explicit(36, 3, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(degree_sum_feasible(&q), (true, Some(vec![2, 4, 4])));
        let q = DegreeSumQuery::from_quotient(42, 7, 6, 3, 6);
        assert_eq!((q.target, q.count), (36, 3));
    }

    #[test]
    fn class_equation_examples() {
        let r = class_equation_audit(&g("A5"), cap()).unwrap();
        assert_eq!(r.nonidentity_sizes, vec![15, 20, 12, 12]);
        assert!(r.holds());
        let r = class_equation_audit(&g("Z6 x Z2"), cap()).unwrap();
        assert!(r.nonidentity_sizes.iter().all(|&s| s == 1));
        assert!(r.holds());
        assert!(class_equation_audit(&g("S5"), cap()).unwrap().holds());
    }

    /// Naive oracle: every ordered tuple, no pruning.
    fn naive(target: u64, count: usize, allowed: &[u64]) -> bool {
        if count == 0 {
            return target == 0;
        }
        allowed
            .iter()
            .any(|&d| d * d <= target && naive(target - d * d, count - 1, allowed))
    }

    proptest! {
        #[test]
        fn witness_is_valid_and_agrees_with_naive(
            target in 0u64..=200,
            count in 0usize..=4,
            allowed in prop::collection::btree_set(1u64..=14, 1..6),
        ) {
            let allowed: Vec<u64> = allowed.into_iter().collect();
            let q = DegreeSumQuery::explicit(target, count, &allowed).unwrap();
            let (ok, witness) = degree_sum_feasible(&q);
            prop_assert_eq!(ok, naive(target, count, &allowed));
            if let Some(w) = witness {
                prop_assert_eq!(w.len(), count);
                prop_assert_eq!(w.iter().map(|d| d * d).sum::<u64>(), target);
                prop_assert!(w.iter().all(|d| allowed.contains(d)));
                // symmetric: any permutation of the witness is a solution too
                let mut rev = w.clone();
                rev.reverse();
                prop_assert_eq!(rev.iter().map(|d| d * d).sum::<u64>(), target);
            }
        }
    }
}
