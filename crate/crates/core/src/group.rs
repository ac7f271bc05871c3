//! Permutation groups backed by a deterministic Schreier–Sims stabilizer chain.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Upper bound on the number of elements any operation may enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementCap {
    pub max_elements: u64,
}

impl ElementCap {
    pub const DEFAULT: ElementCap = ElementCap {
        max_elements: 200_000,
    };

    pub fn new(max_elements: u64) -> Self {
        ElementCap { max_elements }
    }

    pub fn check(&self, order: u64) -> Result<()> {
        if order > self.max_elements {
            Err(Error::CapExceeded {
                order,
                cap: self.max_elements,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for ElementCap {
    fn default() -> Self {
        ElementCap::DEFAULT
    }
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[b] = (u, u⁻¹)` with `u` mapping the base point to `b`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Permutation::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            gens: Vec::new(),
            transversal,
            orbit: vec![base],
        }
    }

    /// Extends the orbit and transversal to cover the current generators.
    /// Existing transversal entries are kept, so the walk is deterministic.
    fn close_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.apply(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().0.then(s);
                    let inv = u.inverse();
                    self.transversal[c] = Some((u, inv));
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// Stabilizer chain: base points with transversals for the successive point
/// stabilizers. Built by deterministic sifting of every Schreier generator.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.orbit.len() as u64).product()
    }

    /// Strips `g` through the chain starting at `from`; returns the residue.
    fn sift_from(&self, g: &Permutation, from: usize) -> Permutation {
        let mut h = g.clone();
        for level in &self.levels[from..] {
            match &level.transversal[h.apply(level.base)] {
                Some((_, inv)) => h = h.then(inv),
                None => return h,
            }
        }
        h
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.sift_from(g, 0).is_identity()
    }

    /// Adds `g` to the group; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let h = self.sift_from(g, 0);
        if h.is_identity() {
            return false;
        }
        self.extend(0, h);
        true
    }

    fn extend(&mut self, level: usize, g: Permutation) {
        if level == self.levels.len() {
            let base = g
                .first_moved_point()
                .expect("only non-identity residues are added");
            self.levels.push(Level::new(base, self.degree));
        }
        self.levels[level].gens.push(g);
        self.levels[level].close_orbit();

        let n_orbit = self.levels[level].orbit.len();
        let n_gens = self.levels[level].gens.len();
        for i in 0..n_orbit {
            for j in 0..n_gens {
                let schreier = {
                    let lv = &self.levels[level];
                    let b = lv.orbit[i];
                    let s = &lv.gens[j];
                    let (u, _) = lv.transversal[b].as_ref().unwrap();
                    let (_, back) = lv.transversal[s.apply(b)].as_ref().unwrap();
                    u.then(s).then(back)
                };
                let h = self.sift_from(&schreier, level + 1);
                if !h.is_identity() {
                    self.extend(level + 1, h);
                }
            }
        }
    }
}

/// A permutation group given by generators, with its stabilizer chain.
///
/// Groups are immutable once built.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl Group {
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Group> {
        let Some(first) = generators.first() else {
            return Err(Error::EmptyGenerators);
        };
        let degree = first.degree();
        let mut chain = StabChain::new(degree);
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
            chain.add_generator(g);
        }
        Ok(Group {
            degree,
            generators,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group {
            degree,
            generators: vec![Permutation::identity(degree)],
            chain: StabChain::new(degree),
        }
    }

    /// Subgroup generated by `elements`, keeping only those that enlarge the
    /// group so far. Yields the trivial group when nothing is added.
    pub fn generated_by<'a, I>(degree: usize, elements: I) -> Group
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut chain = StabChain::new(degree);
        let mut generators = Vec::new();
        for g in elements {
            debug_assert_eq!(g.degree(), degree);
            if chain.add_generator(g) {
                generators.push(g.clone());
            }
        }
        if generators.is_empty() {
            generators.push(Permutation::identity(degree));
        }
        Group {
            degree,
            generators,
            chain,
        }
    }

    /// The group generated by `self` and `g`.
    pub fn with_generator(&self, g: &Permutation) -> Group {
        let mut out = self.clone();
        if out.chain.add_generator(g) {
            if out.generators.iter().all(Permutation::is_identity) {
                out.generators.clear();
            }
            out.generators.push(g.clone());
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators with identities removed.
    pub fn nontrivial_generators(&self) -> impl Iterator<Item = &Permutation> {
        self.generators.iter().filter(|g| !g.is_identity())
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u64 {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.chain.contains(p))
    }

    /// Membership without the degree check.
    #[inline]
    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    pub(crate) fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    /// Whether every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &Group) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.has(g))
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_subgroup(&self, other: &Group) -> bool {
        self.order() == other.order() && self.contains_group(other)
    }

    /// All elements, breadth-first from the identity with the generators
    /// applied on the right in listed order.
    pub fn all_elements(&self, cap: ElementCap) -> Result<Vec<Permutation>> {
        Ok(self.enumerate(cap)?.elements)
    }

    pub fn enumerate(&self, cap: ElementCap) -> Result<Elements> {
        cap.check(self.order())?;
        let gens: Vec<&Permutation> = self.nontrivial_generators().collect();
        let id = self.identity();
        let mut index = HashMap::with_capacity(self.order() as usize);
        index.insert(id.clone(), 0usize);
        let mut elements = vec![id];
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let y = elements[i].then(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
        }
        Ok(Elements { elements, index })
    }

    /// Closure of `{point}` under the generators.
    pub fn orbit(&self, point: usize) -> BTreeSet<usize> {
        assert!(point < self.degree, "point {point} out of range");
        let mut seen = BTreeSet::from([point]);
        let mut stack = vec![point];
        while let Some(x) = stack.pop() {
            for g in &self.generators {
                let y = g.apply(x);
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    /// Orbit decomposition of the point set, ordered by least point.
    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut covered = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !covered[p] {
                let orb = self.orbit(p);
                for &x in &orb {
                    covered[x] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn is_abelian(&self) -> bool {
        let gens: Vec<&Permutation> = self.nontrivial_generators().collect();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }
}

/// Element list of a group together with a reverse index.
#[derive(Clone, Debug)]
pub struct Elements {
    pub elements: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
}

impl Elements {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// Free-function form of [`Group::from_generators`].
pub fn group_from_generators(gens: Vec<Permutation>) -> Result<Group> {
    Group::from_generators(gens)
}
