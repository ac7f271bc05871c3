//! Subgroups up to conjugacy by cyclic extension over perfect seeds.
//!
//! Every subgroup `K` sits on top of its perfect residuum through a chain of
//! normal subgroups of prime index, so extending each known class
//! representative `H` by elements `g` that normalize `H` with `gᵖ ∈ H`
//! (`p` prime) reaches every class once the perfect subgroups are seeded.

use std::collections::HashSet;

use bitvec::prelude::*;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{ElementCap, Elements, Group};
use crate::perm::Permutation;
use crate::subgroups::is_prime;

pub const MAX_AMBIENT_ORDER: u64 = 5040;

type ElementSet = BitVec<u64, Lsb0>;

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub representative: Group,
    pub order: u64,
    /// Number of subgroups conjugate to the representative.
    pub class_size: u64,
}

#[derive(Clone, Debug)]
pub struct SubgroupClassList {
    pub ambient_order: u64,
    /// Sorted by order, then class size, then discovery order.
    pub entries: Vec<SubgroupClass>,
}

impl SubgroupClassList {
    pub fn total_subgroups(&self) -> u64 {
        self.entries.iter().map(|e| e.class_size).sum()
    }
}

/// Parses a seed file: one subgroup per line as `degree; gen; gen; ...` with
/// generators in 1-based cycle notation. Blank lines and `#` comments are
/// ignored.
pub fn parse_seed_file(text: &str) -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: String| Error::InvalidSeed(format!("line {}: {msg}", lineno + 1));
        let mut fields = line.split(';').map(str::trim);
        let degree: usize = fields
            .next()
            .unwrap()
            .parse()
            .map_err(|_| bad("expected a degree".into()))?;
        let gens = fields
            .filter(|f| !f.is_empty())
            .map(|f| Permutation::parse_cycles(degree, f).map_err(|e| bad(e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let gens = if gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            gens
        };
        out.push(Group::from_generators(gens)?);
    }
    Ok(out)
}

const SEEDS_S4: &str = include_str!("../data/seeds/S4.txt");
const SEEDS_S5: &str = include_str!("../data/seeds/S5.txt");
const SEEDS_S6: &str = include_str!("../data/seeds/S6.txt");
const SEEDS_S7: &str = include_str!("../data/seeds/S7.txt");

/// Shipped seed file for the symmetric groups `S1`–`S7`.
pub fn shipped_seeds(n: usize) -> Option<&'static str> {
    match n {
        4 => Some(SEEDS_S4),
        5 => Some(SEEDS_S5),
        6 => Some(SEEDS_S6),
        7 => Some(SEEDS_S7),
        _ => None,
    }
}

struct Ambient {
    els: Elements,
    /// `conj[s][i]` = index of `sᵢ⁻¹ xᵢ sᵢ` for each ambient generator.
    conj: Vec<Vec<usize>>,
}

impl Ambient {
    fn index(&self, p: &Permutation) -> usize {
        self.els.index[p]
    }

    fn set_of(&self, h: &Group, cap: ElementCap) -> Result<ElementSet> {
        let mut set = bitvec![u64, Lsb0; 0; self.els.len()];
        for x in h.all_elements(cap)? {
            let i = self.els.position(&x).ok_or_else(|| {
                Error::InvalidSeed("seed is not a subgroup of the ambient group".into())
            })?;
            set.set(i, true);
        }
        Ok(set)
    }

    fn conjugacy_orbit(&self, set: &ElementSet) -> Vec<ElementSet> {
        let mut seen: HashSet<ElementSet> = HashSet::from([set.clone()]);
        let mut orbit = vec![set.clone()];
        let mut i = 0;
        while i < orbit.len() {
            for table in &self.conj {
                let mut image = bitvec![u64, Lsb0; 0; self.els.len()];
                for x in orbit[i].iter_ones() {
                    image.set(table[x], true);
                }
                if seen.insert(image.clone()) {
                    orbit.push(image);
                }
            }
            i += 1;
        }
        orbit
    }

    /// All subgroups `⟨H, g⟩` with `g` normalizing `H` and `gᵖ ∈ H`, `p` prime.
    fn cyclic_extensions(&self, set: &ElementSet, gens: &[usize]) -> Vec<(ElementSet, usize)> {
        let members: Vec<usize> = set.iter_ones().collect();
        let mut covered = set.clone();
        let mut out = Vec::new();
        for g in 0..self.els.len() {
            if covered[g] {
                continue;
            }
            let gp = &self.els.elements[g];
            let normalizes = gens
                .iter()
                .all(|&h| set[self.index(&self.els.elements[h].conjugate_by(gp))]);
            if !normalizes {
                continue;
            }
            let mut powers = vec![gp.clone()];
            while !set[self.index(powers.last().unwrap())] {
                let next = powers.last().unwrap().then(gp);
                powers.push(next);
            }
            let p = powers.len();
            if !is_prime(p as u64) {
                continue;
            }
            let mut ext = set.clone();
            for &h in &members {
                let hp = &self.els.elements[h];
                for gi in &powers[..p - 1] {
                    ext.set(self.index(&hp.then(gi)), true);
                }
            }
            // any element of ext outside H generates the same extension
            covered |= &ext;
            out.push((ext, g));
        }
        out
    }
}

struct Found {
    set: ElementSet,
    gens: Vec<usize>,
    class_size: u64,
}

/// Subgroups of `ambient` up to conjugacy. `perfect_seeds` must contain a
/// representative of every class of perfect subgroups (the trivial group
/// included); classes not reachable from a seed are silently missed.
pub fn subgroup_classes(
    ambient: &Group,
    perfect_seeds: &[Group],
    cap: ElementCap,
) -> Result<SubgroupClassList> {
    cap.check(ambient.order())?;
    if ambient.order() > MAX_AMBIENT_ORDER {
        return Err(Error::InvalidParameter(format!(
            "subgroup enumeration supports ambient order at most {MAX_AMBIENT_ORDER}, got {}",
            ambient.order()
        )));
    }
    let els = ambient.enumerate(cap)?;
    let conj = ambient
        .nontrivial_generators()
        .map(|s| {
            els.elements
                .iter()
                .map(|x| els.index[&x.conjugate_by(s)])
                .collect()
        })
        .collect();
    let amb = Ambient { els, conj };

    let mut known: HashSet<ElementSet> = HashSet::new();
    let mut found: Vec<Found> = Vec::new();
    let mut add = |set: ElementSet, gens: Vec<usize>, found: &mut Vec<Found>| -> bool {
        if known.contains(&set) {
            return false;
        }
        let orbit = amb.conjugacy_orbit(&set);
        let class_size = orbit.len() as u64;
        known.extend(orbit);
        found.push(Found {
            set,
            gens,
            class_size,
        });
        true
    };

    for seed in perfect_seeds {
        if seed.degree() != ambient.degree() {
            return Err(Error::InvalidSeed(format!(
                "seed degree {} differs from ambient degree {}",
                seed.degree(),
                ambient.degree()
            )));
        }
        let set = amb.set_of(seed, cap)?;
        let gens = seed.nontrivial_generators().map(|g| amb.index(g)).collect();
        add(set, gens, &mut found);
    }

    let mut frontier: Vec<usize> = (0..found.len()).collect();
    while !frontier.is_empty() {
        let candidates: Vec<Vec<(ElementSet, usize)>> = frontier
            .par_iter()
            .map(|&i| amb.cyclic_extensions(&found[i].set, &found[i].gens))
            .collect();
        let mut next = Vec::new();
        for (&parent, exts) in frontier.iter().zip(candidates) {
            for (set, g) in exts {
                let mut gens = found[parent].gens.clone();
                gens.push(g);
                if add(set, gens, &mut found) {
                    next.push(found.len() - 1);
                }
            }
        }
        frontier = next;
    }

    let mut entries: Vec<(usize, SubgroupClass)> = found
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            let gens: Vec<&Permutation> = f.gens.iter().map(|&g| &amb.els.elements[g]).collect();
            let representative = Group::generated_by(ambient.degree(), gens);
            debug_assert_eq!(representative.order(), f.set.count_ones() as u64);
            (
                i,
                SubgroupClass {
                    order: representative.order(),
                    representative,
                    class_size: f.class_size,
                },
            )
        })
        .collect();
    entries.sort_by_key(|(i, e)| (e.order, e.class_size, *i));
    Ok(SubgroupClassList {
        ambient_order: ambient.order(),
        entries: entries.into_iter().map(|(_, e)| e).collect(),
    })
}
