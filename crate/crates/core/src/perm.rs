//! Permutations on the points `0..degree`.
//!
//! Composition is left-to-right throughout the crate: `p.then(q)` maps a
//! point `i` to `q(p(i))`. Cycle notation (display and parsing) is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 0-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} out of range for degree {degree}",
                        a + 1
                    )));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears in more than one cycle",
                        a + 1
                    )));
                }
                images[a] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`. Entries within a
    /// cycle may be separated by commas or whitespace; `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!(
                    "expected '(' in {text:?}"
                )));
            };
            let Some(close) = body.find(')') else {
                return Err(Error::InvalidPermutation(format!(
                    "unbalanced parenthesis in {text:?}"
                )));
            };
            let mut cycle = Vec::new();
            for tok in body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let point: usize = tok.parse().map_err(|_| {
                    Error::InvalidPermutation(format!("bad point {tok:?} in {text:?}"))
                })?;
                if point == 0 {
                    return Err(Error::InvalidPermutation(
                        "cycle notation is 1-based; found point 0".into(),
                    ));
                }
                cycle.push(point - 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// First point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// Checked composition: the result applies `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked composition (`self` first). Degrees must agree.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `n ≥ 1` with `selfⁿ = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn to_cycle_string(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Free-function form of [`Permutation::compose`].
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

/// Free-function form of [`Permutation::order`].
pub fn element_order(p: &Permutation) -> u64 {
    p.order()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<u32>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cyc(d: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(d, s).unwrap()
    }

    #[test]
    fn compose_applies_left_first() {
        let p = cyc(3, "(1,2)");
        let q = cyc(3, "(2,3)");
        let r = compose(&p, &q).unwrap();
        // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
        assert_eq!(r.images(), &[2, 0, 1]);
        assert_eq!(r, cyc(3, "(1,3,2)"));
    }

    #[test]
    fn compose_identity_and_cycle_cube() {
        let q = cyc(4, "(1,3)(2,4)");
        assert_eq!(compose(&Permutation::identity(4), &q).unwrap(), q);
        let c = cyc(3, "(1,2,3)");
        assert!(compose(&c, &c.pow(2)).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = compose(&Permutation::identity(3), &Permutation::identity(4)).unwrap_err();
        assert_eq!(
            err,
            Error::DegreeMismatch {
                expected: 3,
                found: 4
            }
        );
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&Permutation::identity(5)), 1);
        assert_eq!(element_order(&cyc(5, "(1,2,3,4,5)")), 5);
        assert_eq!(element_order(&cyc(5, "(1,2)(3,4,5)")), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::parse_cycles(3, "(1,2)(2,3)").is_err());
        assert!(Permutation::parse_cycles(3, "(0,1)").is_err());
        assert!(Permutation::parse_cycles(3, "(1,4)").is_err());
        assert!(Permutation::parse_cycles(3, "1,2").is_err());
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = cyc(7, "(1, 5,2)(3 7)");
        assert_eq!(p.to_string(), "(1,5,2)(3,7)");
        assert_eq!(cyc(7, &p.to_string()), p);
        assert_eq!(Permutation::identity(4).to_string(), "()");
    }

    #[test]
    fn serde_uses_image_list() {
        let p = cyc(4, "(1,2,3)");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[1,2,0,3]");
        assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p);
        assert!(serde_json::from_str::<Permutation>("[0,0]").is_err());
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..12)
            .prop_flat_map(|n| Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm()) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert!(p.inverse().then(&p).is_identity());
        }

        #[test]
        fn order_is_least_exponent(p in arb_perm()) {
            let n = p.order();
            prop_assert!(p.pow(n).is_identity());
            for k in 1..n {
                prop_assert!(!p.pow(k).is_identity());
            }
        }

        #[test]
        fn conjugation_matches_products(p in arb_perm(), seed in any::<u64>()) {
            let n = p.degree();
            let mut v: Vec<u32> = (0..n as u32).collect();
            v.rotate_left((seed % n as u64) as usize);
            let g = Permutation::from_images(v).unwrap();
            prop_assert_eq!(p.conjugate_by(&g), g.inverse().then(&p).then(&g));
            prop_assert_eq!(p.commutes_with(&g), p.then(&g) == g.then(&p));
        }
    }
}
