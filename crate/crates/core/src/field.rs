//! Finite fields GF(p^e) with q = p^e ≤ 32, via lookup tables.
//!
//! An element is encoded as the integer `Σ cᵢ pⁱ` of its coefficients in the
//! polynomial basis `1, x, x², …` modulo a fixed irreducible polynomial from
//! [`IRREDUCIBLE_POLYNOMIALS`]. The table is part of the crate's external
//! interface: changing any entry bumps [`POLYNOMIAL_TABLE_VERSION`].

use crate::error::{Error, Result};

pub const POLYNOMIAL_TABLE_VERSION: u32 = 1;

/// `(p, e, coefficients low to high)` of monic irreducible polynomials of
/// degree `e` over GF(p). These are the Conway polynomials for each field.
pub const IRREDUCIBLE_POLYNOMIALS: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),          // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),       // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]),    // x^4 + x + 1
    (2, 5, &[1, 0, 1, 0, 0, 1]), // x^5 + x^2 + 1
    (3, 2, &[2, 2, 1]),          // x^2 + 2x + 2
    (3, 3, &[1, 2, 0, 1]),       // x^3 + 2x + 1
    (5, 2, &[2, 4, 1]),          // x^2 + 4x + 2
];

pub const MAX_FIELD_ORDER: u64 = 32;

/// Splits `q` as `p^e` when it is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|&d| q.is_multiple_of(d))?;
    let mut r = q;
    let mut e = 0;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

#[derive(Clone, Debug)]
pub struct GaloisField {
    p: u64,
    e: u32,
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
}

impl GaloisField {
    pub fn new(q: u64) -> Result<Self> {
        if q > MAX_FIELD_ORDER {
            return Err(Error::UnsupportedField(q));
        }
        let (p, e) = prime_power(q).ok_or(Error::UnsupportedField(q))?;
        let modulus: Vec<u64> = if e == 1 {
            vec![0, 1]
        } else {
            IRREDUCIBLE_POLYNOMIALS
                .iter()
                .find(|(pp, ee, _)| *pp == p && *ee == e)
                .map(|(_, _, c)| c.to_vec())
                .ok_or(Error::UnsupportedField(q))?
        };
        let qs = q as usize;
        let digits = |mut a: usize| -> Vec<u64> {
            (0..e)
                .map(|_| {
                    let d = a as u64 % p;
                    a /= p as usize;
                    d
                })
                .collect()
        };
        let encode =
            |d: &[u64]| -> usize { d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as usize };
        let e_us = e as usize;
        let mut add = vec![0; qs * qs];
        let mut mul = vec![0; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = encode(&sum);

                let mut prod = vec![0u64; 2 * e_us];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // reduce modulo the monic modulus, highest degree first
                for deg in (e_us..2 * e_us).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (k, m) in modulus.iter().enumerate() {
                            let idx = deg - e_us + k;
                            prod[idx] = (prod[idx] + (p - c) * m) % p;
                        }
                    }
                }
                mul[a * qs + b] = encode(&prod[..e_us]);
            }
        }
        let neg = (0..qs)
            .map(|a| (0..qs).find(|&b| add[a * qs + b] == 0).unwrap())
            .collect();
        let inv = (0..qs)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap_or(0)
                }
            })
            .collect();
        Ok(GaloisField {
            p,
            e,
            q: qs,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: usize) -> usize {
        assert!(a != 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// Least element (by encoding) generating the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&a| self.multiplicative_order(a) == self.q - 1)
            .expect("a finite field has a primitive element")
    }
}
