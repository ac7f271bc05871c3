//! Named groups as explicit permutation groups, and the text syntax for them.
//!
//! Grammar (whitespace around the product sign is optional):
//!
//! ```text
//! spec  := term ( ( "x" | "×" ) term )*
//! term  := "1" | "Z" n | "D" n | "S" n | "A" n
//!        | "PSL(2," q ")" | "L2(" q ")" | "SL(2," q ")"
//!        | "Hol(Z" n ")" | "Z" m ":Z" n [ "@" a ]
//! ```
//!
//! `D n` is the dihedral group of order `n`. `Zm:Zn@a` is `Z_m ⋊ Z_n` with
//! the generator of `Z_n` acting as `x ↦ a·x`; `a` defaults to `m − 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{prime_power, GaloisField, MAX_FIELD_ORDER};
use crate::group::{ElementCap, Group};
use crate::perm::{gcd, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Dihedral group of the given order.
    Dihedral(u64),
    Symmetric(u64),
    Alternating(u64),
    Psl2(u64),
    Sl2(u64),
    HolCyclic(u64),
    SemidirectCyclic {
        m: u64,
        n: u64,
        a: u64,
    },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::Psl2(q) => write!(f, "PSL(2,{q})"),
            GroupSpec::Sl2(q) => write!(f, "SL(2,{q})"),
            GroupSpec::HolCyclic(n) => write!(f, "Hol(Z{n})"),
            GroupSpec::SemidirectCyclic { m, n, a } => {
                if *a == default_action(*m) {
                    write!(f, "Z{m}:Z{n}")
                } else {
                    write!(f, "Z{m}:Z{n}@{a}")
                }
            }
            GroupSpec::DirectProduct(l, r) => write!(f, "{l} x {r}"),
        }
    }
}

fn default_action(m: u64) -> u64 {
    m.saturating_sub(1)
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

fn factorial(n: u64) -> Option<u64> {
    (1..=n).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

impl GroupSpec {
    /// Closed-form group order; `None` on overflow.
    pub fn expected_order(&self) -> Option<u64> {
        match *self {
            GroupSpec::Cyclic(n) => Some(n),
            GroupSpec::Dihedral(n) => Some(n),
            GroupSpec::Symmetric(n) => factorial(n),
            GroupSpec::Alternating(n) => factorial(n).map(|f| if n >= 2 { f / 2 } else { f }),
            GroupSpec::Psl2(q) => Some(q * (q * q - 1) / gcd(2, q - 1)),
            GroupSpec::Sl2(q) => Some(q * (q * q - 1)),
            GroupSpec::HolCyclic(n) => n.checked_mul(euler_phi(n)),
            GroupSpec::SemidirectCyclic { m, n, .. } => m.checked_mul(n),
            GroupSpec::DirectProduct(ref l, ref r) => {
                l.expected_order()?.checked_mul(r.expected_order()?)
            }
        }
    }

    fn validate(&self) -> std::result::Result<(), String> {
        match *self {
            GroupSpec::Cyclic(n)
            | GroupSpec::Symmetric(n)
            | GroupSpec::Alternating(n)
            | GroupSpec::HolCyclic(n)
                if n == 0 =>
            {
                Err(format!("{self}: parameter must be positive"))
            }
            GroupSpec::Dihedral(n) if n < 4 || n % 2 == 1 => {
                Err(format!("D{n}: dihedral order must be even and at least 4"))
            }
            GroupSpec::Psl2(q) | GroupSpec::Sl2(q)
                if q > MAX_FIELD_ORDER || prime_power(q).is_none() =>
            {
                Err(format!(
                    "q = {q} must be a prime power at most {MAX_FIELD_ORDER}"
                ))
            }
            GroupSpec::SemidirectCyclic { m, n, a } => {
                if m == 0 || n == 0 {
                    return Err("Zm:Zn needs positive m and n".into());
                }
                if gcd(a, m) != 1 {
                    return Err(format!("action {a} is not a unit modulo {m}"));
                }
                if mod_pow(a, n, m) != 1 % m {
                    return Err(format!("action {a} does not satisfy a^{n} = 1 (mod {m})"));
                }
                Ok(())
            }
            GroupSpec::DirectProduct(ref l, ref r) => {
                l.validate()?;
                r.validate()
            }
            _ => Ok(()),
        }
    }
}

fn mod_pow(a: u64, mut e: u64, m: u64) -> u64 {
    let mut base = a % m;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected {token:?}"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a number");
        }
        let value = self.rest()[..digits]
            .parse()
            .or_else(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn term(&mut self) -> Result<GroupSpec> {
        let start = self.pos;
        let spec = if self.eat("PSL(2,") || self.eat("L2(") {
            let q = self.number()?;
            self.expect(")")?;
            GroupSpec::Psl2(q)
        } else if self.eat("SL(2,") {
            let q = self.number()?;
            self.expect(")")?;
            GroupSpec::Sl2(q)
        } else if self.eat("Hol(Z") {
            let n = self.number()?;
            self.expect(")")?;
            GroupSpec::HolCyclic(n)
        } else if self.eat("Z") {
            let m = self.number()?;
            if self.eat(":") {
                self.expect("Z")?;
                let n = self.number()?;
                let a = if self.eat("@") {
                    self.number()?
                } else {
                    default_action(m)
                };
                GroupSpec::SemidirectCyclic {
                    m,
                    n,
                    a: if m > 0 { a % m } else { a },
                }
            } else {
                GroupSpec::Cyclic(m)
            }
        } else if self.eat("D") {
            GroupSpec::Dihedral(self.number()?)
        } else if self.eat("S") {
            GroupSpec::Symmetric(self.number()?)
        } else if self.eat("A") {
            GroupSpec::Alternating(self.number()?)
        } else if self.eat("1") {
            GroupSpec::Cyclic(1)
        } else {
            return self.err("expected a group term");
        };
        if let Err(message) = spec.validate() {
            return Err(Error::Parse {
                position: start,
                message,
            });
        }
        Ok(spec)
    }
}

/// Parses a group description such as `"S3 x Z2"` or `"Z3:Z4"`.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let mut p = Parser { text, pos: 0 };
    p.skip_ws();
    let mut spec = p.term()?;
    loop {
        p.skip_ws();
        if p.rest().is_empty() {
            return Ok(spec);
        }
        if !(p.eat("x") || p.eat("×")) {
            return p.err("expected 'x' or end of input");
        }
        p.skip_ws();
        let rhs = p.term()?;
        spec = GroupSpec::DirectProduct(Box::new(spec), Box::new(rhs));
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

fn perm(images: Vec<u32>) -> Permutation {
    Permutation::from_images(images).expect("construction produced a bijection")
}

fn cycle_perm(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

fn generators(spec: &GroupSpec) -> Result<(usize, Vec<Permutation>)> {
    Ok(match *spec {
        GroupSpec::Cyclic(n) => {
            let d = n as usize;
            (d, vec![cycle_perm(d, 0..d)])
        }
        GroupSpec::Dihedral(order) => {
            let m = (order / 2) as usize;
            if m == 2 {
                // the Klein four-group has no faithful action on two points
                (4, vec![perm(vec![1, 0, 3, 2]), perm(vec![2, 3, 0, 1])])
            } else {
                let rot = cycle_perm(m, 0..m);
                let refl = perm((0..m).map(|i| ((m - i) % m) as u32).collect());
                (m, vec![rot, refl])
            }
        }
        GroupSpec::Symmetric(n) => {
            let d = n as usize;
            if d < 2 {
                (d, vec![Permutation::identity(d)])
            } else {
                (d, vec![cycle_perm(d, [0, 1]), cycle_perm(d, 0..d)])
            }
        }
        GroupSpec::Alternating(n) => {
            let d = n as usize;
            if d < 3 {
                (d, vec![Permutation::identity(d)])
            } else if d % 2 == 1 {
                (d, vec![cycle_perm(d, [0, 1, 2]), cycle_perm(d, 0..d)])
            } else {
                (d, vec![cycle_perm(d, [0, 1, 2]), cycle_perm(d, 1..d)])
            }
        }
        GroupSpec::Psl2(q) => psl2_generators(q)?,
        GroupSpec::Sl2(q) => sl2_generators(q)?,
        GroupSpec::HolCyclic(n) => {
            let d = n as usize;
            let mut gens = vec![perm((0..d).map(|x| ((x + 1) % d) as u32).collect())];
            for u in 2..d {
                if gcd(u as u64, n) == 1 {
                    gens.push(perm((0..d).map(|x| (x * u % d) as u32).collect()));
                }
            }
            (d, gens)
        }
        GroupSpec::SemidirectCyclic { m, n, a } => {
            // Right-regular action on pairs (x, y) = s^x t^y, indexed y·m + x,
            // with (x1, y1)(x2, y2) = (x1 + a^y1 · x2, y1 + y2).
            let (mu, nu) = (m as usize, n as usize);
            let d = mu * nu;
            let idx = |x: usize, y: usize| (y * mu + x) as u32;
            let mut s = Vec::with_capacity(d);
            let mut t = Vec::with_capacity(d);
            for y in 0..nu {
                let ay = mod_pow(a, y as u64, m) as usize;
                for x in 0..mu {
                    s.push(idx((x + ay) % mu, y));
                    t.push(idx(x, (y + 1) % nu));
                }
            }
            (d, vec![perm(s), perm(t)])
        }
        GroupSpec::DirectProduct(ref l, ref r) => {
            let (dl, gl) = generators(l)?;
            let (dr, gr) = generators(r)?;
            let d = dl + dr;
            let mut gens = Vec::with_capacity(gl.len() + gr.len());
            for g in &gl {
                let mut im: Vec<u32> = g.images().to_vec();
                im.extend(dl as u32..d as u32);
                gens.push(perm(im));
            }
            for g in &gr {
                let mut im: Vec<u32> = (0..dl as u32).collect();
                im.extend(g.images().iter().map(|&x| x + dl as u32));
                gens.push(perm(im));
            }
            (d, gens)
        }
    })
}

/// `PSL(2, q)` on the projective line: points `0..q` are field elements and
/// point `q` is ∞. Generators: `x ↦ x + 1`, `x ↦ λx` and `x ↦ −1/x`, where
/// `λ` is the primitive element (q even) or its square (q odd), since only
/// squares scale by a determinant-one matrix.
fn psl2_generators(q: u64) -> Result<(usize, Vec<Permutation>)> {
    let f = GaloisField::new(q)?;
    let qs = q as usize;
    let inf = qs;
    let c = f.primitive_element();
    let lambda = if q.is_multiple_of(2) { c } else { f.mul(c, c) };
    let translate = perm(
        (0..=qs)
            .map(|x| if x == inf { inf } else { f.add(x, 1) } as u32)
            .collect(),
    );
    let scale = perm(
        (0..=qs)
            .map(|x| if x == inf { inf } else { f.mul(lambda, x) } as u32)
            .collect(),
    );
    let invert = perm(
        (0..=qs)
            .map(|x| match x {
                x if x == inf => 0,
                0 => inf,
                x => f.neg(f.inv(x)),
            } as u32)
            .collect(),
    );
    let gens = [translate, scale, invert]
        .into_iter()
        .filter(|g| !g.is_identity())
        .collect();
    Ok((qs + 1, gens))
}

/// `SL(2, q)` acting on the right of the `q² − 1` nonzero row vectors
/// `(x, y)`, indexed `x·q + y − 1`.
fn sl2_generators(q: u64) -> Result<(usize, Vec<Permutation>)> {
    let f = GaloisField::new(q)?;
    let qs = q as usize;
    let d = qs * qs - 1;
    let c = f.primitive_element();
    let c_inv = f.inv(c);
    let act = |m: [[usize; 2]; 2]| {
        perm(
            (1..=d)
                .map(|v| {
                    let (x, y) = (v / qs, v % qs);
                    let nx = f.add(f.mul(x, m[0][0]), f.mul(y, m[1][0]));
                    let ny = f.add(f.mul(x, m[0][1]), f.mul(y, m[1][1]));
                    (nx * qs + ny - 1) as u32
                })
                .collect(),
        )
    };
    let gens = [
        act([[1, 1], [0, 1]]),
        act([[c, 0], [0, c_inv]]),
        act([[0, 1], [f.neg(1), 0]]),
    ]
    .into_iter()
    .filter(|g| !g.is_identity())
    .collect();
    Ok((d, gens))
}

/// Builds the permutation group for `spec`. Groups whose closed-form order
/// exceeds `cap` are refused.
pub fn build(spec: &GroupSpec, cap: ElementCap) -> Result<Group> {
    spec.validate().map_err(Error::InvalidParameter)?;
    let order = spec.expected_order().unwrap_or(u64::MAX);
    cap.check(order)?;
    let (degree, gens) = generators(spec)?;
    let gens = if gens.is_empty() || degree == 0 {
        vec![Permutation::identity(degree)]
    } else {
        gens
    };
    Group::from_generators(gens)
}

/// Parses and builds in one step.
pub fn build_text(text: &str, cap: ElementCap) -> Result<Group> {
    build(&parse_spec(text)?, cap)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionReport {
    pub spec: String,
    pub degree: usize,
    pub order: u64,
    pub expected_order: u64,
    pub transitive: bool,
}

impl ConstructionReport {
    pub fn order_matches(&self) -> bool {
        self.order == self.expected_order
    }
}

pub fn construct(spec: &GroupSpec, cap: ElementCap) -> Result<(Group, ConstructionReport)> {
    let g = build(spec, cap)?;
    let report = ConstructionReport {
        spec: spec.to_string(),
        degree: g.degree(),
        order: g.order(),
        expected_order: spec.expected_order().unwrap_or(u64::MAX),
        transitive: g.is_transitive(),
    };
    Ok((g, report))
}
