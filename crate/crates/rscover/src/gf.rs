//! Arithmetic in GF(p^m), the absolute trace and additive characters.
//!
//! Elements are encoded as integers in `[0, q)` whose base-p digits are the
//! polynomial-basis coefficients, so `0` is the additive and `1` the
//! multiplicative identity. Prime fields use direct modular arithmetic;
//! extension fields with q <= 2^16 get log/antilog tables, larger ones fall
//! back to schoolbook reduction.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::is_prime;

/// Largest field size for which log/antilog tables are built.
const TABLE_LIMIT: u64 = 1 << 16;

/// Hard cap on field size.
const Q_LIMIT: u64 = 1 << 31;

/// A field element in its canonical integer encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElem(pub u64);

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serializable description of a field: `{p, m, modulus-coefficients}`,
/// modulus coefficients low degree first including the monic leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u64>,
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

struct FieldInner {
    p: u64,
    m: u32,
    q: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

/// A finite field GF(p^m). Cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p
            && self.inner.m == other.inner.m
            && self.inner.modulus == other.inner.modulus
    }
}
impl Eq for Field {}

impl Field {
    /// Build GF(p^m) with the canonical modulus: the lexicographically
    /// smallest monic irreducible polynomial of degree m over GF(p),
    /// coefficients compared high to low.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidParameter(
                "extension degree m must be >= 1".into(),
            ));
        }
        let q = checked_pow(p, m)?;
        let modulus = canonical_modulus(p, m)?;
        Ok(Self::build(p, m, q, modulus))
    }

    /// Build a field from an explicit modulus (validated for degree,
    /// monicity and irreducibility).
    pub fn from_spec(spec: &FieldSpec) -> Result<Field> {
        if !is_prime(spec.p) {
            return Err(Error::NotPrime(spec.p));
        }
        let q = checked_pow(spec.p, spec.m)?;
        let want = spec.m as usize + 1;
        if spec.modulus.len() != want
            || spec.modulus[spec.m as usize] != 1
            || spec.modulus.iter().any(|&c| c >= spec.p)
            || (spec.m >= 2 && !is_irreducible(&spec.modulus, spec.p))
        {
            return Err(Error::BadModulus {
                got: spec.modulus.len().saturating_sub(1),
                want: spec.m,
            });
        }
        Ok(Self::build(spec.p, spec.m, q, spec.modulus.clone()))
    }

    fn build(p: u64, m: u32, q: u64, modulus: Vec<u64>) -> Field {
        let mut inner = FieldInner {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if m > 1 && q <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Field {
            inner: Arc::new(inner),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u64 {
        self.inner.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn to_spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.inner.p,
            m: self.inner.m,
            modulus: self.inner.modulus.clone(),
        }
    }

    pub fn elem(&self, value: u64) -> Result<FieldElem> {
        if value < self.inner.q {
            Ok(FieldElem(value))
        } else {
            Err(Error::ElementOutOfRange {
                value,
                q: self.inner.q,
            })
        }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem(0)
    }

    pub fn one(&self) -> FieldElem {
        FieldElem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.inner.q).map(FieldElem)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let f = &*self.inner;
        if f.m == 1 {
            return FieldElem((a.0 + b.0) % f.p);
        }
        if f.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        let mut out = 0;
        let mut scale = 1;
        let (mut x, mut y) = (a.0, b.0);
        for _ in 0..f.m {
            out += (x % f.p + y % f.p) % f.p * scale;
            x /= f.p;
            y /= f.p;
            scale *= f.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let f = &*self.inner;
        if f.m == 1 {
            return FieldElem((f.p - a.0) % f.p);
        }
        if f.p == 2 {
            return a;
        }
        let mut out = 0;
        let mut scale = 1;
        let mut x = a.0;
        for _ in 0..f.m {
            out += (f.p - x % f.p) % f.p * scale;
            x /= f.p;
            scale *= f.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let f = &*self.inner;
        if f.m == 1 {
            return FieldElem(a.0 * b.0 % f.p);
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElem(0);
        }
        if let Some(t) = &f.tables {
            let n = f.q - 1;
            let idx = (t.log[a.0 as usize] as u64 + t.log[b.0 as usize] as u64) % n;
            return FieldElem(t.exp[idx as usize] as u64);
        }
        FieldElem(schoolbook_mul(f, a.0, b.0))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        let f = &*self.inner;
        if a.0 == 0 {
            return Err(Error::DivisionByZero { q: f.q });
        }
        if f.m == 1 {
            return Ok(self.pow(a, f.p - 2));
        }
        if let Some(t) = &f.tables {
            let n = f.q - 1;
            let idx = (n - t.log[a.0 as usize] as u64) % n;
            return Ok(FieldElem(t.exp[idx as usize] as u64));
        }
        // a^(q-2) in the schoolbook fallback
        Ok(self.pow(a, f.q - 2))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Nonnegative integer power with `a^0 = 1`.
    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Absolute trace Tr(a) = a + a^p + ... + a^(p^(m-1)), an element of the
    /// prime subfield returned as its integer value in [0, p).
    pub fn trace(&self, a: FieldElem) -> u64 {
        let f = &*self.inner;
        if f.m == 1 {
            return a.0;
        }
        let mut acc = a;
        let mut t = a;
        for _ in 1..f.m {
            t = self.pow(t, f.p);
            acc = self.add(acc, t);
        }
        debug_assert!(acc.0 < f.p, "trace must land in the prime subfield");
        acc.0
    }
}

fn checked_pow(p: u64, m: u32) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q
            .checked_mul(p)
            .ok_or_else(|| Error::InvalidParameter("q overflows u64".into()))?;
        if q > Q_LIMIT {
            return Err(Error::InvalidParameter(format!(
                "q = p^m exceeds limit {Q_LIMIT}"
            )));
        }
    }
    Ok(q)
}

// --- GF(p)[X] helpers for modulus search and schoolbook reduction ---

/// Remainder of a mod b over GF(p); coefficient vectors low degree first.
fn gfp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1, "divisor must be monic");
    while r.len() > db {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for i in 0..db {
                let s = (lead * b[i]) % p;
                r[shift + i] = (r[shift + i] + p - s) % p;
            }
        }
        r.pop();
        while r.len() > db && *r.last().unwrap() % p == 0 {
            if r.len() == db + 1 {
                break;
            }
            r.pop();
        }
    }
    r
}

fn is_zero_poly(a: &[u64], p: u64) -> bool {
    a.iter().all(|&c| c % p == 0)
}

/// Irreducibility by trial division with every monic divisor of degree
/// 1..=m/2; fine at the small degrees used here.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() - 1;
    for deg in 1..=m / 2 {
        let count = p.pow(deg as u32);
        for t in 0..count {
            let mut div = Vec::with_capacity(deg + 1);
            let mut v = t;
            for _ in 0..deg {
                div.push(v % p);
                v /= p;
            }
            div.push(1);
            if is_zero_poly(&gfp_rem(f, &div, p), p) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest (coefficients compared high to low) monic
/// irreducible polynomial of degree m over GF(p).
fn canonical_modulus(p: u64, m: u32) -> Result<Vec<u64>> {
    if m == 1 {
        // X itself; any monic linear polynomial is irreducible
        return Ok(vec![0, 1]);
    }
    let count = checked_pow(p, m)?;
    for t in 0..count {
        // digit i of t is the coefficient of X^i, so ascending t is
        // ascending lex order on (c_{m-1}, ..., c_0)
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut v = t;
        for _ in 0..m {
            f.push(v % p);
            v /= p;
        }
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(f);
        }
    }
    Err(Error::NoModulus { p, m })
}

fn schoolbook_mul(f: &FieldInner, a: u64, b: u64) -> u64 {
    let m = f.m as usize;
    let mut da = vec![0u64; m];
    let mut db = vec![0u64; m];
    let (mut x, mut y) = (a, b);
    for i in 0..m {
        da[i] = x % f.p;
        db[i] = y % f.p;
        x /= f.p;
        y /= f.p;
    }
    let mut prod = vec![0u64; 2 * m - 1];
    for i in 0..m {
        if da[i] == 0 {
            continue;
        }
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
        }
    }
    // reduce by the monic modulus
    for i in (m..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..m {
            let s = (c * f.modulus[j]) % f.p;
            prod[i - m + j] = (prod[i - m + j] + f.p - s) % f.p;
        }
    }
    let mut out = 0;
    let mut scale = 1;
    for d in prod.iter().take(m) {
        out += d * scale;
        scale *= f.p;
    }
    out
}

fn build_tables(f: &FieldInner) -> Tables {
    let q = f.q as usize;
    let n = f.q - 1;
    // find a multiplicative generator by walking orders
    let mut gen = 0u64;
    'outer: for g in 2..f.q {
        let mut x = g;
        let mut ord = 1u64;
        while x != 1 {
            x = schoolbook_mul(f, x, g);
            ord += 1;
            if ord > n {
                break;
            }
        }
        if ord == n {
            gen = g;
            break 'outer;
        }
    }
    assert!(gen != 0, "no generator found; field construction is broken");
    let mut log = vec![0u32; q];
    let mut exp = vec![0u32; n as usize];
    let mut x = 1u64;
    for i in 0..n {
        exp[i as usize] = x as u32;
        log[x as usize] = i as u32;
        x = schoolbook_mul(f, x, gen);
    }
    Tables { log, exp }
}

/// An additive character chi_beta of GF(q): a -> exp(2 pi i Tr(beta a) / p).
pub struct Character {
    field: Field,
    beta: FieldElem,
    fibers: OnceLock<Vec<Vec<FieldElem>>>,
}

impl Character {
    pub fn new(field: Field, beta: FieldElem) -> Result<Character> {
        if beta.0 >= field.q() {
            return Err(Error::ElementOutOfRange {
                value: beta.0,
                q: field.q(),
            });
        }
        Ok(Character {
            field,
            beta,
            fibers: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn beta(&self) -> FieldElem {
        self.beta
    }

    pub fn is_trivial(&self) -> bool {
        self.beta.0 == 0
    }

    pub fn eval(&self, a: FieldElem) -> Complex64 {
        let t = self.field.trace(self.field.mul(self.beta, a));
        let angle = TAU * t as f64 / self.field.p() as f64;
        Complex64::from_polar(1.0, angle)
    }

    /// All a with Tr(beta * a) = t. Each fiber has exactly q/p elements when
    /// beta != 0; elements are listed in ascending encoding order.
    pub fn trace_fiber(&self, t: u64) -> Result<&[FieldElem]> {
        if self.is_trivial() {
            return Err(Error::TrivialCharacter);
        }
        let p = self.field.p();
        if t >= p {
            return Err(Error::InvalidParameter(format!(
                "trace value {t} not in [0, {p})"
            )));
        }
        let fibers = self.fibers.get_or_init(|| {
            let mut fibers = vec![Vec::new(); p as usize];
            for a in self.field.elements() {
                let tr = self.field.trace(self.field.mul(self.beta, a));
                fibers[tr as usize].push(a);
            }
            fibers
        });
        Ok(&fibers[t as usize])
    }
}
