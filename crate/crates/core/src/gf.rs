//! Arithmetic in the prime field F_p and its extensions F_{p^m}.
//!
//! An element of F_{p^m} is stored as a single integer in `[0, p^m)` whose
//! base-p digits are its coefficients in the basis `1, x, ..., x^{m-1}`,
//! constant digit least significant.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};

/// Fields up to this order get precomputed addition and multiplication tables.
const TABLE_LIMIT: u32 = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw encoding. Range is only checked by [`FieldSpec::element`].
    pub const fn new(encoding: u32) -> Self {
        FieldElement(encoding)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// A concrete model of F_{p^m}: the prime, the degree and a monic irreducible
/// modulus over F_p (coefficients `c_0..=c_m`, `c_m = 1`).
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_order(p: u32, m: u32) -> Result<u32> {
    p.checked_pow(m).ok_or_else(|| {
        Error::InvalidParameter(format!("field order {p}^{m} does not fit in 32 bits"))
    })
}

/// Builds F_{p^m} with the first monic irreducible modulus of degree `m`,
/// scanning lower coefficients `(c_0, ..., c_{m-1})` as ascending base-p
/// integers. For `m = 1` this is the prime field with modulus `x`.
pub fn build_field(p: u32, m: u32) -> Result<FieldSpec> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if m == 0 {
        return Err(Error::InvalidParameter(
            "extension degree must be at least 1".into(),
        ));
    }
    let q = checked_order(p, m)?;
    for code in 0..q {
        let mut coeffs = digits(code, p, m as usize);
        coeffs.push(1);
        if is_irreducible(p, &coeffs)? {
            return FieldSpec::with_modulus(p, coeffs);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {m} over F_{p}"
    )))
}

fn digits(mut value: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push(value % p);
        value /= p;
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `b`, coefficients in F_p,
/// constant term first.
fn rem_monic_mod_p(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let db = b.len() - 1;
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let p = p as u64;
    while r.len() > db {
        let lead = r.pop().unwrap() % p;
        if lead != 0 {
            let shift = r.len() - db;
            for (k, &bk) in b[..db].iter().enumerate() {
                let sub = lead * bk as u64 % p;
                r[shift + k] = (r[shift + k] + p - sub) % p;
            }
        }
    }
    r.into_iter().map(|c| (c % p) as u32).collect()
}

/// Trial division against every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u32, coeffs: &[u32]) -> Result<bool> {
    if coeffs.len() < 2 {
        return Err(Error::InvalidParameter(
            "irreducibility needs a polynomial of degree at least 1".into(),
        ));
    }
    if *coeffs.last().unwrap() != 1 {
        return Err(Error::InvalidParameter("polynomial must be monic".into()));
    }
    if coeffs.iter().any(|&c| c >= p) {
        return Err(Error::InvalidParameter(format!(
            "coefficient out of range for F_{p}"
        )));
    }
    let degree = coeffs.len() - 1;
    for d in 1..=degree / 2 {
        let count = checked_order(p, d as u32)?;
        for code in 0..count {
            let mut divisor = digits(code, p, d);
            divisor.push(1);
            if rem_monic_mod_p(p, coeffs, &divisor).iter().all(|&c| c == 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl FieldSpec {
    /// Builds a field from an explicit monic irreducible modulus of degree m.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if !is_irreducible(p, &modulus)? {
            return Err(Error::Reducible { p, modulus });
        }
        let m = (modulus.len() - 1) as u32;
        let q = checked_order(p, m)?;
        let mut fs = FieldSpec {
            p,
            m,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            let size = (q * q) as usize;
            let mut add = Vec::with_capacity(size);
            let mut mul = Vec::with_capacity(size);
            for a in 0..q {
                for b in 0..q {
                    add.push(fs.add_slow(a, b));
                    mul.push(fs.mul_slow(a, b));
                }
            }
            fs.tables = Some(Arc::new(Tables { add, mul }));
        }
        Ok(fs)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Field order p^m.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Checked element constructor.
    pub fn element(&self, encoding: u32) -> Result<FieldElement> {
        if encoding < self.q {
            Ok(FieldElement(encoding))
        } else {
            Err(Error::InvalidParameter(format!(
                "element {encoding} out of range for a field of order {}",
                self.q
            )))
        }
    }

    /// The image of an integer under Z -> F_p -> F_{p^m}.
    pub fn from_int(&self, value: i64) -> FieldElement {
        FieldElement(value.rem_euclid(self.p as i64) as u32)
    }

    /// All q elements in ascending encoding order.
    pub fn enumerate_elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        if self.m == 1 {
            return (a as u64 * b as u64 % p) as u32;
        }
        let m = self.m as usize;
        let da = digits(a, self.p, m);
        let db = digits(b, self.p, m);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let reduced = rem_monic_mod_p(self.p, &prod, &self.modulus);
        reduced.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.add[(a.0 * self.q + b.0) as usize]),
            None => FieldElement(self.add_slow(a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => FieldElement(t.mul[(a.0 * self.q + b.0) as usize]),
            None => FieldElement(self.mul_slow(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement((self.p - a.0) % self.p);
        }
        let mut v = a.0;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((self.p - v % self.p) % self.p) * place;
            v /= self.p;
            place *= self.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Square-and-multiply; `pow(a, 0) = 1` including `a = 0`.
    pub fn pow(&self, a: FieldElement, mut k: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Inverse as `a^{q-2}`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }
}
