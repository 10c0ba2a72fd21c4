//! Polynomials over F_{p^m} and the quotient ring F_{p^m}[x]/(x^n - 1).
//!
//! Coefficients are stored constant term first everywhere.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// A polynomial with no trailing zero coefficients; the zero polynomial has
/// no coefficients at all.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![FieldElement::ONE],
        }
    }

    /// `c * x^k`.
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The linear polynomial `x - 1`.
    pub fn x_minus_one(fs: &FieldSpec) -> Self {
        Poly::new(vec![fs.neg(FieldElement::ONE), FieldElement::ONE])
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    pub fn add(&self, fs: &FieldSpec, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or_default();
                let b = rhs.coeffs.get(k).copied().unwrap_or_default();
                fs.add(a, b)
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, fs: &FieldSpec, rhs: &Poly) -> Poly {
        self.add(fs, &rhs.scale(fs, fs.neg(FieldElement::ONE)))
    }

    pub fn scale(&self, fs: &FieldSpec, c: FieldElement) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| fs.mul(a, c)).collect())
    }

    pub fn mul(&self, fs: &FieldSpec, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = fs.add(out[i + j], fs.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Long division: `self = quotient * divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn divrem(&self, fs: &FieldSpec, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = fs.inv(divisor.leading().unwrap())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = fs.mul(rem[k + dd], lead_inv);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = fs.sub(rem[k + j], fs.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }
}

/// An element of F_q[x]/(x^n - 1) as a fixed-length coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    coeffs: Vec<FieldElement>,
}

impl RingElement {
    /// Ring length is the vector length; must be positive.
    pub fn from_coeffs(coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "ring length must be positive".into(),
            ));
        }
        Ok(RingElement { coeffs })
    }

    /// Checked construction from raw encodings.
    pub fn from_encodings(fs: &FieldSpec, values: &[u32]) -> Result<Self> {
        let coeffs = values
            .iter()
            .map(|&v| fs.element(v))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "ring length must be positive");
        RingElement {
            coeffs: vec![FieldElement::ZERO; n],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut r = Self::zero(n);
        r.coeffs[0] = FieldElement::ONE;
        r
    }

    /// Reduces a polynomial into the ring of length `n` (x^n = 1).
    pub fn from_poly(fs: &FieldSpec, a: &Poly, n: usize) -> Self {
        let mut r = Self::zero(n);
        for (k, &c) in a.coeffs().iter().enumerate() {
            r.coeffs[k % n] = fs.add(r.coeffs[k % n], c);
        }
        r
    }

    /// The polynomial of degree < n with the same coefficients.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn encodings(&self) -> Vec<u32> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_len(&self, other: &RingElement) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            })
        }
    }

    pub fn add(&self, fs: &FieldSpec, rhs: &RingElement) -> Result<RingElement> {
        self.check_len(rhs)?;
        Ok(RingElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| fs.add(a, b))
                .collect(),
        })
    }

    pub fn sub(&self, fs: &FieldSpec, rhs: &RingElement) -> Result<RingElement> {
        self.check_len(rhs)?;
        Ok(RingElement {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(&a, &b)| fs.sub(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, fs: &FieldSpec, c: FieldElement) -> RingElement {
        RingElement {
            coeffs: self.coeffs.iter().map(|&a| fs.mul(a, c)).collect(),
        }
    }

    /// Cyclic convolution.
    pub fn mul(&self, fs: &FieldSpec, rhs: &RingElement) -> Result<RingElement> {
        self.check_len(rhs)?;
        let n = self.len();
        let mut out = vec![FieldElement::ZERO; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = fs.add(out[k], fs.mul(a, b));
            }
        }
        Ok(RingElement { coeffs: out })
    }

    /// Multiplication by `x^s`: coefficient `j` moves to `(j + s) mod n`.
    pub fn cyclic_shift(&self, s: i64) -> RingElement {
        let n = self.len();
        let s = s.rem_euclid(n as i64) as usize;
        let mut coeffs = self.coeffs.clone();
        coeffs.rotate_right(s);
        RingElement { coeffs }
    }

    /// `self += c * x^s * other`, in place. Lengths must agree.
    pub(crate) fn add_scaled_shift(
        &mut self,
        fs: &FieldSpec,
        c: FieldElement,
        s: usize,
        other: &RingElement,
    ) {
        if c.is_zero() {
            return;
        }
        let n = self.len();
        for (j, &b) in other.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let k = (j + s) % n;
            self.coeffs[k] = fs.add(self.coeffs[k], fs.mul(c, b));
        }
    }
}

/// Lexicographic comparison of coefficient encodings, index 0 first.
pub(crate) fn lex_cmp(a: &RingElement, b: &RingElement) -> Ordering {
    a.coeffs.cmp(&b.coeffs)
}

/// `C(a, b) mod p` via Lucas' theorem.
fn binomial_mod_p(mut a: u64, mut b: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while b > 0 || a > 0 {
        let (ad, bd) = (a % p, b % p);
        if bd > ad {
            return 0;
        }
        acc = acc * small_binomial_mod(ad, bd, p) % p;
        a /= p;
        b /= p;
    }
    acc
}

/// `C(a, b) mod p` for `b <= a < p`, using Fermat inverses.
fn small_binomial_mod(a: u64, b: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for k in 0..b {
        num = num * ((a - k) % p) % p;
        den = den * ((k + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `(x - 1)^i` in the ring of length `n = p^e`, expanded binomially:
/// coefficient `j` is `C(i, j) (-1)^{i-j}` with the binomial reduced mod p.
/// `i = n` gives zero because `(x - 1)^{p^e} = x^{p^e} - 1`.
pub fn x_minus_one_power(fs: &FieldSpec, e: u32, i: usize) -> Result<RingElement> {
    let n = ring_length(fs.p(), e)?;
    if i > n {
        return Err(Error::ExponentOutOfRange { i, n });
    }
    let p = fs.p() as u64;
    let mut r = RingElement::zero(n);
    for j in 0..=i {
        let c = binomial_mod_p(i as u64, j as u64, p) as i64;
        if c == 0 {
            continue;
        }
        let signed = if (i - j).is_multiple_of(2) { c } else { -c };
        let k = j % n;
        r.coeffs[k] = fs.add(r.coeffs[k], fs.from_int(signed));
    }
    Ok(r)
}

/// `p^e` as a ring length.
pub fn ring_length(p: u32, e: u32) -> Result<usize> {
    if e == 0 {
        return Err(Error::InvalidParameter(
            "length exponent must be at least 1".into(),
        ));
    }
    (p as usize)
        .checked_pow(e)
        .filter(|&n| n <= u32::MAX as usize)
        .ok_or_else(|| Error::InvalidParameter(format!("length {p}^{e} is too large")))
}
