//! The cyclic codes `C_i = <(x - 1)^i>` of length `p^e` over F_{p^m}.
//!
//! Every cyclic code of length `p^e` has this form, so the family is indexed
//! by the generator exponent `i` in `[0, p^e]`. Besides generators, encoding
//! and membership, this module holds the exact closed forms for the minimum
//! Hamming distance and the minimum symbol-pair distance of each member.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{build_field, FieldSpec};
use crate::polyring::{ring_length, x_minus_one_power, Poly, RingElement};

/// Parameters of `C_i` together with the concrete field it lives over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    field: FieldSpec,
    e: u32,
    i: usize,
    n: usize,
}

impl CodeSpec {
    /// Builds the code over the default field model of F_{p^m}.
    pub fn new(p: u32, m: u32, e: u32, i: usize) -> Result<Self> {
        Self::with_field(build_field(p, m)?, e, i)
    }

    pub fn with_field(field: FieldSpec, e: u32, i: usize) -> Result<Self> {
        let n = ring_length(field.p(), e)?;
        if i > n {
            return Err(Error::ExponentOutOfRange { i, n });
        }
        Ok(CodeSpec { field, e, i, n })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn i(&self) -> usize {
        self.i
    }

    /// Code length `p^e`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.n - self.i
    }

    /// The same field and length with another generator exponent.
    pub fn with_exponent(&self, i: usize) -> Result<Self> {
        Self::with_field(self.field.clone(), self.e, i)
    }

    pub fn generator(&self) -> RingElement {
        x_minus_one_power(&self.field, self.e, self.i).expect("exponent validated at construction")
    }

    /// Systematic-free encoding `message * (x - 1)^i`; the message must have
    /// degree below the dimension.
    pub fn encode(&self, message: &Poly) -> Result<RingElement> {
        if let Some(degree) = message.degree() {
            if degree >= self.dimension() {
                return Err(Error::MessageTooLong {
                    degree,
                    dimension: self.dimension(),
                });
            }
        }
        let m = RingElement::from_poly(&self.field, message, self.n);
        m.mul(&self.field, &self.generator())
    }

    /// Membership: `(x - 1)^i` divides the degree-<n lift of `v`.
    pub fn contains(&self, v: &RingElement) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                left: v.len(),
                right: self.n,
            });
        }
        let divisor = Poly::x_minus_one(&self.field);
        let mut current = v.to_poly();
        for _ in 0..self.i {
            if current.is_zero() {
                return Ok(true);
            }
            let (quot, rem) = current.divrem(&self.field, &divisor)?;
            if !rem.is_zero() {
                return Ok(false);
            }
            current = quot;
        }
        Ok(true)
    }

    pub fn closed_form_hamming_distance(&self) -> Result<usize> {
        hamming_distance_formula(self.p() as usize, self.e, self.i)
    }

    pub fn closed_form_pair_distance(&self) -> Result<PairDistance> {
        pair_distance_formula(self.p() as usize, self.e, self.i)
    }

    /// Whether `C_i` meets the symbol-pair Singleton bound with equality.
    pub fn is_mds_pair(&self) -> Result<bool> {
        let d_p = self.closed_form_pair_distance()?.value;
        mds_pair_criterion(self.n, self.i, d_p)
    }
}

/// Singleton-bound equality `|C| = q^{n - d_p + 2}` with `|C| = q^{n - i}`,
/// i.e. `d_p = i + 2`. Only defined for nonzero codes with `2 <= d_p`.
pub fn mds_pair_criterion(n: usize, i: usize, d_p: usize) -> Result<bool> {
    if i >= n {
        return Err(Error::InvalidParameter(
            "the zero code is outside the symbol-pair Singleton bound".into(),
        ));
    }
    if d_p < 2 {
        return Err(Error::InvalidParameter(format!(
            "pair distance {d_p} is below the Singleton bound's range"
        )));
    }
    Ok(d_p == i + 2)
}

/// A closed-form pair distance and the case of the formula that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDistance {
    pub value: usize,
    pub branch: String,
}

fn pw(p: usize, k: u32) -> usize {
    p.pow(k)
}

fn resolve(
    matches: Vec<(usize, String)>,
    what: &str,
    p: usize,
    e: u32,
    i: usize,
) -> Result<(usize, String)> {
    let mut it = matches.into_iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Internal(format!("no {what} branch covers p={p}, e={e}, i={i}")))?;
    for (value, branch) in it {
        if value != first.0 {
            return Err(Error::Internal(format!(
                "{what} branches disagree at p={p}, e={e}, i={i}: {} ({}) vs {value} ({branch})",
                first.0, first.1
            )));
        }
    }
    Ok(first)
}

fn check_params(p: usize, e: u32, i: usize) -> Result<usize> {
    if !crate::gf::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let n = ring_length(p as u32, e)?;
    if i > n {
        return Err(Error::ExponentOutOfRange { i, n });
    }
    Ok(n)
}

/// Minimum Hamming distance of `<(x - 1)^i>` of length `p^e`.
pub fn hamming_distance_formula(p: usize, e: u32, i: usize) -> Result<usize> {
    let n = check_params(p, e, i)?;
    let top = pw(p, e - 1);
    let mut hits = Vec::new();
    if i == 0 {
        hits.push((1, "i=0".to_string()));
    }
    for beta in 0..=p - 2 {
        if beta * top < i && i <= (beta + 1) * top {
            hits.push((beta + 2, format!("beta={beta}")));
        }
    }
    for k in 1..e {
        let base = n - pw(p, e - k);
        let step = pw(p, e - k - 1);
        for t in 1..p {
            if base + (t - 1) * step < i && i <= base + t * step {
                hits.push(((t + 1) * pw(p, k), format!("k={k},t={t}")));
            }
        }
    }
    if i == n {
        hits.push((0, "zero-code".to_string()));
    }
    resolve(hits, "Hamming distance", p, e, i).map(|(v, _)| v)
}

/// Minimum symbol-pair distance of `<(x - 1)^i>` of length `p^e`, with the
/// label of the formula case used. Where cases overlap their values are
/// required to agree.
pub fn pair_distance_formula(p: usize, e: u32, i: usize) -> Result<PairDistance> {
    let n = check_params(p, e, i)?;
    let mut hits: Vec<(usize, String)> = Vec::new();
    if i == n {
        hits.push((0, "zero-code".into()));
    }
    if n == 2 && i == 1 {
        hits.push((2, "n=2".into()));
    }
    if e == 1 {
        if i + 2 <= p {
            hits.push((i + 2, "e=1,i<=p-2".into()));
        }
        if i + 1 == p {
            hits.push((p, "e=1,i=p-1".into()));
        }
    } else {
        let top = pw(p, e - 1);
        if i == 0 {
            hits.push((2, "i=0".into()));
        }
        if i == 1 {
            hits.push((3, "i=1".into()));
        }
        if 2 <= i && i <= top {
            hits.push((4, "2<=i<=p^(e-1)".into()));
        }
        for beta in 1..=p.saturating_sub(2) {
            if beta * top < i && i <= (beta + 1) * top {
                hits.push((2 * (beta + 2), format!("beta={beta}")));
            }
        }
        for k in 1..e - 1 {
            let base = n - pw(p, e - k);
            let step = pw(p, e - k - 1);
            if i == base + 1 {
                hits.push((3 * pw(p, k), format!("k={k},3p^k")));
            }
            if base + 2 <= i && i <= base + step {
                hits.push((4 * pw(p, k), format!("k={k},4p^k")));
            }
            for beta in 1..=p.saturating_sub(2) {
                if base + beta * step < i && i <= base + (beta + 1) * step {
                    hits.push((2 * (beta + 2) * pw(p, k), format!("k={k},beta={beta}")));
                }
            }
        }
        for j in 0..=p - 2 {
            if i == n - p + j {
                hits.push(((j + 2) * top, format!("j={j}")));
            }
        }
        if i == n - 1 {
            hits.push((n, "i=p^e-1".into()));
        }
    }
    resolve(hits, "pair distance", p, e, i).map(|(value, branch)| PairDistance { value, branch })
}

/// One row of the distance table for the family of length `p^e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceRecord {
    pub i: usize,
    pub dimension: usize,
    pub d_h: usize,
    pub d_p: usize,
    /// `None` for the zero code, which the Singleton bound does not cover.
    pub mds_pair: Option<bool>,
    pub branch: String,
    pub verified: Option<bool>,
}

/// Closed-form rows for `i = 0..=p^e`. The extension degree does not enter
/// the formulas but is validated.
pub fn distance_table(p: u32, e: u32, m: u32) -> Result<Vec<DistanceRecord>> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "extension degree must be at least 1".into(),
        ));
    }
    if !crate::gf::is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    let n = ring_length(p, e)?;
    (0..=n)
        .map(|i| {
            let d_h = hamming_distance_formula(p as usize, e, i)?;
            let pd = pair_distance_formula(p as usize, e, i)?;
            let mds_pair = if i < n {
                Some(mds_pair_criterion(n, i, pd.value)?)
            } else {
                None
            };
            Ok(DistanceRecord {
                i,
                dimension: n - i,
                d_h,
                d_p: pd.value,
                mds_pair,
                branch: pd.branch,
                verified: None,
            })
        })
        .collect()
}

/// Generator exponents of the MDS symbol-pair members of the family.
pub fn mds_exponents(p: u32, e: u32, m: u32) -> Result<Vec<usize>> {
    Ok(distance_table(p, e, m)?
        .into_iter()
        .filter(|r| r.mds_pair == Some(true))
        .map(|r| r.i)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldElement;
    use crate::pairmetrics::pair_weight;

    fn dp(p: usize, e: u32, i: usize) -> usize {
        pair_distance_formula(p, e, i).unwrap().value
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_distance_formula(3, 2, 0).unwrap(), 1);
        assert_eq!(hamming_distance_formula(3, 2, 4).unwrap(), 3);
        assert_eq!(hamming_distance_formula(3, 2, 8).unwrap(), 9);
        assert_eq!(hamming_distance_formula(3, 2, 9).unwrap(), 0);
        assert_eq!(hamming_distance_formula(2, 3, 7).unwrap(), 8);
        // e = 1: d_H = i + 1
        for i in 0..7 {
            assert_eq!(hamming_distance_formula(7, 1, i).unwrap(), i + 1);
        }
    }

    #[test]
    fn pair_examples() {
        assert_eq!(dp(3, 2, 1), 3);
        assert_eq!(dp(3, 2, 5), 6);
        assert_eq!(dp(2, 3, 5), 6);
        assert_eq!(dp(5, 1, 3), 5);
        assert_eq!(dp(3, 2, 7), 9);
        assert_eq!(pair_distance_formula(2, 1, 1).unwrap().branch, "n=2");
        assert_eq!(pair_distance_formula(3, 2, 5).unwrap().branch, "beta=1");
    }

    #[test]
    fn table_columns() {
        let col = |p, e| -> Vec<usize> {
            distance_table(p, e, 1)
                .unwrap()
                .iter()
                .map(|r| r.d_p)
                .collect()
        };
        assert_eq!(col(3, 2), vec![2, 3, 4, 4, 6, 6, 6, 9, 9, 0]);
        assert_eq!(col(2, 3), vec![2, 3, 4, 4, 4, 6, 8, 8, 0]);
        assert_eq!(col(2, 1), vec![2, 2, 0]);
        assert_eq!(col(5, 1), vec![2, 3, 4, 5, 5, 0]);
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(
            pair_distance_formula(4, 2, 0).unwrap_err(),
            Error::NotPrime(4)
        );
        assert!(pair_distance_formula(3, 2, 10).is_err());
        assert!(pair_distance_formula(3, 0, 0).is_err());
        assert!(CodeSpec::new(3, 1, 2, 10).is_err());
        assert!(distance_table(3, 2, 0).is_err());
    }

    #[test]
    fn mds_sets() {
        assert_eq!(mds_exponents(5, 1, 1).unwrap(), vec![0, 1, 2, 3]);
        // d_p = i + 2 also holds at i = 4 (beta = 1) and i = 7 (j = 1)
        assert_eq!(mds_exponents(3, 2, 1).unwrap(), vec![0, 1, 2, 4, 7]);
        // and at i = 6 = 2^3 - 2^2 + 2 where d_p = 4 * 2
        assert_eq!(mds_exponents(2, 3, 1).unwrap(), vec![0, 1, 2, 6]);
        assert_eq!(mds_exponents(2, 2, 1).unwrap(), vec![0, 1, 2]);
        let spec = CodeSpec::new(3, 1, 1, 2).unwrap();
        assert!(!spec.is_mds_pair().unwrap());
        let zero = CodeSpec::new(3, 1, 1, 3).unwrap();
        assert!(zero.is_mds_pair().is_err());
    }

    #[test]
    fn generator_encode_contains() {
        let c0 = CodeSpec::new(3, 1, 2, 0).unwrap();
        assert_eq!(c0.generator(), RingElement::one(9));
        let c9 = CodeSpec::new(3, 1, 2, 9).unwrap();
        assert!(c9.generator().is_zero());
        let c8 = CodeSpec::new(3, 1, 2, 8).unwrap();
        assert!(c8
            .generator()
            .coeffs()
            .iter()
            .all(|&c| c == FieldElement::ONE));

        let c7 = CodeSpec::new(3, 1, 2, 7).unwrap();
        let fs = c7.field();
        assert!(c7.encode(&Poly::zero()).unwrap().is_zero());
        assert_eq!(c7.encode(&Poly::one()).unwrap(), c7.generator());
        assert_eq!(c7.encode(&Poly::x_minus_one(fs)).unwrap(), c8.generator());
        assert!(matches!(
            c7.encode(&Poly::monomial(FieldElement::ONE, 2)),
            Err(Error::MessageTooLong {
                degree: 2,
                dimension: 2
            })
        ));

        for i in 0..=9 {
            let c = c7.with_exponent(i).unwrap();
            assert!(c.contains(&RingElement::zero(9)).unwrap());
            assert!(c.contains(&c.generator()).unwrap());
            assert_eq!(c.contains(&RingElement::one(9)).unwrap(), i == 0);
        }
        assert!(c7.contains(&RingElement::one(8)).is_err());
    }

    #[test]
    fn generator_witness_weights() {
        let c = CodeSpec::new(3, 1, 2, 6).unwrap();
        assert_eq!(pair_weight(&c.generator()).unwrap(), 6);
        let c = CodeSpec::new(2, 1, 3, 6).unwrap();
        assert_eq!(pair_weight(&c.generator()).unwrap(), 8);
    }
}
