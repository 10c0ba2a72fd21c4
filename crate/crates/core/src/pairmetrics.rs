//! Hamming and symbol-pair weights and distances on cyclic words.

use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::polyring::RingElement;

pub type SymbolPair = (FieldElement, FieldElement);

/// The pair read of a word: pair `i` is `(x_i, x_{(i+1) mod n})`. Channel
/// corruption can make adjacent pairs disagree on their shared symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairVector {
    pairs: Vec<SymbolPair>,
}

impl PairVector {
    pub fn from_pairs(pairs: Vec<SymbolPair>) -> Result<Self> {
        if pairs.len() < 2 {
            return Err(Error::TooShort(pairs.len()));
        }
        Ok(PairVector { pairs })
    }

    pub fn pairs(&self) -> &[SymbolPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// True when every pair's second symbol equals the next pair's first.
    pub fn is_consistent(&self) -> bool {
        let n = self.pairs.len();
        (0..n).all(|i| self.pairs[i].1 == self.pairs[(i + 1) % n].0)
    }

    pub(crate) fn pairs_mut(&mut self) -> &mut [SymbolPair] {
        &mut self.pairs
    }
}

/// Disagreement set of two words and the number of maximal cyclic runs in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunProfile {
    pub support: Vec<usize>,
    pub block_count: usize,
}

fn check_pairable(x: &RingElement) -> Result<()> {
    if x.len() < 2 {
        Err(Error::TooShort(x.len()))
    } else {
        Ok(())
    }
}

fn check_same_len(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}

pub fn pair_read(x: &RingElement) -> Result<PairVector> {
    check_pairable(x)?;
    let c = x.coeffs();
    let n = c.len();
    Ok(PairVector {
        pairs: (0..n).map(|i| (c[i], c[(i + 1) % n])).collect(),
    })
}

pub fn hamming_weight(x: &RingElement) -> usize {
    x.coeffs().iter().filter(|c| !c.is_zero()).count()
}

/// Number of cyclic positions whose pair is not `(0, 0)`.
pub fn pair_weight(x: &RingElement) -> Result<usize> {
    check_pairable(x)?;
    Ok(pair_weight_unchecked(x.coeffs()))
}

#[inline]
pub(crate) fn pair_weight_unchecked(c: &[FieldElement]) -> usize {
    let n = c.len();
    (0..n)
        .filter(|&i| !c[i].is_zero() || !c[(i + 1) % n].is_zero())
        .count()
}

pub fn hamming_distance(x: &RingElement, y: &RingElement) -> Result<usize> {
    check_same_len(x.len(), y.len())?;
    Ok(x.coeffs()
        .iter()
        .zip(y.coeffs())
        .filter(|(a, b)| a != b)
        .count())
}

pub fn pair_distance(x: &RingElement, y: &RingElement) -> Result<usize> {
    check_same_len(x.len(), y.len())?;
    check_pairable(x)?;
    let (a, b) = (x.coeffs(), y.coeffs());
    let n = a.len();
    Ok((0..n)
        .filter(|&i| {
            let j = (i + 1) % n;
            a[i] != b[i] || a[j] != b[j]
        })
        .count())
}

pub fn pair_seq_distance(u: &PairVector, v: &PairVector) -> Result<usize> {
    check_same_len(u.len(), v.len())?;
    Ok(u.pairs.iter().zip(&v.pairs).filter(|(a, b)| a != b).count())
}

/// Runs of the disagreement set, with index `n - 1` adjacent to `0`. A full
/// support counts as a single run.
pub fn run_count(x: &RingElement, y: &RingElement) -> Result<RunProfile> {
    check_same_len(x.len(), y.len())?;
    let n = x.len();
    let differs: Vec<bool> = x
        .coeffs()
        .iter()
        .zip(y.coeffs())
        .map(|(a, b)| a != b)
        .collect();
    let support: Vec<usize> = (0..n).filter(|&j| differs[j]).collect();
    let block_count = if support.is_empty() {
        0
    } else if support.len() == n {
        1
    } else {
        // each run has exactly one start: a member whose predecessor is not
        support
            .iter()
            .filter(|&&j| !differs[(j + n - 1) % n])
            .count()
    };
    Ok(RunProfile {
        support,
        block_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{build_field, FieldSpec};
    use crate::polyring::x_minus_one_power;

    fn fe(v: u32) -> FieldElement {
        FieldElement::new(v)
    }

    fn ring(fs: &FieldSpec, v: &[u32]) -> RingElement {
        RingElement::from_encodings(fs, v).unwrap()
    }

    #[test]
    fn pair_read_examples() {
        let f5 = build_field(5, 1).unwrap();
        let v = ring(&f5, &[1, 2, 3]);
        assert_eq!(
            pair_read(&v).unwrap().pairs(),
            &[(fe(1), fe(2)), (fe(2), fe(3)), (fe(3), fe(1))]
        );
        let z = pair_read(&RingElement::zero(4)).unwrap();
        assert!(z.pairs().iter().all(|&(a, b)| a.is_zero() && b.is_zero()));
        assert_eq!(
            pair_read(&ring(&f5, &[1, 0, 0, 0])).unwrap().pairs(),
            &[
                (fe(1), fe(0)),
                (fe(0), fe(0)),
                (fe(0), fe(0)),
                (fe(0), fe(1))
            ]
        );
        assert_eq!(
            pair_read(&RingElement::one(1)).unwrap_err(),
            Error::TooShort(1)
        );
        assert!(pair_read(&v).unwrap().is_consistent());
    }

    #[test]
    fn weights() {
        let f3 = build_field(3, 1).unwrap();
        assert_eq!(hamming_weight(&RingElement::zero(9)), 0);
        assert_eq!(hamming_weight(&ring(&f3, &[1; 9])), 9);
        let g4 = x_minus_one_power(&f3, 2, 4).unwrap();
        assert_eq!(g4, ring(&f3, &[1, 2, 0, 2, 1, 0, 0, 0, 0]));
        assert_eq!(hamming_weight(&g4), 4);

        assert_eq!(
            pair_weight(&ring(&f3, &[2, 1, 0, 0, 0, 0, 0, 0, 0])).unwrap(),
            3
        );
        assert_eq!(
            pair_weight(&ring(&f3, &[2, 0, 0, 1, 0, 0, 0, 0, 0])).unwrap(),
            4
        );
        let f5 = build_field(5, 1).unwrap();
        assert_eq!(pair_weight(&ring(&f5, &[1, 3, 1, 0, 0])).unwrap(), 4);
        assert_eq!(pair_weight(&RingElement::zero(5)).unwrap(), 0);
    }

    #[test]
    fn distances_and_runs() {
        let f2 = build_field(2, 1).unwrap();
        let zero = RingElement::zero(5);
        let a = ring(&f2, &[1, 0, 1, 0, 0]);
        let b = ring(&f2, &[1, 0, 0, 0, 1]);
        assert_eq!(hamming_distance(&a, &zero).unwrap(), 2);
        assert_eq!(pair_distance(&a, &zero).unwrap(), 4);
        assert_eq!(run_count(&a, &zero).unwrap().block_count, 2);
        assert_eq!(hamming_distance(&b, &zero).unwrap(), 2);
        assert_eq!(pair_distance(&b, &zero).unwrap(), 3);
        let runs = run_count(&b, &zero).unwrap();
        assert_eq!(runs.support, vec![0, 4]);
        assert_eq!(runs.block_count, 1);
        assert_eq!(pair_distance(&a, &a).unwrap(), 0);
        assert_eq!(run_count(&a, &a).unwrap().block_count, 0);
        let full = ring(&f2, &[1; 5]);
        assert_eq!(run_count(&full, &zero).unwrap().block_count, 1);
        assert_eq!(pair_distance(&full, &zero).unwrap(), 5);
        assert!(matches!(
            pair_distance(&a, &RingElement::zero(4)),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn pair_sequence_distance() {
        let f3 = build_field(3, 1).unwrap();
        let x = ring(&f3, &[1, 2, 0, 1]);
        let y = ring(&f3, &[0, 2, 2, 1]);
        let (u, v) = (pair_read(&x).unwrap(), pair_read(&y).unwrap());
        assert_eq!(pair_seq_distance(&u, &u).unwrap(), 0);
        assert_eq!(
            pair_seq_distance(&u, &v).unwrap(),
            pair_distance(&x, &y).unwrap()
        );
        let mut w = u.clone();
        w.pairs_mut()[2] = (fe(2), fe(2));
        assert_eq!(pair_seq_distance(&u, &w).unwrap(), 1);
        assert!(!w.is_consistent());
    }
}
