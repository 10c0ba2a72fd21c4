//! A symbol-pair read channel: pair errors on the read sequence and an
//! exhaustive nearest-codeword decoder in pair-sequence space.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::codes::CodeSpec;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::oracle::{enumerate_codewords, EnumBudget};
use crate::pairmetrics::{pair_read, PairVector, SymbolPair};
use crate::polyring::{Poly, RingElement};

/// Positions hit by pair errors and what was read there instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairErrorPattern {
    /// Ascending, distinct.
    pub positions: Vec<usize>,
    pub replacements: Vec<SymbolPair>,
}

impl PairErrorPattern {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Corrupts `t` distinct pair positions, each to a uniformly chosen pair
/// different from the one read.
pub fn inject_pair_errors_with<R: Rng + ?Sized>(
    fs: &FieldSpec,
    u: &PairVector,
    t: usize,
    rng: &mut R,
) -> Result<(PairVector, PairErrorPattern)> {
    let n = u.len();
    if t > n {
        return Err(Error::InvalidParameter(format!(
            "cannot corrupt {t} of {n} pair positions"
        )));
    }
    let q = fs.q() as u64;
    let mut positions = sample(rng, n, t).into_vec();
    positions.sort_unstable();
    let mut corrupted = u.clone();
    let mut replacements = Vec::with_capacity(t);
    for &pos in &positions {
        let (a, b) = u.pairs()[pos];
        let original = a.value() as u64 * q + b.value() as u64;
        let mut r = rng.gen_range(0..q * q - 1);
        if r >= original {
            r += 1;
        }
        let pair = (
            FieldElement::new((r / q) as u32),
            FieldElement::new((r % q) as u32),
        );
        corrupted.pairs_mut()[pos] = pair;
        replacements.push(pair);
    }
    Ok((
        corrupted,
        PairErrorPattern {
            positions,
            replacements,
        },
    ))
}

/// Seeded form of [`inject_pair_errors_with`].
pub fn inject_pair_errors(
    fs: &FieldSpec,
    u: &PairVector,
    t: usize,
    seed: u64,
) -> Result<(PairVector, PairErrorPattern)> {
    inject_pair_errors_with(fs, u, t, &mut ChaCha8Rng::seed_from_u64(seed))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Codeword(RingElement),
    /// Two or more distinct codewords share the minimum distance.
    Ambiguous,
}

/// Minimum pair-distance decoder over the full codebook (every scalar
/// multiple included, zero word included).
#[derive(Clone, Debug)]
pub struct Decoder {
    spec: CodeSpec,
    codebook: Vec<RingElement>,
}

impl Decoder {
    pub fn new(spec: &CodeSpec, budget: EnumBudget) -> Result<Self> {
        if spec.dimension() == 0 {
            return Err(Error::InvalidParameter(
                "cannot decode the zero code".into(),
            ));
        }
        if spec.n() < 2 {
            return Err(Error::TooShort(spec.n()));
        }
        let size = (spec.q() as u128).checked_pow(spec.dimension() as u32);
        if size.is_none_or(|s| s > budget.max_codewords as u128) {
            return Err(Error::BudgetExhausted {
                budget: budget.max_codewords,
                visited: 0,
                best_so_far: None,
            });
        }
        let mut codebook = vec![RingElement::zero(spec.n())];
        for c in enumerate_codewords(spec, budget.full())? {
            codebook.push(c?);
        }
        Ok(Decoder {
            spec: spec.clone(),
            codebook,
        })
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn codebook(&self) -> &[RingElement] {
        &self.codebook
    }

    pub fn decode(&self, received: &PairVector) -> Result<Decoded> {
        let n = self.spec.n();
        if received.len() != n {
            return Err(Error::LengthMismatch {
                left: received.len(),
                right: n,
            });
        }
        let read = received.pairs();
        let mut best: Option<(usize, usize)> = None;
        let mut tied = false;
        for (idx, c) in self.codebook.iter().enumerate() {
            let cc = c.coeffs();
            let d = (0..n)
                .filter(|&j| (cc[j], cc[(j + 1) % n]) != read[j])
                .count();
            match best {
                Some((bd, _)) if d > bd => {}
                Some((bd, _)) if d == bd => tied = true,
                _ => {
                    best = Some((d, idx));
                    tied = false;
                }
            }
        }
        let (_, idx) = best.expect("codebook holds at least the zero word");
        Ok(if tied {
            Decoded::Ambiguous
        } else {
            Decoded::Codeword(self.codebook[idx].clone())
        })
    }
}

pub fn decode_min_pair_distance(
    spec: &CodeSpec,
    received: &PairVector,
    budget: EnumBudget,
) -> Result<Decoded> {
    Decoder::new(spec, budget)?.decode(received)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub transmitted: RingElement,
    pub received: PairVector,
    pub pattern: PairErrorPattern,
    pub decoded: Decoded,
    pub success: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub t: usize,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub outcomes: Vec<TrialOutcome>,
}

fn random_codeword<R: Rng + ?Sized>(spec: &CodeSpec, rng: &mut R) -> Result<RingElement> {
    let q = spec.q();
    let coeffs = (0..spec.dimension())
        .map(|_| FieldElement::new(rng.gen_range(0..q)))
        .collect();
    spec.encode(&Poly::new(coeffs))
}

/// Each trial draws a uniform codeword, corrupts `t` pair reads and decodes.
/// Trial `k` uses stream `k` of a ChaCha8 generator seeded with `seed`, so
/// outcomes do not depend on scheduling.
pub fn correctability_experiment(
    spec: &CodeSpec,
    t: usize,
    trials: usize,
    seed: u64,
    budget: EnumBudget,
) -> Result<ExperimentReport> {
    if t > spec.n() {
        return Err(Error::InvalidParameter(format!(
            "cannot corrupt {t} of {} pair positions",
            spec.n()
        )));
    }
    let decoder = Decoder::new(spec, budget)?;
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let transmitted = random_codeword(spec, &mut rng)?;
            let clean = pair_read(&transmitted)?;
            let (received, pattern) = inject_pair_errors_with(spec.field(), &clean, t, &mut rng)?;
            let decoded = decoder.decode(&received)?;
            let success = decoded == Decoded::Codeword(transmitted.clone());
            Ok(TrialOutcome {
                transmitted,
                received,
                pattern,
                decoded,
                success,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let successes = outcomes.iter().filter(|o| o.success).count();
    let success_rate = if trials == 0 {
        1.0
    } else {
        successes as f64 / trials as f64
    };
    Ok(ExperimentReport {
        t,
        trials,
        successes,
        success_rate,
        outcomes,
    })
}
