//! Exhaustive ground truth for the closed forms.
//!
//! Codewords are enumerated as `f(x) (x - 1)^i` over every message `f` of
//! degree below the dimension, in ascending order of the message's base-q
//! encoding. The search deliberately ignores every structural shortcut except
//! scalar-class reduction, which is sound because all nonzero multiples of a
//! codeword share its Hamming and pair weight.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{hamming_distance_formula, pair_distance_formula, CodeSpec};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::pairmetrics::{
    hamming_distance, hamming_weight, pair_distance, pair_weight_unchecked, run_count,
};
use crate::polyring::{lex_cmp, RingElement};

/// Limits and options for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_codewords: u64,
    /// Enumerate one representative per scalar class (monic messages only).
    pub reduce_by_scalars: bool,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_codewords: 10_000_000,
            reduce_by_scalars: true,
        }
    }
}

impl EnumBudget {
    pub fn new(max_codewords: u64) -> Result<Self> {
        if max_codewords == 0 {
            return Err(Error::InvalidParameter(
                "codeword budget must be at least 1".into(),
            ));
        }
        Ok(EnumBudget {
            max_codewords,
            ..Default::default()
        })
    }

    pub fn full(self) -> Self {
        EnumBudget {
            reduce_by_scalars: false,
            ..self
        }
    }
}

/// A block of consecutive messages: a fixed high part already folded into
/// `base`, and `free` low digits that run over all field elements.
#[derive(Clone, Debug)]
struct Block {
    base: RingElement,
    free: usize,
}

/// Number of nonzero codewords the enumeration visits, saturating at u64::MAX.
pub fn codeword_count(spec: &CodeSpec, reduce_by_scalars: bool) -> u64 {
    let q = spec.q() as u128;
    let k = spec.dimension() as u32;
    let total = q.checked_pow(k).map(|t| {
        if reduce_by_scalars {
            (t - 1) / (q - 1)
        } else {
            t - 1
        }
    });
    total.map_or(u64::MAX, |t| t.min(u64::MAX as u128) as u64)
}

fn initial_blocks(spec: &CodeSpec, reduce: bool) -> Vec<Block> {
    let g = spec.generator();
    let k = spec.dimension();
    if reduce {
        (0..k)
            .map(|d| Block {
                base: g.cyclic_shift(d as i64),
                free: d,
            })
            .collect()
    } else {
        vec![Block {
            base: RingElement::zero(spec.n()),
            free: k,
        }]
    }
}

/// Splits blocks on their top free digit until there are at least `target`
/// of them, preserving enumeration order.
fn split_blocks(
    fs: &FieldSpec,
    g: &RingElement,
    mut blocks: Vec<Block>,
    target: usize,
) -> Vec<Block> {
    while blocks.len() < target && blocks.iter().any(|b| b.free > 0) {
        let mut next = Vec::with_capacity(blocks.len() * fs.q() as usize);
        for b in blocks {
            if b.free == 0 {
                next.push(b);
                continue;
            }
            let top = b.free - 1;
            for c in fs.enumerate_elements() {
                let mut base = b.base.clone();
                base.add_scaled_shift(fs, c, top, g);
                next.push(Block { base, free: top });
            }
        }
        blocks = next;
    }
    blocks
}

/// Odometer over the free digits of one block.
#[derive(Clone, Debug)]
struct Walk {
    digits: Vec<u32>,
    current: RingElement,
    started: bool,
}

impl Walk {
    fn new(block: Block) -> Self {
        Walk {
            digits: vec![0; block.free],
            current: block.base,
            started: false,
        }
    }

    /// Moves to the next message of the block; `false` once it is exhausted.
    fn advance(&mut self, fs: &FieldSpec, g: &RingElement) -> bool {
        if !self.started {
            self.started = true;
            return true;
        }
        let q = fs.q();
        for pos in 0..self.digits.len() {
            let old = self.digits[pos];
            let new = if old + 1 == q { 0 } else { old + 1 };
            self.digits[pos] = new;
            let delta = fs.sub(FieldElement::new(new), FieldElement::new(old));
            self.current.add_scaled_shift(fs, delta, pos, g);
            if new != 0 {
                return true;
            }
        }
        false
    }
}

/// Streaming enumeration of nonzero codewords in message order.
///
/// Yields `Err(Error::BudgetExhausted)` once, in place of the first codeword
/// past the budget, and then stops.
pub struct Codewords {
    fs: FieldSpec,
    g: RingElement,
    blocks: std::vec::IntoIter<Block>,
    walk: Option<Walk>,
    budget: u64,
    visited: u64,
    finished: bool,
}

impl Iterator for Codewords {
    type Item = Result<RingElement>;

    fn next(&mut self) -> Option<Self::Item> {
        while !self.finished {
            let walk = match &mut self.walk {
                Some(w) => w,
                None => match self.blocks.next() {
                    Some(b) => self.walk.insert(Walk::new(b)),
                    None => {
                        self.finished = true;
                        break;
                    }
                },
            };
            if !walk.advance(&self.fs, &self.g) {
                self.walk = None;
                continue;
            }
            if walk.current.is_zero() {
                continue;
            }
            if self.visited == self.budget {
                self.finished = true;
                return Some(Err(Error::BudgetExhausted {
                    budget: self.budget,
                    visited: self.visited,
                    best_so_far: None,
                }));
            }
            self.visited += 1;
            return Some(Ok(walk.current.clone()));
        }
        None
    }
}

/// Deterministic stream of the code's nonzero codewords.
pub fn enumerate_codewords(spec: &CodeSpec, budget: EnumBudget) -> Result<Codewords> {
    if spec.dimension() == 0 {
        return Err(Error::InvalidParameter(
            "the zero code has no nonzero codewords".into(),
        ));
    }
    Ok(Codewords {
        fs: spec.field().clone(),
        g: spec.generator(),
        blocks: initial_blocks(spec, budget.reduce_by_scalars).into_iter(),
        walk: None,
        budget: budget.max_codewords,
        visited: 0,
        finished: false,
    })
}

/// An exact minimum weight and the codeword attaining it. Ties go to the
/// lexicographically smallest coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimum {
    pub weight: usize,
    pub witness: RingElement,
}

#[derive(Clone, Debug, Default)]
struct Best {
    pair: Option<Minimum>,
    hamming: Option<Minimum>,
}

fn offer(slot: &mut Option<Minimum>, weight: usize, c: &RingElement) {
    let better = match slot {
        None => true,
        Some(m) => weight < m.weight || (weight == m.weight && lex_cmp(c, &m.witness).is_lt()),
    };
    if better {
        *slot = Some(Minimum {
            weight,
            witness: c.clone(),
        });
    }
}

fn merge_slot(a: Option<Minimum>, b: Option<Minimum>) -> Option<Minimum> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if (y.weight, &y.witness) < (x.weight, &x.witness) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

impl Best {
    fn observe(&mut self, c: &RingElement) {
        if c.is_zero() {
            return;
        }
        let coeffs = c.coeffs();
        offer(&mut self.pair, pair_weight_unchecked(coeffs), c);
        offer(&mut self.hamming, hamming_weight(c), c);
    }

    fn merge(self, other: Best) -> Best {
        Best {
            pair: merge_slot(self.pair, other.pair),
            hamming: merge_slot(self.hamming, other.hamming),
        }
    }
}

struct Minima {
    pair: Minimum,
    hamming: Minimum,
}

/// Both minima in one pass. Over budget, the first `max_codewords` codewords
/// are still scanned so the error can report the best weights seen.
fn search_minima(spec: &CodeSpec, budget: EnumBudget) -> std::result::Result<Minima, (u64, Best)> {
    if spec.dimension() == 0 {
        let zero = Minimum {
            weight: 0,
            witness: RingElement::zero(spec.n()),
        };
        return Ok(Minima {
            pair: zero.clone(),
            hamming: zero,
        });
    }
    if spec.n() < 2 {
        // unreachable for prime p and e >= 1
        return Err((0, Best::default()));
    }
    let total = codeword_count(spec, budget.reduce_by_scalars);
    if total > budget.max_codewords {
        let mut best = Best::default();
        let stream = enumerate_codewords(spec, budget).expect("dimension checked");
        for c in stream.map_while(|r| r.ok()) {
            best.observe(&c);
        }
        return Err((budget.max_codewords, best));
    }

    let fs = spec.field();
    let g = spec.generator();
    let target = rayon::current_num_threads() * 8;
    let blocks = split_blocks(
        fs,
        &g,
        initial_blocks(spec, budget.reduce_by_scalars),
        target,
    );
    let best = blocks
        .par_iter()
        .map(|block| {
            let mut best = Best::default();
            let mut walk = Walk::new(block.clone());
            while walk.advance(fs, &g) {
                best.observe(&walk.current);
            }
            best
        })
        .reduce(Best::default, Best::merge);
    match (best.pair, best.hamming) {
        (Some(pair), Some(hamming)) => Ok(Minima { pair, hamming }),
        _ => Err((0, Best::default())),
    }
}

fn exhausted(budget: EnumBudget, visited: u64, best: Option<&Minimum>) -> Error {
    Error::BudgetExhausted {
        budget: budget.max_codewords,
        visited,
        best_so_far: best.map(|m| m.weight),
    }
}

/// Exact minimum pair weight over nonzero codewords. The zero code reports 0
/// with the zero word as witness.
pub fn min_pair_weight_bruteforce(spec: &CodeSpec, budget: EnumBudget) -> Result<Minimum> {
    search_minima(spec, budget)
        .map(|m| m.pair)
        .map_err(|(visited, best)| exhausted(budget, visited, best.pair.as_ref()))
}

/// Exact minimum Hamming weight over nonzero codewords.
pub fn min_hamming_weight_bruteforce(spec: &CodeSpec, budget: EnumBudget) -> Result<Minimum> {
    search_minima(spec, budget)
        .map(|m| m.hamming)
        .map_err(|(visited, best)| exhausted(budget, visited, best.hamming.as_ref()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationEntry {
    pub i: usize,
    pub formula_d_h: usize,
    pub oracle_d_h: Option<usize>,
    pub formula_d_p: usize,
    pub oracle_d_p: Option<usize>,
    pub branch: String,
    /// A codeword of minimum pair weight; absent when skipped.
    pub witness: Option<RingElement>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub p: u32,
    pub e: u32,
    pub m: u32,
    pub entries: Vec<VerificationEntry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    AllMatch,
    Mismatch,
    Incomplete,
}

impl VerificationReport {
    /// Any mismatch dominates; otherwise any skipped entry makes the run
    /// incomplete.
    pub fn verdict(&self) -> Verdict {
        if self.entries.iter().any(|e| e.status == Status::Mismatch) {
            Verdict::Mismatch
        } else if self.entries.iter().any(|e| e.status == Status::Skipped) {
            Verdict::Incomplete
        } else {
            Verdict::AllMatch
        }
    }
}

/// Compares both closed forms against both oracles for every `i` in
/// `[0, p^e]`, over the default model of F_{p^m}.
pub fn verify_family(p: u32, e: u32, m: u32, budget: EnumBudget) -> Result<VerificationReport> {
    let base = CodeSpec::new(p, m, e, 0)?;
    verify_over(&base, budget)
}

/// Same as [`verify_family`] with the field taken from `base`.
pub fn verify_over(base: &CodeSpec, budget: EnumBudget) -> Result<VerificationReport> {
    let (p, e) = (base.p() as usize, base.e());
    let mut entries = Vec::with_capacity(base.n() + 1);
    for i in 0..=base.n() {
        let spec = base.with_exponent(i)?;
        let formula_d_h = hamming_distance_formula(p, e, i)?;
        let formula = pair_distance_formula(p, e, i)?;
        let entry = match search_minima(&spec, budget) {
            Ok(minima) => {
                let ok =
                    minima.hamming.weight == formula_d_h && minima.pair.weight == formula.value;
                VerificationEntry {
                    i,
                    formula_d_h,
                    oracle_d_h: Some(minima.hamming.weight),
                    formula_d_p: formula.value,
                    oracle_d_p: Some(minima.pair.weight),
                    branch: formula.branch,
                    witness: Some(minima.pair.witness),
                    status: if ok { Status::Match } else { Status::Mismatch },
                }
            }
            Err(_) => VerificationEntry {
                i,
                formula_d_h,
                oracle_d_h: None,
                formula_d_p: formula.value,
                oracle_d_p: None,
                branch: formula.branch,
                witness: None,
                status: Status::Skipped,
            },
        };
        entries.push(entry);
    }
    Ok(VerificationReport {
        p: base.p(),
        e: base.e(),
        m: base.m(),
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Prop22Mode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

/// Outcome of checking `d_p = d_H + L` on pairs of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunIdentityReport {
    pub pairs_checked: u64,
    /// Pairs with `0 < d_H < n`, where the run identity applies.
    pub identity_cases: u64,
    /// Pairs with `d_H = n`, where `d_p = n` is checked instead.
    pub full_support_cases: u64,
    pub violations: Vec<(RingElement, RingElement)>,
}

const EXHAUSTIVE_PAIR_LIMIT: u128 = 1 << 20;

fn word_from_index(fs: &FieldSpec, mut index: u64, n: usize) -> RingElement {
    let q = fs.q() as u64;
    let coeffs = (0..n)
        .map(|_| {
            let c = FieldElement::new((index % q) as u32);
            index /= q;
            c
        })
        .collect();
    RingElement::from_coeffs(coeffs).expect("n >= 2")
}

fn check_run_identity(x: &RingElement, y: &RingElement, report: &mut RunIdentityReport) {
    let n = x.len();
    let d_h = hamming_distance(x, y).expect("equal lengths");
    let d_p = pair_distance(x, y).expect("equal lengths, n >= 2");
    report.pairs_checked += 1;
    let holds = if d_h == 0 {
        return;
    } else if d_h == n {
        report.full_support_cases += 1;
        d_p == n
    } else {
        report.identity_cases += 1;
        d_p == d_h + run_count(x, y).expect("equal lengths").block_count
    };
    if !holds {
        report.violations.push((x.clone(), y.clone()));
    }
}

/// Checks `d_p(x, y) = d_H(x, y) + L` over F_q^n, either on every ordered
/// pair (at most 2^20 of them) or on seeded random pairs.
pub fn verify_prop22_exhaustive(
    fs: &FieldSpec,
    n: usize,
    mode: Prop22Mode,
) -> Result<RunIdentityReport> {
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let mut report = RunIdentityReport::default();
    match mode {
        Prop22Mode::Exhaustive => {
            let words = (fs.q() as u128)
                .checked_pow(n as u32)
                .filter(|w| w * w <= EXHAUSTIVE_PAIR_LIMIT)
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "{}^{n} words is too many ordered pairs for exhaustive mode",
                        fs.q()
                    ))
                })? as u64;
            let all: Vec<RingElement> = (0..words).map(|k| word_from_index(fs, k, n)).collect();
            for x in &all {
                for y in &all {
                    check_run_identity(x, y, &mut report);
                }
            }
        }
        Prop22Mode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let q = fs.q();
            let draw = |rng: &mut ChaCha8Rng| {
                let coeffs = (0..n)
                    .map(|_| FieldElement::new(rng.gen_range(0..q)))
                    .collect();
                RingElement::from_coeffs(coeffs).expect("n >= 2")
            };
            for _ in 0..count {
                let x = draw(&mut rng);
                let y = draw(&mut rng);
                check_run_identity(&x, &y, &mut report);
            }
        }
    }
    Ok(report)
}
