//! Desk-scale confluence checking and a lemma suite for the derived word
//! identities.
//!
//! [`enumerate_instances`] grounds the rule schemas into every concrete
//! instance whose left-hand side fits a length budget, including the
//! redundant `W = ε, j <= i` instances of R1 that the matcher prunes (their
//! left-hand sides contain shorter instances, so reducibility is
//! unaffected, but the formal basis has them). [`find_ambiguities`] then
//! produces every overlap and inclusion between instance left-hand sides,
//! and [`check_compositions`] reduces both sides of each ambiguity to
//! normal form. A non-joinable ambiguity would be a counterexample to
//! confluence; the expectation everywhere is zero.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BraidError;
use crate::families::{delta_ladder, flip, lambda_word, shift, LambdaVariant};
use crate::rules::{
    apply_match, instantiate_lhs, normalize_word, Policy, RuleMatch, RuleParams,
};
use crate::word::{cmp_deglex_slices, Generator, Word};

/// Default cap on the number of enumerated instances.
pub const DEFAULT_INSTANCE_BUDGET: usize = 2_000_000;

/// All positive words over the index alphabet `lo..=hi` with length at most
/// `max_len`, in length-then-lex order. Empty alphabet gives just `ε`.
fn words_over(lo: u16, hi: u16, max_len: usize, rank: u16) -> Vec<Word> {
    let mut out = vec![Word::empty(rank)];
    if lo > hi {
        return out;
    }
    let mut layer: Vec<Vec<u16>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next_layer = Vec::new();
        for stem in &layer {
            for idx in lo..=hi {
                let mut next = stem.clone();
                next.push(idx);
                out.push(Word::from_artin_indices(rank, &next).expect("indices in range"));
                next_layer.push(next);
            }
        }
        layer = next_layer;
    }
    out
}

/// Every valid rule parameterization whose left-hand side has length at
/// most `max_lhs_len`, in a fixed deterministic order, bounded by `budget`.
pub fn enumerate_instances_with_budget(
    rank: u16,
    max_lhs_len: usize,
    budget: usize,
) -> Result<Vec<RuleParams>, BraidError> {
    let n = rank;
    let mut out: Vec<RuleParams> = Vec::new();
    let push = |params: RuleParams, out: &mut Vec<RuleParams>| {
        if out.len() >= budget {
            return Err(BraidError::BudgetExceeded {
                budget,
                reached: out.len() + 1,
            });
        }
        out.push(params);
        Ok(())
    };

    // R1: anchors a_{i+1} a_i, filler V over a_1..a_{i-1}, W empty or over
    // a_j..a_i starting with a_i, descending tail a_{i+1} ... a_j.
    for i in 1..n {
        for j in 1..=i + 1 {
            let fixed = 2 + (i + 2 - j) as usize;
            if fixed > max_lhs_len {
                continue;
            }
            let v_budget = max_lhs_len - fixed;
            for v in words_over(1, i - 1, v_budget, rank) {
                let w_budget = v_budget - v.len();
                let mut w_options = vec![Word::empty(rank)];
                if j <= i && w_budget >= 1 {
                    for tail in words_over(j, i, w_budget - 1, rank) {
                        let mut letters = vec![Generator::artin(i)];
                        letters.extend_from_slice(tail.letters());
                        w_options.push(Word::from_checked(rank, letters));
                    }
                }
                for w in w_options {
                    push(RuleParams::R1 { i, j, v: v.clone(), w }, &mut out)?;
                }
            }
        }
    }

    // R2: far commutations.
    if max_lhs_len >= 2 {
        for s in 3..=n {
            for k in 1..=s - 2 {
                push(RuleParams::R2 { s, k }, &mut out)?;
            }
        }
    }

    // R3: the ladder with fillers V_k over a_1..a_k.
    let ladder_len = n as usize * (n as usize + 1) / 2;
    if ladder_len <= max_lhs_len {
        let slack = max_lhs_len - ladder_len;
        let mut stack: Vec<Vec<Word>> = vec![Vec::new()];
        // Depth-first over filler tuples, keeping the total length bound.
        while let Some(fillers) = stack.pop() {
            if fillers.len() == (n - 1) as usize {
                push(RuleParams::R3 { fillers }, &mut out)?;
                continue;
            }
            let k = fillers.len() as u16 + 1;
            let used: usize = fillers.iter().map(Word::len).sum();
            // Reverse so the stack pops shortest-first.
            for filler in words_over(1, k, slack - used, rank).into_iter().rev() {
                let mut next = fillers.clone();
                next.push(filler);
                stack.push(next);
            }
        }
    }

    // R4, R4p, R5.
    if max_lhs_len >= 2 {
        for l in 1..=n {
            push(RuleParams::R4 { l }, &mut out)?;
        }
        for l in 1..=n {
            push(RuleParams::R4p { l }, &mut out)?;
        }
        push(RuleParams::R5a, &mut out)?;
        push(RuleParams::R5b, &mut out)?;
    }

    Ok(out)
}

/// [`enumerate_instances_with_budget`] with the default budget.
pub fn enumerate_instances(rank: u16, max_lhs_len: usize) -> Result<Vec<RuleParams>, BraidError> {
    enumerate_instances_with_budget(rank, max_lhs_len, DEFAULT_INSTANCE_BUDGET)
}

/// How two left-hand sides meet inside the ambiguity word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AmbiguityKind {
    /// `w = lhs(left)·b = a·lhs(right)` with the two spans crossing.
    Overlap,
    /// `lhs(right)` occurs inside `lhs(left) = w`.
    Inclusion,
}

impl fmt::Display for AmbiguityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AmbiguityKind::Overlap => "overlap",
            AmbiguityKind::Inclusion => "inclusion",
        })
    }
}

/// One composition: an ambiguity word with its two competing reductions.
#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: Word,
    pub left: RuleMatch,
    pub right: RuleMatch,
    pub kind: AmbiguityKind,
}

/// All overlap and inclusion ambiguities among the given instances.
/// Overlaps are taken at every positive offset, including an instance
/// against itself; inclusions require distinct instances.
pub fn find_ambiguities(
    instances: &[RuleParams],
    rank: u16,
) -> Result<Vec<Ambiguity>, BraidError> {
    let sides: Vec<Word> = instances
        .iter()
        .map(|p| instantiate_lhs(p, rank))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (fi, f) in instances.iter().enumerate() {
        let flhs = &sides[fi];
        for (gi, g) in instances.iter().enumerate() {
            let glhs = &sides[gi];
            // Crossing overlaps: right instance starts at offset o inside
            // the left one and extends beyond its end.
            let min_o = (flhs.len() + 1).saturating_sub(glhs.len()).max(1);
            for o in min_o..flhs.len() {
                let shared = flhs.len() - o;
                if flhs.letters()[o..] != glhs.letters()[..shared] {
                    continue;
                }
                let mut letters = flhs.letters().to_vec();
                letters.extend_from_slice(&glhs.letters()[shared..]);
                let word = Word::from_checked(rank, letters);
                out.push(Ambiguity {
                    word,
                    left: RuleMatch {
                        start: 0,
                        end: flhs.len(),
                        params: f.clone(),
                    },
                    right: RuleMatch {
                        start: o,
                        end: o + glhs.len(),
                        params: g.clone(),
                    },
                    kind: AmbiguityKind::Overlap,
                });
            }
            // Inclusions: the right lhs sits fully inside the left one.
            if fi == gi || glhs.len() > flhs.len() {
                continue;
            }
            for o in 0..=flhs.len() - glhs.len() {
                if flhs.letters()[o..o + glhs.len()] != *glhs.letters() {
                    continue;
                }
                out.push(Ambiguity {
                    word: flhs.clone(),
                    left: RuleMatch {
                        start: 0,
                        end: flhs.len(),
                        params: f.clone(),
                    },
                    right: RuleMatch {
                        start: o,
                        end: o + glhs.len(),
                        params: g.clone(),
                    },
                    kind: AmbiguityKind::Inclusion,
                });
            }
        }
    }
    Ok(out)
}

/// One checked composition.
#[derive(Clone, Debug)]
pub struct CompositionRecord {
    pub ambiguity: Ambiguity,
    pub left_nf: Word,
    pub right_nf: Word,
    pub joinable: bool,
}

/// Outcome of checking every composition within a budget.
#[derive(Clone, Debug)]
pub struct CompositionReport {
    pub rank: u16,
    pub max_lhs_len: usize,
    pub instances: usize,
    pub total: usize,
    pub joinable: usize,
    pub records: Vec<CompositionRecord>,
}

impl CompositionReport {
    pub fn failures(&self) -> impl Iterator<Item = &CompositionRecord> {
        self.records.iter().filter(|r| !r.joinable)
    }

    pub fn failure_count(&self) -> usize {
        self.total - self.joinable
    }
}

impl fmt::Display for CompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rank {}, max lhs len {}: {} instances, {} ambiguities, {} joinable, failures: {}",
            self.rank,
            self.max_lhs_len,
            self.instances,
            self.total,
            self.joinable,
            self.failure_count()
        )?;
        for r in self.failures() {
            writeln!(
                f,
                "NOT JOINABLE  w = {} ; {} vs {} ; nf left = {} ; nf right = {}",
                r.ambiguity.word, r.ambiguity.left, r.ambiguity.right, r.left_nf, r.right_nf
            )?;
        }
        Ok(())
    }
}

/// Reduces both sides of every ambiguity to normal form and reports
/// joinability. Records are sorted by ambiguity word, then spans.
pub fn check_compositions(rank: u16, max_lhs_len: usize) -> Result<CompositionReport, BraidError> {
    let instances = enumerate_instances(rank, max_lhs_len)?;
    let ambiguities = find_ambiguities(&instances, rank)?;
    let mut records = Vec::with_capacity(ambiguities.len());
    for amb in ambiguities {
        let left_reduct = apply_match(&amb.word, &amb.left)?;
        let right_reduct = apply_match(&amb.word, &amb.right)?;
        let left_nf = normalize_word(&left_reduct, Policy::Deterministic)?;
        let right_nf = normalize_word(&right_reduct, Policy::Deterministic)?;
        let joinable = left_nf == right_nf;
        records.push(CompositionRecord {
            ambiguity: amb,
            left_nf,
            right_nf,
            joinable,
        });
    }
    records.sort_by(|a, b| {
        cmp_deglex_slices(a.ambiguity.word.letters(), b.ambiguity.word.letters())
            .then_with(|| a.ambiguity.left.to_string().cmp(&b.ambiguity.left.to_string()))
            .then_with(|| {
                a.ambiguity
                    .right
                    .to_string()
                    .cmp(&b.ambiguity.right.to_string())
            })
    });
    let total = records.len();
    let joinable = records.iter().filter(|r| r.joinable).count();
    Ok(CompositionReport {
        rank,
        max_lhs_len,
        instances: instances.len(),
        total,
        joinable,
        records,
    })
}

/// The derived word identities re-verified by random instantiation. Names
/// describe what each identity does rather than where it sits in a proof.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LemmaId {
    /// `Λ_i W(2,i) = W^{(-1)} Λ_i`
    LambdaSlide,
    /// `Λ_i^{(-)} W(3,i) = W^{(-1)} Λ_i^{(-)}`
    LambdaMinusSlide,
    /// `a_i Λ_{i-1} Λ_i^{(-)} = Λ_{i-1} Λ_i`
    AbsorbTopMinus,
    /// `a_i Λ_{i-1} Λ_i = Λ_{i-1} Λ_i a_1`
    AbsorbTopFull,
    /// `a_i Λ_{i-1} Λ_i^{(--)} = Λ_{i-1}^{(-)} Λ_i`
    AbsorbTopMinusMinus,
    /// `a_i Λ_{i-1} V Λ_i = Λ_{i-1} Λ_i a_1 V'`
    AbsorbWithFiller,
    /// `a_i Λ_1 V_1 ... Λ_{i-1} V_{i-1} Λ_i = Δ_i a_1 V_1^{(i-1)} ... V_{i-1}'`
    LadderAbsorb,
    /// `a_i V Λ_1 V_1 ... Λ_{i-1} V_{i-1} Λ_i = Δ_i a_1 V^{Δ_i} V_1^{(i-1)} ... V_{i-1}'`
    LadderAbsorbPrefixed,
    /// `a_i V(1,i-2) Λ_{i-1} W(2,i-1) Λ_i^{(-)} = Λ_{i-1} Λ_i V^{(2)} W'`
    PartialLadderAbsorb,
    /// `W' Λ_2^{(-)} ... Λ_i^{(-)} = Λ_2^{(-)} ... Λ_i^{(-)} W^{Δ_i}`
    MinusChainExchange,
    /// `W^{Δ_{i-1}} Λ_i = Λ_i W^{Δ_i}` for `W = W(1,i-2)`
    FlipPromote,
    /// `a_n · a_{n-1} a_n · ... · a_1 ... a_n = Δ`
    AscendingTowerDelta,
}

impl LemmaId {
    pub const ALL: [LemmaId; 12] = [
        LemmaId::LambdaSlide,
        LemmaId::LambdaMinusSlide,
        LemmaId::AbsorbTopMinus,
        LemmaId::AbsorbTopFull,
        LemmaId::AbsorbTopMinusMinus,
        LemmaId::AbsorbWithFiller,
        LemmaId::LadderAbsorb,
        LemmaId::LadderAbsorbPrefixed,
        LemmaId::PartialLadderAbsorb,
        LemmaId::MinusChainExchange,
        LemmaId::FlipPromote,
        LemmaId::AscendingTowerDelta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::LambdaSlide => "lambda_slide",
            LemmaId::LambdaMinusSlide => "lambda_minus_slide",
            LemmaId::AbsorbTopMinus => "absorb_top_minus",
            LemmaId::AbsorbTopFull => "absorb_top_full",
            LemmaId::AbsorbTopMinusMinus => "absorb_top_minusminus",
            LemmaId::AbsorbWithFiller => "absorb_with_filler",
            LemmaId::LadderAbsorb => "ladder_absorb",
            LemmaId::LadderAbsorbPrefixed => "ladder_absorb_prefixed",
            LemmaId::PartialLadderAbsorb => "partial_ladder_absorb",
            LemmaId::MinusChainExchange => "minus_chain_exchange",
            LemmaId::FlipPromote => "flip_promote",
            LemmaId::AscendingTowerDelta => "ascending_tower_delta",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed identity instance, spelled out verbatim.
#[derive(Clone, Debug)]
pub struct LemmaCounterexample {
    pub lhs: Word,
    pub rhs: Word,
    pub lhs_nf: Word,
    pub rhs_nf: Word,
}

#[derive(Clone, Debug)]
pub struct LemmaEntry {
    pub lemma: LemmaId,
    pub trials: usize,
    pub counterexamples: Vec<LemmaCounterexample>,
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub rank: u16,
    pub requested_trials: usize,
    pub seed: u64,
    pub entries: Vec<LemmaEntry>,
}

impl LemmaReport {
    pub fn counterexample_count(&self) -> usize {
        self.entries.iter().map(|e| e.counterexamples.len()).sum()
    }
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "rank {}, {} trials per identity, seed {}:",
            self.rank, self.requested_trials, self.seed
        )?;
        for e in &self.entries {
            writeln!(
                f,
                "  {}: {} trials, {} counterexamples",
                e.lemma,
                e.trials,
                e.counterexamples.len()
            )?;
            for c in &e.counterexamples {
                writeln!(
                    f,
                    "    COUNTEREXAMPLE lhs = {} ; rhs = {} ; nf lhs = {} ; nf rhs = {}",
                    c.lhs, c.rhs, c.lhs_nf, c.rhs_nf
                )?;
            }
        }
        Ok(())
    }
}

const LEMMA_MAX_SUBWORD_LEN: usize = 5;

fn random_subword(rng: &mut ChaCha8Rng, lo: u16, hi: u16, rank: u16) -> Word {
    if lo > hi {
        return Word::empty(rank);
    }
    let len = rng.random_range(0..=LEMMA_MAX_SUBWORD_LEN);
    let letters = (0..len)
        .map(|_| Generator::artin(rng.random_range(lo..=hi)))
        .collect();
    Word::from_checked(rank, letters)
}

/// Builds one random (lhs, rhs) pair for the identity, or `None` when the
/// rank cannot host it (every identity except the tower needs `n >= 2`).
fn lemma_sides(
    lemma: LemmaId,
    rank: u16,
    rng: &mut ChaCha8Rng,
) -> Result<Option<(Word, Word)>, BraidError> {
    use LambdaVariant::{Full, Minus, MinusMinus};
    let n = rank;
    if lemma == LemmaId::AscendingTowerDelta {
        let lhs = crate::families::ascending_tower(n);
        let rhs = Word::new(n, vec![Generator::DELTA])?;
        return Ok(Some((lhs, rhs)));
    }
    if n < 2 {
        return Ok(None);
    }
    let i = rng.random_range(2..=n);
    let pair = match lemma {
        LemmaId::LambdaSlide => {
            let w = random_subword(rng, 2, i, n);
            let lhs = lambda_word(i, Full, n)?.concat(&w)?;
            let rhs = shift(&w, -1)?.concat(&lambda_word(i, Full, n)?)?;
            (lhs, rhs)
        }
        LemmaId::LambdaMinusSlide => {
            let w = random_subword(rng, 3, i, n);
            let lhs = lambda_word(i, Minus, n)?.concat(&w)?;
            let rhs = shift(&w, -1)?.concat(&lambda_word(i, Minus, n)?)?;
            (lhs, rhs)
        }
        LemmaId::AbsorbTopMinus => {
            let a_i = Word::from_artin_indices(n, &[i])?;
            let lhs = a_i
                .concat(&lambda_word(i - 1, Full, n)?)?
                .concat(&lambda_word(i, Minus, n)?)?;
            let rhs = lambda_word(i - 1, Full, n)?.concat(&lambda_word(i, Full, n)?)?;
            (lhs, rhs)
        }
        LemmaId::AbsorbTopFull => {
            let a_i = Word::from_artin_indices(n, &[i])?;
            let lhs = a_i
                .concat(&lambda_word(i - 1, Full, n)?)?
                .concat(&lambda_word(i, Full, n)?)?;
            let rhs = lambda_word(i - 1, Full, n)?
                .concat(&lambda_word(i, Full, n)?)?
                .concat(&Word::from_artin_indices(n, &[1])?)?;
            (lhs, rhs)
        }
        LemmaId::AbsorbTopMinusMinus => {
            let a_i = Word::from_artin_indices(n, &[i])?;
            let lhs = a_i
                .concat(&lambda_word(i - 1, Full, n)?)?
                .concat(&lambda_word(i, MinusMinus, n)?)?;
            let rhs = lambda_word(i - 1, Minus, n)?.concat(&lambda_word(i, Full, n)?)?;
            (lhs, rhs)
        }
        LemmaId::AbsorbWithFiller => {
            let v = random_subword(rng, 1, i - 1, n);
            let a_i = Word::from_artin_indices(n, &[i])?;
            let lhs = a_i
                .concat(&lambda_word(i - 1, Full, n)?)?
                .concat(&v)?
                .concat(&lambda_word(i, Full, n)?)?;
            let rhs = lambda_word(i - 1, Full, n)?
                .concat(&lambda_word(i, Full, n)?)?
                .concat(&Word::from_artin_indices(n, &[1])?)?
                .concat(&shift(&v, 1)?)?;
            (lhs, rhs)
        }
        LemmaId::LadderAbsorb | LemmaId::LadderAbsorbPrefixed => {
            let prefix = if lemma == LemmaId::LadderAbsorbPrefixed {
                random_subword(rng, 1, i - 1, n)
            } else {
                Word::empty(n)
            };
            let fillers: Vec<Word> = (1..i).map(|k| random_subword(rng, 1, k, n)).collect();
            let mut lhs = Word::from_artin_indices(n, &[i])?.concat(&prefix)?;
            for (idx, filler) in fillers.iter().enumerate() {
                lhs = lhs
                    .concat(&lambda_word(idx as u16 + 1, Full, n)?)?
                    .concat(filler)?;
            }
            lhs = lhs.concat(&lambda_word(i, Full, n)?)?;
            let mut rhs = delta_ladder(i, n)?
                .concat(&Word::from_artin_indices(n, &[1])?)?
                .concat(&flip(&prefix, i)?)?;
            for (idx, filler) in fillers.iter().enumerate() {
                let k = idx as u16 + 1;
                rhs = rhs.concat(&shift(filler, (i - k) as i32)?)?;
            }
            (lhs, rhs)
        }
        LemmaId::PartialLadderAbsorb => {
            let v = random_subword(rng, 1, i.saturating_sub(2), n);
            let w = random_subword(rng, 2, i - 1, n);
            let lhs = Word::from_artin_indices(n, &[i])?
                .concat(&v)?
                .concat(&lambda_word(i - 1, Full, n)?)?
                .concat(&w)?
                .concat(&lambda_word(i, Minus, n)?)?;
            let rhs = lambda_word(i - 1, Full, n)?
                .concat(&lambda_word(i, Full, n)?)?
                .concat(&shift(&v, 2)?)?
                .concat(&shift(&w, 1)?)?;
            (lhs, rhs)
        }
        LemmaId::MinusChainExchange => {
            let w = random_subword(rng, 1, i - 1, n);
            let mut chain = Word::empty(n);
            for k in 2..=i {
                chain = chain.concat(&lambda_word(k, Minus, n)?)?;
            }
            let lhs = shift(&w, 1)?.concat(&chain)?;
            let rhs = chain.concat(&flip(&w, i)?)?;
            (lhs, rhs)
        }
        LemmaId::FlipPromote => {
            let w = random_subword(rng, 1, i.saturating_sub(2), n);
            let lhs = flip(&w, i - 1)?.concat(&lambda_word(i, Full, n)?)?;
            let rhs = lambda_word(i, Full, n)?.concat(&flip(&w, i)?)?;
            (lhs, rhs)
        }
        LemmaId::AscendingTowerDelta => unreachable!("handled above"),
    };
    Ok(Some(pair))
}

/// Runs `trials` random instantiations of every identity and reports any
/// instance whose two sides get different normal forms.
pub fn lemma_suite(rank: u16, trials: usize, seed: u64) -> Result<LemmaReport, BraidError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::new();
    for lemma in LemmaId::ALL {
        let per_lemma = if lemma == LemmaId::AscendingTowerDelta {
            1
        } else {
            trials
        };
        let mut ran = 0;
        let mut counterexamples = Vec::new();
        for _ in 0..per_lemma {
            let Some((lhs, rhs)) = lemma_sides(lemma, rank, &mut rng)? else {
                break;
            };
            ran += 1;
            let lhs_nf = normalize_word(&lhs, Policy::Deterministic)?;
            let rhs_nf = normalize_word(&rhs, Policy::Deterministic)?;
            if lhs_nf != rhs_nf {
                counterexamples.push(LemmaCounterexample {
                    lhs,
                    rhs,
                    lhs_nf,
                    rhs_nf,
                });
            }
        }
        entries.push(LemmaEntry {
            lemma,
            trials: ran,
            counterexamples,
        });
    }
    Ok(LemmaReport {
        rank,
        requested_trials: trials,
        seed,
        entries,
    })
}
