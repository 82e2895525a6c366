//! The rewriting system on Artin-Garside words.
//!
//! Seven concrete rule schemas make up a Gröbner-Shirshov basis for the
//! braid group in these generators; every left-hand side is strictly above
//! its right-hand side in deg-lex, so rewriting terminates, and confluence
//! (checked exhaustively at desk scale by the [`crate::confluence`] module)
//! makes the resulting irreducible word unique.
//!
//! Schemas, writing `V` for a word over `a_1..a_{i-1}`, `W` for an empty
//! word or one over `a_j..a_i` starting with `a_i`, and `a_{i j}` for the
//! descending run `a_i ... a_j`:
//!
//! * `R1`:  `a_{i+1} a_i V W a_{i+1,j} -> a_i a_{i+1} a_i V a_{i,j} W'`
//! * `R2`:  `a_s a_k -> a_k a_s` for `s - k >= 2`
//! * `R3`:  `Λ_1 V_1 Λ_2 V_2 ... V_{n-1} Λ_n -> Δ V_1^{(n-1)} ... V_{n-1}'`
//! * `R4`:  `a_l Δ -> Δ a_{n-l+1}`
//! * `R4p`: `a_l Δ^{-1} -> Δ^{-1} a_{n-l+1}`
//! * `R5a`: `Δ Δ^{-1} -> ε`,  `R5b`: `Δ^{-1} Δ -> ε`

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BraidError;
use crate::families::{descending_run, lambda_word, shift, LambdaVariant};
use crate::word::{cmp_deglex_slices, Generator, Word};

/// Rewrite steps before the engine declares itself buggy. Termination is a
/// theorem, so the guard only exists to turn an engine defect into an error
/// instead of a hang.
pub const DEFAULT_STEP_GUARD: u64 = 10_000_000;

/// Identifier of one rule schema.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R4p,
    R5a,
    R5b,
}

impl RuleId {
    pub const ALL: [RuleId; 7] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R3,
        RuleId::R4,
        RuleId::R4p,
        RuleId::R5a,
        RuleId::R5b,
    ];

    /// Tie-break order inside one start position: cheap rules first.
    pub fn priority(self) -> u8 {
        match self {
            RuleId::R5a => 0,
            RuleId::R5b => 1,
            RuleId::R4 => 2,
            RuleId::R4p => 3,
            RuleId::R2 => 4,
            RuleId::R1 => 5,
            RuleId::R3 => 6,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RuleId::R1 => "R1",
            RuleId::R2 => "R2",
            RuleId::R3 => "R3",
            RuleId::R4 => "R4",
            RuleId::R4p => "R4p",
            RuleId::R5a => "R5a",
            RuleId::R5b => "R5b",
        };
        f.write_str(s)
    }
}

/// A fully parameterized rule instance. The variant selects the schema, the
/// payload pins its free parameters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RuleParams {
    R1 { i: u16, j: u16, v: Word, w: Word },
    R2 { s: u16, k: u16 },
    R3 { fillers: Vec<Word> },
    R4 { l: u16 },
    R4p { l: u16 },
    R5a,
    R5b,
}

impl RuleParams {
    pub fn rule(&self) -> RuleId {
        match self {
            RuleParams::R1 { .. } => RuleId::R1,
            RuleParams::R2 { .. } => RuleId::R2,
            RuleParams::R3 { .. } => RuleId::R3,
            RuleParams::R4 { .. } => RuleId::R4,
            RuleParams::R4p { .. } => RuleId::R4p,
            RuleParams::R5a => RuleId::R5a,
            RuleParams::R5b => RuleId::R5b,
        }
    }
}

impl fmt::Display for RuleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleParams::R1 { i, j, v, w } => write!(f, "R1(i={i}, j={j}, V=\"{v}\", W=\"{w}\")"),
            RuleParams::R2 { s, k } => write!(f, "R2(s={s}, k={k})"),
            RuleParams::R3 { fillers } => {
                write!(f, "R3(")?;
                for (idx, filler) in fillers.iter().enumerate() {
                    if idx > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "V{}=\"{}\"", idx + 1, filler)?;
                }
                write!(f, ")")
            }
            RuleParams::R4 { l } => write!(f, "R4(l={l})"),
            RuleParams::R4p { l } => write!(f, "R4p(l={l})"),
            RuleParams::R5a => write!(f, "R5a"),
            RuleParams::R5b => write!(f, "R5b"),
        }
    }
}

fn invalid(msg: impl Into<String>) -> BraidError {
    BraidError::InvalidRuleParams(msg.into())
}

fn validate(params: &RuleParams, rank: u16) -> Result<(), BraidError> {
    match params {
        RuleParams::R1 { i, j, v, w } => {
            if *i < 1 || *i + 1 > rank {
                return Err(invalid(format!("R1 needs 1 <= i <= n-1, got i={i}, n={rank}")));
            }
            if *j < 1 || *j > *i + 1 {
                return Err(invalid(format!("R1 needs 1 <= j <= i+1, got j={j}, i={i}")));
            }
            if v.rank() != rank || w.rank() != rank {
                return Err(invalid("R1 sub-word rank mismatch"));
            }
            for g in v.letters() {
                match g.artin_index() {
                    Some(x) if x < *i => {}
                    _ => return Err(invalid(format!("R1 V must be a word over a_1..a_{}", i - 1))),
                }
            }
            if w.is_empty() {
                return Ok(());
            }
            if *j == *i + 1 {
                return Err(invalid("R1 with j = i+1 forces W to be empty"));
            }
            if w.letters()[0] != Generator::artin(*i) {
                return Err(invalid("R1 W must begin with a_i when non-empty"));
            }
            for g in w.letters() {
                match g.artin_index() {
                    Some(x) if x >= *j && x <= *i => {}
                    _ => return Err(invalid(format!("R1 W must be a word over a_{j}..a_{i}"))),
                }
            }
            Ok(())
        }
        RuleParams::R2 { s, k } => {
            if *k < 1 || *s > rank || *s < *k + 2 {
                return Err(invalid(format!(
                    "R2 needs 1 <= k, k+2 <= s <= n, got s={s}, k={k}, n={rank}"
                )));
            }
            Ok(())
        }
        RuleParams::R3 { fillers } => {
            if fillers.len() != (rank - 1) as usize {
                return Err(invalid(format!(
                    "R3 needs exactly n-1 = {} filler words, got {}",
                    rank - 1,
                    fillers.len()
                )));
            }
            for (idx, filler) in fillers.iter().enumerate() {
                let k = idx as u16 + 1;
                if filler.rank() != rank {
                    return Err(invalid("R3 filler rank mismatch"));
                }
                for g in filler.letters() {
                    match g.artin_index() {
                        Some(x) if x <= k => {}
                        _ => {
                            return Err(invalid(format!("R3 V_{k} must be a word over a_1..a_{k}")))
                        }
                    }
                }
            }
            Ok(())
        }
        RuleParams::R4 { l } | RuleParams::R4p { l } => {
            if *l < 1 || *l > rank {
                return Err(invalid(format!("delta push needs 1 <= l <= n, got l={l}")));
            }
            Ok(())
        }
        RuleParams::R5a | RuleParams::R5b => Ok(()),
    }
}

/// The instantiated left-hand side of a rule.
pub fn instantiate_lhs(params: &RuleParams, rank: u16) -> Result<Word, BraidError> {
    validate(params, rank)?;
    let word = match params {
        RuleParams::R1 { i, j, v, w } => {
            let mut letters = vec![Generator::artin(i + 1), Generator::artin(*i)];
            letters.extend_from_slice(v.letters());
            letters.extend_from_slice(w.letters());
            letters.extend_from_slice(descending_run(i + 1, *j, rank)?.letters());
            Word::from_checked(rank, letters)
        }
        RuleParams::R2 { s, k } => {
            Word::from_checked(rank, vec![Generator::artin(*s), Generator::artin(*k)])
        }
        RuleParams::R3 { fillers } => {
            let mut letters = Vec::new();
            for k in 1..=rank {
                letters.extend_from_slice(lambda_word(k, LambdaVariant::Full, rank)?.letters());
                if k < rank {
                    letters.extend_from_slice(fillers[(k - 1) as usize].letters());
                }
            }
            Word::from_checked(rank, letters)
        }
        RuleParams::R4 { l } => Word::from_checked(rank, vec![Generator::artin(*l), Generator::DELTA]),
        RuleParams::R4p { l } => {
            Word::from_checked(rank, vec![Generator::artin(*l), Generator::DELTA_INV])
        }
        RuleParams::R5a => Word::from_checked(rank, vec![Generator::DELTA, Generator::DELTA_INV]),
        RuleParams::R5b => Word::from_checked(rank, vec![Generator::DELTA_INV, Generator::DELTA]),
    };
    Ok(word)
}

/// The instantiated right-hand side of a rule. For every valid
/// parameterization the result is strictly below the left-hand side in
/// deg-lex.
pub fn instantiate_rhs(params: &RuleParams, rank: u16) -> Result<Word, BraidError> {
    validate(params, rank)?;
    let word = match params {
        RuleParams::R1 { i, j, v, w } => {
            let mut letters = vec![
                Generator::artin(*i),
                Generator::artin(i + 1),
                Generator::artin(*i),
            ];
            letters.extend_from_slice(v.letters());
            letters.extend_from_slice(descending_run(*i, *j, rank)?.letters());
            letters.extend_from_slice(shift(w, 1)?.letters());
            Word::from_checked(rank, letters)
        }
        RuleParams::R2 { s, k } => {
            Word::from_checked(rank, vec![Generator::artin(*k), Generator::artin(*s)])
        }
        RuleParams::R3 { fillers } => {
            let mut letters = vec![Generator::DELTA];
            for (idx, filler) in fillers.iter().enumerate() {
                let k = idx as u16 + 1;
                letters.extend_from_slice(shift(filler, (rank - k) as i32)?.letters());
            }
            Word::from_checked(rank, letters)
        }
        RuleParams::R4 { l } => {
            Word::from_checked(rank, vec![Generator::DELTA, Generator::artin(rank - l + 1)])
        }
        RuleParams::R4p { l } => Word::from_checked(
            rank,
            vec![Generator::DELTA_INV, Generator::artin(rank - l + 1)],
        ),
        RuleParams::R5a | RuleParams::R5b => Word::empty(rank),
    };
    Ok(word)
}

/// A located rule instance inside a host word: the letters in
/// `[start, end)` are letter-by-letter the instantiated left-hand side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleMatch {
    pub start: usize,
    pub end: usize,
    pub params: RuleParams,
}

impl RuleMatch {
    pub fn rule(&self) -> RuleId {
        self.params.rule()
    }
}

impl fmt::Display for RuleMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@[{}, {})", self.params, self.start, self.end)
    }
}

fn artin_at(letters: &[Generator], p: usize) -> Option<u16> {
    letters.get(p).and_then(|g| g.artin_index())
}

/// R1 instances anchored at `p`: `w[p] = a_{i+1}`, `w[p+1] = a_i`, then a
/// segment of letters with index `<= i` up to the next `a_{i+1}`, split at
/// its first `a_i` into `V` and `W`, and finally the descending run that
/// selects `j`. All valid `j` are emitted, ascending.
fn r1_matches_at(word: &Word, p: usize, out: &mut Vec<RuleMatch>) {
    let letters = word.letters();
    let Some(hi) = artin_at(letters, p) else {
        return;
    };
    if hi < 2 || artin_at(letters, p + 1) != Some(hi - 1) {
        return;
    }
    let i = hi - 1;

    // Find the closing a_{i+1}; anything above a_i other than it, or a
    // delta letter, kills the match.
    let mut q = p + 2;
    loop {
        match letters.get(q) {
            None => return,
            Some(g) => match g.artin_index() {
                None => return,
                Some(x) if x == hi => break,
                Some(x) if x > i => return,
                Some(_) => q += 1,
            },
        }
    }

    let segment = &letters[p + 2..q];
    let first_ai = segment.iter().position(|g| g.artin_index() == Some(i));
    match first_ai {
        None => {
            // W empty: only j = i+1, whose tail is the single closing letter.
            let v = Word::from_checked(word.rank(), segment.to_vec());
            out.push(RuleMatch {
                start: p,
                end: q + 1,
                params: RuleParams::R1 {
                    i,
                    j: i + 1,
                    v,
                    w: Word::empty(word.rank()),
                },
            });
        }
        Some(off) => {
            let v = Word::from_checked(word.rank(), segment[..off].to_vec());
            let wseg = &segment[off..];
            let wmin = wseg
                .iter()
                .map(|g| g.artin_index().unwrap())
                .min()
                .unwrap();
            // Maximal descending run a_i, a_{i-1}, ... after the closer.
            let mut d: u16 = 0;
            while d < i && artin_at(letters, q + 1 + d as usize) == Some(i - d) {
                d += 1;
            }
            let j_lo = (i + 1).saturating_sub(d).max(1);
            let j_hi = wmin.min(i);
            for j in j_lo..=j_hi {
                out.push(RuleMatch {
                    start: p,
                    end: q + 1 + (i - j + 1) as usize,
                    params: RuleParams::R1 {
                        i,
                        j,
                        v: v.clone(),
                        w: Word::from_checked(word.rank(), wseg.to_vec()),
                    },
                });
            }
        }
    }
}

/// R3 instance anchored at `p`: `Λ_1 V_1 Λ_2 V_2 ... V_{n-1} Λ_n`. The parse
/// is deterministic because `a_{k+1}` cannot occur inside `V_k`.
fn r3_match_at(word: &Word, p: usize) -> Option<RuleMatch> {
    let letters = word.letters();
    let n = word.rank();
    if artin_at(letters, p) != Some(1) {
        return None;
    }
    let mut pos = p + 1;
    let mut fillers = Vec::with_capacity((n - 1) as usize);
    for k in 1..n {
        let start = pos;
        while artin_at(letters, pos).is_some_and(|x| x <= k) {
            pos += 1;
        }
        fillers.push(Word::from_checked(word.rank(), letters[start..pos].to_vec()));
        // The next letters must be exactly Λ_{k+1} = a_{k+1} a_k ... a_1.
        for (step, idx) in (1..=k + 1).rev().enumerate() {
            if artin_at(letters, pos + step) != Some(idx) {
                return None;
            }
        }
        pos += (k + 1) as usize;
    }
    Some(RuleMatch {
        start: p,
        end: pos,
        params: RuleParams::R3 { fillers },
    })
}

fn two_letter_match_at(word: &Word, p: usize) -> Option<RuleMatch> {
    let letters = word.letters();
    let a = *letters.get(p)?;
    let b = *letters.get(p + 1)?;
    let params = if a == Generator::DELTA && b == Generator::DELTA_INV {
        RuleParams::R5a
    } else if a == Generator::DELTA_INV && b == Generator::DELTA {
        RuleParams::R5b
    } else {
        let l = a.artin_index()?;
        if b == Generator::DELTA {
            RuleParams::R4 { l }
        } else if b == Generator::DELTA_INV {
            RuleParams::R4p { l }
        } else {
            let k = b.artin_index()?;
            if l >= k + 2 {
                RuleParams::R2 { s: l, k }
            } else {
                return None;
            }
        }
    };
    Some(RuleMatch {
        start: p,
        end: p + 2,
        params,
    })
}

/// All rule instances whose left-hand side occurs as a contiguous subword,
/// ordered by start position, then by rule priority, then (for R1) by
/// ascending `j`. The result is empty iff the word is irreducible.
pub fn find_matches(word: &Word) -> Vec<RuleMatch> {
    let mut out = Vec::new();
    for p in 0..word.len() {
        if let Some(m) = two_letter_match_at(word, p) {
            out.push(m);
        }
        r1_matches_at(word, p, &mut out);
        if let Some(m) = r3_match_at(word, p) {
            out.push(m);
        }
    }
    out
}

/// The first match in [`find_matches`] order, without materializing the
/// rest.
pub fn first_match(word: &Word) -> Option<RuleMatch> {
    let mut r1_buf = Vec::new();
    for p in 0..word.len() {
        if let Some(m) = two_letter_match_at(word, p) {
            return Some(m);
        }
        r1_buf.clear();
        r1_matches_at(word, p, &mut r1_buf);
        if let Some(m) = r1_buf.first() {
            return Some(m.clone());
        }
        if let Some(m) = r3_match_at(word, p) {
            return Some(m);
        }
    }
    None
}

/// True iff no rule left-hand side occurs in the word.
pub fn is_irreducible(word: &Word) -> bool {
    first_match(word).is_none()
}

/// Replaces the matched span by the rule's right-hand side. The result is
/// strictly below the input in deg-lex.
pub fn apply_match(word: &Word, m: &RuleMatch) -> Result<Word, BraidError> {
    let lhs = instantiate_lhs(&m.params, word.rank())?;
    if word.letters().get(m.start..m.end) != Some(lhs.letters()) {
        return Err(BraidError::StaleMatch {
            start: m.start,
            end: m.end,
        });
    }
    let rhs = instantiate_rhs(&m.params, word.rank())?;
    let mut letters = Vec::with_capacity(word.len() - lhs.len() + rhs.len());
    letters.extend_from_slice(&word.letters()[..m.start]);
    letters.extend_from_slice(rhs.letters());
    letters.extend_from_slice(&word.letters()[m.end..]);
    Ok(Word::from_checked(word.rank(), letters))
}

/// One recorded rewrite step.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub before: Word,
    pub applied: RuleMatch,
    pub after: Word,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.before, self.applied, self.after)
    }
}

/// The rewrite chain from an input word down to its normal form. Every step
/// strictly decreases deg-lex.
#[derive(Clone, Debug, Default)]
pub struct RewriteTrace {
    pub steps: Vec<TraceStep>,
}

/// Match-selection policy. The normal form does not depend on it; the
/// trace does.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Policy {
    /// Leftmost match, cheap rules first.
    Deterministic,
    /// Uniform over all matches, seeded.
    Random { seed: u64 },
}

fn run_normalize(
    word: &Word,
    policy: Policy,
    guard: u64,
    record: bool,
) -> Result<(Word, RewriteTrace), BraidError> {
    let mut rng = match policy {
        Policy::Deterministic => None,
        Policy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut current = word.clone();
    let mut trace = RewriteTrace::default();
    let mut steps: u64 = 0;
    loop {
        let chosen = match rng.as_mut() {
            None => first_match(&current),
            Some(rng) => {
                let matches = find_matches(&current);
                if matches.is_empty() {
                    None
                } else {
                    let idx = rng.random_range(0..matches.len());
                    Some(matches[idx].clone())
                }
            }
        };
        let Some(m) = chosen else {
            return Ok((current, trace));
        };
        steps += 1;
        if steps > guard {
            return Err(BraidError::StepGuardExceeded { guard });
        }
        let next = apply_match(&current, &m)?;
        debug_assert_eq!(
            cmp_deglex_slices(next.letters(), current.letters()),
            std::cmp::Ordering::Less,
            "rewrite step must decrease deg-lex"
        );
        if record {
            trace.steps.push(TraceStep {
                before: current.clone(),
                applied: m,
                after: next.clone(),
            });
        }
        current = next;
    }
}

/// Rewrites to the unique irreducible word, recording the full trace.
pub fn normalize(word: &Word, policy: Policy) -> Result<(Word, RewriteTrace), BraidError> {
    run_normalize(word, policy, DEFAULT_STEP_GUARD, true)
}

/// [`normalize`] with an explicit step guard.
pub fn normalize_with_guard(
    word: &Word,
    policy: Policy,
    guard: u64,
) -> Result<(Word, RewriteTrace), BraidError> {
    run_normalize(word, policy, guard, true)
}

/// Rewrites to the unique irreducible word without recording a trace.
pub fn normalize_word(word: &Word, policy: Policy) -> Result<Word, BraidError> {
    Ok(run_normalize(word, policy, DEFAULT_STEP_GUARD, false)?.0)
}

/// [`normalize_word`] with an explicit step guard.
pub fn normalize_word_with_guard(
    word: &Word,
    policy: Policy,
    guard: u64,
) -> Result<Word, BraidError> {
    Ok(run_normalize(word, policy, guard, false)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::cmp_deglex;
    use std::cmp::Ordering;

    fn pos(rank: u16, indices: &[u16]) -> Word {
        Word::from_artin_indices(rank, indices).unwrap()
    }

    fn dw(rank: u16, tokens: &str) -> Word {
        // Tiny test helper: tokens like "a1", "D", "D-" separated by spaces.
        let letters = tokens
            .split_whitespace()
            .map(|t| match t {
                "D" => Generator::DELTA,
                "D-" => Generator::DELTA_INV,
                t => Generator::artin(t.strip_prefix('a').unwrap().parse().unwrap()),
            })
            .collect();
        Word::new(rank, letters).unwrap()
    }

    #[test]
    fn instantiate_r1_minimal() {
        let params = RuleParams::R1 {
            i: 1,
            j: 2,
            v: Word::empty(2),
            w: Word::empty(2),
        };
        assert_eq!(instantiate_lhs(&params, 2).unwrap(), pos(2, &[2, 1, 2]));
        assert_eq!(instantiate_rhs(&params, 2).unwrap(), pos(2, &[1, 2, 1]));
    }

    #[test]
    fn instantiate_r4() {
        let params = RuleParams::R4 { l: 1 };
        assert_eq!(instantiate_lhs(&params, 2).unwrap(), dw(2, "a1 D"));
        assert_eq!(instantiate_rhs(&params, 2).unwrap(), dw(2, "D a2"));
    }

    #[test]
    fn instantiate_r3_trivial_fillers() {
        let params = RuleParams::R3 {
            fillers: vec![Word::empty(2)],
        };
        assert_eq!(instantiate_lhs(&params, 2).unwrap(), pos(2, &[1, 2, 1]));
        assert_eq!(instantiate_rhs(&params, 2).unwrap(), dw(2, "D"));
    }

    #[test]
    fn instantiate_r3_with_fillers() {
        let params = RuleParams::R3 {
            fillers: vec![pos(3, &[1]), pos(3, &[2, 1])],
        };
        // Λ1 V1 Λ2 V2 Λ3
        assert_eq!(
            instantiate_lhs(&params, 3).unwrap(),
            pos(3, &[1, 1, 2, 1, 2, 1, 3, 2, 1])
        );
        // Δ V1^{(2)} V2^{(1)}
        assert_eq!(instantiate_rhs(&params, 3).unwrap(), dw(3, "D a3 a3 a2"));
    }

    #[test]
    fn instantiate_rejects_bad_params() {
        assert!(instantiate_lhs(&RuleParams::R2 { s: 2, k: 1 }, 3).is_err());
        assert!(instantiate_lhs(&RuleParams::R4 { l: 3 }, 2).is_err());
        assert!(instantiate_lhs(
            &RuleParams::R1 {
                i: 1,
                j: 2,
                v: Word::empty(2),
                w: pos(2, &[1]),
            },
            2
        )
        .is_err());
        // W must start with a_i.
        assert!(instantiate_lhs(
            &RuleParams::R1 {
                i: 2,
                j: 1,
                v: Word::empty(3),
                w: pos(3, &[1, 2]),
            },
            3
        )
        .is_err());
    }

    #[test]
    fn lhs_dominates_rhs_small_exhaustive() {
        // Full exhaustive dominance lives in the acceptance suite; keep a
        // small smoke version here.
        for n in 2..=3u16 {
            for params in crate::confluence::enumerate_instances(n, 6).unwrap() {
                let lhs = instantiate_lhs(&params, n).unwrap();
                let rhs = instantiate_rhs(&params, n).unwrap();
                assert_eq!(
                    cmp_deglex(&lhs, &rhs).unwrap(),
                    Ordering::Greater,
                    "{params} violates deg-lex dominance"
                );
            }
        }
    }

    #[test]
    fn find_matches_delta_pair() {
        let w = dw(2, "D D-");
        let ms = find_matches(&w);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].rule(), RuleId::R5a);
        assert_eq!((ms[0].start, ms[0].end), (0, 2));
    }

    #[test]
    fn find_matches_ladder() {
        let w = pos(2, &[1, 2, 1]);
        let ms = find_matches(&w);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].rule(), RuleId::R3);
        assert_eq!((ms[0].start, ms[0].end), (0, 3));
    }

    #[test]
    fn find_matches_empty_on_irreducible() {
        assert!(find_matches(&pos(2, &[2, 1])).is_empty());
        assert!(find_matches(&dw(2, "D a2")).is_empty());
        assert!(find_matches(&Word::empty(2)).is_empty());
    }

    #[test]
    fn find_matches_r1_multiple_j() {
        // a3 a2 W=a2 a3 a2: closing a3 then run a2 -> j=2 valid; run stops
        // there so j=1 needs a1 after, absent.
        let w = pos(3, &[3, 2, 2, 3, 2]);
        let ms = find_matches(&w);
        let r1: Vec<_> = ms.iter().filter(|m| m.rule() == RuleId::R1).collect();
        assert_eq!(r1.len(), 1);
        match &r1[0].params {
            RuleParams::R1 { i, j, v, w } => {
                assert_eq!((*i, *j), (2, 2));
                assert!(v.is_empty());
                assert_eq!(w, &pos(3, &[2]));
            }
            other => panic!("unexpected params {other}"),
        }
        assert_eq!((r1[0].start, r1[0].end), (0, 5));

        // With a full descending run after the closer both j=2 and j=1 fire.
        let w = pos(3, &[3, 2, 2, 3, 2, 1]);
        let js: Vec<u16> = find_matches(&w)
            .into_iter()
            .filter_map(|m| match m.params {
                RuleParams::R1 { j, .. } if m.start == 0 => Some(j),
                _ => None,
            })
            .collect();
        assert_eq!(js, vec![1, 2]);
    }

    #[test]
    fn r1_match_killed_by_high_letter_or_delta() {
        // a3 between anchor and closer kills the i=1 anchor at position 1.
        let w = pos(3, &[3, 2, 1, 3]);
        // the word still has the i=2 anchor at 0 with V="a1", j=3
        let ms = find_matches(&w);
        assert_eq!(ms.len(), 1);
        match &ms[0].params {
            RuleParams::R1 { i, j, v, .. } => {
                assert_eq!((*i, *j), (2, 3));
                assert_eq!(v, &pos(3, &[1]));
            }
            other => panic!("unexpected params {other}"),
        }
        let w = dw(3, "a2 a1 D a2");
        assert!(find_matches(&w).iter().all(|m| m.rule() != RuleId::R1));
    }

    #[test]
    fn apply_match_examples() {
        let w = dw(2, "a1 D a1");
        let ms = find_matches(&w);
        assert_eq!(ms[0].rule(), RuleId::R4);
        assert_eq!(apply_match(&w, &ms[0]).unwrap(), dw(2, "D a2 a1"));

        let w = pos(3, &[3, 1]);
        let ms = find_matches(&w);
        assert_eq!(ms[0].rule(), RuleId::R2);
        assert_eq!(apply_match(&w, &ms[0]).unwrap(), pos(3, &[1, 3]));

        let w = pos(2, &[2, 1, 2]);
        let ms = find_matches(&w);
        assert_eq!(ms[0].rule(), RuleId::R1);
        assert_eq!(apply_match(&w, &ms[0]).unwrap(), pos(2, &[1, 2, 1]));
    }

    #[test]
    fn apply_match_detects_stale() {
        let w = pos(2, &[2, 1, 2]);
        let m = find_matches(&w).remove(0);
        let other = pos(2, &[1, 1, 1]);
        assert_eq!(
            apply_match(&other, &m),
            Err(BraidError::StaleMatch { start: 0, end: 3 })
        );
    }

    #[test]
    fn normalize_examples() {
        let (nf, trace) = normalize(&pos(2, &[2, 1, 2]), Policy::Deterministic).unwrap();
        assert_eq!(nf, dw(2, "D"));
        assert_eq!(trace.steps.len(), 2, "R1 then R3");

        let (nf, _) = normalize(&pos(2, &[1, 2, 1]), Policy::Deterministic).unwrap();
        assert_eq!(nf, dw(2, "D"));

        let (nf, trace) = normalize(&Word::empty(2), Policy::Deterministic).unwrap();
        assert!(nf.is_empty());
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn normalize_trace_strictly_decreases() {
        let w = dw(3, "a3 a2 a3 a1 a2 a3 D- a1");
        let (_, trace) = normalize(&w, Policy::Deterministic).unwrap();
        for step in &trace.steps {
            assert_eq!(
                cmp_deglex(&step.after, &step.before).unwrap(),
                Ordering::Less
            );
        }
    }

    #[test]
    fn normalize_policies_agree_on_sample() {
        let words = [
            dw(3, "a3 a2 a1 a3 a2 a3 D-"),
            dw(2, "a2 a2 a1 a2 a1 D a1"),
            dw(3, "D- D a1 a2 a3 a2 a1 a2"),
        ];
        for w in &words {
            let det = normalize_word(w, Policy::Deterministic).unwrap();
            for seed in 0..5 {
                let rnd = normalize_word(w, Policy::Random { seed }).unwrap();
                assert_eq!(det, rnd, "policy disagreement on {w}");
            }
        }
    }

    #[test]
    fn first_match_agrees_with_find_matches() {
        let words = [
            dw(2, "a1 a2 a1"),
            dw(2, "a2 a1 a2 a1 a2"),
            dw(3, "a1 D D- a3 a1"),
            dw(3, "a3 a2 a2 a3 a2 a1"),
            Word::empty(2),
        ];
        for w in &words {
            assert_eq!(first_match(w), find_matches(w).first().cloned());
        }
    }

    #[test]
    fn step_guard_fires_as_configured() {
        let w = pos(2, &[2, 1, 2]);
        assert_eq!(
            normalize_word_with_guard(&w, Policy::Deterministic, 1),
            Err(BraidError::StepGuardExceeded { guard: 1 })
        );
    }

    #[test]
    fn is_irreducible_examples() {
        assert!(is_irreducible(&pos(2, &[2, 1])));
        assert!(!is_irreducible(&dw(2, "a1 D")));
        assert!(is_irreducible(&dw(2, "D a2")));
    }

    #[test]
    fn rank_one_words_collapse_to_delta_powers() {
        let w = pos(1, &[1, 1, 1]);
        let nf = normalize_word(&w, Policy::Deterministic).unwrap();
        assert_eq!(nf, dw(1, "D D D"));
    }
}
