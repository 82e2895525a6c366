//! The full braid-group interface: signed words in, `Δ^k · A` normal forms
//! out.
//!
//! Inverse Artin letters are eliminated through `a_i^{-1} = Δ^{-1} E_i`, so
//! the rewriting engine only ever sees the plain Artin-Garside alphabet.
//! An irreducible word necessarily consists of a uniformly signed run of
//! delta letters followed by a positive tail: `a_l Δ^{±1}` and the two
//! delta cancellations are rule left-hand sides, so nothing else survives.

use std::fmt;

use crate::error::BraidError;
use crate::families::{delta_ladder, e_word};
use crate::rules::{self, Policy};
use crate::word::{Generator, Sign, SignedLetter, SignedWord, Word};

/// The canonical `Δ^k · A` form: a delta exponent of either sign and a
/// positive irreducible tail that is not left-divisible by `Δ`.
///
/// The exponent is an `i64`: its magnitude is bounded by the letter count
/// of the materialized input word, which cannot reach `2^63`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    delta_exp: i64,
    tail: Word,
}

impl NormalForm {
    /// Builds a normal form from parts, checking only that the tail is a
    /// positive word. Irreducibility of the tail is the producer's
    /// responsibility; [`NormalForm::from_text`] checks it for parsed input.
    pub fn new(delta_exp: i64, tail: Word) -> Result<NormalForm, BraidError> {
        if !tail.is_positive() {
            return Err(BraidError::NotPositive);
        }
        Ok(NormalForm { delta_exp, tail })
    }

    pub fn delta_exp(&self) -> i64 {
        self.delta_exp
    }

    pub fn tail(&self) -> &Word {
        &self.tail
    }

    pub fn rank(&self) -> u16 {
        self.tail.rank()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_exp == 0 && self.tail.is_empty()
    }

    /// The normal form spelled out as a signed word again.
    pub fn to_signed_word(&self) -> SignedWord {
        let delta = if self.delta_exp >= 0 {
            Generator::DELTA
        } else {
            Generator::DELTA_INV
        };
        let mut letters = vec![
            SignedLetter {
                generator: delta,
                sign: Sign::Pos,
            };
            self.delta_exp.unsigned_abs() as usize
        ];
        letters.extend(self.tail.letters().iter().map(|&g| SignedLetter {
            generator: g,
            sign: Sign::Pos,
        }));
        SignedWord::new(self.tail.rank(), letters).expect("parts already validated")
    }

    /// Parses the `D^<k> | <letters>` text form, validating that the tail
    /// is a positive irreducible word without a ladder prefix, i.e. really
    /// a canonical form.
    pub fn from_text(text: &str, rank: u16) -> Result<NormalForm, BraidError> {
        let malformed = |msg: &str| BraidError::MalformedNormalForm(msg.to_string());
        let (head, tail_text) = text
            .split_once('|')
            .ok_or_else(|| malformed("missing '|' separator"))?;
        let head = head.trim();
        let exp: i64 = head
            .strip_prefix("D^")
            .and_then(|e| e.parse().ok())
            .ok_or_else(|| malformed("head must be D^<integer>"))?;
        let mut letters = Vec::new();
        for token in tail_text.split_whitespace() {
            let index: u16 = token
                .strip_prefix('a')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| malformed("tail tokens must be a<digits>"))?;
            if index < 1 || index > rank {
                return Err(BraidError::IndexOutOfRange {
                    index: index as i64,
                    rank,
                });
            }
            letters.push(Generator::artin(index));
        }
        let tail = Word::new(rank, letters)?;
        if !rules::is_irreducible(&tail) {
            return Err(malformed("tail is not irreducible"));
        }
        let nf = NormalForm::new(exp, tail)?;
        debug_assert!(!nf.tail_has_ladder_prefix());
        Ok(nf)
    }

    fn tail_has_ladder_prefix(&self) -> bool {
        let ladder = delta_ladder(self.rank(), self.rank()).expect("valid rank");
        self.tail.letters().starts_with(ladder.letters())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} | {}", self.delta_exp, self.tail)
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm({self})")
    }
}

/// Eliminates inverse letters: `a_i^{-1}` becomes `Δ^{-1} E_i`, positive
/// letters and delta letters pass through.
pub fn desugar_inverses(u: &SignedWord) -> Word {
    let rank = u.rank();
    let mut letters = Vec::with_capacity(u.len());
    for l in u.letters() {
        match (l.generator.artin_index(), l.sign) {
            (Some(_), Sign::Pos) | (None, _) => letters.push(l.generator),
            (Some(i), Sign::Neg) => {
                letters.push(Generator::DELTA_INV);
                letters.extend_from_slice(e_word(i, rank).expect("index validated").letters());
            }
        }
    }
    Word::from_checked(rank, letters)
}

fn split_irreducible(word: Word) -> NormalForm {
    let letters = word.letters();
    let mut deltas = 0usize;
    let mut sign: i64 = 0;
    for g in letters {
        if g.is_delta() {
            assert!(sign >= 0, "irreducible word with mixed delta signs");
            sign = 1;
            deltas += 1;
        } else if g.is_delta_inv() {
            assert!(sign <= 0, "irreducible word with mixed delta signs");
            sign = -1;
            deltas += 1;
        } else {
            break;
        }
    }
    let tail = Word::from_checked(word.rank(), letters[deltas..].to_vec());
    assert!(
        tail.is_positive(),
        "irreducible word with delta letters after an Artin letter"
    );
    let nf = NormalForm {
        delta_exp: sign * deltas as i64,
        tail,
    };
    debug_assert!(!nf.tail_has_ladder_prefix(), "tail divisible by the ladder");
    nf
}

/// The unique `Δ^k · A` normal form of a signed word.
pub fn normal_form(u: &SignedWord) -> Result<NormalForm, BraidError> {
    let word = desugar_inverses(u);
    let irreducible = rules::normalize_word(&word, Policy::Deterministic)?;
    Ok(split_irreducible(irreducible))
}

/// [`normal_form`] with an explicit step guard.
pub fn normal_form_with_guard(u: &SignedWord, guard: u64) -> Result<NormalForm, BraidError> {
    let word = desugar_inverses(u);
    let irreducible = rules::normalize_word_with_guard(&word, Policy::Deterministic, guard)?;
    Ok(split_irreducible(irreducible))
}

/// Group equality, decided by comparing normal forms componentwise.
pub fn equal(u: &SignedWord, v: &SignedWord) -> Result<bool, BraidError> {
    if u.rank() != v.rank() {
        return Err(BraidError::RankMismatch {
            left: u.rank(),
            right: v.rank(),
        });
    }
    Ok(normal_form(u)? == normal_form(v)?)
}

/// Normal form of the group inverse.
pub fn invert(u: &SignedWord) -> Result<NormalForm, BraidError> {
    normal_form(&u.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sw(rank: u16, tokens: &[(i32, i32)]) -> SignedWord {
        let letters = tokens
            .iter()
            .map(|&(i, s)| SignedLetter {
                generator: if i == 0 {
                    if s >= 0 {
                        Generator::DELTA
                    } else {
                        Generator::DELTA_INV
                    }
                } else {
                    Generator::artin(i as u16)
                },
                sign: if i != 0 && s < 0 { Sign::Neg } else { Sign::Pos },
            })
            .collect();
        SignedWord::new(rank, letters).unwrap()
    }

    #[test]
    fn desugar_examples() {
        assert_eq!(desugar_inverses(&sw(2, &[(1, -1)])).to_string(), "D^-1 a1 a2");
        assert_eq!(desugar_inverses(&sw(2, &[(2, 1)])).to_string(), "a2");
        assert_eq!(desugar_inverses(&sw(2, &[(0, -1)])).to_string(), "D^-1");
    }

    #[test]
    fn desugar_length() {
        // One letter per positive token, n(n+1)/2 letters per inverse token.
        for n in 2..=5u16 {
            let u = sw(n, &[(1, -1), (2, 1), (n as i32, -1)]);
            let expected = 2 * (n as usize * (n as usize + 1) / 2) + 1;
            assert_eq!(desugar_inverses(&u).len(), expected);
        }
    }

    #[test]
    fn normal_form_examples() {
        let nf = normal_form(&sw(2, &[(1, -1)])).unwrap();
        assert_eq!(nf.delta_exp(), -1);
        assert_eq!(nf.tail().to_string(), "a1 a2");

        let nf = normal_form(&SignedWord::empty(2)).unwrap();
        assert!(nf.is_identity());

        // Two ladders make Δ^2.
        let nf = normal_form(&sw(2, &[(1, 1), (2, 1), (1, 1), (1, 1), (2, 1), (1, 1)])).unwrap();
        assert_eq!(nf.delta_exp(), 2);
        assert!(nf.tail().is_empty());
    }

    #[test]
    fn normal_form_is_a_fixed_point() {
        let words = [
            sw(2, &[(1, -1), (2, 1), (1, 1)]),
            sw(3, &[(3, 1), (1, -1), (0, -1), (2, 1)]),
            sw(2, &[(0, 1), (0, 1), (1, -1)]),
        ];
        for u in &words {
            let nf = normal_form(u).unwrap();
            let again = normal_form(&nf.to_signed_word()).unwrap();
            assert_eq!(nf, again, "re-normalizing {u} moved");
        }
    }

    #[test]
    fn equal_examples() {
        assert!(equal(&sw(2, &[(1, 1), (2, 1), (1, 1)]), &sw(2, &[(2, 1), (1, 1), (2, 1)])).unwrap());
        assert!(!equal(&sw(2, &[(1, 1)]), &sw(2, &[(2, 1)])).unwrap());
        assert!(equal(&sw(2, &[(1, 1), (1, -1)]), &SignedWord::empty(2)).unwrap());
        assert!(equal(&sw(2, &[(1, 1)]), &sw(3, &[(1, 1)])).is_err());
    }

    #[test]
    fn invert_examples() {
        let nf = invert(&sw(2, &[(1, 1)])).unwrap();
        assert_eq!(nf.delta_exp(), -1);
        assert_eq!(nf.tail().to_string(), "a1 a2");

        assert!(invert(&SignedWord::empty(2)).unwrap().is_identity());

        let nf = invert(&sw(2, &[(0, 1)])).unwrap();
        assert_eq!(nf.delta_exp(), -1);
        assert!(nf.tail().is_empty());
    }

    #[test]
    fn invert_gives_group_inverses() {
        let words = [
            sw(2, &[(1, 1), (2, -1), (1, 1)]),
            sw(3, &[(0, 1), (3, -1), (2, 1)]),
        ];
        for u in &words {
            let inv = invert(u).unwrap().to_signed_word();
            let product = u.concat(&inv).unwrap();
            assert!(normal_form(&product).unwrap().is_identity());
        }
    }

    #[test]
    fn text_round_trip() {
        for u in [
            sw(2, &[(1, -1)]),
            sw(2, &[(0, 1), (0, 1)]),
            SignedWord::empty(2),
            sw(2, &[(2, 1), (1, 1), (2, 1), (2, 1)]),
        ] {
            let nf = normal_form(&u).unwrap();
            let text = nf.to_string();
            let parsed = NormalForm::from_text(&text, 2).unwrap();
            assert_eq!(parsed, nf, "round trip through {text:?}");
        }
    }

    #[test]
    fn text_form_pins_exact_format() {
        let nf = normal_form(&sw(2, &[(2, 1), (1, 1), (2, 1)])).unwrap();
        assert_eq!(nf.to_string(), "D^1 | ");
        let nf = normal_form(&sw(2, &[(1, -1)])).unwrap();
        assert_eq!(nf.to_string(), "D^-1 | a1 a2");
        let nf = normal_form(&sw(2, &[(2, 1)])).unwrap();
        assert_eq!(nf.to_string(), "D^0 | a2");
    }

    #[test]
    fn from_text_rejects_garbage() {
        assert!(NormalForm::from_text("D^1", 2).is_err());
        assert!(NormalForm::from_text("D^x | a1", 2).is_err());
        assert!(NormalForm::from_text("D^0 | b1", 2).is_err());
        assert!(NormalForm::from_text("D^0 | a9", 2).is_err());
        // a1 a2 a1 is the ladder, reducible, hence not a valid tail.
        assert!(NormalForm::from_text("D^0 | a1 a2 a1", 2).is_err());
    }

    #[test]
    fn delta_prefix_is_uniformly_signed_and_tail_ladder_free() {
        let samples = [
            sw(3, &[(1, -1), (2, -1), (3, 1), (0, 1)]),
            sw(3, &[(0, -1), (0, -1), (1, 1), (2, 1), (3, 1)]),
            sw(2, &[(1, 1), (2, 1), (1, 1), (1, -1)]),
        ];
        for u in &samples {
            // split_irreducible asserts both properties internally.
            let nf = normal_form(u).unwrap();
            let ladder = delta_ladder(u.rank(), u.rank()).unwrap();
            assert!(!nf.tail().letters().starts_with(ladder.letters()));
        }
    }
}
