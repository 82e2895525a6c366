//! Alphabet and word types for the braid group `B_{n+1}` in the
//! Artin-Garside generators `a_1, ..., a_n, Δ, Δ^{-1}`.
//!
//! Generators are stored as small integer codes so that the generator order
//! `Δ^{-1} < Δ < a_1 < ... < a_n` is the natural integer order and the
//! deg-lex comparison of words is a plain length-then-sequence comparison.

use std::cmp::Ordering;
use std::fmt;

use crate::error::BraidError;

/// Largest supported rank (number of Artin generators). `B_{n+1}` for
/// `n = 64` is far beyond anything the desk-scale tooling here is meant for.
pub const MAX_RANK: u16 = 64;

/// One letter of the Artin-Garside alphabet.
///
/// Encoding: `0 = Δ^{-1}`, `1 = Δ`, `k + 1 = a_k`. The derived `Ord` is
/// therefore exactly the generator order `Δ^{-1} < Δ < a_1 < ... < a_n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(u16);

impl Generator {
    pub const DELTA_INV: Generator = Generator(0);
    pub const DELTA: Generator = Generator(1);

    /// The Artin generator `a_i`. Panics if `i == 0`; validation against a
    /// rank happens when the letter enters a [`Word`].
    pub fn artin(i: u16) -> Generator {
        assert!(i >= 1, "Artin indices start at 1");
        Generator(i + 1)
    }

    /// Index `i` if this is `a_i`, `None` for the delta letters.
    pub fn artin_index(self) -> Option<u16> {
        (self.0 >= 2).then(|| self.0 - 1)
    }

    pub fn is_artin(self) -> bool {
        self.0 >= 2
    }

    pub fn is_delta(self) -> bool {
        self.0 == 1
    }

    pub fn is_delta_inv(self) -> bool {
        self.0 == 0
    }

    /// The raw order code.
    pub fn code(self) -> u16 {
        self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.artin_index() {
            Some(i) => write!(f, "a{i}"),
            None if self.is_delta() => write!(f, "D"),
            None => write!(f, "D^-1"),
        }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite word over the Artin-Garside alphabet, tagged with the rank `n`
/// of its ambient group `B_{n+1}`.
///
/// The rank is part of the value: the rewriting rules for the delta letters
/// change with `n`, so a word without its rank is meaningless. The empty
/// word is the identity; there is no separate identity sentinel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: u16,
    letters: Vec<Generator>,
}

fn check_rank(rank: u16) -> Result<(), BraidError> {
    if rank == 0 || rank > MAX_RANK {
        return Err(BraidError::RankOutOfRange(rank));
    }
    Ok(())
}

impl Word {
    /// Builds a word, validating every Artin index against `rank`.
    pub fn new(rank: u16, letters: Vec<Generator>) -> Result<Word, BraidError> {
        check_rank(rank)?;
        for g in &letters {
            if let Some(i) = g.artin_index() {
                if i > rank {
                    return Err(BraidError::IndexOutOfRange {
                        index: i as i64,
                        rank,
                    });
                }
            }
        }
        Ok(Word { rank, letters })
    }

    pub fn empty(rank: u16) -> Word {
        check_rank(rank).expect("rank out of range");
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// Convenience constructor from Artin indices only.
    pub fn from_artin_indices(rank: u16, indices: &[u16]) -> Result<Word, BraidError> {
        let letters = indices.iter().map(|&i| Generator::artin(i)).collect();
        Word::new(rank, letters)
    }

    /// Internal constructor for letters already known to fit the rank.
    pub(crate) fn from_checked(rank: u16, letters: Vec<Generator>) -> Word {
        debug_assert!(letters
            .iter()
            .all(|g| g.artin_index().is_none_or(|i| i >= 1 && i <= rank)));
        Word { rank, letters }
    }

    pub fn rank(&self) -> u16 {
        self.rank
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when the word uses Artin letters only.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|g| g.is_artin())
    }

    pub fn concat(&self, other: &Word) -> Result<Word, BraidError> {
        if self.rank != other.rank {
            return Err(BraidError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// The same word with every letter taken positively.
    pub fn to_signed(&self) -> SignedWord {
        SignedWord {
            rank: self.rank,
            letters: self
                .letters
                .iter()
                .map(|&g| SignedLetter {
                    generator: g,
                    sign: Sign::Pos,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for g in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\" (n={})", self.rank)
    }
}

/// Deg-lex comparison: first by length, then left-to-right by the generator
/// order. Total on words of a fixed rank and compatible with concatenation:
/// `u > v` implies `aub > avb`.
pub fn cmp_deglex(u: &Word, v: &Word) -> Result<Ordering, BraidError> {
    if u.rank != v.rank {
        return Err(BraidError::RankMismatch {
            left: u.rank,
            right: v.rank,
        });
    }
    Ok(cmp_deglex_slices(&u.letters, &v.letters))
}

/// Slice-level deg-lex, for callers that have already checked ranks.
pub(crate) fn cmp_deglex_slices(a: &[Generator], b: &[Generator]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Sign of a letter in user input.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator together with its sign.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedLetter {
    pub generator: Generator,
    pub sign: Sign,
}

/// A word allowing inverse letters, the shape user input arrives in.
///
/// Signed delta letters are normalized at construction: `(Δ, -1)` becomes
/// `Δ^{-1}` and `(Δ^{-1}, -1)` becomes `Δ`, so signs survive only on Artin
/// letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedWord {
    rank: u16,
    letters: Vec<SignedLetter>,
}

impl SignedWord {
    pub fn new(rank: u16, letters: Vec<SignedLetter>) -> Result<SignedWord, BraidError> {
        check_rank(rank)?;
        let mut normalized = Vec::with_capacity(letters.len());
        for l in letters {
            if let Some(i) = l.generator.artin_index() {
                if i > rank {
                    return Err(BraidError::IndexOutOfRange {
                        index: i as i64,
                        rank,
                    });
                }
                normalized.push(l);
            } else {
                let gen = match (l.generator.is_delta(), l.sign) {
                    (true, Sign::Pos) | (false, Sign::Neg) => Generator::DELTA,
                    (true, Sign::Neg) | (false, Sign::Pos) => Generator::DELTA_INV,
                };
                normalized.push(SignedLetter {
                    generator: gen,
                    sign: Sign::Pos,
                });
            }
        }
        Ok(SignedWord {
            rank,
            letters: normalized,
        })
    }

    pub fn empty(rank: u16) -> SignedWord {
        check_rank(rank).expect("rank out of range");
        SignedWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn rank(&self) -> u16 {
        self.rank
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group inverse as a word: reversed, with every sign flipped.
    pub fn inverse(&self) -> SignedWord {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| {
                if l.generator.is_artin() {
                    SignedLetter {
                        generator: l.generator,
                        sign: l.sign.flip(),
                    }
                } else {
                    // Delta letters carry their sign in the generator itself.
                    SignedLetter {
                        generator: if l.generator.is_delta() {
                            Generator::DELTA_INV
                        } else {
                            Generator::DELTA
                        },
                        sign: Sign::Pos,
                    }
                }
            })
            .collect();
        SignedWord {
            rank: self.rank,
            letters,
        }
    }

    pub fn concat(&self, other: &SignedWord) -> Result<SignedWord, BraidError> {
        if self.rank != other.rank {
            return Err(BraidError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SignedWord {
            rank: self.rank,
            letters,
        })
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}", l.generator)?;
            if l.sign == Sign::Neg {
                write!(f, "^-1")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\" (n={})", self.rank)
    }
}
