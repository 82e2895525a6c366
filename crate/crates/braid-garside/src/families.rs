//! Constructors and transformers for the named positive-word families:
//! the descending runs `Λ_i = a_i ... a_1` and their truncations, the
//! fundamental ladder `Δ_i = Λ_1 ... Λ_i`, the complements `E_i` with
//! `E_i a_i = Δ`, index shifts and the index flip induced by conjugation
//! with `Δ_i`.

use crate::error::BraidError;
use crate::word::{Generator, Word};

/// Which truncation of `Λ_i` to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambdaVariant {
    /// `Λ_i = a_i a_{i-1} ... a_1`
    Full,
    /// `Λ_i^{(-)} = a_i ... a_2`, empty for `i = 1`
    Minus,
    /// `Λ_i^{(--)} = a_i ... a_3`, empty for `i = 2`
    MinusMinus,
}

fn check_index(i: u16, rank: u16) -> Result<(), BraidError> {
    if i < 1 || i > rank {
        return Err(BraidError::IndexOutOfRange {
            index: i as i64,
            rank,
        });
    }
    Ok(())
}

/// `Λ_i` or one of its truncations, descending runs ending at `a_1`, `a_2`
/// or `a_3` respectively.
pub fn lambda_word(i: u16, variant: LambdaVariant, rank: u16) -> Result<Word, BraidError> {
    check_index(i, rank)?;
    let stop = match variant {
        LambdaVariant::Full => 1,
        LambdaVariant::Minus => 2,
        LambdaVariant::MinusMinus => {
            if i < 2 {
                return Err(BraidError::IndexOutOfRange {
                    index: i as i64,
                    rank,
                });
            }
            3
        }
    };
    let letters = (stop..=i).rev().map(Generator::artin).collect();
    Ok(Word::from_checked(rank, letters))
}

/// The ladder `Δ_i = Λ_1 Λ_2 ... Λ_i`, a positive word of length
/// `i(i+1)/2`. For `i = n` this is the positive word representing `Δ`.
pub fn delta_ladder(i: u16, rank: u16) -> Result<Word, BraidError> {
    check_index(i, rank)?;
    let mut letters = Vec::with_capacity(i as usize * (i as usize + 1) / 2);
    for k in 1..=i {
        letters.extend((1..=k).rev().map(Generator::artin));
    }
    Ok(Word::from_checked(rank, letters))
}

/// The complement `E_i = Λ_1 ... Λ_{n-i} Λ_{n-i+1}^{(-)} Λ_{n-i+2} ... Λ_n`,
/// the positive word with `E_i a_i = Δ` in the group. Its length is always
/// `n(n+1)/2 - 1`.
pub fn e_word(i: u16, rank: u16) -> Result<Word, BraidError> {
    check_index(i, rank)?;
    let n = rank;
    let mut letters = Vec::with_capacity(n as usize * (n as usize + 1) / 2 - 1);
    for k in 1..=n {
        let stop = if k == n - i + 1 { 2 } else { 1 };
        letters.extend((stop..=k).rev().map(Generator::artin));
    }
    Ok(Word::from_checked(rank, letters))
}

/// Shifts every Artin index by `k` (negative `k` shifts down). Fails if the
/// word has delta letters or any shifted index leaves `1..=rank`.
pub fn shift(word: &Word, k: i32) -> Result<Word, BraidError> {
    let rank = word.rank();
    let mut letters = Vec::with_capacity(word.len());
    for g in word.letters() {
        let i = g.artin_index().ok_or(BraidError::NotPositive)?;
        let shifted = i as i64 + k as i64;
        if shifted < 1 || shifted > rank as i64 {
            return Err(BraidError::IndexOutOfRange {
                index: shifted,
                rank,
            });
        }
        letters.push(Generator::artin(shifted as u16));
    }
    Ok(Word::from_checked(rank, letters))
}

/// The index flip `a_j -> a_{i-j+1}` on a positive word over `a_1..a_i`.
/// In the group this word equals `Δ_i^{∓1} V Δ_i^{±1}`; as a substitution
/// it is an involution.
pub fn flip(word: &Word, i: u16) -> Result<Word, BraidError> {
    check_index(i, word.rank())?;
    let mut letters = Vec::with_capacity(word.len());
    for g in word.letters() {
        let j = g.artin_index().ok_or(BraidError::NotPositive)?;
        if j > i {
            return Err(BraidError::IndexOutOfRange {
                index: j as i64,
                rank: i,
            });
        }
        letters.push(Generator::artin(i - j + 1));
    }
    Ok(Word::from_checked(word.rank(), letters))
}

/// The descending run `a_i a_{i-1} ... a_j`; a single letter for `j = i`
/// and empty for `j = i + 1`.
pub fn descending_run(i: u16, j: u16, rank: u16) -> Result<Word, BraidError> {
    if i < 1 || i > rank {
        return Err(BraidError::IndexOutOfRange {
            index: i as i64,
            rank,
        });
    }
    if j < 1 || j > i + 1 {
        return Err(BraidError::IndexOutOfRange {
            index: j as i64,
            rank,
        });
    }
    let letters = (j..=i).rev().map(Generator::artin).collect();
    Ok(Word::from_checked(rank, letters))
}

/// The stacked ascending runs `a_n · a_{n-1} a_n · ... · a_1 a_2 ... a_n`,
/// a positive word of length `n(n+1)/2` equal to `Δ` in the group.
pub fn ascending_tower(rank: u16) -> Word {
    let n = rank;
    let mut letters = Vec::with_capacity(n as usize * (n as usize + 1) / 2);
    for start in (1..=n).rev() {
        letters.extend((start..=n).map(Generator::artin));
    }
    Word::from_checked(rank, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(w: &Word) -> String {
        w.to_string()
    }

    #[test]
    fn lambda_full_descends_to_a1() {
        assert_eq!(toks(&lambda_word(3, LambdaVariant::Full, 3).unwrap()), "a3 a2 a1");
        assert_eq!(toks(&lambda_word(1, LambdaVariant::Full, 2).unwrap()), "a1");
    }

    #[test]
    fn lambda_minus_empty_at_one() {
        assert_eq!(toks(&lambda_word(1, LambdaVariant::Minus, 2).unwrap()), "");
        assert_eq!(toks(&lambda_word(3, LambdaVariant::Minus, 3).unwrap()), "a3 a2");
    }

    #[test]
    fn lambda_minusminus_empty_at_two() {
        assert_eq!(toks(&lambda_word(2, LambdaVariant::MinusMinus, 3).unwrap()), "");
        assert_eq!(toks(&lambda_word(4, LambdaVariant::MinusMinus, 4).unwrap()), "a4 a3");
        assert!(lambda_word(1, LambdaVariant::MinusMinus, 3).is_err());
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(toks(&delta_ladder(1, 2).unwrap()), "a1");
        assert_eq!(toks(&delta_ladder(2, 2).unwrap()), "a1 a2 a1");
        assert_eq!(toks(&delta_ladder(3, 3).unwrap()), "a1 a2 a1 a3 a2 a1");
    }

    #[test]
    fn ladder_length_is_triangular() {
        for n in 1..=8u16 {
            for i in 1..=n {
                let len = delta_ladder(i, n).unwrap().len();
                assert_eq!(len, i as usize * (i as usize + 1) / 2);
            }
        }
    }

    #[test]
    fn e_word_examples() {
        assert_eq!(toks(&e_word(1, 2).unwrap()), "a1 a2");
        assert_eq!(toks(&e_word(2, 2).unwrap()), "a2 a1");
        assert_eq!(toks(&e_word(3, 3).unwrap()), "a2 a1 a3 a2 a1");
    }

    #[test]
    fn e_word_length() {
        for n in 1..=8u16 {
            for i in 1..=n {
                let len = e_word(i, n).unwrap().len();
                assert_eq!(len, n as usize * (n as usize + 1) / 2 - 1, "E_{i} in rank {n}");
            }
        }
    }

    #[test]
    fn shift_examples() {
        let v = Word::from_artin_indices(3, &[1, 2]).unwrap();
        assert_eq!(toks(&shift(&v, 1).unwrap()), "a2 a3");
        assert_eq!(toks(&shift(&Word::empty(3), 5).unwrap()), "");
        let v = Word::from_artin_indices(3, &[3, 2]).unwrap();
        assert_eq!(toks(&shift(&v, -1).unwrap()), "a2 a1");
        assert!(shift(&v, 1).is_err());
        assert!(shift(&v, -2).is_err());
    }

    #[test]
    fn flip_examples() {
        let v = Word::from_artin_indices(2, &[1]).unwrap();
        assert_eq!(toks(&flip(&v, 2).unwrap()), "a2");
        let v = Word::from_artin_indices(3, &[1, 3]).unwrap();
        assert_eq!(toks(&flip(&v, 3).unwrap()), "a3 a1");
        assert_eq!(toks(&flip(&Word::empty(3), 2).unwrap()), "");
        // Letters above the flip window are a domain error.
        assert!(flip(&v, 2).is_err());
    }

    #[test]
    fn descending_run_examples() {
        assert_eq!(toks(&descending_run(3, 1, 3).unwrap()), "a3 a2 a1");
        assert_eq!(toks(&descending_run(2, 3, 3).unwrap()), "");
        assert_eq!(toks(&descending_run(2, 2, 3).unwrap()), "a2");
        assert!(descending_run(2, 4, 3).is_err());
    }

    #[test]
    fn ascending_tower_small_cases() {
        assert_eq!(toks(&ascending_tower(1)), "a1");
        assert_eq!(toks(&ascending_tower(2)), "a2 a1 a2");
        assert_eq!(toks(&ascending_tower(3)), "a3 a2 a3 a1 a2 a3");
    }
}
