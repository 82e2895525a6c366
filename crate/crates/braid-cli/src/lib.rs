//! Text syntax for braid words and the building blocks of the `braid`
//! command-line tool.
//!
//! Word grammar: tokens separated by whitespace or `.`, where a token is
//! `a<digits>` optionally followed by `^-1`, a bare `D` optionally followed
//! by `^-1`, or `D^<signed integer>` which expands to that many delta
//! letters (of the exponent's sign). Case-sensitive.

use braid_garside::{BraidError, Generator, Sign, SignedLetter, SignedWord};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordParseError {
    /// The token at this byte offset is not part of the grammar.
    #[error("lexical error at offset {offset}: unrecognized token {token:?}")]
    Lexical { offset: usize, token: String },

    /// A syntactically fine token whose index does not fit the rank.
    #[error("token {token_index}: index {index} out of range for rank {rank}")]
    IndexOutOfRange {
        token_index: usize,
        index: u64,
        rank: u16,
    },

    /// Rank restrictions bubbled up from word construction.
    #[error(transparent)]
    Braid(#[from] BraidError),
}

fn parse_token(
    token: &str,
    offset: usize,
    token_index: usize,
    rank: u16,
    out: &mut Vec<SignedLetter>,
) -> Result<(), WordParseError> {
    let lexical = || WordParseError::Lexical {
        offset,
        token: token.to_string(),
    };

    if let Some(rest) = token.strip_prefix('a') {
        let (digits, sign) = match rest.split_once('^') {
            None => (rest, Sign::Pos),
            Some((digits, "-1")) => (digits, Sign::Neg),
            Some(_) => return Err(lexical()),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(lexical());
        }
        let index: u64 = digits.parse().map_err(|_| lexical())?;
        if index < 1 || index > rank as u64 {
            return Err(WordParseError::IndexOutOfRange {
                token_index,
                index,
                rank,
            });
        }
        out.push(SignedLetter {
            generator: Generator::artin(index as u16),
            sign,
        });
        return Ok(());
    }

    if let Some(rest) = token.strip_prefix('D') {
        if rest.is_empty() {
            out.push(SignedLetter {
                generator: Generator::DELTA,
                sign: Sign::Pos,
            });
            return Ok(());
        }
        let exp_text = rest.strip_prefix('^').ok_or_else(lexical)?;
        let exponent: i64 = exp_text.parse().map_err(|_| lexical())?;
        let generator = if exponent >= 0 {
            Generator::DELTA
        } else {
            Generator::DELTA_INV
        };
        for _ in 0..exponent.unsigned_abs() {
            out.push(SignedLetter {
                generator,
                sign: Sign::Pos,
            });
        }
        return Ok(());
    }

    Err(lexical())
}

/// Parses the word grammar against an explicit rank. The rank is never
/// inferred from the indices used: the rules for the delta letters depend
/// on it, so guessing would silently change semantics.
pub fn parse_word(text: &str, rank: u16) -> Result<SignedWord, WordParseError> {
    let mut letters = Vec::new();
    let mut token_index = 0usize;
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        if c.is_whitespace() || c == '.' {
            chars.next();
            continue;
        }
        let mut end = start;
        while let Some(&(pos, c)) = chars.peek() {
            if c.is_whitespace() || c == '.' {
                break;
            }
            end = pos + c.len_utf8();
            chars.next();
        }
        parse_token(&text[start..end], start, token_index, rank, &mut letters)?;
        token_index += 1;
    }
    Ok(SignedWord::new(rank, letters)?)
}

/// Splits an `equal` batch line of the shape `<word> | <word>`.
pub fn parse_pair(line: &str, rank: u16) -> Result<(SignedWord, SignedWord), WordParseError> {
    match line.split_once('|') {
        Some((left, right)) => Ok((parse_word(left, rank)?, parse_word(right, rank)?)),
        None => Err(WordParseError::Lexical {
            offset: line.len(),
            token: "(missing '|' between the two words)".to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mixed_tokens() {
        let w = parse_word("a1 a2^-1 D", 2).unwrap();
        assert_eq!(w.to_string(), "a1 a2^-1 D");
    }

    #[test]
    fn expands_delta_powers() {
        let w = parse_word("D^-2 . a3", 3).unwrap();
        assert_eq!(w.to_string(), "D^-1 D^-1 a3");
        let w = parse_word("D^0 a1", 2).unwrap();
        assert_eq!(w.to_string(), "a1");
        let w = parse_word("D^3", 2).unwrap();
        assert_eq!(w.to_string(), "D D D");
    }

    #[test]
    fn dot_and_whitespace_both_separate() {
        let w = parse_word("a1.a2\n a1", 2).unwrap();
        assert_eq!(w.to_string(), "a1 a2 a1");
        assert!(parse_word("", 2).unwrap().is_empty());
        assert!(parse_word(" . . ", 2).unwrap().is_empty());
    }

    #[test]
    fn index_out_of_range_carries_token_index() {
        let err = parse_word("a1 a9", 2).unwrap_err();
        assert_eq!(
            err,
            WordParseError::IndexOutOfRange {
                token_index: 1,
                index: 9,
                rank: 2
            }
        );
        let err = parse_word("a0", 2).unwrap_err();
        assert!(matches!(err, WordParseError::IndexOutOfRange { index: 0, .. }));
    }

    #[test]
    fn lexical_errors_carry_offsets() {
        let err = parse_word("a1 b2", 2).unwrap_err();
        assert_eq!(
            err,
            WordParseError::Lexical {
                offset: 3,
                token: "b2".to_string()
            }
        );
        assert!(matches!(
            parse_word("a1^2", 2).unwrap_err(),
            WordParseError::Lexical { .. }
        ));
        assert!(matches!(
            parse_word("A1", 2).unwrap_err(),
            WordParseError::Lexical { .. }
        ));
        assert!(matches!(
            parse_word("D^", 2).unwrap_err(),
            WordParseError::Lexical { .. }
        ));
        assert!(matches!(
            parse_word("a1 Δ", 2).unwrap_err(),
            WordParseError::Lexical { offset: 3, .. }
        ));
    }

    #[test]
    fn pair_lines_split_on_pipe() {
        let (u, v) = parse_pair("a1 a2 | D", 2).unwrap();
        assert_eq!(u.to_string(), "a1 a2");
        assert_eq!(v.to_string(), "D");
        assert!(parse_pair("a1 a2", 2).is_err());
    }
}
