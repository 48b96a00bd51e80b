//! Word syntax.
//!
//! ```text
//! word     := item*            whitespace between items is ignored
//! item     := atom exponent?
//! atom     := 'a'..'z' | 'A'..'Z' | ('x' | 'X') digits | '1'
//! exponent := '^' '-'? digits
//! ```
//!
//! Lowercase letters are generators 1..26 and uppercase their inverses. `x3`
//! and `X3` name generator 3 and its inverse; a bare `x` is generator 24.
//! `1` is the identity. `a^-2` is `AA`. The parser returns the literal word
//! without free reduction.

use crate::error::ParseError;
use crate::word::{Letter, Word};

/// Parse `text` over a presentation with `n` generators.
pub fn parse_word(text: &str, n: usize) -> Result<Word, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let atom: Option<Letter> = match c {
            b'1' => {
                pos += 1;
                None
            }
            b'x' | b'X' if bytes.get(pos + 1).is_some_and(u8::is_ascii_digit) => {
                pos += 1;
                let (index, next) = read_digits(bytes, pos);
                pos = next;
                let index = index.ok_or(ParseError::GeneratorOutOfRange { index: usize::MAX, n, pos: start })?;
                if index == 0 || index > n {
                    return Err(ParseError::GeneratorOutOfRange { index, n, pos: start });
                }
                Some(Letter::new(index - 1, c == b'x'))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                pos += 1;
                let index = (c.to_ascii_lowercase() - b'a') as usize + 1;
                if index > n {
                    return Err(ParseError::GeneratorOutOfRange { index, n, pos: start });
                }
                Some(Letter::new(index - 1, c.is_ascii_lowercase()))
            }
            _ => {
                let symbol = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::UnknownSymbol { symbol, pos: start });
            }
        };
        let mut power: i64 = 1;
        if bytes.get(pos) == Some(&b'^') {
            let epos = pos;
            pos += 1;
            let negative = bytes.get(pos) == Some(&b'-');
            if negative {
                pos += 1;
            }
            let (value, next) = read_digits(bytes, pos);
            if next == pos {
                return Err(ParseError::BadExponent { pos: epos });
            }
            pos = next;
            let value = value.filter(|v| *v <= 1 << 20).ok_or(ParseError::BadExponent { pos: epos })?;
            power = if negative { -(value as i64) } else { value as i64 };
        }
        if let Some(a) = atom {
            let a = if power < 0 { a.inverse() } else { a };
            out.extend(std::iter::repeat(a).take(power.unsigned_abs() as usize));
        }
    }
    Ok(Word::from_letters(out))
}

fn read_digits(bytes: &[u8], mut pos: usize) -> (Option<usize>, usize) {
    let start = pos;
    let mut value: Option<usize> = Some(0);
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        value = value.and_then(|v| v.checked_mul(10)).and_then(|v| v.checked_add((bytes[pos] - b'0') as usize));
        pos += 1;
    }
    if pos == start {
        (None, pos)
    } else {
        (value, pos)
    }
}
