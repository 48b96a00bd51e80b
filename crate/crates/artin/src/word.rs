use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A generator or its inverse, packed as `2 * gen + inverted`.
///
/// The packing order is the default letter order x1 < X1 < x2 < X2 < ...
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u16);

impl Letter {
    pub fn new(gen: usize, positive: bool) -> Self {
        Letter((gen as u16) << 1 | u16::from(!positive))
    }

    pub fn pos(gen: usize) -> Self {
        Self::new(gen, true)
    }

    pub fn neg(gen: usize) -> Self {
        Self::new(gen, false)
    }

    pub fn from_code(code: u16) -> Self {
        Letter(code)
    }

    pub fn code(self) -> u16 {
        self.0
    }

    /// The generator index, shared by a letter and its inverse.
    pub fn gen(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 & 1 == 0
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    pub fn with_gen(self, gen: usize) -> Self {
        Letter::new(gen, self.is_positive())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.gen();
        if g < 26 {
            let c = (b'a' + g as u8) as char;
            let c = if self.is_positive() { c } else { c.to_ascii_uppercase() };
            write!(f, "{c}")
        } else if self.is_positive() {
            write!(f, "x{}", g + 1)
        } else {
            write!(f, "X{}", g + 1)
        }
    }
}

impl serde::Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Sign class of a word: all letters positive, all negative, or mixed.
///
/// The empty word counts as both positive and negative; `Positive` is reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Positive,
    Negative,
    Unsigned,
}

impl SignClass {
    pub fn is_signed(self) -> bool {
        self != SignClass::Unsigned
    }
}

/// Which end of an alternating word is pinned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `_r(a,b)`: starts with `a`.
    LeftStart,
    /// `(b,a)_r`: ends with `a`.
    RightEnd,
}

/// A finite word over letters. Immutable by convention; rewriting builds new words.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn inverse(&self) -> Word {
        Word(inverse(&self.0))
    }

    pub fn concat(&self, other: &[Letter]) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(other);
        Word(v)
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn free_reduce(&self) -> Word {
        Word(free_reduce(&self.0))
    }

    pub fn is_freely_reduced(&self) -> bool {
        is_freely_reduced(&self.0)
    }

    pub fn sign_class(&self) -> SignClass {
        sign_class(&self.0)
    }

    pub fn syllables(&self) -> Vec<Syllable> {
        syllables(&self.0)
    }

    /// Largest generator index used, plus one.
    pub fn rank(&self) -> usize {
        self.0.iter().map(|a| a.gen() + 1).max().unwrap_or(0)
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortlex under the default letter order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Serialized as its printed form.
impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Letters are printed back to back; the empty word prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, w: &[Letter]) -> fmt::Result {
    if w.is_empty() {
        return f.write_str("1");
    }
    for a in w {
        write!(f, "{a}")?;
    }
    Ok(())
}

/// Display adapter for letter slices.
pub struct Letters<'a>(pub &'a [Letter]);

impl fmt::Display for Letters<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.0)
    }
}

/// A maximal run of one letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syllable {
    pub letter: Letter,
    pub start: usize,
    pub len: usize,
}

pub fn inverse(w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|a| a.inverse()).collect()
}

pub fn is_freely_reduced(w: &[Letter]) -> bool {
    w.windows(2).all(|p| p[0] != p[1].inverse())
}

pub fn free_reduce(w: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &a in w {
        if out.last() == Some(&a.inverse()) {
            out.pop();
        } else {
            out.push(a);
        }
    }
    out
}

pub fn sign_class(w: &[Letter]) -> SignClass {
    let pos = w.iter().any(|a| a.is_positive());
    let neg = w.iter().any(|a| !a.is_positive());
    match (pos, neg) {
        (true, true) => SignClass::Unsigned,
        (false, true) => SignClass::Negative,
        _ => SignClass::Positive,
    }
}

/// Maximal runs of one letter. On freely reduced words these are the syllables.
pub fn syllables(w: &[Letter]) -> Vec<Syllable> {
    let mut out: Vec<Syllable> = Vec::new();
    for (k, &a) in w.iter().enumerate() {
        match out.last_mut() {
            Some(s) if s.letter == a => s.len += 1,
            _ => out.push(Syllable { letter: a, start: k, len: 1 }),
        }
    }
    out
}

pub fn syllable_count(w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    1 + w.windows(2).filter(|p| p[0] != p[1]).count()
}

/// `_r(a,b)` for [`Side::LeftStart`], `(b,a)_r` for [`Side::RightEnd`].
pub fn alternating(a: Letter, b: Letter, r: usize, side: Side) -> Result<Word> {
    if a == b {
        return Err(Error::BadPair { i: a.gen() + 1, j: b.gen() + 1 });
    }
    Ok(Word(alternating_raw(a, b, r, side)))
}

pub(crate) fn alternating_raw(a: Letter, b: Letter, r: usize, side: Side) -> Vec<Letter> {
    match side {
        Side::LeftStart => (0..r).map(|k| if k % 2 == 0 { a } else { b }).collect(),
        Side::RightEnd => (0..r).map(|k| if (r - 1 - k) % 2 == 0 { a } else { b }).collect(),
    }
}

/// Generators involved in `w`, sorted and deduplicated.
pub fn names(w: &[Letter]) -> Vec<usize> {
    let mut v: Vec<usize> = w.iter().map(|a| a.gen()).collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Letter {
        Letter::pos(0)
    }
    fn b() -> Letter {
        Letter::pos(1)
    }

    #[test]
    fn letter_packing() {
        let x = Letter::neg(4);
        assert_eq!(x.gen(), 4);
        assert!(!x.is_positive());
        assert_eq!(x.inverse(), Letter::pos(4));
        assert!(Letter::pos(0) < Letter::neg(0) && Letter::neg(0) < Letter::pos(1));
    }

    #[test]
    fn alternating_words() {
        let w = alternating(a(), b(), 6, Side::LeftStart).unwrap();
        assert_eq!(w.to_string(), "ababab");
        assert_eq!(alternating(a(), b(), 5, Side::LeftStart).unwrap().to_string(), "ababa");
        // (b,a)_5 ends with a.
        assert_eq!(alternating(a(), b(), 5, Side::RightEnd).unwrap().to_string(), "ababa");
        assert_eq!(alternating(a(), b(), 4, Side::RightEnd).unwrap().to_string(), "baba");
        assert!(alternating(a(), b(), 0, Side::RightEnd).unwrap().is_empty());
        assert!(alternating(a(), a(), 2, Side::LeftStart).is_err());
    }

    #[test]
    fn free_reduction() {
        let w = vec![a(), b(), b().inverse(), a()];
        assert_eq!(free_reduce(&w), vec![a(), a()]);
        assert!(free_reduce(&[a(), a().inverse()]).is_empty());
        let fixed = vec![a(), b(), a(), b().inverse()];
        assert_eq!(free_reduce(&fixed), fixed);
    }

    #[test]
    fn syllables_and_signs() {
        let w = vec![a(), a(), b(), a().inverse()];
        let s = syllables(&w);
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().map(|s| s.len).sum::<usize>(), 4);
        assert_eq!(syllable_count(&w), 3);
        assert_eq!(sign_class(&w), SignClass::Unsigned);
        assert_eq!(sign_class(&[a().inverse()]), SignClass::Negative);
    }
}
