#![allow(dead_code)]

use artin::{CoxeterPresentation, Label, Letter, Word};

pub fn triangle(a: u32, b: u32, c: u32) -> CoxeterPresentation {
    CoxeterPresentation::triangle(Label::Finite(a), Label::Finite(b), Label::Finite(c)).unwrap()
}

pub fn dihedral(m: u32) -> CoxeterPresentation {
    CoxeterPresentation::dihedral(Label::Finite(m)).unwrap()
}

/// Every freely reduced word of length exactly `len` on `n` generators.
pub fn reduced_words(n: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * (2 * n - 1).max(1));
        for w in &out {
            for code in 0..2 * n as u16 {
                let a = Letter::from_code(code);
                if w.last() == Some(&a.inverse()) {
                    continue;
                }
                let mut v: Vec<Letter> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Freely reduced words of length at most `len`.
pub fn reduced_words_upto(n: usize, len: usize) -> Vec<Vec<Letter>> {
    (0..=len).flat_map(|k| reduced_words(n, k)).collect()
}

pub fn word(s: &str, n: usize) -> Word {
    artin::parse_word(s, n).unwrap()
}
