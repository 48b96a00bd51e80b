//! Equality by substituting pieces of defining relators, with no τ-machinery.
//!
//! Search is over freely reduced words of bounded length, so a `false` answer
//! only means no derivation was found inside the bound.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use crate::presentation::CoxeterPresentation;
use crate::word::{alternating_raw, free_reduce, inverse, Letter, Side};

/// Every cyclic rotation of every defining relator and its inverse.
fn relator_rotations(pres: &CoxeterPresentation) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for (i, j) in pres.pairs() {
        let Some(m) = pres.finite_label(i, j) else { continue };
        let (x, y) = (Letter::pos(i), Letter::pos(j));
        let mut r = alternating_raw(x, y, m as usize, Side::LeftStart);
        r.extend(inverse(&alternating_raw(y, x, m as usize, Side::LeftStart)));
        for rel in [r.clone(), inverse(&r)] {
            for k in 0..rel.len() {
                let mut rot = rel[k..].to_vec();
                rot.extend_from_slice(&rel[..k]);
                out.push(rot);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Whether `u` and `v` are connected by relator-piece substitutions through
/// freely reduced words of length at most `max(|u|, |v|) + slack`.
pub fn relator_equal(pres: &CoxeterPresentation, u: &[Letter], v: &[Letter], slack: usize, max_states: usize) -> bool {
    let (u, v) = (free_reduce(u), free_reduce(v));
    if u == v {
        return true;
    }
    let bound = u.len().max(v.len()) + slack;
    let rels = relator_rotations(pres);
    let mut seen: FxHashSet<Vec<Letter>> = FxHashSet::default();
    seen.insert(u.clone());
    let mut queue = VecDeque::from([u]);
    while let Some(w) = queue.pop_front() {
        for rel in &rels {
            for cut in 1..rel.len() {
                let (piece, rest) = rel.split_at(cut);
                let repl = inverse(rest);
                for s in 0..=w.len().saturating_sub(piece.len()) {
                    if w[s..].len() < piece.len() || w[s..s + piece.len()] != *piece {
                        continue;
                    }
                    let mut next = w[..s].to_vec();
                    next.extend_from_slice(&repl);
                    next.extend_from_slice(&w[s + piece.len()..]);
                    let next = free_reduce(&next);
                    if next.len() > bound {
                        continue;
                    }
                    if next == v {
                        return true;
                    }
                    if seen.len() < max_states && seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;
    use crate::presentation::Label;

    #[test]
    fn braid_relation_found() {
        let p = CoxeterPresentation::dihedral(Label::Finite(3)).unwrap();
        let w = |s: &str| parse_word(s, 2).unwrap().into_letters();
        assert!(relator_equal(&p, &w("aba"), &w("bab"), 3, 100_000));
        assert!(relator_equal(&p, &w("abaB"), &w("ba"), 3, 100_000));
        assert!(!relator_equal(&p, &w("ab"), &w("ba"), 3, 100_000));
    }
}
