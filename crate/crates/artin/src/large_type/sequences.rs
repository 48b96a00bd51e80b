//! Rightward and leftward critical sequences.
//!
//! A critical sequence is a chain of τ-moves on 2-generator critical subwords
//! in which each moved subword shares exactly one letter with the previous
//! τ-image: its first letter (rightward) or its last letter (leftward).

use std::cmp::Ordering;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::dihedral::{classify_critical, Pair};
use crate::order::LetterOrder;
use crate::presentation::CoxeterPresentation;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Leftward,
    Rightward,
}

/// One τ-move replacing `word[start..end]`, where `word` is the state before the move.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauStep {
    pub start: usize,
    pub end: usize,
    /// Generators of the move, 0-based.
    pub pair: (usize, usize),
    pub before: Word,
    pub after: Word,
}

/// A chain of τ-moves, optionally closed by one free cancellation at the right end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalSequence {
    pub direction: Direction,
    pub moves: Vec<TauStep>,
    pub free_cancellation: bool,
}

impl CriticalSequence {
    /// Apply the τ-moves to `w`; the free cancellation is not applied.
    pub fn apply_moves(&self, w: &[Letter]) -> Vec<Letter> {
        let mut out = w.to_vec();
        for mv in &self.moves {
            out.splice(mv.start..mv.end, mv.after.iter().copied());
        }
        out
    }
}

/// The finite-label pair `{i, j}` if `u` uses exactly the generators `i` and `j`.
pub(crate) fn two_gen_pair(pres: &CoxeterPresentation, u: &[Letter]) -> Option<Pair> {
    let mut gens = [usize::MAX; 2];
    for a in u {
        let g = a.gen();
        if gens[0] == usize::MAX || gens[0] == g {
            gens[0] = g;
        } else if gens[1] == usize::MAX || gens[1] == g {
            gens[1] = g;
        } else {
            return None;
        }
    }
    if gens[1] == usize::MAX {
        return None;
    }
    let m = pres.finite_label(gens[0], gens[1])?;
    Some(Pair::new(gens[0], gens[1], m))
}

/// τ of `u` when `u` is a 2-generator critical word.
pub(crate) fn tau_if_critical(pres: &CoxeterPresentation, u: &[Letter]) -> Option<(Pair, Vec<Letter>)> {
    let pair = two_gen_pair(pres, u)?;
    let c = classify_critical(u, &pair)?;
    Some((pair, c.tau(&pair)))
}

fn step(pair: Pair, start: usize, before: Vec<Letter>, after: Vec<Letter>) -> TauStep {
    TauStep {
        start,
        end: start + before.len(),
        pair: (pair.i, pair.j),
        before: Word::from_letters(before),
        after: Word::from_letters(after),
    }
}

/// Letters that may sit in front of `tail` in a 2-generator word.
fn lead_candidates(pres: &CoxeterPresentation, tail: &[Letter], original: Letter) -> Vec<Letter> {
    let n = pres.n();
    let mut out = vec![original];
    let first_gen = tail.first().map(|a| a.gen());
    let other_gen = tail.iter().map(|a| a.gen()).find(|&g| Some(g) != first_gen);
    for code in 0..2 * n as u16 {
        let c = Letter::from_code(code);
        if c == original {
            continue;
        }
        let ok = match (first_gen, other_gen) {
            (Some(g), Some(h)) => c.gen() == g || c.gen() == h,
            (Some(g), None) => c.gen() == g || pres.finite_label(c.gen(), g).is_some(),
            _ => false,
        };
        if ok {
            out.push(c);
        }
    }
    out
}

struct Rightward<'a> {
    pres: &'a CoxeterPresentation,
    w: &'a [Letter],
    memo: FxHashMap<(usize, Letter), Option<Vec<TauStep>>>,
}

impl Rightward<'_> {
    /// A chain ending at position `e` after which `w[e]` has become `want`.
    fn need(&mut self, e: usize, want: Letter) -> Option<Vec<TauStep>> {
        if let Some(hit) = self.memo.get(&(e, want)) {
            return hit.clone();
        }
        let found = self.search(e, want);
        self.memo.insert((e, want), found.clone());
        found
    }

    fn search(&mut self, e: usize, want: Letter) -> Option<Vec<TauStep>> {
        let w = self.w;
        for s in (0..e).rev() {
            let tail = &w[s + 1..=e];
            if crate::word::names(tail).len() > 2 {
                break;
            }
            for c in lead_candidates(self.pres, tail, w[s]) {
                let mut u = Vec::with_capacity(tail.len() + 1);
                u.push(c);
                u.extend_from_slice(tail);
                let Some((pair, t)) = tau_if_critical(self.pres, &u) else { continue };
                if t.last() != Some(&want) {
                    continue;
                }
                if c == w[s] {
                    return Some(vec![step(pair, s, u, t)]);
                }
                if let Some(mut chain) = self.need(s, c) {
                    chain.push(step(pair, s, u, t));
                    return Some(chain);
                }
            }
        }
        None
    }
}

/// A rightward critical sequence on the geodesic `w` making it end in `a⁻¹`,
/// so that `w a` shortens by one free cancellation.
///
/// Returns `None` when `w a` is geodesic. `w` must be geodesic and freely reduced.
pub fn rightward_length_reducing(pres: &CoxeterPresentation, w: &[Letter], a: Letter) -> Option<CriticalSequence> {
    let last = *w.last()?;
    if last == a.inverse() {
        return Some(CriticalSequence { direction: Direction::Rightward, moves: Vec::new(), free_cancellation: true });
    }
    let mut r = Rightward { pres, w, memo: FxHashMap::default() };
    let moves = r.need(w.len() - 1, a.inverse())?;
    Some(CriticalSequence { direction: Direction::Rightward, moves, free_cancellation: true })
}

/// A rightward critical sequence on the geodesic `w` making it end in `target`.
pub fn rightward_to_last_letter(pres: &CoxeterPresentation, w: &[Letter], target: Letter) -> Option<CriticalSequence> {
    let last = *w.last()?;
    if last == target {
        return Some(CriticalSequence { direction: Direction::Rightward, moves: Vec::new(), free_cancellation: false });
    }
    let mut r = Rightward { pres, w, memo: FxHashMap::default() };
    let moves = r.need(w.len() - 1, target)?;
    Some(CriticalSequence { direction: Direction::Rightward, moves, free_cancellation: false })
}

/// Bound on leftward chains explored per search.
const LEFTWARD_NODE_CAP: usize = 200_000;

/// The lexicographically least word reachable from `w` by one leftward
/// critical sequence whose first move covers the last letter, if it is
/// smaller than `w` under `order`.
pub fn leftward_lex_reducing(
    pres: &CoxeterPresentation,
    w: &[Letter],
    order: &LetterOrder,
) -> Option<(CriticalSequence, Vec<Letter>)> {
    let l = w.len();
    if l < 2 {
        return None;
    }
    let mut best: Option<(Vec<TauStep>, Vec<Letter>)> = None;
    let mut nodes = 0usize;
    // Stack of partial chains: (chain, current word, start of last moved block).
    let mut stack: Vec<(Vec<TauStep>, Vec<Letter>, usize)> = vec![(Vec::new(), w.to_vec(), l)];
    while let Some((chain, cur, start)) = stack.pop() {
        nodes += 1;
        if nodes > LEFTWARD_NODE_CAP {
            break;
        }
        // The block to rewrite ends at `start` (inclusive of cur[start] unless this is the first move).
        let end = if chain.is_empty() { l } else { start + 1 };
        for s in (0..end.saturating_sub(1)).rev() {
            let u = &cur[s..end];
            if crate::word::names(u).len() > 2 {
                break;
            }
            let Some((pair, t)) = tau_if_critical(pres, u) else { continue };
            let mut next = cur.clone();
            next.splice(s..end, t.iter().copied());
            let mut next_chain = chain.clone();
            next_chain.push(step(pair, s, u.to_vec(), t));
            let better = match &best {
                None => order.cmp_lex(&next, w) == Ordering::Less,
                Some((_, b)) => order.cmp_lex(&next, b) == Ordering::Less,
            };
            if better {
                best = Some((next_chain.clone(), next.clone()));
            }
            if next_chain.len() < l {
                stack.push((next_chain, next, s));
            }
        }
    }
    best.map(|(moves, word)| {
        (CriticalSequence { direction: Direction::Leftward, moves, free_cancellation: false }, word)
    })
}

/// Check that `seq` is a well-formed critical sequence on `w` and return the
/// final word (after the free cancellation, if any).
pub fn validate_sequence(
    pres: &CoxeterPresentation,
    w: &[Letter],
    seq: &CriticalSequence,
) -> Result<Vec<Letter>, String> {
    let mut cur = w.to_vec();
    let mut prev: Option<&TauStep> = None;
    for mv in &seq.moves {
        if mv.end > cur.len() || mv.start >= mv.end || cur[mv.start..mv.end] != *mv.before.letters() {
            return Err(format!("move at {}..{} does not match the word", mv.start, mv.end));
        }
        let (_, t) = tau_if_critical(pres, &cur[mv.start..mv.end])
            .ok_or_else(|| format!("subword at {}..{} is not critical", mv.start, mv.end))?;
        if t != *mv.after.letters() {
            return Err(format!("τ-image mismatch at {}..{}", mv.start, mv.end));
        }
        if let Some(p) = prev {
            let overlap = match seq.direction {
                Direction::Rightward => mv.start + 1 == p.end,
                Direction::Leftward => mv.end == p.start + 1,
            };
            if !overlap {
                return Err("successive moves do not overlap in one letter".into());
            }
        }
        cur.splice(mv.start..mv.end, t);
        prev = Some(mv);
    }
    Ok(cur)
}
