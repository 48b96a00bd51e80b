//! Reduction to geodesics by free cancellation and length reducing τ-moves.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;
use serde::Serialize;

use super::critical::{apply_over_critical_unchecked, classify_critical, over_critical_candidates, OverCritical, Pair};
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

pub(crate) const CLOSURE_CAP: usize = 200_000;

/// One rewriting step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DihedralMove {
    /// Letters at `pos` and `pos + 1` cancelled.
    FreeCancel { pos: usize },
    /// Length reducing τ at an over-critical occurrence.
    Tau { occurrence: OverCritical },
}

/// A geodesic together with the moves that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralReduction {
    pub word: Word,
    pub moves: Vec<DihedralMove>,
}

fn free_reduce_logged(w: &[Letter], moves: &mut Vec<DihedralMove>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &a in w {
        if out.last() == Some(&a.inverse()) {
            out.pop();
            moves.push(DihedralMove::FreeCancel { pos: out.len() });
        } else {
            out.push(a);
        }
    }
    out
}

pub(crate) fn free_only(w: &[Letter]) -> DihedralReduction {
    let mut moves = Vec::new();
    let word = Word::from_letters(free_reduce_logged(w, &mut moves));
    DihedralReduction { word, moves }
}

/// Candidate priority: unsigned occurrences first, then leftmost end, then shortest.
fn priority(oc: &OverCritical, m: u32) -> (bool, usize, usize) {
    let signed = oc.p >= m || oc.n >= m;
    (signed, oc.end, oc.end - oc.start)
}

pub(crate) fn reduce_finite(w: &[Letter], pair: &Pair) -> DihedralReduction {
    let mut moves = Vec::new();
    let mut cur = free_reduce_logged(w, &mut moves);
    loop {
        let best = over_critical_candidates(&cur, pair)
            .into_iter()
            .filter(|oc| super::critical::validate_over_critical(&cur, oc, pair).is_ok())
            .min_by_key(|oc| priority(oc, pair.m));
        let Some(oc) = best else { break };
        moves.push(DihedralMove::Tau { occurrence: oc });
        let next = apply_over_critical_unchecked(&cur, &oc, pair);
        cur = free_reduce_logged(&next, &mut moves);
    }
    DihedralReduction { word: Word::from_letters(cur), moves }
}

/// All words reachable from the geodesic `g` by τ on critical subwords.
pub(crate) fn tau_closure(g: &[Letter], pair: &Pair, cap: usize) -> Result<Vec<Word>> {
    let start = Word::from_letters(g.to_vec());
    let mut seen: FxHashSet<Word> = FxHashSet::default();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let l = w.len();
        for s in 0..l {
            for e in s + 2..=l {
                let Some(c) = classify_critical(&w[s..e], pair) else { continue };
                let mut next = w[..s].to_vec();
                next.extend(c.tau(pair));
                next.extend_from_slice(&w[e..]);
                let next = Word::from_letters(next);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Budget { what: "geodesic representatives", bound: cap });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}
