//! Brute-force equality by closure under τ-moves and free reduction.
//!
//! Geodesics of one element are connected by τ-moves on 2-generator critical
//! subwords, and a non-geodesic freely reduced word reaches a free cancellation
//! through same-length τ-moves. So the same-length closure either exposes a
//! shorter word or is exactly the set of geodesics.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use crate::dihedral::{classify_critical, DihedralContext};
use crate::error::{Error, Result};
use crate::large_type::sequences::two_gen_pair;
use crate::order::LetterOrder;
use crate::presentation::CoxeterPresentation;
use crate::word::{free_reduce, is_freely_reduced, Letter, Word};

/// Closure-based word problem solver for one presentation.
#[derive(Debug, Clone)]
pub struct ClosureOracle {
    pres: CoxeterPresentation,
    order: LetterOrder,
    max_len: usize,
    max_states: usize,
}

/// Geodesic spellings of one element, as found by the closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub geodesics: Vec<Word>,
}

impl ClosureOracle {
    pub fn new(pres: CoxeterPresentation) -> Self {
        let order = LetterOrder::default_for(pres.n());
        ClosureOracle { pres, order, max_len: 40, max_states: 2_000_000 }
    }

    pub fn with_bounds(mut self, max_len: usize, max_states: usize) -> Self {
        self.max_len = max_len;
        self.max_states = max_states;
        self
    }

    pub fn presentation(&self) -> &CoxeterPresentation {
        &self.pres
    }

    /// Shorten `w` inside some 2-generator window that is not geodesic in its
    /// dihedral subgroup.
    fn dihedral_shortcut(&self, w: &[Letter]) -> Option<Vec<Letter>> {
        let l = w.len();
        for s in 0..l {
            for e in (s + 2..=l).rev() {
                let Some(pair) = two_gen_pair(&self.pres, &w[s..e]) else { continue };
                let ctx =
                    DihedralContext::with_order(pair.i, pair.j, self.pres.label(pair.i, pair.j), self.order.clone());
                let g = ctx.geodesic(&w[s..e]).ok()?;
                if g.len() < e - s {
                    let mut out = w[..s].to_vec();
                    out.extend_from_slice(&g);
                    out.extend_from_slice(&w[e..]);
                    return Some(out);
                }
            }
        }
        None
    }

    /// All geodesic spellings of the element of `w`.
    pub fn closure(&self, w: &[Letter]) -> Result<Closure> {
        if w.len() > self.max_len {
            return Err(Error::Budget { what: "oracle word length", bound: self.max_len });
        }
        let mut cur = free_reduce(w);
        'restart: loop {
            if let Some(shorter) = self.dihedral_shortcut(&cur) {
                cur = free_reduce(&shorter);
                continue 'restart;
            }
            let start = Word::from_letters(cur.clone());
            let mut seen: FxHashSet<Word> = FxHashSet::default();
            seen.insert(start.clone());
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let l = x.len();
                for s in 0..l {
                    for e in s + 2..=l {
                        let Some(pair) = two_gen_pair(&self.pres, &x[s..e]) else { continue };
                        let Some(c) = classify_critical(&x[s..e], &pair) else { continue };
                        let mut next = x[..s].to_vec();
                        next.extend(c.tau(&pair));
                        next.extend_from_slice(&x[e..]);
                        if !is_freely_reduced(&next) {
                            cur = free_reduce(&next);
                            continue 'restart;
                        }
                        if let Some(shorter) = self.dihedral_shortcut(&next) {
                            cur = free_reduce(&shorter);
                            continue 'restart;
                        }
                        let next = Word::from_letters(next);
                        if seen.insert(next.clone()) {
                            if seen.len() > self.max_states {
                                return Err(Error::Budget { what: "oracle closure states", bound: self.max_states });
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
            let mut geodesics: Vec<Word> = seen.into_iter().collect();
            geodesics.sort_by(|u, v| self.order.cmp_shortlex(u, v));
            return Ok(Closure { geodesics });
        }
    }

    /// Shortlex-least geodesic for `w`.
    pub fn canonical(&self, w: &[Letter]) -> Result<Word> {
        Ok(self.closure(w)?.geodesics.swap_remove(0))
    }

    pub fn geodesic_length(&self, w: &[Letter]) -> Result<usize> {
        Ok(self.closure(w)?.geodesics[0].len())
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> Result<bool> {
        let mut w = crate::word::inverse(u);
        w.extend_from_slice(v);
        Ok(self.geodesic_length(&w)? == 0)
    }

    /// Every geodesic spelling of the element of `w`.
    pub fn enumerate_geodesics(&self, w: &[Letter]) -> Result<Vec<Word>> {
        Ok(self.closure(w)?.geodesics)
    }
}
