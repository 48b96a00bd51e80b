//! Merging in the full group, with a Garside element from one active pair.

use serde::Serialize;

use super::ArtinGroup;
use crate::dihedral::{DihedralContext, MoveKind};
use crate::error::Result;
use crate::word::{inverse, sign_class, Letter, SignClass, Word};

/// One merging step: `g1 ← g1 h⁻¹`, `g2 ← h'⁻¹ g2`, `r ← r + Δr`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeMergeMove {
    pub kind: MoveKind,
    /// Active pair, 0-based; `None` for a cancellation with `r = 0`.
    pub pair: Option<(usize, usize)>,
    pub h: Word,
    pub h_prime: Word,
    pub delta_r: i64,
}

/// A merger `(f1, Δ_ij^r, f2)` of `(g1, g2)`, with `g1 = f1 h1`, `g2 = h2 f2`
/// and `h1 h2 = Δ_ij^r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LargeMerger {
    pub g1: Word,
    pub g2: Word,
    pub f1: Word,
    pub r: i64,
    /// Pair of the last Δ-move; meaningful when `r ≠ 0`.
    pub pair: Option<(usize, usize)>,
    pub f2: Word,
    pub h1: Word,
    pub h2: Word,
    pub trace: Vec<LargeMergeMove>,
}

impl ArtinGroup {
    /// The middle element `Δ_ij^r` of a merger as a word.
    pub fn merger_middle(&self, m: &LargeMerger) -> Result<Word> {
        match m.pair {
            Some((i, j)) if m.r != 0 => self.parabolic(i, j)?.garside_power(m.r),
            _ => Ok(Word::new()),
        }
    }
}

struct State {
    g1: Word,
    g2: Word,
    h1: Word,
    h2: Word,
    r: i64,
    pair: Option<(usize, usize)>,
}

impl ArtinGroup {
    /// Merger of `(g1, g2)`; a geodesic product is returned unsplit as `(g1, Δ⁰, g2)`.
    ///
    /// Moves of lower type win. With `r = 0` cancellation is unrestricted and
    /// a Δ-move takes the least pair admitting one; with `r ≠ 0` every move
    /// stays inside the active pair. Within a pair and type the longest `h`
    /// wins, then the shortlex-least, then `ε = +1`.
    pub fn merge(&self, g1: &[Letter], g2: &[Letter]) -> Result<LargeMerger> {
        self.require_33m()?;
        let mut st = State { g1: self.nf(g1), g2: self.nf(g2), h1: Word::new(), h2: Word::new(), r: 0, pair: None };
        let (start1, start2) = (st.g1.clone(), st.g2.clone());
        let mut trace = Vec::new();
        if self.is_geodesic_factorisation(&st.g1, &st.g2) {
            return Ok(LargeMerger {
                g1: start1,
                g2: start2,
                f1: st.g1,
                r: 0,
                pair: None,
                f2: st.g2,
                h1: st.h1,
                h2: st.h2,
                trace,
            });
        }
        while let Some(mv) = self.next_merge_move(&st)? {
            st.g1 = self.nf(&[st.g1.letters(), &inverse(&mv.h)].concat());
            st.g2 = self.nf(&[&inverse(&mv.h_prime), st.g2.letters()].concat());
            st.h1 = self.nf(&[mv.h.letters(), st.h1.letters()].concat());
            st.h2 = self.nf(&[st.h2.letters(), mv.h_prime.letters()].concat());
            st.r += mv.delta_r;
            if mv.pair.is_some() {
                st.pair = mv.pair;
            }
            trace.push(mv);
        }
        Ok(LargeMerger {
            g1: start1,
            g2: start2,
            f1: st.g1,
            r: st.r,
            pair: st.pair,
            f2: st.g2,
            h1: st.h1,
            h2: st.h2,
            trace,
        })
    }

    fn is_left_divisor(&self, d: &[Letter], g: &Word) -> bool {
        self.length(&[&inverse(d), g.letters()].concat()) + d.len() == g.len()
    }

    /// Side conditions shared by all move types.
    fn admissible(&self, st: &State, h: &Word, hp: &Word) -> Result<bool> {
        if hp.is_empty() || !self.is_left_divisor(hp, &st.g2) {
            return Ok(false);
        }
        let new_g1 = self.nf(&[st.g1.letters(), &inverse(h)].concat());
        let new_g2 = self.nf(&[&inverse(hp), st.g2.letters()].concat());
        Ok(self.is_permissible(&new_g1, &[h.letters(), st.h1.letters()].concat())?
            && self.is_permissible(&[st.h2.letters(), hp.letters()].concat(), &new_g2)?)
    }

    /// Nonempty right divisors of `g1` inside the pair, longest first.
    fn pair_right_divisors(&self, ctx: &DihedralContext, g1: &Word) -> Result<Vec<Word>> {
        let (i, j) = ctx.gens();
        let rd = self.rd_ij(g1, i, j)?;
        let mut out: Vec<Word> = self.right_divisors(&rd).into_iter().skip(1).flatten().collect();
        out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| self.order.cmp_lex(a, b)));
        Ok(out)
    }

    fn next_merge_move(&self, st: &State) -> Result<Option<LargeMergeMove>> {
        if st.g1.is_empty() || st.g2.is_empty() {
            return Ok(None);
        }
        if st.r != 0 {
            let (i, j) = st.pair.expect("a nonzero power has a pair");
            return self.pair_move(st, &self.parabolic(i, j)?, true, true);
        }
        // Unrestricted cancellation.
        let mut rights: Vec<Word> = self.right_divisors(&st.g1).into_iter().skip(1).flatten().collect();
        rights.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| self.order.cmp_lex(a, b)));
        for h in &rights {
            let hp = self.nf(&inverse(h));
            if self.admissible(st, h, &hp)? {
                return Ok(Some(LargeMergeMove {
                    kind: MoveKind::Cancellation,
                    pair: None,
                    h: h.clone(),
                    h_prime: hp,
                    delta_r: 0,
                }));
            }
        }
        let finite_pairs: Vec<(usize, usize)> =
            self.pres.pairs().filter(|&(i, j)| self.pres.finite_label(i, j).is_some()).collect();
        for &(i, j) in &finite_pairs {
            if let Some(mv) = self.pair_move(st, &self.parabolic(i, j)?, false, false)? {
                if mv.kind == MoveKind::DoubleDelta {
                    return Ok(Some(mv));
                }
            }
        }
        for &(i, j) in &finite_pairs {
            if let Some(mv) = self.pair_move(st, &self.parabolic(i, j)?, false, true)? {
                return Ok(Some(mv));
            }
        }
        Ok(None)
    }

    /// A move inside one pair: cancellation if `cancel`, then double-Δ, then
    /// Δ-extraction if `extract`.
    fn pair_move(
        &self,
        st: &State,
        ctx: &DihedralContext,
        cancel: bool,
        extract: bool,
    ) -> Result<Option<LargeMergeMove>> {
        let pair = Some(ctx.gens());
        let rights = self.pair_right_divisors(ctx, &st.g1)?;
        if rights.is_empty() {
            return Ok(None);
        }
        let finite = ctx.label().is_finite();
        let conj = |w: &[Letter]| -> Result<Word> {
            if finite {
                ctx.delta_conj(w, st.r)
            } else {
                Ok(Word::from_letters(w.to_vec()))
            }
        };
        if cancel {
            for h in &rights {
                let hp = self.nf(&conj(&inverse(h))?);
                if self.admissible(st, h, &hp)? {
                    return Ok(Some(LargeMergeMove {
                        kind: MoveKind::Cancellation,
                        pair,
                        h: h.clone(),
                        h_prime: hp,
                        delta_r: 0,
                    }));
                }
            }
        }
        if !finite {
            return Ok(None);
        }
        if sign_class(&st.g1) != SignClass::Unsigned && sign_class(&st.g2) != SignClass::Unsigned {
            for eps in [1i64, -1] {
                let h = self.nf(&ctx.garside_power(eps)?);
                if rights.contains(&h) && self.admissible(st, &h, &h)? {
                    return Ok(Some(LargeMergeMove {
                        kind: MoveKind::DoubleDelta,
                        pair,
                        h: h.clone(),
                        h_prime: h,
                        delta_r: 2 * eps,
                    }));
                }
            }
        }
        if extract {
            for h in &rights {
                for eps in [1i64, -1] {
                    let target = [&inverse(h), ctx.garside_power(eps)?.letters()].concat();
                    let hp = self.nf(&conj(&target)?);
                    if self.admissible(st, h, &hp)? {
                        return Ok(Some(LargeMergeMove {
                            kind: MoveKind::DeltaExtraction,
                            pair,
                            h: h.clone(),
                            h_prime: hp,
                            delta_r: eps,
                        }));
                    }
                }
            }
        }
        Ok(None)
    }
}
