//! The merger sets `S(g,k,l)`, `T(k,l)` and the split of `S` into three classes.

use rustc_hash::FxHashSet;
use serde::Serialize;

use super::{ArtinGroup, LargeMerger};
use crate::dihedral::is_permissible_dihedral;
use crate::error::{Error, Result};
use crate::oracle::Ball;
use crate::word::{inverse, syllables, Letter, Word};

/// Mergers of all factorisations of `g` into lengths `k` and `l`.
#[derive(Debug, Clone, Serialize)]
pub struct STSet {
    pub g: Word,
    pub k: usize,
    pub l: usize,
    /// One merger per distinct triple `(f1, Δ_ij^r, f2)`.
    pub s: Vec<LargeMerger>,
    /// Distinct middle elements as `(pair, r)`; the pair is `None` when `r = 0`.
    pub t: Vec<(Option<(usize, usize)>, i64)>,
    pub max_p1: usize,
    pub max_p2: usize,
    /// `K · min(k, l)` with `K` one less than the largest finite label.
    pub p_bound: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SClass {
    /// `r = 0` and both outer factors are powers of one generator.
    S0,
    /// The reduction to a pair gives a geodesic factorisation `f1'' f̂ f2''`.
    S1,
    S2,
}

/// Witness for a triple in the second non-trivial class: `f̂ = a^s b^t` and
/// `f1'' a^s = e1 c^q`, `b^t f2'' = c^{-q} e2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingWitness {
    pub a: Letter,
    pub s: usize,
    pub b: Letter,
    pub t: usize,
    pub c: Letter,
    pub q: usize,
    pub e1: Word,
    pub e2: Word,
}

/// Reduction of one triple to its 2-generator core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitWitness {
    pub class: SClass,
    pub pair: Option<(usize, usize)>,
    pub f1_outer: Word,
    pub f1_inner: Word,
    pub f_hat: Word,
    pub f2_inner: Word,
    pub f2_outer: Word,
    pub h1_inner: Word,
    pub h2_inner: Word,
    pub k_inner: usize,
    pub l_inner: usize,
    pub crossing: Option<CrossingWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SDecomposition {
    pub witnesses: Vec<SplitWitness>,
    /// Property failures, one line each; empty when every check passed.
    pub violations: Vec<String>,
}

impl SDecomposition {
    pub fn count(&self, class: SClass) -> usize {
        self.witnesses.iter().filter(|w| w.class == class).count()
    }
}

fn power_of_one_generator(w: &Word) -> Option<usize> {
    let g = w.first()?.gen();
    w.letters().iter().all(|a| a.gen() == g).then_some(g)
}

impl ArtinGroup {
    /// `S(g,k,l)` and the middle elements of its triples. Left factors come
    /// from sphere `k` of `ball`.
    pub fn build_s_t(&self, ball: &Ball, g: &[Letter], k: usize, l: usize) -> Result<STSet> {
        self.require_33m()?;
        let g = self.nf(g);
        if k > ball.complete_radius() {
            return Err(Error::OutsideBall { radius: ball.complete_radius() });
        }
        let big_k = self.pres.max_finite_label().map_or(1, |m| m as usize - 1);
        let mut out =
            STSet { g: g.clone(), k, l, s: Vec::new(), t: Vec::new(), max_p1: 0, max_p2: 0, p_bound: big_k * k.min(l) };
        if k + l < g.len() {
            return Ok(out);
        }
        let mut seen: FxHashSet<(Word, Option<(usize, usize)>, i64, Word)> = FxHashSet::default();
        let mut middles = FxHashSet::default();
        for g1 in ball.sphere(k) {
            let g2 = self.nf(&[&inverse(g1), g.letters()].concat());
            if g2.len() != l {
                continue;
            }
            let m = self.merge(g1, &g2)?;
            let pair = if m.r == 0 { None } else { m.pair };
            out.max_p1 = out.max_p1.max(m.h1.len());
            out.max_p2 = out.max_p2.max(m.h2.len());
            middles.insert((pair, m.r));
            if seen.insert((m.f1.clone(), pair, m.r, m.f2.clone())) {
                out.s.push(m);
            }
        }
        out.t = middles.into_iter().collect();
        out.t.sort();
        Ok(out)
    }

    /// Pair used to reduce a triple with `r = 0`: the least pair, finite labels
    /// first, whose facing divisors are not both powers of one of its generators.
    pub(crate) fn split_pair(&self, f1: &Word, f2: &Word) -> Result<Option<(usize, usize)>> {
        let mut pairs: Vec<(usize, usize)> = self.pres.pairs().collect();
        pairs.sort_by_key(|&(i, j)| (self.pres.finite_label(i, j).is_none(), i, j));
        for (i, j) in pairs {
            let a = self.rd_ij(f1, i, j)?;
            let b = self.ld_ij(f2, i, j)?;
            let cyclic = [i, j].iter().any(|&x| {
                let inside = |w: &Word| w.letters().iter().all(|c| c.gen() == x);
                inside(&a) && inside(&b)
            });
            if !cyclic {
                return Ok(Some((i, j)));
            }
        }
        Ok(None)
    }

    fn max_right_power(&self, w: &Word, c: Letter) -> usize {
        let mut cur = w.clone();
        let mut q = 0;
        loop {
            let next = self.nf(cur.concat(&[c.inverse()]).letters());
            if next.len() + 1 != cur.len() {
                return q;
            }
            cur = next;
            q += 1;
        }
    }

    /// Classify every triple of `st` and check the reduction to a pair.
    pub fn split_s(&self, st: &STSet) -> Result<SDecomposition> {
        let g = &st.g;
        let mut witnesses = Vec::new();
        let mut violations = Vec::new();
        for m in &st.s {
            let tag = format!("g={} k={} l={} triple=({}, r={}, {})", g, st.k, st.l, m.f1, m.r, m.f2);
            if m.r == 0 {
                let mut names = crate::word::names(&m.f1);
                names.extend(crate::word::names(&m.f2));
                names.sort_unstable();
                names.dedup();
                let trivial = names.len() <= 1;
                if trivial {
                    witnesses.push(SplitWitness {
                        class: SClass::S0,
                        pair: None,
                        f1_outer: Word::new(),
                        f1_inner: m.f1.clone(),
                        f_hat: g.clone(),
                        f2_inner: m.f2.clone(),
                        f2_outer: Word::new(),
                        h1_inner: m.h1.clone(),
                        h2_inner: m.h2.clone(),
                        k_inner: st.k,
                        l_inner: st.l,
                        crossing: None,
                    });
                    continue;
                }
            }
            let pair = if m.r != 0 { m.pair } else { self.split_pair(&m.f1, &m.f2)? };
            let Some((i, j)) = pair else {
                violations.push(format!("{tag}: no pair separates the outer factors"));
                continue;
            };
            let f1p = self.rd_ij(&m.f1, i, j)?;
            let h1p = self.ld_ij(&m.h1, i, j)?;
            let f2p = self.ld_ij(&m.f2, i, j)?;
            let h2p = self.rd_ij(&m.h2, i, j)?;
            let left = self.nf(&[f1p.letters(), h1p.letters()].concat());
            let right = self.nf(&[h2p.letters(), f2p.letters()].concat());
            let f_hat = self.nf(&[left.letters(), right.letters()].concat());
            let f1pp = self.nf(&[m.f1.letters(), &inverse(&f1p)].concat());
            let f2pp = self.nf(&[&inverse(&f2p), m.f2.letters()].concat());

            // Outer parts have no divisor in the pair on the facing side.
            if !self.rd_ij(&f1pp, i, j)?.is_empty() || !self.ld_ij(&f2pp, i, j)?.is_empty() {
                violations.push(format!("{tag}: outer factor keeps a divisor in pair ({},{})", i + 1, j + 1));
            }
            if !self.equal(&[f1pp.letters(), f_hat.letters(), f2pp.letters()].concat(), g) {
                violations.push(format!("{tag}: f1'' f^ f2'' differs from g"));
            }
            // The inner triple is a merger inside the pair.
            let ctx = self.parabolic(i, j)?;
            let middle = if m.r == 0 { Word::new() } else { ctx.garside_power(m.r)? };
            let inner_ok = self.equal(&[h1p.letters(), h2p.letters()].concat(), &middle)
                && left.len() == f1p.len() + h1p.len()
                && right.len() == h2p.len() + f2p.len()
                && is_permissible_dihedral(&ctx, &f1p, &h1p)?
                && is_permissible_dihedral(&ctx, &h2p, &f2p)?
                && left.len() <= st.k
                && right.len() <= st.l;
            if !inner_ok {
                violations.push(format!("{tag}: inner triple is not a merger in pair ({},{})", i + 1, j + 1));
            }
            if power_of_one_generator(&f_hat).is_some() || f_hat.is_empty() {
                violations.push(format!("{tag}: f^ = {f_hat} lies in a cyclic subgroup"));
            }
            let geodesic = f1pp.len() + f_hat.len() + f2pp.len() == g.len();
            let mut crossing = None;
            if !geodesic {
                crossing = self.crossing_witness(&f1pp, &f_hat, &f2pp, (i, j), st.k, &tag, &mut violations);
            }
            witnesses.push(SplitWitness {
                class: if geodesic { SClass::S1 } else { SClass::S2 },
                pair,
                f1_outer: f1pp,
                f1_inner: f1p,
                f_hat,
                f2_inner: f2p,
                f2_outer: f2pp,
                h1_inner: h1p,
                h2_inner: h2p,
                k_inner: left.len(),
                l_inner: right.len(),
                crossing,
            });
        }
        Ok(SDecomposition { witnesses, violations })
    }

    #[allow(clippy::too_many_arguments)]
    fn crossing_witness(
        &self,
        f1pp: &Word,
        f_hat: &Word,
        f2pp: &Word,
        (i, j): (usize, usize),
        k: usize,
        tag: &str,
        violations: &mut Vec<String>,
    ) -> Option<CrossingWitness> {
        let syl = syllables(f_hat);
        if syl.len() != 2 || syl[0].letter.gen() == syl[1].letter.gen() {
            violations.push(format!("{tag}: f^ = {f_hat} is not a^s b^t"));
            return None;
        }
        if self.pres.finite_label(i, j).is_none() {
            violations.push(format!("{tag}: crossing pair ({},{}) has an infinite label", i + 1, j + 1));
        }
        let (a, s, b, t) = (syl[0].letter, syl[0].len, syl[1].letter, syl[1].len);
        let left = self.nf(&[f1pp.letters(), &vec![a; s]].concat());
        let right = self.nf(&[&vec![b; t], f2pp.letters()].concat());
        let mut found = None;
        for c in self.letters().filter(|c| c.gen() != i && c.gen() != j) {
            let q = self.max_right_power(&left, c).min(self.max_right_power(&right.inverse(), c));
            if q > 0 {
                found = Some((c, q));
                break;
            }
        }
        let Some((c, q)) = found else {
            violations.push(format!("{tag}: no crossing letter c"));
            return None;
        };
        let e1 = self.nf(&[left.letters(), &vec![c.inverse(); q]].concat());
        let e2 = self.nf(&[&vec![c; q], right.letters()].concat());
        if e1.len() + q != left.len() || e2.len() + q != right.len() {
            violations.push(format!("{tag}: e1 c^q or c^-q e2 is not geodesic"));
        }
        if !self.is_geodesic_factorisation(&e1, &e2) {
            violations.push(format!("{tag}: e1 e2 is not a geodesic factorisation"));
        }
        if q > k {
            violations.push(format!("{tag}: q = {q} exceeds k = {k}"));
        }
        Some(CrossingWitness { a, s, b, t, c, q, e1, e2 })
    }
}
