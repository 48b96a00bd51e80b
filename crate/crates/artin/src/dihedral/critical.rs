//! Alternating blocks, critical words and the τ involution on a generator pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{alternating_raw, is_freely_reduced, Letter, Side};

/// Two generators with a finite label `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pair {
    pub i: usize,
    pub j: usize,
    pub m: u32,
}

impl Pair {
    pub fn new(i: usize, j: usize, m: u32) -> Self {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Pair { i, j, m }
    }

    pub fn contains(&self, a: Letter) -> bool {
        a.gen() == self.i || a.gen() == self.j
    }

    pub fn other(&self, gen: usize) -> usize {
        if gen == self.i {
            self.j
        } else {
            self.i
        }
    }

    /// Conjugation by Δ on letters: identity for even m, name swap for odd m.
    pub fn delta(&self, a: Letter) -> Letter {
        if self.m % 2 == 0 {
            a
        } else {
            a.with_gen(self.other(a.gen()))
        }
    }

    pub fn delta_word(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter().map(|&a| self.delta(a)).collect()
    }

    /// `delta` applied `r` times.
    pub fn delta_pow(&self, w: &[Letter], r: i64) -> Vec<Letter> {
        if r.rem_euclid(2) == 0 {
            w.to_vec()
        } else {
            self.delta_word(w)
        }
    }

    /// Δ^{±1} spelt starting with generator `first`.
    pub fn garside(&self, first: usize, positive: bool) -> Vec<Letter> {
        let a = Letter::new(first, positive);
        let b = Letter::new(self.other(first), positive);
        alternating_raw(a, b, self.m as usize, Side::LeftStart)
    }

    /// Δ^{±1} spelt ending with generator `last`.
    pub fn garside_ending(&self, last: usize, positive: bool) -> Vec<Letter> {
        let a = Letter::new(last, positive);
        let b = Letter::new(self.other(last), positive);
        alternating_raw(a, b, self.m as usize, Side::RightEnd)
    }

    pub fn owns(&self, w: &[Letter]) -> bool {
        w.iter().all(|&a| self.contains(a))
    }
}

/// A maximal alternating block `[start, start + len)` of one sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

impl Run {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// Maximal alternating runs of letters of the given sign, left to right.
pub fn alternating_runs(w: &[Letter], positive: bool) -> Vec<Run> {
    let mut runs: Vec<Run> = Vec::new();
    for (k, a) in w.iter().enumerate() {
        if a.is_positive() != positive {
            continue;
        }
        let extends = k > 0 && {
            let b = w[k - 1];
            b.is_positive() == positive && b.gen() != a.gen()
        };
        match runs.last_mut() {
            Some(r) if extends && r.end() == k => r.len += 1,
            _ => runs.push(Run { start: k, len: 1 }),
        }
    }
    runs
}

/// `(p(w), n(w))`: longest positive and negative alternating subwords, capped at `m`.
pub fn pn_raw(w: &[Letter], m: u32) -> (u32, u32) {
    let cap = |runs: Vec<Run>| runs.iter().map(|r| r.len as u32).max().unwrap_or(0).min(m);
    (cap(alternating_runs(w, true)), cap(alternating_runs(w, false)))
}

/// The shapes of critical words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriticalForm {
    /// `_p(x,y) ξ (z⁻¹,t⁻¹)_n`
    UnsignedPositiveFirst,
    /// `_n(x⁻¹,y⁻¹) ξ (z,t)_p`
    UnsignedNegativeFirst,
    /// `_m(x,y)` or its negative.
    Garside,
    /// `_m(x,y) ξ` or its negative.
    GarsidePrefix,
    /// `ξ (x,y)_m` or its negative.
    GarsideSuffix,
}

/// A classified critical word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalWord {
    pub word: Vec<Letter>,
    pub form: CriticalForm,
    /// Sign of the word for the signed forms; unused for unsigned ones.
    pub positive: bool,
    pub p: u32,
    pub n: u32,
    /// Interior `ξ` as a range of `word`.
    pub interior: (usize, usize),
}

impl CriticalWord {
    pub fn tau(&self, pair: &Pair) -> Vec<Letter> {
        tau_raw(&self.word, self.form, self.positive, self.p, self.n, pair)
    }
}

/// Classify `w` as critical for `pair`, or `None`.
///
/// The interior ξ is restricted so that the displayed end blocks are maximal
/// alternating blocks and `p`, `n` equal `p(w)`, `n(w)`.
pub fn classify_critical(w: &[Letter], pair: &Pair) -> Option<CriticalWord> {
    let l = w.len();
    if l < 2 || !pair.owns(w) || !is_freely_reduced(w) {
        return None;
    }
    let m = pair.m;
    let pos = alternating_runs(w, true);
    let neg = alternating_runs(w, false);
    let p = pos.iter().map(|r| r.len as u32).max().unwrap_or(0).min(m);
    let n = neg.iter().map(|r| r.len as u32).max().unwrap_or(0).min(m);
    if p + n != m {
        return None;
    }
    let make = |form, positive, interior| Some(CriticalWord { word: w.to_vec(), form, positive, p, n, interior });
    if p > 0 && n > 0 {
        let (pu, nu) = (p as usize, n as usize);
        let first = if w[0].is_positive() { pos.first() } else { neg.first() }?;
        let last = if w[l - 1].is_positive() { pos.last() } else { neg.last() }?;
        if first.start != 0 || last.end() != l || w[0].is_positive() == w[l - 1].is_positive() {
            return None;
        }
        return if w[0].is_positive() {
            (first.len == pu && last.len == nu)
                .then(|| make(CriticalForm::UnsignedPositiveFirst, false, (pu, l - nu)))?
        } else {
            (first.len == nu && last.len == pu)
                .then(|| make(CriticalForm::UnsignedNegativeFirst, false, (nu, l - pu)))?
        };
    }
    let positive = n == 0;
    let runs = if positive { &pos } else { &neg };
    let mu = m as usize;
    let windows: usize = runs.iter().map(|r| (r.len + 1).saturating_sub(mu)).sum();
    if windows != 1 {
        return None;
    }
    let run = runs.iter().find(|r| r.len >= mu)?;
    if l == mu {
        make(CriticalForm::Garside, positive, (0, 0))
    } else if run.start == 0 {
        make(CriticalForm::GarsidePrefix, positive, (mu, l))
    } else if run.end() == l {
        make(CriticalForm::GarsideSuffix, positive, (0, l - mu))
    } else {
        None
    }
}

/// τ on a critical word. Fails on non-critical input.
pub fn tau(w: &[Letter], pair: &Pair) -> Result<Vec<Letter>> {
    classify_critical(w, pair).map(|c| c.tau(pair)).ok_or(Error::NotCritical)
}

fn tau_raw(w: &[Letter], form: CriticalForm, positive: bool, p: u32, n: u32, pair: &Pair) -> Vec<Letter> {
    let l = w.len();
    let (p, n, m) = (p as usize, n as usize, pair.m as usize);
    let mut out = Vec::with_capacity(l);
    match form {
        CriticalForm::UnsignedPositiveFirst => {
            let x = w[0].gen();
            let y = pair.other(x);
            let t = w[l - 1].gen();
            let z = pair.other(t);
            out.extend(alternating_raw(Letter::neg(y), Letter::neg(x), n, Side::LeftStart));
            out.extend(pair.delta_word(&w[p..l - n]));
            out.extend(alternating_raw(Letter::pos(z), Letter::pos(t), p, Side::RightEnd));
        }
        CriticalForm::UnsignedNegativeFirst => {
            let x = w[0].gen();
            let y = pair.other(x);
            let t = w[l - 1].gen();
            let z = pair.other(t);
            out.extend(alternating_raw(Letter::pos(y), Letter::pos(x), p, Side::LeftStart));
            out.extend(pair.delta_word(&w[n..l - p]));
            out.extend(alternating_raw(Letter::neg(z), Letter::neg(t), n, Side::RightEnd));
        }
        CriticalForm::Garside => {
            let y = pair.other(w[0].gen());
            out.extend(pair.garside(y, positive));
        }
        CriticalForm::GarsidePrefix => {
            let xi = &w[m..];
            let z = xi[xi.len() - 1].gen();
            out.extend(pair.delta_word(xi));
            out.extend(pair.garside_ending(pair.other(z), positive));
        }
        CriticalForm::GarsideSuffix => {
            let eta = pair.delta_word(&w[..l - m]);
            out.extend(pair.garside_ending(eta[0].gen(), positive));
            out.extend(eta);
        }
    }
    out
}

/// An over-critical subword occurrence `host[start..end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OverCritical {
    pub start: usize,
    pub end: usize,
    pub p: u32,
    pub n: u32,
    /// The positive block comes first.
    pub positive_first: bool,
}

impl OverCritical {
    /// Length lost by the move.
    pub fn drop(&self, m: u32) -> usize {
        2 * (self.p + self.n - m) as usize
    }
}

fn is_alternating_block(w: &[Letter], positive: bool) -> bool {
    w.iter().all(|a| a.is_positive() == positive) && w.windows(2).all(|q| q[0].gen() != q[1].gen())
}

/// Whether `host[s..e]` is a maximal alternating block of its sign in `host`.
fn is_maximal_block(host: &[Letter], s: usize, e: usize) -> bool {
    let positive = host[s].is_positive();
    let extends =
        |a: Letter, b: Letter| a.is_positive() == positive && b.is_positive() == positive && a.gen() != b.gen();
    !(s > 0 && extends(host[s - 1], host[s])) && !(e < host.len() && extends(host[e - 1], host[e]))
}

/// Check that `oc` is a valid over-critical occurrence in `host`.
pub fn validate_over_critical(host: &[Letter], oc: &OverCritical, pair: &Pair) -> Result<()> {
    let m = pair.m;
    if oc.start >= oc.end || oc.end > host.len() {
        return Err(Error::NotOverCritical("range out of bounds"));
    }
    let u = &host[oc.start..oc.end];
    if !pair.owns(u) {
        return Err(Error::ForeignLetter { i: pair.i + 1, j: pair.j + 1 });
    }
    if !is_freely_reduced(u) {
        return Err(Error::NotOverCritical("subword not freely reduced"));
    }
    if oc.p > m || oc.n > m || oc.p + oc.n <= m || oc.p == 0 || oc.n == 0 {
        return Err(Error::NotOverCritical("need p, n <= m and p + n > m"));
    }
    let (p, n) = (oc.p as usize, oc.n as usize);
    if p + n > u.len() {
        return Err(Error::NotOverCritical("blocks overlap"));
    }
    let (first, last) = if oc.positive_first { (p, n) } else { (n, p) };
    let head_positive = oc.positive_first;
    if !is_alternating_block(&u[..first], head_positive) || !is_alternating_block(&u[u.len() - last..], !head_positive)
    {
        return Err(Error::NotOverCritical("end blocks are not alternating of the right signs"));
    }
    let head = (oc.start, oc.start + first);
    let tail = (oc.end - last, oc.end);
    let (pos_block, neg_block) = if oc.positive_first { (head, tail) } else { (tail, head) };
    if oc.p < m && !is_maximal_block(host, pos_block.0, pos_block.1) {
        return Err(Error::NotOverCritical("positive block is not maximal"));
    }
    if oc.n < m && !is_maximal_block(host, neg_block.0, neg_block.1) {
        return Err(Error::NotOverCritical("negative block is not maximal"));
    }
    Ok(())
}

/// The length reducing τ-move at `oc`; returns the rewritten host.
pub fn apply_length_reducing_tau(host: &[Letter], oc: &OverCritical, pair: &Pair) -> Result<Vec<Letter>> {
    validate_over_critical(host, oc, pair)?;
    Ok(apply_over_critical_unchecked(host, oc, pair))
}

pub(crate) fn apply_over_critical_unchecked(host: &[Letter], oc: &OverCritical, pair: &Pair) -> Vec<Letter> {
    let u = &host[oc.start..oc.end];
    let l = u.len();
    let (p, n, m) = (oc.p as usize, oc.n as usize, pair.m as usize);
    let x = u[0].gen();
    let y = pair.other(x);
    let t = u[l - 1].gen();
    let z = pair.other(t);
    let mut out = Vec::with_capacity(host.len());
    out.extend_from_slice(&host[..oc.start]);
    if oc.positive_first {
        out.extend(alternating_raw(Letter::neg(y), Letter::neg(x), m - p, Side::LeftStart));
        out.extend(pair.delta_word(&u[p..l - n]));
        out.extend(alternating_raw(Letter::pos(z), Letter::pos(t), m - n, Side::RightEnd));
    } else {
        out.extend(alternating_raw(Letter::pos(y), Letter::pos(x), m - n, Side::LeftStart));
        out.extend(pair.delta_word(&u[n..l - p]));
        out.extend(alternating_raw(Letter::neg(z), Letter::neg(t), m - p, Side::RightEnd));
    }
    out.extend_from_slice(&host[oc.end..]);
    out
}

/// Over-critical occurrences built from pairs of alternating blocks.
///
/// Blocks shorter than `m` are whole maximal runs; longer runs contribute the
/// length-`m` window nearest the partner block.
pub fn over_critical_candidates(host: &[Letter], pair: &Pair) -> Vec<OverCritical> {
    let m = pair.m as usize;
    let pos = alternating_runs(host, true);
    let neg = alternating_runs(host, false);
    let mut out = Vec::new();
    for pr in &pos {
        for nr in &neg {
            let (pl, nl) = (pr.len.min(m), nr.len.min(m));
            if pl + nl <= m {
                continue;
            }
            let positive_first = pr.start < nr.start;
            let (start, end) =
                if positive_first { (pr.end() - pl, nr.start + nl) } else { (nr.end() - nl, pr.start + pl) };
            let oc = OverCritical { start, end, p: pl as u32, n: nl as u32, positive_first };
            let u = &host[start..end];
            if pair.owns(u) && is_freely_reduced(u) {
                out.push(oc);
            }
        }
    }
    out
}
