//! Compression: turning a merger `(f1, Δ^r, f2)` back into a geodesic word.

use serde::Serialize;

use super::critical::{
    alternating_runs, apply_over_critical_unchecked, over_critical_candidates, validate_over_critical, OverCritical,
    Pair,
};
use super::reduce::{reduce_finite, DihedralMove};
use super::DihedralContext;
use crate::error::{Error, Result};
use crate::word::{is_freely_reduced, sign_class, Letter, SignClass, Word};

/// Where the Garside power of the merger sides sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompressionShape {
    /// Neither side is divisible by Δ^{±1}.
    Plain,
    /// `f1 = u Δ^{r0}`, `f2 = v`.
    LeftCarries,
    /// `f1 = u`, `f2 = Δ^{r0} v`.
    RightCarries,
}

/// Record of one compression run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Compression {
    pub shape: CompressionShape,
    pub r0: i64,
    pub r1: i64,
    pub u: Word,
    pub v: Word,
    pub u1: Word,
    pub v1: Word,
    /// Moves taking `u1` to `u2`; at most one length reducing τ.
    pub u1_moves: Vec<DihedralMove>,
    pub u2: Word,
    /// Paired moves straddling the `u | v` boundary.
    pub paired_moves: Vec<OverCritical>,
    pub u3: Word,
    pub v3: Word,
    pub v4: Word,
    pub r_prime: i64,
    pub u4: Word,
    pub s: i64,
    /// `u4 · δ^{r'−s}(v4) · Δ^s`.
    pub word: Word,
    /// κ, the element of `u4`, as a normal form.
    pub kappa: Word,
}

impl Compression {
    /// `u4 δ^{r'−s}(v4)`, the part before the Garside power.
    pub fn unsigned_part(&self) -> &[Letter] {
        &self.word[..self.u4.len() + self.v4.len()]
    }
}

fn cat(u: &[Letter], v: &[Letter]) -> Vec<Letter> {
    let mut w = u.to_vec();
    w.extend_from_slice(v);
    w
}

/// Δ^{±1} spelt so that it does not cancel against `prev`.
fn garside_after(pair: &Pair, prev: Option<Letter>, positive: bool) -> Vec<Letter> {
    let a = pair.garside(pair.i, positive);
    match prev {
        Some(p) if p == a[0].inverse() => pair.garside(pair.j, positive),
        _ => a,
    }
}

/// Absorb Garside powers into `w` from the right: `w Δ^r → w' Δ^{r'}`, one Δ per move.
///
/// Each move pairs the rightmost maximal alternating block of sign opposite to
/// `r` with one Δ^{±1}. Stops when `r = 0` or no such block remains.
fn absorb(pair: &Pair, mut w: Vec<Letter>, mut r: i64) -> (Vec<Letter>, i64) {
    let m = pair.m as usize;
    while r != 0 {
        let positive_delta = r > 0;
        let runs = alternating_runs(&w, !positive_delta);
        let Some(run) = runs.last().copied() else { break };
        let len = run.len.min(m);
        let start = run.end() - len;
        let mut host = w.clone();
        host.extend(garside_after(pair, w.last().copied(), positive_delta));
        let oc = OverCritical {
            start,
            end: host.len(),
            p: if positive_delta { m as u32 } else { len as u32 },
            n: if positive_delta { len as u32 } else { m as u32 },
            positive_first: !positive_delta,
        };
        debug_assert!(validate_over_critical(&host, &oc, pair).is_ok());
        w = apply_over_critical_unchecked(&host, &oc, pair);
        r -= r.signum();
    }
    (w, r)
}

/// Compress the triple `(f1, Δ^r, f2)`.
pub fn compress(ctx: &DihedralContext, f1: &[Letter], r: i64, f2: &[Letter]) -> Result<Compression> {
    let pair = ctx.pair()?;
    let m = pair.m as usize;
    let f1 = ctx.nf(f1)?;
    let f2 = ctx.nf(f2)?;
    let d_of = |f: &Word| -> Result<i64> {
        if sign_class(f) == SignClass::Unsigned {
            Ok(0)
        } else {
            ctx.delta_power(f)
        }
    };
    let (d1, d2) = (d_of(&f1)?, d_of(&f2)?);
    let (shape, r0) = match (d1, d2) {
        (0, 0) => (CompressionShape::Plain, 0),
        (d, 0) => (CompressionShape::LeftCarries, d),
        (0, d) => (CompressionShape::RightCarries, d),
        _ => return Err(Error::Shape("both sides divisible by a Garside power")),
    };
    if r != 0 && r0 != 0 && r.signum() != r0.signum() {
        return Err(Error::Shape("side Garside power has the opposite sign to r"));
    }
    let strip = ctx.garside_power(-r0)?;
    let (u, v) = match shape {
        CompressionShape::LeftCarries => (ctx.nf(&cat(&f1, &strip))?, f2.clone()),
        CompressionShape::RightCarries => (f1.clone(), ctx.nf(&cat(&strip, &f2))?),
        CompressionShape::Plain => (f1.clone(), f2.clone()),
    };
    let r1 = r + r0;
    let joined = cat(&u, &pair.delta_pow(&v, r1));
    if !is_freely_reduced(&joined) {
        return Err(Error::Shape("u δ(v) is not freely reduced"));
    }

    // u1: the shortest prefix containing u that ends a maximal alternating block.
    let cut = if u.is_empty() {
        0
    } else {
        let sign = joined[u.len() - 1].is_positive();
        alternating_runs(&joined, sign)
            .into_iter()
            .find(|run| run.start < u.len() && u.len() <= run.end())
            .map(|run| run.end())
            .unwrap_or(u.len())
    };
    let u1 = joined[..cut].to_vec();
    let v1 = joined[cut..].to_vec();
    let red = reduce_finite(&u1, &pair);
    let u2 = red.word.clone().into_letters();

    // Paired moves across the boundary.
    let mut word = cat(&u2, &v1);
    let mut boundary = u2.len();
    let mut paired_moves = Vec::new();
    loop {
        let straddling = over_critical_candidates(&word, &pair)
            .into_iter()
            .filter(|oc| {
                let head = if oc.positive_first { oc.p } else { oc.n } as usize;
                let tail = if oc.positive_first { oc.n } else { oc.p } as usize;
                oc.start + head <= boundary
                    && oc.end - tail >= boundary
                    && validate_over_critical(&word, oc, &pair).is_ok()
            })
            .min_by_key(|oc| (oc.p as usize >= m || oc.n as usize >= m, oc.end, oc.end - oc.start));
        let Some(oc) = straddling else { break };
        let head = if oc.positive_first { oc.p } else { oc.n } as usize;
        word = apply_over_critical_unchecked(&word, &oc, &pair);
        boundary = boundary + m - 2 * head;
        paired_moves.push(oc);
    }
    if !ctx.is_geodesic(&word)? {
        return Err(Error::Shape("boundary moves did not reach a geodesic"));
    }
    let u3 = word[..boundary].to_vec();
    let v3 = word[boundary..].to_vec();

    let (v4, r_prime) = absorb(&pair, v3.clone(), r1);
    let (u4, s) = absorb(&pair, u3.clone(), r_prime);
    let mut out = cat(&u4, &pair.delta_pow(&v4, r_prime - s));
    for _ in 0..s.unsigned_abs() {
        let d = garside_after(&pair, out.last().copied(), s > 0);
        out.extend(d);
    }
    let kappa = ctx.nf(&u4)?;
    Ok(Compression {
        shape,
        r0,
        r1,
        u,
        v,
        u1: Word::from_letters(u1),
        v1: Word::from_letters(v1),
        u1_moves: red.moves,
        u2: Word::from_letters(u2),
        paired_moves,
        u3: Word::from_letters(u3),
        v3: Word::from_letters(v3),
        v4: Word::from_letters(v4),
        r_prime,
        u4: Word::from_letters(u4),
        s,
        word: Word::from_letters(out),
        kappa,
    })
}

/// Whether some Δ^{±1} divides the element of `w` (on either side).
pub fn has_garside_divisor(ctx: &DihedralContext, w: &[Letter]) -> Result<bool> {
    let g = ctx.geodesic(w)?;
    if sign_class(&g) == SignClass::Unsigned || g.is_empty() {
        return Ok(false);
    }
    Ok(ctx.delta_power(&g)? != 0)
}
