//! Merging a non-geodesic product `g1 g2` into a triple `(f1, Δ^r, f2)`.

use rustc_hash::FxHashSet;
use serde::Serialize;

use super::permissible::is_permissible_dihedral;
use super::DihedralContext;
use crate::error::Result;
use crate::word::{inverse, sign_class, Letter, SignClass, Word};

/// The three move types, in priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Cancellation,
    DoubleDelta,
    DeltaExtraction,
}

/// One merging step: `g1 ← g1 h⁻¹`, `g2 ← h'⁻¹ g2`, `r ← r + Δr`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergeMove {
    pub kind: MoveKind,
    pub h: Word,
    pub h_prime: Word,
    /// Change in `r`.
    pub delta_r: i64,
}

pub type MergeTrace = Vec<MergeMove>;

/// A merger `(f1, Δ^r, f2)` of `(g1, g2)`, with `g1 = f1 h1` and `g2 = h2 f2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Merger {
    pub f1: Word,
    pub r: i64,
    pub f2: Word,
    pub h1: Word,
    pub h2: Word,
    pub trace: MergeTrace,
}

/// Elements `h` (as normal forms) with `|g h⁻¹| = |g| − |h|`.
pub(crate) fn right_divisors(ctx: &DihedralContext, g: &[Letter]) -> Result<Vec<Word>> {
    let mut seen: FxHashSet<Word> = FxHashSet::default();
    for rep in ctx.geodesics(g)? {
        for s in 0..=rep.len() {
            seen.insert(ctx.nf(&rep[s..])?);
        }
    }
    Ok(seen.into_iter().collect())
}

/// Elements `h` (as normal forms) with `|h⁻¹ g| = |g| − |h|`.
pub(crate) fn left_divisors(ctx: &DihedralContext, g: &[Letter]) -> Result<FxHashSet<Word>> {
    let mut seen: FxHashSet<Word> = FxHashSet::default();
    for rep in ctx.geodesics(g)? {
        for e in 0..=rep.len() {
            seen.insert(ctx.nf(&rep[..e])?);
        }
    }
    Ok(seen)
}

fn cat(u: &[Letter], v: &[Letter]) -> Vec<Letter> {
    let mut w = u.to_vec();
    w.extend_from_slice(v);
    w
}

struct State {
    g1: Word,
    g2: Word,
    h1: Word,
    h2: Word,
    r: i64,
}

/// Merging schedule run unconditionally, even on geodesic products.
///
/// Moves of lower type win; within a type the longest `h`, then the
/// shortlex-least `h`, then `ε = +1`.
pub fn merging_process(ctx: &DihedralContext, g1: &[Letter], g2: &[Letter]) -> Result<Merger> {
    let mut st = State { g1: ctx.nf(g1)?, g2: ctx.nf(g2)?, h1: Word::new(), h2: Word::new(), r: 0 };
    let mut trace = Vec::new();
    while let Some(mv) = next_move(ctx, &st)? {
        st.g1 = ctx.nf(&cat(&st.g1, &inverse(&mv.h)))?;
        st.g2 = ctx.nf(&cat(&inverse(&mv.h_prime), &st.g2))?;
        st.h1 = ctx.nf(&cat(&mv.h, &st.h1))?;
        st.h2 = ctx.nf(&cat(&st.h2, &mv.h_prime))?;
        st.r += mv.delta_r;
        trace.push(mv);
    }
    Ok(Merger { f1: st.g1, r: st.r, f2: st.g2, h1: st.h1, h2: st.h2, trace })
}

/// Merger of `(g1, g2)`; a geodesic product is returned unsplit as `(g1, Δ⁰, g2)`.
pub fn merge_dihedral(ctx: &DihedralContext, g1: &[Letter], g2: &[Letter]) -> Result<Merger> {
    let u = ctx.nf(g1)?;
    let v = ctx.nf(g2)?;
    if ctx.length(&cat(&u, &v))? == u.len() + v.len() {
        return Ok(Merger { f1: u, r: 0, f2: v, h1: Word::new(), h2: Word::new(), trace: Vec::new() });
    }
    merging_process(ctx, &u, &v)
}

/// Replay `trace` from `(g1, Δ⁰, g2)`.
pub fn replay(ctx: &DihedralContext, g1: &[Letter], g2: &[Letter], trace: &[MergeMove]) -> Result<(Word, i64, Word)> {
    let mut f1 = ctx.nf(g1)?;
    let mut f2 = ctx.nf(g2)?;
    let mut r = 0;
    for mv in trace {
        f1 = ctx.nf(&cat(&f1, &inverse(&mv.h)))?;
        f2 = ctx.nf(&cat(&inverse(&mv.h_prime), &f2))?;
        r += mv.delta_r;
    }
    Ok((f1, r, f2))
}

fn next_move(ctx: &DihedralContext, st: &State) -> Result<Option<MergeMove>> {
    if st.g1.is_empty() || st.g2.is_empty() {
        return Ok(None);
    }
    let mut rights = right_divisors(ctx, &st.g1)?;
    rights.retain(|h| !h.is_empty());
    rights.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| ctx.order().cmp_lex(a, b)));
    let lefts = left_divisors(ctx, &st.g2)?;
    let finite = ctx.label().is_finite();

    // Side conditions shared by all move types.
    let admissible = |h: &Word, hp: &Word| -> Result<bool> {
        if hp.is_empty() || !lefts.contains(hp) {
            return Ok(false);
        }
        let new_g1 = cat(&st.g1, &inverse(h));
        let new_g2 = cat(&inverse(hp), &st.g2);
        Ok(is_permissible_dihedral(ctx, &new_g1, &cat(h, &st.h1))?
            && is_permissible_dihedral(ctx, &cat(&st.h2, hp), &new_g2)?)
    };
    let conj = |w: &[Letter]| -> Result<Word> {
        if finite {
            ctx.delta_conj(w, st.r)
        } else {
            Ok(Word::from_letters(w.to_vec()))
        }
    };

    for h in &rights {
        let hp = ctx.nf(&conj(&inverse(h))?)?;
        if admissible(h, &hp)? {
            return Ok(Some(MergeMove { kind: MoveKind::Cancellation, h: h.clone(), h_prime: hp, delta_r: 0 }));
        }
    }
    if !finite {
        return Ok(None);
    }
    if sign_class(&st.g1) != SignClass::Unsigned && sign_class(&st.g2) != SignClass::Unsigned {
        for eps in [1i64, -1] {
            let d = ctx.garside_power(eps)?;
            let h = ctx.nf(&d)?;
            if rights.contains(&h) && admissible(&h, &h)? {
                return Ok(Some(MergeMove { kind: MoveKind::DoubleDelta, h: h.clone(), h_prime: h, delta_r: 2 * eps }));
            }
        }
    }
    for h in &rights {
        for eps in [1i64, -1] {
            let target = cat(&inverse(h), &ctx.garside_power(eps)?);
            let hp = ctx.nf(&conj(&target)?)?;
            if admissible(h, &hp)? {
                return Ok(Some(MergeMove {
                    kind: MoveKind::DeltaExtraction,
                    h: h.clone(),
                    h_prime: hp,
                    delta_r: eps,
                }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    fn w(s: &str) -> Vec<Letter> {
        parse_word(s, 2).unwrap().into_letters()
    }

    #[test]
    fn full_cancellation() {
        let d = DihedralContext::finite(3);
        let m = merge_dihedral(&d, &w("ab"), &w("BA")).unwrap();
        assert!(m.f1.is_empty() && m.f2.is_empty() && m.r == 0);
        assert_eq!(m.trace.len(), 1);
        assert_eq!(m.trace[0].kind, MoveKind::Cancellation);
    }

    #[test]
    fn extraction_of_one_delta() {
        let d = DihedralContext::finite(3);
        // abab is geodesic, so the public entry point leaves it alone.
        let m = merge_dihedral(&d, &w("ab"), &w("ab")).unwrap();
        assert_eq!((m.r, m.f1.len(), m.f2.len()), (0, 2, 2));
        let m = merging_process(&d, &w("ab"), &w("ab")).unwrap();
        assert_eq!(m.r, 1);
        assert_eq!(m.h1.to_string(), "ab");
        assert_eq!(m.trace[0].kind, MoveKind::DeltaExtraction);
        // h1 h2 = Δ and the triple represents abab.
        assert!(d.equal(&cat(&m.h1, &m.h2), &w("aba")).unwrap());
        let prod = cat(&cat(&m.f1, &w("aba")), &m.f2);
        assert!(d.equal(&prod, &w("abab")).unwrap());
    }

    #[test]
    fn trivial_cases() {
        let d = DihedralContext::finite(3);
        let m = merge_dihedral(&d, &w("ab"), &[]).unwrap();
        assert_eq!((m.f1.to_string(), m.r, m.f2.to_string()), ("ab".into(), 0, "1".into()));
        let m = merge_dihedral(&d, &w("ab"), &w("a")).unwrap();
        assert!(m.trace.is_empty());
    }

    #[test]
    fn replay_reproduces() {
        let d = DihedralContext::finite(4);
        let (g1, g2) = (w("abaB"), w("bAba"));
        let m = merge_dihedral(&d, &g1, &g2).unwrap();
        let (f1, r, f2) = replay(&d, &g1, &g2, &m.trace).unwrap();
        assert_eq!((f1, r, f2), (m.f1, m.r, m.f2));
    }
}
