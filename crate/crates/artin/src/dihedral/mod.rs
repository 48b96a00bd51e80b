//! Two-generator Artin groups DA(m), possibly embedded in a larger presentation.

pub mod compress;
pub mod critical;
pub mod merge;
pub mod permissible;
pub mod reduce;

pub use compress::{compress, has_garside_divisor, Compression, CompressionShape};
pub use critical::{
    alternating_runs, apply_length_reducing_tau, classify_critical, over_critical_candidates, pn_raw, tau,
    validate_over_critical, CriticalForm, CriticalWord, OverCritical, Pair, Run,
};
pub use merge::{merge_dihedral, merging_process, replay, MergeMove, MergeTrace, Merger, MoveKind};
pub use permissible::is_permissible_dihedral;
pub use reduce::{DihedralMove, DihedralReduction};

use crate::error::{Error, Result};
use crate::order::LetterOrder;
use crate::presentation::{CoxeterPresentation, Label};
use crate::word::{free_reduce, inverse, sign_class, Letter, SignClass, Word};

/// Generators `i < j` with label `label`, inside an ambient `n`-generator alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralContext {
    i: usize,
    j: usize,
    label: Label,
    order: LetterOrder,
}

impl DihedralContext {
    /// The standard DA(m) on generators 0 and 1.
    pub fn new(label: Label) -> Self {
        Self::with_order(0, 1, label, LetterOrder::default_for(2))
    }

    /// DA(m) with label `m ≥ 2`.
    pub fn finite(m: u32) -> Self {
        Self::new(Label::Finite(m))
    }

    /// The parabolic subgroup on `{i, j}` of `pres`, ordered by the default order.
    pub fn parabolic(pres: &CoxeterPresentation, i: usize, j: usize) -> Result<Self> {
        if i == j || i >= pres.n() || j >= pres.n() {
            return Err(Error::BadPair { i: i + 1, j: j + 1 });
        }
        Ok(Self::with_order(i, j, pres.label(i, j), LetterOrder::default_for(pres.n())))
    }

    pub fn with_order(i: usize, j: usize, label: Label, order: LetterOrder) -> Self {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        DihedralContext { i, j, label, order }
    }

    pub fn gens(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn label(&self) -> Label {
        self.label
    }

    pub fn order(&self) -> &LetterOrder {
        &self.order
    }

    /// The finite pair, or `InfiniteLabel`.
    pub fn pair(&self) -> Result<Pair> {
        match self.label {
            Label::Finite(m) => Ok(Pair::new(self.i, self.j, m)),
            Label::Infinite => Err(Error::InfiniteLabel),
        }
    }

    pub fn owns(&self, w: &[Letter]) -> bool {
        w.iter().all(|a| a.gen() == self.i || a.gen() == self.j)
    }

    fn check(&self, w: &[Letter]) -> Result<()> {
        if self.owns(w) {
            Ok(())
        } else {
            Err(Error::ForeignLetter { i: self.i + 1, j: self.j + 1 })
        }
    }

    /// `(p(w), n(w))`; with an infinite label nothing is capped.
    pub fn pn(&self, w: &[Letter]) -> Result<(u32, u32)> {
        self.check(w)?;
        Ok(pn_raw(w, self.label.finite().unwrap_or(u32::MAX)))
    }

    /// Freely reduced with `p + n ≤ m`.
    pub fn is_geodesic(&self, w: &[Letter]) -> Result<bool> {
        self.check(w)?;
        if !crate::word::is_freely_reduced(w) {
            return Ok(false);
        }
        Ok(match self.label {
            Label::Infinite => true,
            Label::Finite(m) => {
                let (p, n) = pn_raw(w, m);
                p + n <= m
            }
        })
    }

    /// Whether `w` is the unique geodesic for its element (`p + n < m`).
    pub fn is_unique_geodesic(&self, w: &[Letter]) -> Result<bool> {
        self.check(w)?;
        if !crate::word::is_freely_reduced(w) {
            return Ok(false);
        }
        Ok(match self.label {
            Label::Infinite => true,
            Label::Finite(m) => {
                let (p, n) = pn_raw(w, m);
                p + n < m
            }
        })
    }

    /// A geodesic for `w` with the rewriting log.
    pub fn reduce(&self, w: &[Letter]) -> Result<DihedralReduction> {
        self.check(w)?;
        match self.label {
            Label::Infinite => Ok(reduce::free_only(w)),
            Label::Finite(m) => Ok(reduce::reduce_finite(w, &Pair::new(self.i, self.j, m))),
        }
    }

    /// Some geodesic for `w`.
    pub fn geodesic(&self, w: &[Letter]) -> Result<Word> {
        Ok(self.reduce(w)?.word)
    }

    pub fn length(&self, w: &[Letter]) -> Result<usize> {
        Ok(self.reduce(w)?.word.len())
    }

    /// All geodesic words for the element of `w`, sorted shortlex by this order.
    pub fn geodesics(&self, w: &[Letter]) -> Result<Vec<Word>> {
        let g = self.geodesic(w)?;
        let mut all = match self.label {
            Label::Infinite => vec![g],
            Label::Finite(m) => reduce::tau_closure(&g, &Pair::new(self.i, self.j, m), reduce::CLOSURE_CAP)?,
        };
        all.sort_by(|u, v| self.order.cmp_shortlex(u, v));
        Ok(all)
    }

    /// Shortlex normal form for this context's order.
    pub fn nf(&self, w: &[Letter]) -> Result<Word> {
        Ok(self.geodesics(w)?.swap_remove(0))
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> Result<bool> {
        let mut w = inverse(u);
        w.extend_from_slice(v);
        Ok(self.geodesic(&w)?.is_empty())
    }

    /// Geodesic product.
    pub fn multiply(&self, u: &[Letter], v: &[Letter]) -> Result<Word> {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        self.geodesic(&w)
    }

    /// Δ^{±1} starting with the smaller generator.
    pub fn garside(&self, positive: bool) -> Result<Word> {
        Ok(Word::from_letters(self.pair()?.garside(self.i, positive)))
    }

    /// Δ^r as a geodesic word.
    pub fn garside_power(&self, r: i64) -> Result<Word> {
        let pair = self.pair()?;
        let one = pair.garside(self.i, r >= 0);
        Ok(Word::from_letters(one.repeat(r.unsigned_abs() as usize)))
    }

    /// Sign class of the element (of any geodesic for it).
    pub fn sign(&self, w: &[Letter]) -> Result<SignClass> {
        Ok(sign_class(&self.geodesic(w)?))
    }

    /// `d(g)`: the largest `k` with `g = Δ^k g'` and `|g| = k·m + |g'|` for
    /// positive `g`; the negated count for negative `g`.
    ///
    /// Unsigned elements are rejected; no Garside power divides them geodesically.
    pub fn delta_power(&self, w: &[Letter]) -> Result<i64> {
        let pair = self.pair()?;
        let g = self.geodesic(w)?;
        let sign = sign_class(&g);
        if sign == SignClass::Unsigned {
            return Err(Error::Unsigned);
        }
        let positive = sign == SignClass::Positive;
        let m = pair.m as usize;
        let strip = pair.garside(self.i, !positive);
        let mut cur = g.into_letters();
        let mut k = 0i64;
        while cur.len() >= m {
            let mut cand = strip.clone();
            cand.extend_from_slice(&cur);
            let next = reduce::reduce_finite(&cand, &pair).word.into_letters();
            if next.len() + m != cur.len() {
                break;
            }
            cur = next;
            k += 1;
        }
        Ok(if positive { k } else { -k })
    }

    /// Δ-conjugation `δ^r` applied letterwise.
    pub fn delta_conj(&self, w: &[Letter], r: i64) -> Result<Word> {
        Ok(Word::from_letters(self.pair()?.delta_pow(w, r)))
    }

    /// Word reduced freely, then checked to lie in this subgroup's alphabet.
    pub fn normalize_input(&self, w: &[Letter]) -> Result<Word> {
        self.check(w)?;
        Ok(Word::from_letters(free_reduce(w)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;

    fn w(s: &str) -> Vec<Letter> {
        parse_word(s, 2).unwrap().into_letters()
    }

    #[test]
    fn geodesic_tests() {
        let d = DihedralContext::finite(3);
        assert!(d.is_geodesic(&w("aba")).unwrap());
        assert!(!d.is_geodesic(&w("abaB")).unwrap());
        assert!(d.is_unique_geodesic(&w("aB")).unwrap());
        assert!(!d.is_unique_geodesic(&w("abA")).unwrap());
        assert!(!d.is_unique_geodesic(&w("aba")).unwrap());
        let foreign = [Letter::pos(2)];
        assert!(matches!(d.is_geodesic(&foreign), Err(Error::ForeignLetter { .. })));
    }

    #[test]
    fn normal_forms_and_lengths() {
        let d = DihedralContext::finite(3);
        assert_eq!(d.nf(&w("bab")).unwrap().to_string(), "aba");
        assert_eq!(d.length(&w("abaB")).unwrap(), 2);
        assert_eq!(d.nf(&w("abaB")).unwrap().to_string(), "ba");
        assert_eq!(d.geodesics(&w("aba")).unwrap().len(), 2);
        let inf = DihedralContext::new(Label::Infinite);
        assert_eq!(inf.nf(&w("abBa")).unwrap().to_string(), "aa");
        assert!(inf.delta_power(&w("a")).is_err());
    }

    #[test]
    fn delta_powers() {
        let d = DihedralContext::finite(3);
        assert_eq!(d.delta_power(&w("abaaba")).unwrap(), 2);
        assert_eq!(d.delta_power(&w("ABA")).unwrap(), -1);
        assert_eq!(d.delta_power(&w("ab")).unwrap(), 0);
        assert_eq!(d.delta_power(&w("")).unwrap(), 0);
        assert!(matches!(d.delta_power(&w("aB")), Err(Error::Unsigned)));
        let d4 = DihedralContext::finite(4);
        assert_eq!(d4.delta_power(&w("babaa")).unwrap(), 1);
    }
}
