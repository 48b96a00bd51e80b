//! Shortlex normal forms, geodesics and divisors in Artin groups of large type.

pub mod decomposition;
pub mod divisors;
pub mod merge;
pub mod permissible;
pub mod sequences;

use std::collections::VecDeque;
use std::sync::Mutex;

use rustc_hash::FxHashMap;
use serde::Serialize;

pub use decomposition::{CrossingWitness, SClass, SDecomposition, STSet, SplitWitness};
pub use divisors::{LdPrime, LdPrimeCase};
pub use merge::{LargeMergeMove, LargeMerger};
pub use sequences::{CriticalSequence, Direction, TauStep};

use crate::dihedral::DihedralContext;
use crate::error::{Error, Result};
use crate::oracle::Ball;
use crate::order::LetterOrder;
use crate::parse::parse_word;
use crate::presentation::CoxeterPresentation;
use crate::word::{free_reduce, inverse, Letter, Word};

/// One step of letter-by-letter reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    /// The incoming letter cancelled the last letter of the reduced prefix.
    FreeCancel { pos: usize },
    /// A rightward length reducing sequence on the prefix, then a free cancellation.
    Rightward { prefix_len: usize, letter: Letter, sequence: CriticalSequence },
    /// A leftward lex reducing sequence on the prefix ending in the new letter.
    Leftward { prefix_len: usize, sequence: CriticalSequence },
}

/// Normal form and the steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub input: Word,
    pub word: Word,
    pub steps: Vec<ReductionStep>,
}

/// An element, held as its shortlex normal form under the default order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GroupElement(Word);

impl GroupElement {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

const NF_CACHE_LIMIT: usize = 1 << 20;

/// A large-type Artin group with its normal form engine.
#[derive(Debug)]
pub struct ArtinGroup {
    pres: CoxeterPresentation,
    order: LetterOrder,
    allow_counterexample: bool,
    nf_cache: Mutex<FxHashMap<Word, Word>>,
    ld_cache: Mutex<FxHashMap<(Word, usize, usize), Word>>,
}

impl ArtinGroup {
    /// Requires all finite labels to be at least 3.
    pub fn new(pres: CoxeterPresentation) -> Result<Self> {
        let order = LetterOrder::default_for(pres.n());
        Self::with_order(pres, order)
    }

    pub fn with_order(pres: CoxeterPresentation, order: LetterOrder) -> Result<Self> {
        if !pres.is_large() {
            return Err(Error::NotLargeType);
        }
        Ok(ArtinGroup {
            pres,
            order,
            allow_counterexample: false,
            nf_cache: Mutex::new(FxHashMap::default()),
            ld_cache: Mutex::new(FxHashMap::default()),
        })
    }

    /// Let hypothesis-guarded operations run on presentations failing the (3,3,m) condition.
    pub fn allow_counterexample(mut self, allow: bool) -> Self {
        self.allow_counterexample = allow;
        self
    }

    pub fn presentation(&self) -> &CoxeterPresentation {
        &self.pres
    }

    pub fn order(&self) -> &LetterOrder {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.pres.n()
    }

    /// Refuse presentations failing the (3,3,m) condition unless explicitly allowed.
    pub fn require_33m(&self) -> Result<()> {
        if self.pres.satisfies_33m() || self.allow_counterexample {
            Ok(())
        } else {
            Err(Error::Hypothesis33m)
        }
    }

    pub fn parse(&self, text: &str) -> Result<Word> {
        Ok(parse_word(text, self.n())?)
    }

    fn check(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|a| a.gen() >= self.n()) {
            Some(a) => Err(Error::Parse(crate::error::ParseError::GeneratorOutOfRange {
                index: a.gen() + 1,
                n: self.n(),
                pos: 0,
            })),
            None => Ok(()),
        }
    }

    pub fn element(&self, w: &[Letter]) -> Result<GroupElement> {
        self.check(w)?;
        Ok(GroupElement(self.nf(w)))
    }

    /// Dihedral context of the pair `{i, j}` sharing this group's order.
    pub fn parabolic(&self, i: usize, j: usize) -> Result<DihedralContext> {
        if i == j || i >= self.n() || j >= self.n() {
            return Err(Error::BadPair { i: i + 1, j: j + 1 });
        }
        Ok(DihedralContext::with_order(i, j, self.pres.label(i, j), self.order.clone()))
    }

    /// Shortlex normal form under this group's order.
    pub fn nf(&self, w: &[Letter]) -> Word {
        let key = Word::from_letters(w.to_vec());
        if let Some(hit) = self.nf_cache.lock().expect("nf cache poisoned").get(&key) {
            return hit.clone();
        }
        let out = Word::from_letters(reduce_impl(&self.pres, w, &self.order, None));
        let mut cache = self.nf_cache.lock().expect("nf cache poisoned");
        if cache.len() >= NF_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, out.clone());
        out
    }

    /// Shortlex normal form under another letter order.
    pub fn nf_with_order(&self, w: &[Letter], order: &LetterOrder) -> Word {
        Word::from_letters(reduce_impl(&self.pres, w, order, None))
    }

    /// Normal form with the full step log.
    pub fn reduce(&self, w: &[Letter]) -> Result<Reduction> {
        self.check(w)?;
        let mut steps = Vec::new();
        let word = Word::from_letters(reduce_impl(&self.pres, w, &self.order, Some(&mut steps)));
        Ok(Reduction { input: Word::from_letters(w.to_vec()), word, steps })
    }

    pub fn length(&self, w: &[Letter]) -> usize {
        self.nf(w).len()
    }

    pub fn is_geodesic(&self, w: &[Letter]) -> bool {
        crate::word::is_freely_reduced(w) && self.length(w) == w.len()
    }

    pub fn multiply(&self, u: &[Letter], v: &[Letter]) -> Word {
        let mut w = u.to_vec();
        w.extend_from_slice(v);
        self.nf(&w)
    }

    pub fn invert(&self, u: &[Letter]) -> Word {
        self.nf(&inverse(u))
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> bool {
        let mut w = inverse(u);
        w.extend_from_slice(v);
        self.nf(&w).is_empty()
    }

    /// Whether `|u v| = |u| + |v|` for the elements of `u` and `v`.
    pub fn is_geodesic_factorisation(&self, u: &[Letter], v: &[Letter]) -> bool {
        self.length(&[u, v].concat()) == self.length(u) + self.length(v)
    }

    /// All letters that start some geodesic for `w`.
    pub fn initial_letters(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let g = self.nf(w);
        if g.is_empty() {
            return Err(Error::Identity);
        }
        Ok(self.letters().filter(|b| self.length(&[&[b.inverse()], g.letters()].concat()) + 1 == g.len()).collect())
    }

    /// All letters that end some geodesic for `w`.
    pub fn final_letters(&self, w: &[Letter]) -> Result<Vec<Letter>> {
        let g = self.nf(w);
        if g.is_empty() {
            return Err(Error::Identity);
        }
        Ok(self.letters().filter(|b| self.length(&[g.letters(), &[b.inverse()]].concat()) + 1 == g.len()).collect())
    }

    /// Every letter, in default order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..2 * self.n() as u16).map(Letter::from_code)
    }

    /// Ball of radius `radius` keyed by engine normal forms.
    pub fn ball(&self, radius: usize, max_elements: usize) -> Result<Ball> {
        Ball::build(&self.pres, radius, self.order.clone(), max_elements, |w| Ok(self.nf(w)))
    }

    /// Like [`ArtinGroup::ball`] but fails instead of truncating.
    pub fn complete_ball(&self, radius: usize, max_elements: usize) -> Result<Ball> {
        let ball = self.ball(radius, max_elements)?;
        if ball.complete_radius() < radius {
            return Err(Error::Budget { what: "ball size", bound: max_elements });
        }
        Ok(ball)
    }
}

fn refeed(out: &mut Vec<Letter>, new: Vec<Letter>, pending: &mut VecDeque<Letter>) {
    let k = out.iter().zip(&new).take_while(|(a, b)| a == b).count();
    out.truncate(k);
    for &b in new[k..].iter().rev() {
        pending.push_front(b);
    }
}

/// Letter-by-letter reduction keeping the processed prefix in normal form.
///
/// Each incoming letter either cancels freely, triggers one rightward length
/// reducing sequence, or is appended and followed by at most one leftward lex
/// reducing sequence. Changed letters are fed back through the same loop.
fn reduce_impl(
    pres: &CoxeterPresentation,
    w: &[Letter],
    order: &LetterOrder,
    mut log: Option<&mut Vec<ReductionStep>>,
) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    let mut pending: VecDeque<Letter> = free_reduce(w).into();
    while let Some(a) = pending.pop_front() {
        if out.last() == Some(&a.inverse()) {
            out.pop();
            if let Some(l) = log.as_deref_mut() {
                l.push(ReductionStep::FreeCancel { pos: out.len() });
            }
            continue;
        }
        if let Some(seq) = sequences::rightward_length_reducing(pres, &out, a) {
            let mut new = seq.apply_moves(&out);
            new.pop();
            if let Some(l) = log.as_deref_mut() {
                l.push(ReductionStep::Rightward { prefix_len: out.len(), letter: a, sequence: seq });
            }
            refeed(&mut out, new, &mut pending);
            continue;
        }
        out.push(a);
        if let Some((seq, new)) = sequences::leftward_lex_reducing(pres, &out, order) {
            if let Some(l) = log.as_deref_mut() {
                l.push(ReductionStep::Leftward { prefix_len: out.len(), sequence: seq });
            }
            refeed(&mut out, new, &mut pending);
        }
    }
    out
}
