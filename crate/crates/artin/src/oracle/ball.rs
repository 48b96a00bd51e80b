//! Cayley balls built level by level from a canonical-form function.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::order::LetterOrder;
use crate::presentation::CoxeterPresentation;
use crate::word::{Letter, Word};

/// Elements of length at most `radius`, grouped into spheres.
///
/// Each sphere is sorted shortlex under `order`; an element is stored as its
/// canonical word, so the word length is the sphere index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ball {
    pub presentation_hash: String,
    pub n: usize,
    pub order: LetterOrder,
    /// Requested radius.
    pub radius: usize,
    /// Set when a budget stopped construction early; `spheres.len() - 1` is the
    /// last complete radius.
    pub truncated: bool,
    spheres: Vec<Vec<Word>>,
    index: FxHashMap<Word, (usize, usize)>,
}

impl Ball {
    /// Breadth-first construction. `canon` must return the canonical word of
    /// the element spelt by its argument.
    pub fn build<F>(
        pres: &CoxeterPresentation,
        radius: usize,
        order: LetterOrder,
        max_elements: usize,
        canon: F,
    ) -> Result<Ball>
    where
        F: Fn(&[Letter]) -> Result<Word> + Sync,
    {
        let n = pres.n();
        let letters: Vec<Letter> = (0..2 * n as u16).map(Letter::from_code).collect();
        let mut spheres = vec![vec![Word::new()]];
        let mut index = FxHashMap::default();
        index.insert(Word::new(), (0, 0));
        let mut truncated = false;
        for k in 1..=radius {
            let prev = &spheres[k - 1];
            let found: Vec<Result<Vec<Word>>> = prev
                .par_iter()
                .map(|w| {
                    let mut out = Vec::new();
                    for &b in &letters {
                        if w.last() == Some(b.inverse()) {
                            continue;
                        }
                        let c = canon(w.concat(&[b]).letters())?;
                        if c.len() == k {
                            out.push(c);
                        }
                    }
                    Ok(out)
                })
                .collect();
            let mut level: Vec<Word> = Vec::new();
            for r in found {
                level.extend(r?);
            }
            level.sort_by(|u, v| order.cmp_shortlex(u, v));
            level.dedup();
            if index.len() + level.len() > max_elements {
                truncated = true;
                break;
            }
            for (pos, w) in level.iter().enumerate() {
                index.insert(w.clone(), (k, pos));
            }
            spheres.push(level);
        }
        Ok(Ball { presentation_hash: pres.hash_hex(), n, order, radius, truncated, spheres, index })
    }

    /// Reassemble a ball from stored spheres, checking their shape.
    pub fn from_spheres(
        presentation_hash: String,
        n: usize,
        order: LetterOrder,
        radius: usize,
        truncated: bool,
        spheres: Vec<Vec<Word>>,
    ) -> Result<Ball> {
        let mut index = FxHashMap::default();
        for (k, s) in spheres.iter().enumerate() {
            for (pos, w) in s.iter().enumerate() {
                if w.len() != k || w.letters().iter().any(|a| a.gen() >= n) {
                    return Err(Error::Cache(format!("word {w} misplaced in sphere {k}")));
                }
                if index.insert(w.clone(), (k, pos)).is_some() {
                    return Err(Error::Cache(format!("duplicate word {w}")));
                }
            }
        }
        if spheres.first().map(|s| s.as_slice()) != Some(&[Word::new()][..]) {
            return Err(Error::Cache("sphere 0 must hold only the identity".into()));
        }
        if spheres.len() > radius + 1 || (!truncated && spheres.len() != radius + 1) {
            return Err(Error::Cache("sphere count disagrees with radius".into()));
        }
        Ok(Ball { presentation_hash, n, order, radius, truncated, spheres, index })
    }

    /// Largest radius fully enumerated.
    pub fn complete_radius(&self) -> usize {
        self.spheres.len() - 1
    }

    /// The sphere `C_k`; empty beyond the enumerated radius.
    pub fn sphere(&self, k: usize) -> &[Word] {
        self.spheres.get(k).map(|s| s.as_slice()).unwrap_or(&[])
    }

    pub fn spheres(&self) -> &[Vec<Word>] {
        &self.spheres
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    /// Length of a canonical word, if it is in the ball.
    pub fn length_of(&self, canonical: &Word) -> Option<usize> {
        self.index.get(canonical).map(|&(k, _)| k)
    }

    pub fn contains(&self, canonical: &Word) -> bool {
        self.index.contains_key(canonical)
    }

    pub fn elements(&self) -> impl Iterator<Item = &Word> {
        self.spheres.iter().flatten()
    }

    /// Generator-labelled edges `(source, letter, target)` inside the ball.
    pub fn edges<F>(&self, canon: F) -> Result<Vec<(Word, Letter, Word)>>
    where
        F: Fn(&[Letter]) -> Result<Word>,
    {
        let mut out = Vec::new();
        for w in self.elements() {
            for code in 0..2 * self.n as u16 {
                let b = Letter::from_code(code);
                let t = canon(w.concat(&[b]).letters())?;
                if self.contains(&t) {
                    out.push((w.clone(), b, t));
                }
            }
        }
        Ok(out)
    }
}
