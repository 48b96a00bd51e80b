//! Divisors, longest 2-generator divisors and the tail letter of LD′.

use rustc_hash::FxHashSet;
use serde::Serialize;

use super::ArtinGroup;
use crate::error::{Error, Result};
use crate::order::LetterOrder;
use crate::word::{inverse, Letter, Word};

/// Which alternative of the tail-letter dichotomy holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LdPrimeCase {
    /// Every geodesic has a prefix spelling LD.
    AllPrefixesReachLd,
    /// Maximal prefixes fall short of LD by powers of a single letter.
    UniqueTail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LdPrime {
    pub ld: Word,
    pub ld_prime: Word,
    pub case: LdPrimeCase,
    /// The letter `a` with `LD = u a^r` for every maximal prefix `u`.
    pub letter: Option<Letter>,
    /// Distinct maximal `{x_i, x_j}`-prefixes over all geodesics, as normal forms.
    pub prefixes: Vec<Word>,
}

fn in_pair(a: Letter, i: usize, j: usize) -> bool {
    a.gen() == i || a.gen() == j
}

impl ArtinGroup {
    /// Left divisors of `g` grouped by length, as normal forms.
    pub fn left_divisors(&self, g: &[Letter]) -> Vec<Vec<Word>> {
        let g = self.nf(g);
        let mut levels = vec![vec![Word::new()]];
        for k in 1..=g.len() {
            let mut next: FxHashSet<Word> = FxHashSet::default();
            for d in &levels[k - 1] {
                let rest = self.nf(&[&inverse(d), g.letters()].concat());
                for b in self.letters() {
                    if self.length(&[&[b.inverse()], rest.letters()].concat()) + 1 == rest.len() {
                        next.insert(self.nf(d.concat(&[b]).letters()));
                    }
                }
            }
            let mut level: Vec<Word> = next.into_iter().collect();
            level.sort_by(|u, v| self.order.cmp_shortlex(u, v));
            levels.push(level);
        }
        levels
    }

    /// Right divisors of `g` grouped by length, as normal forms.
    pub fn right_divisors(&self, g: &[Letter]) -> Vec<Vec<Word>> {
        self.left_divisors(&inverse(g))
            .into_iter()
            .map(|level| {
                let mut v: Vec<Word> = level.iter().map(|d| self.nf(&inverse(d))).collect();
                v.sort_by(|a, b| self.order.cmp_shortlex(a, b));
                v
            })
            .collect()
    }

    /// Every geodesic word for `g`, sorted shortlex; fails past `cap` words.
    pub fn geodesics(&self, g: &[Letter], cap: usize) -> Result<Vec<Word>> {
        let g = self.nf(g);
        let mut out = Vec::new();
        let mut stack = vec![(Vec::<Letter>::new(), g.clone())];
        while let Some((prefix, rest)) = stack.pop() {
            if rest.is_empty() {
                out.push(Word::from_letters(prefix));
                if out.len() > cap {
                    return Err(Error::Budget { what: "geodesic enumeration", bound: cap });
                }
                continue;
            }
            for b in self.letters() {
                let r = self.nf(&[&[b.inverse()], rest.letters()].concat());
                if r.len() + 1 == rest.len() {
                    let mut p = prefix.clone();
                    p.push(b);
                    stack.push((p, r));
                }
            }
        }
        out.sort_by(|u, v| self.order.cmp_shortlex(u, v));
        Ok(out)
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i == j || i >= self.n() || j >= self.n() {
            return Err(Error::BadPair { i: i + 1, j: j + 1 });
        }
        Ok(())
    }

    /// Longest left divisor of `g` in the subgroup on `x_i, x_j`.
    ///
    /// The normal form under an order putting the pair's letters first begins
    /// with a spelling of that divisor.
    pub fn ld_ij(&self, g: &[Letter], i: usize, j: usize) -> Result<Word> {
        self.check_pair(i, j)?;
        let (i, j) = (i.min(j), i.max(j));
        let key = (Word::from_letters(g.to_vec()), i, j);
        if let Some(hit) = self.ld_cache.lock().expect("ld cache poisoned").get(&key) {
            return Ok(hit.clone());
        }
        let order = LetterOrder::pair_first(self.n(), i, j);
        let w = self.nf_with_order(g, &order);
        let run = w.letters().iter().take_while(|a| in_pair(**a, i, j)).count();
        let out = self.nf(&w[..run]);
        let mut cache = self.ld_cache.lock().expect("ld cache poisoned");
        if cache.len() >= super::NF_CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, out.clone());
        Ok(out)
    }

    /// Longest right divisor of `g` in the subgroup on `x_i, x_j`.
    pub fn rd_ij(&self, g: &[Letter], i: usize, j: usize) -> Result<Word> {
        let d = self.ld_ij(&inverse(g), i, j)?;
        Ok(self.nf(&inverse(&d)))
    }

    /// Normal forms of the maximal `{x_i, x_j}`-prefixes of all geodesics for `g`.
    pub fn maximal_pair_prefixes(&self, g: &[Letter], i: usize, j: usize) -> Result<Vec<Word>> {
        self.check_pair(i, j)?;
        let g = self.nf(g);
        let mut seen: FxHashSet<Word> = FxHashSet::default();
        let mut found: FxHashSet<Word> = FxHashSet::default();
        let mut stack = vec![Word::new()];
        seen.insert(Word::new());
        while let Some(u) = stack.pop() {
            let rest = self.nf(&[&inverse(&u), g.letters()].concat());
            let mut maximal = rest.is_empty();
            for b in self.letters() {
                let r = self.length(&[&[b.inverse()], rest.letters()].concat());
                if r + 1 != rest.len() {
                    continue;
                }
                if in_pair(b, i, j) {
                    let v = self.nf(u.concat(&[b]).letters());
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                } else {
                    maximal = true;
                }
            }
            if maximal {
                found.insert(u);
            }
        }
        let mut out: Vec<Word> = found.into_iter().collect();
        out.sort_by(|u, v| self.order.cmp_shortlex(u, v));
        Ok(out)
    }

    /// LD′ of `g` for the pair `{x_i, x_j}`, with the case that applies.
    ///
    /// Refuses presentations failing the (3,3,m) condition unless the group
    /// was built with `allow_counterexample`; on such presentations the tail
    /// letter can fail to be unique, reported as [`Error::TailNotUnique`].
    pub fn ld_prime(&self, g: &[Letter], i: usize, j: usize) -> Result<LdPrime> {
        self.require_33m()?;
        let ld = self.ld_ij(g, i, j)?;
        let prefixes = self.maximal_pair_prefixes(g, i, j)?;
        if prefixes.iter().all(|u| *u == ld) {
            return Ok(LdPrime {
                ld_prime: ld.clone(),
                ld,
                case: LdPrimeCase::AllPrefixesReachLd,
                letter: None,
                prefixes,
            });
        }
        let mut tail: Option<Letter> = None;
        for u in prefixes.iter().filter(|u| **u != ld) {
            let d = self.nf(&[&inverse(u), ld.letters()].concat());
            let a = d.first().ok_or(Error::Shape("maximal prefix longer than LD"))?;
            if d.letters().iter().any(|&b| b != a) || d.len() + u.len() != ld.len() {
                return Err(Error::Shape("LD is not a maximal prefix times a letter power"));
            }
            match tail {
                None => tail = Some(a),
                Some(t) if t == a => {}
                Some(t) => return Err(Error::TailNotUnique { a: t.to_string(), b: a.to_string() }),
            }
        }
        let a = tail.expect("some prefix differs from LD");
        let mut ld_prime = ld.clone();
        loop {
            let shorter = self.nf(ld_prime.concat(&[a.inverse()]).letters());
            if shorter.len() + 1 != ld_prime.len() {
                break;
            }
            ld_prime = shorter;
        }
        Ok(LdPrime { ld, ld_prime, case: LdPrimeCase::UniqueTail, letter: Some(a), prefixes })
    }
}
