//! Geodesic factorisations and divisors by enumerating all geodesics.

use rustc_hash::FxHashSet;

use super::closure::ClosureOracle;
use crate::error::Result;
use crate::word::{Letter, Word};

/// `Fact_{k,l}(g)` as canonical pairs `(g1, g2)`, sorted by `g1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactSet {
    pub g: Word,
    pub k: usize,
    pub l: usize,
    pub pairs: Vec<(Word, Word)>,
}

impl FactSet {
    pub fn count(&self) -> usize {
        self.pairs.len()
    }
}

/// Canonical left divisors of `g` of each length, from prefixes of every geodesic.
pub fn left_divisors(oracle: &ClosureOracle, g: &[Letter]) -> Result<Vec<Vec<Word>>> {
    let geos = oracle.enumerate_geodesics(g)?;
    let len = geos[0].len();
    let mut by_len: Vec<FxHashSet<Word>> = vec![FxHashSet::default(); len + 1];
    for rep in &geos {
        for k in 0..=len {
            by_len[k].insert(Word::from_letters(rep[..k].to_vec()));
        }
    }
    let mut out = Vec::with_capacity(len + 1);
    for set in by_len {
        let mut canon: Vec<Word> = Vec::new();
        for w in set {
            canon.push(oracle.canonical(&w)?);
        }
        canon.sort();
        canon.dedup();
        out.push(canon);
    }
    Ok(out)
}

/// `Fact_{k,l}(g)`, optionally restricted by `keep(g1, g2)`.
///
/// Empty unless `k + l = |g|`.
pub fn fact_set(
    oracle: &ClosureOracle,
    g: &[Letter],
    k: usize,
    l: usize,
    keep: Option<&dyn Fn(&Word, &Word) -> bool>,
) -> Result<FactSet> {
    let canon = oracle.canonical(g)?;
    let mut pairs = Vec::new();
    if k + l == canon.len() {
        for g1 in left_divisors(oracle, &canon)?.swap_remove(k) {
            let mut rest = g1.inverse().into_letters();
            rest.extend_from_slice(&canon);
            let g2 = oracle.canonical(&rest)?;
            if keep.map_or(true, |f| f(&g1, &g2)) {
                pairs.push((g1, g2));
            }
        }
    }
    Ok(FactSet { g: canon, k, l, pairs })
}

/// Left divisors of `g` lying in the subgroup on generators `i`, `j`.
///
/// Geodesics of elements of that subgroup use only its two generators, so
/// these are the prefixes of geodesics spelt in those letters.
pub fn pair_left_divisors(oracle: &ClosureOracle, g: &[Letter], i: usize, j: usize) -> Result<Vec<Word>> {
    let geos = oracle.enumerate_geodesics(g)?;
    let mut seen: FxHashSet<Word> = FxHashSet::default();
    for rep in &geos {
        let run = rep.letters().iter().take_while(|a| a.gen() == i || a.gen() == j).count();
        for k in 0..=run {
            seen.insert(Word::from_letters(rep[..k].to_vec()));
        }
    }
    let mut out: Vec<Word> = Vec::new();
    for w in seen {
        out.push(oracle.canonical(&w)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Right divisors of `g` lying in the subgroup on generators `i`, `j`.
pub fn pair_right_divisors(oracle: &ClosureOracle, g: &[Letter], i: usize, j: usize) -> Result<Vec<Word>> {
    let inv = crate::word::inverse(g);
    pair_left_divisors(oracle, &inv, i, j)?.into_iter().map(|d| oracle.canonical(&d.inverse())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_word;
    use crate::presentation::{CoxeterPresentation, Label};

    #[test]
    fn delta_squared_midpoints() {
        let o = ClosureOracle::new(CoxeterPresentation::dihedral(Label::Finite(3)).unwrap());
        let g = parse_word("abaaba", 2).unwrap();
        let f = fact_set(&o, &g, 0, 6, None).unwrap();
        assert_eq!(f.count(), 1);
        let f = fact_set(&o, &g, 3, 3, None).unwrap();
        // Midpoints counted independently on Burau matrices.
        let model = crate::oracle::burau::LinearModel::Braid3;
        let lens = model.ball_lengths(6);
        let target = model.image(&g);
        let mut mids: FxHashSet<crate::oracle::burau::Mat2> = FxHashSet::default();
        for code in 0..64u32 {
            let w: Vec<Letter> = (0..3).map(|k| Letter::from_code(((code >> (2 * k)) & 3) as u16)).collect();
            let img = model.image(&w);
            let rest = model.image(&crate::word::inverse(&w)).mul(&target);
            if lens.get(&img) == Some(&3) && lens.get(&rest) == Some(&3) {
                mids.insert(img);
            }
        }
        assert_eq!(f.count(), mids.len());
        assert!(fact_set(&o, &g, 3, 2, None).unwrap().pairs.is_empty());
    }
}
