use std::cmp::Ordering;

use crate::word::Letter;

/// A total order on the letters of an `n`-generator presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterOrder {
    rank: Vec<u16>,
}

impl LetterOrder {
    /// x1 < X1 < x2 < X2 < ...
    pub fn default_for(n: usize) -> Self {
        LetterOrder { rank: (0..2 * n as u16).collect() }
    }

    /// Build from letters listed from smallest to largest; must list each letter once.
    pub fn from_sequence(n: usize, seq: &[Letter]) -> Option<Self> {
        if seq.len() != 2 * n {
            return None;
        }
        let mut rank = vec![u16::MAX; 2 * n];
        for (r, a) in seq.iter().enumerate() {
            let slot = rank.get_mut(a.code() as usize)?;
            if *slot != u16::MAX {
                return None;
            }
            *slot = r as u16;
        }
        Some(LetterOrder { rank })
    }

    /// Default order with the letters of generators `i` and `j` moved to the front.
    pub fn pair_first(n: usize, i: usize, j: usize) -> Self {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let mut seq = vec![Letter::pos(lo), Letter::neg(lo), Letter::pos(hi), Letter::neg(hi)];
        seq.extend((0..n).filter(|&g| g != lo && g != hi).flat_map(|g| [Letter::pos(g), Letter::neg(g)]));
        Self::from_sequence(n, &seq).expect("pair order is a permutation")
    }

    pub fn n(&self) -> usize {
        self.rank.len() / 2
    }

    pub fn rank(&self, a: Letter) -> u16 {
        self.rank[a.code() as usize]
    }

    pub fn is_default(&self) -> bool {
        self.rank.iter().enumerate().all(|(k, &r)| r as usize == k)
    }

    /// Letters from smallest to largest.
    pub fn sequence(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = (0..self.rank.len() as u16).map(Letter::from_code).collect();
        v.sort_by_key(|a| self.rank(*a));
        v
    }

    pub fn cmp_lex(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        for (a, b) in u.iter().zip(v) {
            match self.rank(*a).cmp(&self.rank(*b)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        u.len().cmp(&v.len())
    }

    pub fn cmp_shortlex(&self, u: &[Letter], v: &[Letter]) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| self.cmp_lex(u, v))
    }
}
