//! Faithful matrix images of small dihedral Artin groups.
//!
//! DA(3) is the 3-strand braid group, where the reduced Burau representation
//! is faithful. DA(4) embeds in it by `x1 ↦ σ1²`, `x2 ↦ σ2`. The free group
//! DA(∞) embeds in SL(2, ℤ) through the Sanov matrices.

use std::collections::VecDeque;
use std::ops::{Add, Mul, Neg};

use rustc_hash::FxHashMap;

use crate::word::Letter;

/// Integer Laurent polynomial in `t`, stored as `coeffs[k]` for `t^(low + k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn monomial(c: i64, e: i32) -> Self {
        Laurent { low: e, coeffs: vec![c] }.normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == self.coeffs.len() {
            return Self::zero();
        }
        self.coeffs.drain(..lead);
        self.low += lead as i32;
        self
    }

    fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.high().max(o.high());
        let mut coeffs = vec![0i64; (high - low) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in o.coeffs.iter().enumerate() {
            coeffs[(o.low - low) as usize + k] += c;
        }
        Laurent { low, coeffs }.normalized()
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + o.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            for (b, y) in o.coeffs.iter().enumerate() {
                coeffs[a + b] += x * y;
            }
        }
        Laurent { low: self.low + o.low, coeffs }.normalized()
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// 2×2 matrix over Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[Laurent; 2]; 2]);

impl Mat2 {
    pub fn identity() -> Self {
        Self::from_monomials([[(1, 0), (0, 0)], [(0, 0), (1, 0)]])
    }

    fn from_monomials(e: [[(i64, i32); 2]; 2]) -> Self {
        let m = |(c, k): (i64, i32)| Laurent::monomial(c, k);
        Mat2([[m(e[0][0]), m(e[0][1])], [m(e[1][0]), m(e[1][1])]])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let a = &self.0;
        let b = &o.0;
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }
}

/// A faithful linear image of a dihedral Artin group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearModel {
    /// DA(3) via reduced Burau.
    Braid3,
    /// DA(4) via `x1 ↦ σ1²`, `x2 ↦ σ2`.
    TypeB2,
    /// DA(∞) via Sanov matrices.
    Free2,
}

impl LinearModel {
    pub fn for_label(m: Option<u32>) -> Option<Self> {
        match m {
            Some(3) => Some(LinearModel::Braid3),
            Some(4) => Some(LinearModel::TypeB2),
            None => Some(LinearModel::Free2),
            _ => None,
        }
    }

    fn sigma(gen: usize, positive: bool) -> Mat2 {
        match (gen, positive) {
            (0, true) => Mat2::from_monomials([[(-1, 1), (1, 0)], [(0, 0), (1, 0)]]),
            (0, false) => Mat2::from_monomials([[(-1, -1), (1, -1)], [(0, 0), (1, 0)]]),
            (_, true) => Mat2::from_monomials([[(1, 0), (0, 0)], [(1, 1), (-1, 1)]]),
            (_, false) => Mat2::from_monomials([[(1, 0), (0, 0)], [(1, 0), (-1, -1)]]),
        }
    }

    /// Image of a letter of generator 0 or 1.
    pub fn letter(self, a: Letter) -> Mat2 {
        let (g, pos) = (a.gen().min(1), a.is_positive());
        match self {
            LinearModel::Braid3 => Self::sigma(g, pos),
            LinearModel::TypeB2 if g == 0 => {
                let s = Self::sigma(0, pos);
                s.mul(&s)
            }
            LinearModel::TypeB2 => Self::sigma(1, pos),
            LinearModel::Free2 => {
                let s = if pos { 2 } else { -2 };
                if g == 0 {
                    Mat2::from_monomials([[(1, 0), (s, 0)], [(0, 0), (1, 0)]])
                } else {
                    Mat2::from_monomials([[(1, 0), (0, 0)], [(s, 0), (1, 0)]])
                }
            }
        }
    }

    pub fn image(self, w: &[Letter]) -> Mat2 {
        w.iter().fold(Mat2::identity(), |acc, &a| acc.mul(&self.letter(a)))
    }

    pub fn equal(self, u: &[Letter], v: &[Letter]) -> bool {
        self.image(u) == self.image(v)
    }

    /// Word lengths of every element of the radius-`r` ball, found by BFS on
    /// matrices alone.
    pub fn ball_lengths(self, r: usize) -> FxHashMap<Mat2, usize> {
        let gens: Vec<Mat2> = (0..4u16).map(|c| self.letter(Letter::from_code(c))).collect();
        let mut dist = FxHashMap::default();
        dist.insert(Mat2::identity(), 0);
        let mut frontier = VecDeque::from([Mat2::identity()]);
        while let Some(x) = frontier.pop_front() {
            let d = dist[&x];
            if d == r {
                continue;
            }
            for g in &gens {
                let y = x.mul(g);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    frontier.push_back(y);
                }
            }
        }
        dist
    }

    /// Geodesic length of `w` when it lies within the radius of `lengths`.
    pub fn length_in(self, lengths: &FxHashMap<Mat2, usize>, w: &[Letter]) -> Option<usize> {
        lengths.get(&self.image(w)).copied()
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
    fn relations_hold() {
        assert!(LinearModel::Braid3.equal(&w("aba"), &w("bab")));
        assert!(!LinearModel::Braid3.equal(&w("ab"), &w("ba")));
        assert!(LinearModel::TypeB2.equal(&w("abab"), &w("baba")));
        assert!(!LinearModel::TypeB2.equal(&w("aba"), &w("bab")));
        assert!(LinearModel::Free2.equal(&w("abBA"), &[]));
        assert!(!LinearModel::Free2.equal(&w("abab"), &w("baba")));
        for m in [LinearModel::Braid3, LinearModel::TypeB2, LinearModel::Free2] {
            assert_eq!(m.image(&w("aA")), Mat2::identity());
            assert_eq!(m.image(&w("Bb")), Mat2::identity());
        }
    }

    #[test]
    fn sphere_sizes() {
        let lens = LinearModel::Braid3.ball_lengths(2);
        let c2 = lens.values().filter(|&&d| d == 2).count();
        assert_eq!(c2, 12);
        let lens = LinearModel::Free2.ball_lengths(3);
        assert_eq!(lens.values().filter(|&&d| d == 3).count(), 36);
    }
}
