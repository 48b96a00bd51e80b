//! Exact word problem for DA(m), m finite, through two injective maps:
//! DA(m) → B_m sending x1, x2 to the products of the odd and of the even
//! standard braid generators, and the action of B_m on the free group F_m.
//!
//! Elements are compared by the images of the free generators, which are
//! freely reduced words, so equality is decided exactly.

use crate::word::Letter;

/// A free group letter: generator index with sign, `±(k + 1)`.
type FreeLetter = i32;

fn push_reduced(out: &mut Vec<FreeLetter>, a: FreeLetter) {
    if out.last() == Some(&-a) {
        out.pop();
    } else {
        out.push(a);
    }
}

/// An automorphism of `F_n`, stored as the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeAutomorphism {
    images: Vec<Vec<FreeLetter>>,
}

impl FreeAutomorphism {
    pub fn identity(n: usize) -> Self {
        FreeAutomorphism { images: (1..=n as i32).map(|k| vec![k]).collect() }
    }

    /// Image of a free word under this automorphism.
    fn apply(&self, w: &[FreeLetter]) -> Vec<FreeLetter> {
        let mut out = Vec::new();
        for &a in w {
            let img = &self.images[a.unsigned_abs() as usize - 1];
            if a > 0 {
                img.iter().for_each(|&b| push_reduced(&mut out, b));
            } else {
                img.iter().rev().for_each(|&b| push_reduced(&mut out, -b));
            }
        }
        out
    }

    /// `self ∘ σ_i^{±1}`, with `i` 1-based.
    fn then_braid(&self, i: usize, positive: bool) -> Self {
        let (a, b) = (i as FreeLetter, i as FreeLetter + 1);
        let mut next = self.clone();
        let (img_a, img_b) = if positive { (vec![a, b, -a], vec![a]) } else { (vec![b], vec![-b, a, b]) };
        next.images[i - 1] = self.apply(&img_a);
        next.images[i] = self.apply(&img_b);
        next
    }

    pub fn total_length(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }
}

/// DA(m) acting on `F_m` through the braid group `B_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidAction {
    m: u32,
}

impl BraidAction {
    /// Requires `m ≥ 3`; for `m = 2` the map to the braid group is not injective.
    pub fn new(m: u32) -> Option<Self> {
        (m >= 3).then_some(BraidAction { m })
    }

    /// Image of a word in the letters `x1, x2` (generators 0 and 1).
    pub fn image(&self, w: &[Letter]) -> FreeAutomorphism {
        let mut phi = FreeAutomorphism::identity(self.m as usize);
        for a in w {
            let first = if a.gen() == 0 { 1 } else { 2 };
            // The braid generators in one block commute, so their order is immaterial.
            for i in (first..self.m as usize).step_by(2) {
                phi = phi.then_braid(i, a.is_positive());
            }
        }
        phi
    }

    pub fn equal(&self, u: &[Letter], v: &[Letter]) -> bool {
        self.image(u) == self.image(v)
    }

    /// Whether `w` represents the identity.
    pub fn is_trivial(&self, w: &[Letter]) -> bool {
        self.image(w) == FreeAutomorphism::identity(self.m as usize)
    }
}
