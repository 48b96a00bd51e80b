//! Finitely supported functions on the group.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::large_type::ArtinGroup;
use crate::oracle::Ball;
use crate::word::{inverse, Word};

/// Absolute tolerance for comparisons of norms.
pub const TOLERANCE: f64 = 1e-9;

/// A finitely supported complex function, keyed by normal forms.
///
/// Keys are kept in shortlex order so that every sum runs in a fixed order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct GroupFunction {
    values: BTreeMap<Word, Complex64>,
}

impl GroupFunction {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sum the values of words representing the same element.
    pub fn from_words<I>(group: &ArtinGroup, items: I) -> Self
    where
        I: IntoIterator<Item = (Word, Complex64)>,
    {
        let mut f = Self::new();
        for (w, c) in items {
            f.add_at(group.nf(&w), c);
        }
        f.prune();
        f
    }

    /// Build from keys that are already normal forms.
    pub fn from_normal_forms<I>(items: I) -> Self
    where
        I: IntoIterator<Item = (Word, Complex64)>,
    {
        let mut f = Self::new();
        for (w, c) in items {
            f.add_at(w, c);
        }
        f.prune();
        f
    }

    /// Point mass at the element with normal form `g`.
    pub fn delta(g: Word) -> Self {
        Self::from_normal_forms([(g, Complex64::new(1.0, 0.0))])
    }

    /// Indicator of a set of normal forms.
    pub fn indicator<'a>(set: impl IntoIterator<Item = &'a Word>) -> Self {
        Self::from_normal_forms(set.into_iter().map(|w| (w.clone(), Complex64::new(1.0, 0.0))))
    }

    fn add_at(&mut self, g: Word, c: Complex64) {
        *self.values.entry(g).or_default() += c;
    }

    fn prune(&mut self) {
        self.values.retain(|_, c| *c != Complex64::new(0.0, 0.0));
    }

    pub fn get(&self, g: &Word) -> Complex64 {
        self.values.get(g).copied().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Complex64)> {
        self.values.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.values.keys()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_normal_forms(self.values.iter().map(|(w, v)| (w.clone(), v * c)))
    }

    /// `φ_k = φ · χ_k`.
    pub fn sphere_restrict(&self, k: usize) -> Self {
        Self { values: self.values.iter().filter(|(w, _)| w.len() == k).map(|(w, c)| (w.clone(), *c)).collect() }
    }

    /// `‖φ‖₂`.
    pub fn l2_norm(&self) -> f64 {
        self.values.values().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖φ‖_{2,r,ℓ} = sqrt(Σ |φ(g)|² (1 + ℓ(g))^{2r})`.
    pub fn sobolev_norm(&self, r: f64) -> f64 {
        self.values.iter().map(|(w, c)| c.norm_sqr() * (1.0 + w.len() as f64).powf(2.0 * r)).sum::<f64>().sqrt()
    }

    /// `(ℓ²-norm, Sobolev norm of order r)`.
    pub fn norms(&self, r: f64) -> (f64, f64) {
        (self.l2_norm(), self.sobolev_norm(r))
    }

    /// `g ↦ conj(φ(g⁻¹))`, the adjoint for convolution.
    pub fn adjoint(&self, group: &ArtinGroup) -> Self {
        Self::from_normal_forms(self.values.iter().map(|(w, c)| (group.nf(&inverse(w)), c.conj())))
    }

    /// `(φ * ψ)(g) = Σ_h φ(h) ψ(h⁻¹ g)`.
    ///
    /// With a ball, every product must land inside it.
    pub fn convolve(&self, other: &Self, group: &ArtinGroup, ball: Option<&Ball>) -> Result<Self> {
        let left: Vec<(&Word, &Complex64)> = self.values.iter().collect();
        let parts: Vec<Result<Vec<(Word, Complex64)>>> = left
            .par_iter()
            .map(|(h, a)| {
                let mut out = Vec::with_capacity(other.len());
                for (k, b) in &other.values {
                    let g = group.nf(&[h.letters(), k.letters()].concat());
                    if let Some(ball) = ball {
                        if !ball.contains(&g) {
                            return Err(Error::OutsideBall { radius: ball.complete_radius() });
                        }
                    }
                    out.push((g, **a * b));
                }
                Ok(out)
            })
            .collect();
        let mut f = Self::new();
        for part in parts {
            for (g, c) in part? {
                f.add_at(g, c);
            }
        }
        f.prune();
        Ok(f)
    }
}

/// Side of a projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjectionSide {
    /// `g ↦ sqrt(Σ_{h ∈ C_p, (g,h) ∈ 𝒫} |φ_k(gh)|²)`.
    Right,
    /// `g ↦ sqrt(Σ_{h ∈ C_p, (h,g) ∈ 𝒫} |φ_k(hg)|²)`.
    Left,
}

/// A projection together with the factorisation count bounding its norm.
#[derive(Debug, Clone)]
pub struct Projection {
    pub function: GroupFunction,
    /// Largest number of permissible factorisations of the required lengths
    /// of any element of the support; a lower bound for the sup over `C_k`.
    pub local_f: usize,
}

impl Projection {
    /// Whether `‖φ^(p)‖₂² ≤ local_f · ‖φ_k‖₂²` within tolerance.
    pub fn satisfies_bound(&self, phi_k: &GroupFunction) -> bool {
        let lhs = self.function.l2_norm().powi(2);
        let rhs = self.local_f as f64 * phi_k.l2_norm().powi(2);
        lhs <= rhs + TOLERANCE * (1.0 + rhs)
    }
}

/// Permissible factorisations `(g, h)` of `x` with `|g| = a`, `|h| = |x| − a`.
fn permissible_splits(group: &ArtinGroup, x: &Word, a: usize) -> Result<Vec<(Word, Word)>> {
    let mut out = Vec::new();
    for g in group.left_divisors(x).swap_remove(a) {
        let h = group.nf(&[&inverse(&g), x.letters()].concat());
        if group.is_permissible(&g, &h)? {
            out.push((g, h));
        }
    }
    Ok(out)
}

/// The factorisations a projection sums over, for every element of a set
/// of elements of length `k`. Reusable across functions on that set.
#[derive(Debug, Clone)]
pub struct ProjectionPlan {
    k: usize,
    p: usize,
    side: ProjectionSide,
    /// For each element `x`, the kept factor of each permissible split.
    keys: BTreeMap<Word, Vec<Word>>,
}

impl ProjectionPlan {
    /// Plan over `elements`, all of length `k`, with `0 ≤ p ≤ k`.
    pub fn new<'a>(
        group: &ArtinGroup,
        elements: impl IntoIterator<Item = &'a Word>,
        k: usize,
        p: usize,
        side: ProjectionSide,
    ) -> Result<Self> {
        if p > k {
            return Err(Error::Shape("projection needs p ≤ k"));
        }
        let elements: Vec<&Word> = elements.into_iter().collect();
        if elements.iter().any(|w| w.len() != k) {
            return Err(Error::Shape("projection needs a function on one sphere"));
        }
        let a = match side {
            ProjectionSide::Right => k - p,
            ProjectionSide::Left => p,
        };
        let rows: Vec<Result<(Word, Vec<Word>)>> = elements
            .par_iter()
            .map(|x| {
                let kept = permissible_splits(group, x, a)?
                    .into_iter()
                    .map(|(g, h)| match side {
                        ProjectionSide::Right => g,
                        ProjectionSide::Left => h,
                    })
                    .collect();
                Ok(((*x).clone(), kept))
            })
            .collect();
        let keys = rows.into_iter().collect::<Result<_>>()?;
        Ok(ProjectionPlan { k, p, side, keys })
    }

    pub fn side(&self) -> ProjectionSide {
        self.side
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Largest number of permissible splits of any planned element.
    pub fn max_splits(&self) -> usize {
        self.keys.values().map(Vec::len).max().unwrap_or(0)
    }

    /// Project `phi_k`, whose support must lie in the planned set.
    pub fn apply(&self, phi_k: &GroupFunction) -> Result<Projection> {
        let mut sums: BTreeMap<Word, f64> = BTreeMap::new();
        let mut local_f = 0;
        for (x, c) in phi_k.iter() {
            let kept = self.keys.get(x).ok_or(if x.len() == self.k {
                Error::Shape("function support outside the planned set")
            } else {
                Error::Shape("projection needs a function on one sphere")
            })?;
            local_f = local_f.max(kept.len());
            for key in kept {
                *sums.entry(key.clone()).or_default() += c.norm_sqr();
            }
        }
        let function =
            GroupFunction::from_normal_forms(sums.into_iter().map(|(w, s)| (w, Complex64::new(s.sqrt(), 0.0))));
        let out = Projection { function, local_f };
        debug_assert!(out.satisfies_bound(phi_k), "projection norm exceeds the factorisation bound");
        Ok(out)
    }
}

/// The projections `φ^(p)_{𝒫,k−p}` (right) and `^(p)φ_{𝒫,k−p}` (left).
pub fn projection(
    group: &ArtinGroup,
    phi_k: &GroupFunction,
    k: usize,
    p: usize,
    side: ProjectionSide,
) -> Result<Projection> {
    ProjectionPlan::new(group, phi_k.support(), k, p, side)?.apply(phi_k)
}
