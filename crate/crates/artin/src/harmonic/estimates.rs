//! Numeric probes of the convolution inequalities: sphere ratio tables and
//! lower bounds for convolution operator norms.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::function::GroupFunction;
use crate::error::{Error, Result};
use crate::large_type::ArtinGroup;
use crate::oracle::Ball;
use crate::word::{sign_class, SignClass, Word};

/// Maximal ratios `‖(φ_k * ψ_l)_m‖₂ / (‖φ_k‖₂ ‖ψ_l‖₂)` for one `(k, l, m)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    pub k: usize,
    pub l: usize,
    pub m: usize,
    pub trials: usize,
    pub random_max: f64,
    /// Both inputs are the indicators of their spheres.
    pub all_ones: f64,
    /// Both inputs are indicators of the positive elements of their spheres.
    pub positive_ones: f64,
    /// Best pair of point masses: 1 if some product has length `m`, else 0.
    pub atoms: f64,
    pub max_ratio: f64,
    /// `max_ratio / (1 + min(k, l))`.
    pub linear_envelope: f64,
    /// `max_ratio / (1 + min(k, l))²`.
    pub quadratic_envelope: f64,
}

impl RatioRow {
    pub const CSV_HEADER: &'static str =
        "k,l,m,trials,random_max,all_ones,positive_ones,atoms,max_ratio,linear_envelope,quadratic_envelope";

    /// One CSV line with fixed precision, so equal rows print identically.
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12}",
            self.k,
            self.l,
            self.m,
            self.trials,
            self.random_max,
            self.all_ones,
            self.positive_ones,
            self.atoms,
            self.max_ratio,
            self.linear_envelope,
            self.quadratic_envelope
        )
    }
}

/// Products `C_k × C_l` of length `m`, as index triples into the spheres.
struct ProductTable {
    /// `(i, j, t)`: sphere-k element i times sphere-l element j is target t.
    entries: Vec<(u32, u32, u32)>,
}

impl ProductTable {
    fn build(group: &ArtinGroup, ball: &Ball, k: usize, l: usize, m: usize) -> Self {
        let (ck, cl) = (ball.sphere(k), ball.sphere(l));
        let rows: Vec<Vec<(u32, u32, Word)>> = ck
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                cl.iter()
                    .enumerate()
                    .filter_map(|(j, h)| {
                        let p = group.nf(&[g.letters(), h.letters()].concat());
                        (p.len() == m).then_some((i as u32, j as u32, p))
                    })
                    .collect()
            })
            .collect();
        let mut targets: BTreeMap<Word, u32> = BTreeMap::new();
        for (_, _, p) in rows.iter().flatten() {
            targets.entry(p.clone()).or_insert(0);
        }
        for (t, slot) in targets.values_mut().enumerate() {
            *slot = t as u32;
        }
        let entries = rows.into_iter().flatten().map(|(i, j, p)| (i, j, targets[&p])).collect();
        ProductTable { entries }
    }

    fn ratio(&self, phi: &[Complex64], psi: &[Complex64]) -> f64 {
        let denom = norm(phi) * norm(psi);
        if denom == 0.0 {
            return 0.0;
        }
        let mut out: FxHashMap<u32, Complex64> = FxHashMap::default();
        for &(i, j, t) in &self.entries {
            *out.entry(t).or_default() += phi[i as usize] * psi[j as usize];
        }
        let mut vals: Vec<(u32, Complex64)> = out.into_iter().collect();
        vals.sort_by_key(|(t, _)| *t);
        vals.iter().map(|(_, c)| c.norm_sqr()).sum::<f64>().sqrt() / denom
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

fn positive_indicator(sphere: &[Word]) -> Vec<Complex64> {
    sphere
        .iter()
        .map(|w| if w.is_empty() || sign_class(w) == SignClass::Positive { 1.0 } else { 0.0 })
        .map(|x| Complex64::new(x, 0.0))
        .collect()
}

/// Ratio table row for `(k, l, m)` over seeded random and structured inputs.
///
/// Fails when the ball does not reach radius `k + l`. Rows with `m` outside
/// `[|k − l|, k + l]` are all zero.
pub fn check_condition_star_star(
    group: &ArtinGroup,
    ball: &Ball,
    k: usize,
    l: usize,
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<RatioRow> {
    if ball.complete_radius() < k + l {
        return Err(Error::OutsideBall { radius: ball.complete_radius() });
    }
    let (nk, nl) = (ball.sphere(k).len(), ball.sphere(l).len());
    let table = ProductTable::build(group, ball, k, l, m);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64) << 40) ^ ((l as u64) << 20) ^ m as u64);
    let mut random_max: f64 = 0.0;
    for _ in 0..trials {
        let phi = random_vector(&mut rng, nk);
        let psi = random_vector(&mut rng, nl);
        random_max = random_max.max(table.ratio(&phi, &psi));
    }
    let ones = |n: usize| vec![Complex64::new(1.0, 0.0); n];
    let all_ones = table.ratio(&ones(nk), &ones(nl));
    let positive_ones = table.ratio(&positive_indicator(ball.sphere(k)), &positive_indicator(ball.sphere(l)));
    let atoms = if table.entries.is_empty() { 0.0 } else { 1.0 };
    let max_ratio = random_max.max(all_ones).max(positive_ones).max(atoms);
    let scale = 1.0 + k.min(l) as f64;
    Ok(RatioRow {
        k,
        l,
        m,
        trials,
        random_max,
        all_ones,
        positive_ones,
        atoms,
        max_ratio,
        linear_envelope: max_ratio / scale,
        quadratic_envelope: max_ratio / (scale * scale),
    })
}

/// Rows for every `k, l ≥ 0` with `k + l ≤ radius` and every `m` in the annulus.
pub fn ratio_table(group: &ArtinGroup, ball: &Ball, radius: usize, trials: usize, seed: u64) -> Result<Vec<RatioRow>> {
    let mut rows = Vec::new();
    for k in 0..=radius {
        for l in 0..=radius - k {
            for m in k.abs_diff(l)..=k + l {
                rows.push(check_condition_star_star(group, ball, k, l, m, trials, seed)?);
            }
        }
    }
    Ok(rows)
}

/// Lower bounds for `sup_ψ ‖φ * ψ‖₂ / ‖ψ‖₂` with `ψ` supported in balls.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperatorNormEstimate {
    /// Entry `r` is the bound reached with `ψ` supported in the ball of radius `r`.
    pub per_radius: Vec<f64>,
    pub estimate: f64,
}

/// The map `ψ ↦ φ * ψ` on the ball, as sparse entries `(target, source, φ(h))`.
///
/// Sources are ball positions, ordered by sphere, so a prefix of the sources
/// is a smaller ball.
pub(crate) struct ConvolutionOperator {
    pub(crate) entries: Vec<(usize, usize, Complex64)>,
    pub(crate) sources: usize,
    pub(crate) targets: usize,
    /// `prefix[r]` is the number of elements of length at most `r`.
    pub(crate) prefix: Vec<usize>,
}

impl ConvolutionOperator {
    pub(crate) fn build(group: &ArtinGroup, phi: &GroupFunction, ball: &Ball) -> Self {
        let sources: Vec<&Word> = ball.elements().collect();
        let mut prefix = vec![0];
        for s in ball.spheres() {
            prefix.push(prefix.last().unwrap() + s.len());
        }
        prefix.remove(0);
        let terms: Vec<(&Word, Complex64)> = phi.iter().map(|(w, c)| (w, *c)).collect();
        let rows: Vec<Vec<(Word, usize, Complex64)>> = sources
            .par_iter()
            .enumerate()
            .map(|(s, x)| terms.iter().map(|(h, c)| (group.nf(&[h.letters(), x.letters()].concat()), s, *c)).collect())
            .collect();
        let mut index: BTreeMap<Word, usize> = BTreeMap::new();
        for (t, _, _) in rows.iter().flatten() {
            index.entry(t.clone()).or_insert(0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let entries = rows.into_iter().flatten().map(|(t, s, c)| (index[&t], s, c)).collect();
        ConvolutionOperator { entries, sources: sources.len(), targets: index.len(), prefix }
    }

    pub(crate) fn apply(&self, psi: &[Complex64], limit: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); self.targets];
        for &(t, s, c) in &self.entries {
            if s < limit {
                out[t] += c * psi[s];
            }
        }
        out
    }

    fn apply_adjoint(&self, y: &[Complex64], limit: usize) -> Vec<Complex64> {
        let mut out = vec![Complex64::default(); limit];
        for &(t, s, c) in &self.entries {
            if s < limit {
                out[s] += c.conj() * y[t];
            }
        }
        out
    }
}

/// Power iteration on `T*T` for `T = φ * ·` restricted to balls of radius
/// `0..=radius`, each warm-started from the previous radius.
///
/// Every reported value is the ratio of an explicit vector, so the result is
/// a lower bound; it never decreases with the radius.
pub fn operator_norm_estimate(
    group: &ArtinGroup,
    phi: &GroupFunction,
    radius: usize,
    iterations: usize,
    max_elements: usize,
) -> Result<OperatorNormEstimate> {
    let ball = group.complete_ball(radius, max_elements)?;
    let op = ConvolutionOperator::build(group, phi, &ball);
    let mut psi = vec![Complex64::default(); op.sources];
    // A generic start reaches every invariant subspace of T*T; the seed is
    // fixed so the estimate is a function of φ alone.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: f64 = 0.0;
    let mut per_radius = Vec::with_capacity(radius + 1);
    for &limit in &op.prefix {
        let start = random_vector(&mut rng, limit);
        let scale = norm(&start);
        for (slot, v) in psi.iter_mut().zip(start) {
            *slot += v / scale;
        }
        for _ in 0..=iterations {
            let n = norm(&psi[..limit]);
            if n == 0.0 {
                break;
            }
            let image = op.apply(&psi, limit);
            best = best.max(norm(&image) / n);
            let back = op.apply_adjoint(&image, limit);
            let bn = norm(&back);
            if bn == 0.0 {
                break;
            }
            for (slot, v) in psi.iter_mut().zip(back) {
                *slot = v / bn;
            }
        }
        per_radius.push(best);
    }
    Ok(OperatorNormEstimate { per_radius, estimate: best })
}
