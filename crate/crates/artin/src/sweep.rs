//! Exhaustive sweeps over enumerated balls: factorisation counts, merger
//! bounds, compression of merger triples and the projection inequality.
//!
//! Every sweep visits elements in ball order (shortlex) and aggregates in that
//! order, so repeated runs produce identical rows.

use std::collections::BTreeMap;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::dihedral::{compress, has_garside_divisor};
use crate::error::Result;
use crate::harmonic::{GroupFunction, ProjectionPlan, ProjectionSide};
use crate::large_type::{ArtinGroup, LargeMerger};
use crate::oracle::Ball;
use crate::presentation::CoxeterPresentation;
use crate::word::{inverse, Letter, Word};

/// Polynomial bound for the number of permissible left divisors of length `s`
/// of one element, assembled from the counting argument: `4ms² + 5(s + 1)` in
/// a 2-generator group, and `P(s) = P(s − 1) + 2 Σ_{j ≤ s} P′(j)` with more
/// generators. `None` for free groups.
pub fn divisor_count_bound(pres: &CoxeterPresentation, s: usize) -> Option<u64> {
    let m = pres.max_finite_label()? as u64;
    let dihedral = |j: u64| 4 * m * j * j + 5 * (j + 1);
    let s = s as u64;
    if pres.n() == 2 {
        return Some(dihedral(s));
    }
    let mut p = 1u64;
    let mut q = 0u64;
    for j in 1..=s {
        q += dihedral(j);
        p += 2 * q;
    }
    Some(p)
}

/// Maximal factorisation counts over the sphere `C_{k+l}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactRow {
    pub k: usize,
    pub l: usize,
    /// `max_g |Fact_{k,l}(g)|`.
    pub all: usize,
    /// `max_g |Fact_{𝒫,k,l}(g)|`.
    pub permissible: usize,
    /// Shortlex-least element attaining `permissible`.
    pub witness: Word,
    pub bound: Option<u64>,
}

impl FactRow {
    pub const CSV_HEADER: &'static str = "k,l,min,fact,fact_permissible,witness,bound";

    pub fn csv(&self) -> String {
        let bound = self.bound.map_or_else(String::new, |b| b.to_string());
        format!(
            "{},{},{},{},{},{},{}",
            self.k,
            self.l,
            self.k.min(self.l),
            self.all,
            self.permissible,
            self.witness,
            bound
        )
    }
}

/// `F_{k,l}` and `F_{𝒫,k,l}` for every `k + l` up to the ball's radius.
pub fn fact_table(group: &ArtinGroup, ball: &Ball) -> Result<Vec<FactRow>> {
    group.require_33m()?;
    let elements: Vec<&Word> = ball.elements().collect();
    let counts: Vec<Result<Vec<(usize, usize)>>> = elements
        .par_iter()
        .map(|g| {
            group
                .left_divisors(g)
                .into_iter()
                .map(|level| {
                    let mut kept = 0;
                    for d in &level {
                        let rest = group.nf(&[&inverse(d), g.letters()].concat());
                        if group.is_permissible(d, &rest)? {
                            kept += 1;
                        }
                    }
                    Ok((level.len(), kept))
                })
                .collect()
        })
        .collect();
    let mut rows: BTreeMap<(usize, usize), FactRow> = BTreeMap::new();
    for (g, per_k) in elements.iter().zip(counts) {
        for (k, (all, kept)) in per_k?.into_iter().enumerate() {
            let l = g.len() - k;
            let row = rows.entry((k + l, k)).or_insert_with(|| FactRow {
                k,
                l,
                all: 0,
                permissible: 0,
                witness: (*g).clone(),
                bound: divisor_count_bound(group.presentation(), k.min(l)),
            });
            row.all = row.all.max(all);
            if kept > row.permissible {
                row.permissible = kept;
                row.witness = (*g).clone();
            }
        }
    }
    Ok(rows.into_values().collect())
}

/// Merger statistics over all pairs `(g1, g2) ∈ C_k × C_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MergerRow {
    pub k: usize,
    pub l: usize,
    pub pairs: usize,
    /// Pairs whose product is shorter than `k + l`.
    pub reduced: usize,
    pub max_abs_r: i64,
    pub max_p1: usize,
    pub max_p2: usize,
    /// `(m − 1) · min(k, l)`.
    pub p_bound: usize,
    /// Largest number of distinct middle elements over products `g`.
    pub max_middles: usize,
    pub violations: usize,
}

impl MergerRow {
    pub const CSV_HEADER: &'static str = "k,l,pairs,reduced,max_abs_r,max_p1,max_p2,p_bound,max_middles,violations";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.k,
            self.l,
            self.pairs,
            self.reduced,
            self.max_abs_r,
            self.max_p1,
            self.max_p2,
            self.p_bound,
            self.max_middles,
            self.violations
        )
    }
}

/// Result of a merger sweep: one row per `(k, l)` and the failed checks.
#[derive(Debug, Clone, Serialize)]
pub struct MergerScan {
    pub rows: Vec<MergerRow>,
    pub violations: Vec<String>,
}

fn largest_label_minus_one(group: &ArtinGroup) -> usize {
    group.presentation().max_finite_label().map_or(1, |m| m as usize - 1)
}

/// Whether `(a, b)` is a permissible factorisation of `whole`.
fn splits_permissibly(group: &ArtinGroup, whole: &Word, a: &Word, b: &Word) -> Result<bool> {
    Ok(group.equal(&[a.letters(), b.letters()].concat(), whole) && group.is_permissible(a, b)?)
}

/// Failed merger properties for one pair, one line each.
pub fn merger_violations(group: &ArtinGroup, m: &LargeMerger) -> Result<Vec<String>> {
    let (k, l) = (m.g1.len(), m.g2.len());
    let s = k.min(l);
    let mid = group.merger_middle(m)?;
    let mut bad = Vec::new();
    let tag = format!("({}, {})", m.g1, m.g2);
    if !group
        .equal(&[m.f1.letters(), mid.letters(), m.f2.letters()].concat(), &[m.g1.letters(), m.g2.letters()].concat())
    {
        bad.push(format!("{tag}: f1 Δ^r f2 differs from g1 g2"));
    }
    if !group.equal(&[m.h1.letters(), m.h2.letters()].concat(), &mid) {
        bad.push(format!("{tag}: h1 h2 differs from Δ^r"));
    }
    if !splits_permissibly(group, &m.g1, &m.f1, &m.h1)? {
        bad.push(format!("{tag}: (f1, h1) is not a permissible factorisation of g1"));
    }
    if !splits_permissibly(group, &m.g2, &m.h2, &m.f2)? {
        bad.push(format!("{tag}: (h2, f2) is not a permissible factorisation of g2"));
    }
    if m.r.unsigned_abs() as usize > s {
        bad.push(format!("{tag}: |r| = {} exceeds min(k, l)", m.r.abs()));
    }
    let p_bound = largest_label_minus_one(group) * s;
    if m.h1.len() > p_bound || m.h2.len() > p_bound {
        bad.push(format!("{tag}: |h1| = {}, |h2| = {} exceed {p_bound}", m.h1.len(), m.h2.len()));
    }
    Ok(bad)
}

/// Pairs `(g1, g2)` with `|g1| = k`, `|g2| = l` from the ball.
fn sphere_pairs(ball: &Ball, k: usize, l: usize) -> Vec<(&Word, &Word)> {
    ball.sphere(k).iter().flat_map(|a| ball.sphere(l).iter().map(move |b| (a, b))).collect()
}

/// Merge every pair with `1 ≤ k, l` and `k + l ≤ radius`, checking the merger
/// bounds and the permissibility of both sides.
pub fn merger_scan(group: &ArtinGroup, ball: &Ball, radius: usize) -> Result<MergerScan> {
    group.require_33m()?;
    let radius = radius.min(ball.complete_radius());
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for total in 2..=radius {
        for k in 1..total {
            let l = total - k;
            let pairs = sphere_pairs(ball, k, l);
            let results: Vec<Result<(Word, LargeMerger, Vec<String>)>> = pairs
                .par_iter()
                .map(|(a, b)| {
                    let m = group.merge(a, b)?;
                    let bad = merger_violations(group, &m)?;
                    Ok((group.nf(&[a.letters(), b.letters()].concat()), m, bad))
                })
                .collect();
            let mut row = MergerRow {
                k,
                l,
                pairs: pairs.len(),
                reduced: 0,
                max_abs_r: 0,
                max_p1: 0,
                max_p2: 0,
                p_bound: largest_label_minus_one(group) * k.min(l),
                max_middles: 0,
                violations: 0,
            };
            let mut middles: BTreeMap<Word, Vec<(Option<(usize, usize)>, i64)>> = BTreeMap::new();
            for res in results {
                let (g, m, bad) = res?;
                if g.len() < k + l {
                    row.reduced += 1;
                }
                row.max_abs_r = row.max_abs_r.max(m.r.abs());
                row.max_p1 = row.max_p1.max(m.h1.len());
                row.max_p2 = row.max_p2.max(m.h2.len());
                let key = (if m.r == 0 { None } else { m.pair }, m.r);
                let entry = middles.entry(g).or_default();
                if !entry.contains(&key) {
                    entry.push(key);
                }
                row.violations += bad.len();
                violations.extend(bad);
            }
            row.max_middles = middles.values().map(Vec::len).max().unwrap_or(0);
            rows.push(row);
        }
    }
    Ok(MergerScan { rows, violations })
}

/// Totals of a compression sweep.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CompressionScan {
    /// Triples compressed and checked.
    pub compressed: usize,
    /// Triples with `r = 0` whose outer factors involve a single generator;
    /// their product needs no 2-generator reduction.
    pub single_generator: usize,
    pub violations: Vec<String>,
}

/// Equality and geodesic length decided independently of the engine.
pub trait ElementOracle: Sync {
    fn equal(&self, u: &[Letter], v: &[Letter]) -> Result<bool>;
    fn length(&self, w: &[Letter]) -> Result<usize>;
}

impl ElementOracle for crate::oracle::ClosureOracle {
    fn equal(&self, u: &[Letter], v: &[Letter]) -> Result<bool> {
        crate::oracle::ClosureOracle::equal(self, u, v)
    }

    fn length(&self, w: &[Letter]) -> Result<usize> {
        self.geodesic_length(w)
    }
}

/// Compress the 2-generator core of one merger and check the result.
fn compression_violations(
    group: &ArtinGroup,
    oracle: &dyn ElementOracle,
    m: &LargeMerger,
) -> Result<Option<Vec<String>>> {
    let pair = if m.r != 0 { m.pair } else { group.split_pair(&m.f1, &m.f2)? };
    let Some((i, j)) = pair else { return Ok(None) };
    let ctx = group.parabolic(i, j)?;
    let (f1p, f2p) = (group.rd_ij(&m.f1, i, j)?, group.ld_ij(&m.f2, i, j)?);
    let f1pp = group.nf(&[m.f1.letters(), &inverse(&f1p)].concat());
    let f2pp = group.nf(&[&inverse(&f2p), m.f2.letters()].concat());
    let tag = format!("({}, r={}, {}) in pair ({},{})", m.f1, m.r, m.f2, i + 1, j + 1);
    let mut bad = Vec::new();
    let c = match compress(&ctx, &f1p, m.r, &f2p) {
        Ok(c) => c,
        Err(e) => {
            bad.push(format!("{tag}: compression failed: {e}"));
            return Ok(Some(bad));
        }
    };
    let middle = group.merger_middle(m)?;
    let core = [f1p.letters(), middle.letters(), f2p.letters()].concat();
    if oracle.length(&c.word)? != c.word.len() {
        bad.push(format!("{tag}: compressed word {} is not geodesic", c.word));
    }
    if !oracle.equal(&c.word, &core)? {
        bad.push(format!("{tag}: compressed word {} differs from the core", c.word));
    }
    if has_garside_divisor(&ctx, c.unsigned_part())? {
        bad.push(format!("{tag}: unsigned part of {} has a Garside divisor", c.word));
    }
    let whole = [f1pp.letters(), c.word.letters(), f2pp.letters()].concat();
    let target = [m.g1.letters(), m.g2.letters()].concat();
    if !oracle.equal(&whole, &target)? {
        bad.push(format!("{tag}: outer factors around the compressed core differ from g1 g2"));
    }
    Ok(Some(bad))
}

/// Compress the 2-generator core of every merger with `k + l ≤ radius`.
///
/// In a 2-generator group the core is the whole triple.
pub fn compression_scan(
    group: &ArtinGroup,
    oracle: &dyn ElementOracle,
    ball: &Ball,
    radius: usize,
) -> Result<CompressionScan> {
    group.require_33m()?;
    let radius = radius.min(ball.complete_radius());
    let mut out = CompressionScan::default();
    for total in 2..=radius {
        for k in 1..total {
            let pairs = sphere_pairs(ball, k, total - k);
            let results: Vec<Result<Option<Vec<String>>>> = pairs
                .par_iter()
                .filter(|(a, b)| !group.is_geodesic_factorisation(a, b))
                .map(|(a, b)| compression_violations(group, oracle, &group.merge(a, b)?))
                .collect();
            for res in results {
                match res? {
                    None => out.single_generator += 1,
                    Some(bad) => {
                        out.compressed += 1;
                        out.violations.extend(bad);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Worst ratio `‖φ^(p)‖₂² / (F · ‖φ_k‖₂²)` for random functions on one sphere,
/// where `F` is the largest number of permissible splits in the sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProjectionRow {
    pub k: usize,
    pub p: usize,
    pub side: ProjectionSide,
    pub trials: usize,
    pub f: usize,
    pub max_ratio: f64,
    pub violations: usize,
}

impl ProjectionRow {
    pub const CSV_HEADER: &'static str = "k,p,side,trials,f,max_ratio,violations";

    pub fn csv(&self) -> String {
        let side = match self.side {
            ProjectionSide::Right => "right",
            ProjectionSide::Left => "left",
        };
        format!("{},{},{},{},{},{:.12},{}", self.k, self.p, side, self.trials, self.f, self.max_ratio, self.violations)
    }
}

/// Check the projection inequality for `trials` seeded random functions on
/// each sphere up to `radius`, for every `p` and both sides.
pub fn projection_scan(
    group: &ArtinGroup,
    ball: &Ball,
    radius: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<ProjectionRow>> {
    let radius = radius.min(ball.complete_radius());
    let mut rows = Vec::new();
    for k in 1..=radius {
        let sphere = ball.sphere(k);
        for p in 0..=k {
            for side in [ProjectionSide::Right, ProjectionSide::Left] {
                let plan = ProjectionPlan::new(group, sphere, k, p, side)?;
                let f = plan.max_splits();
                let salt = ((k as u64) << 32) ^ ((p as u64) << 8) ^ (side == ProjectionSide::Left) as u64;
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ salt);
                let mut row = ProjectionRow { k, p, side, trials, f, max_ratio: 0.0, violations: 0 };
                for _ in 0..trials {
                    let phi = GroupFunction::from_normal_forms(
                        sphere
                            .iter()
                            .map(|w| (w.clone(), Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))),
                    );
                    let proj = plan.apply(&phi)?;
                    let lhs = proj.function.l2_norm().powi(2);
                    let rhs = f as f64 * phi.l2_norm().powi(2);
                    if rhs > 0.0 {
                        row.max_ratio = row.max_ratio.max(lhs / rhs);
                    }
                    if !proj.satisfies_bound(&phi) || lhs > rhs + crate::harmonic::TOLERANCE * (1.0 + rhs) {
                        row.violations += 1;
                    }
                }
                rows.push(row);
            }
        }
    }
    Ok(rows)
}

/// Rows as CSV text with a header line.
pub fn to_csv<T>(header: &str, rows: &[T], line: impl Fn(&T) -> String) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}
