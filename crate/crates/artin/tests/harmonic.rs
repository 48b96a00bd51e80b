mod common;

use artin::harmonic::{
    check_condition_star_star, operator_norm_estimate, projection, ratio_table, GroupFunction, LengthFunction,
    ProjectionPlan, ProjectionSide, RatioRow,
};
use artin::large_type::ArtinGroup;
use artin::oracle::{fact_set, ClosureOracle, LinearModel};
use artin::{CoxeterPresentation, Label, Word};
use common::{dihedral, triangle};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn random_on(words: &[Word], rng: &mut ChaCha8Rng) -> GroupFunction {
    GroupFunction::from_normal_forms(
        words.iter().map(|w| (w.clone(), Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))),
    )
}

#[test]
fn norms_of_small_functions() {
    let g = ArtinGroup::new(dihedral(3)).unwrap();
    let ball = g.complete_ball(1, 100).unwrap();
    assert_eq!(GroupFunction::delta(Word::new()).norms(1.0), (1.0, 1.0));
    let chi = GroupFunction::indicator(ball.sphere(1));
    let (l2, sob) = chi.norms(1.0);
    assert!((l2 - 2.0).abs() < 1e-12 && (sob - 4.0).abs() < 1e-12);
    let (l2, sob) = chi.norms(0.0);
    assert_eq!(l2, sob);
}

#[test]
fn length_function_axioms_on_balls() {
    for pres in [dihedral(3), triangle(3, 4, 5)] {
        let g = ArtinGroup::new(pres).unwrap();
        let ell = LengthFunction::new(&g);
        let ball = g.complete_ball(3, 1_000_000).unwrap();
        assert_eq!(ell.of(&[]), 0);
        let elems: Vec<&Word> = ball.elements().collect();
        for x in &elems {
            assert_eq!(ell.of(&x.inverse()), x.len());
            for y in &elems {
                assert!(ell.of(&[x.letters(), y.letters()].concat()) <= x.len() + y.len());
            }
        }
    }
}

#[test]
fn convolution_unit_and_square_of_generators() {
    let g = ArtinGroup::new(dihedral(3)).unwrap();
    let ball = g.complete_ball(2, 100).unwrap();
    let chi = GroupFunction::indicator(ball.sphere(1));
    assert_eq!(chi.convolve(&GroupFunction::delta(Word::new()), &g, None).unwrap(), chi);
    let sq = chi.convolve(&chi, &g, Some(&ball)).unwrap();
    // Coefficients counted on Burau matrices: pairs of letters with each product.
    let model = LinearModel::Braid3;
    let mut counts: FxHashMap<_, usize> = FxHashMap::default();
    for a in g.letters() {
        for b in g.letters() {
            *counts.entry(model.image(&[a, b])).or_default() += 1;
        }
    }
    assert_eq!(sq.len(), counts.len());
    for (w, v) in sq.iter() {
        assert!(w.len() <= 2);
        assert_eq!(v.re, counts[&model.image(w)] as f64);
    }
    assert_eq!(sq.get(&Word::new()).re, 4.0);
}

#[test]
fn convolution_escaping_the_ball_is_reported() {
    let g = ArtinGroup::new(dihedral(3)).unwrap();
    let ball = g.complete_ball(1, 100).unwrap();
    let chi = GroupFunction::indicator(ball.sphere(1));
    assert!(matches!(chi.convolve(&chi, &g, Some(&ball)), Err(artin::Error::OutsideBall { radius: 1 })));
}

#[test]
fn convolution_is_associative_on_samples() {
    let g = ArtinGroup::new(triangle(3, 4, 5)).unwrap();
    let ball = g.complete_ball(6, 1_000_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let f: Vec<GroupFunction> =
            (1..=3).map(|k| random_on(&ball.sphere(k)[..6.min(ball.sphere(k).len())], &mut rng)).collect();
        let left = f[0].convolve(&f[1], &g, Some(&ball)).unwrap().convolve(&f[2], &g, Some(&ball)).unwrap();
        let right = f[0].convolve(&f[1].convolve(&f[2], &g, Some(&ball)).unwrap(), &g, Some(&ball)).unwrap();
        assert_eq!(left.len(), right.len());
        for (w, v) in left.iter() {
            assert!((v - right.get(w)).norm() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn convolution_support_lies_in_the_annulus(seed in any::<u64>(), k in 0usize..=3, l in 0usize..=3) {
        let g = ArtinGroup::new(triangle(4, 4, 4)).unwrap();
        let ball = g.complete_ball(3, 1_000_000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let phi = random_on(ball.sphere(k), &mut rng);
        let psi = random_on(ball.sphere(l), &mut rng);
        let prod = phi.convolve(&psi, &g, None).unwrap();
        let lo = k.abs_diff(l);
        for w in prod.support() {
            prop_assert!(lo <= w.len() && w.len() <= k + l);
        }
    }
}

#[test]
fn trivial_projections() {
    let g = ArtinGroup::new(triangle(4, 4, 4)).unwrap();
    let ball = g.complete_ball(3, 1_000_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let phi = random_on(ball.sphere(3), &mut rng);
    for side in [ProjectionSide::Right, ProjectionSide::Left] {
        let p0 = projection(&g, &phi, 3, 0, side).unwrap();
        for (w, v) in phi.iter() {
            assert!((p0.function.get(w).re - v.norm()).abs() < 1e-12);
        }
        let x = ball.sphere(3)[5].clone();
        let point = GroupFunction::delta(x).scale(Complex64::new(0.0, -2.0));
        let pk = projection(&g, &point, 3, 3, side).unwrap();
        assert_eq!(pk.function.len(), 1);
        assert!((pk.function.get(&Word::new()).re - 2.0).abs() < 1e-12);
    }
    assert!(projection(&g, &phi, 3, 4, ProjectionSide::Right).is_err());
    assert!(projection(&g, &phi, 2, 1, ProjectionSide::Right).is_err());
}

#[test]
fn projection_bound_with_oracle_factorisation_counts() {
    let g = ArtinGroup::new(dihedral(3)).unwrap();
    let oracle = ClosureOracle::new(dihedral(3));
    let ball = g.complete_ball(4, 1_000_000).unwrap();
    let keep = |a: &Word, b: &Word| g.is_permissible(a, b).unwrap();
    let mut f_measured = 0;
    for x in ball.sphere(4) {
        f_measured = f_measured.max(fact_set(&oracle, x, 2, 2, Some(&keep)).unwrap().count());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for side in [ProjectionSide::Right, ProjectionSide::Left] {
        let plan = ProjectionPlan::new(&g, ball.sphere(4), 4, 2, side).unwrap();
        assert_eq!(plan.max_splits(), f_measured);
        for _ in 0..50 {
            let phi = random_on(ball.sphere(4), &mut rng);
            let proj = plan.apply(&phi).unwrap();
            assert!(proj.function.l2_norm().powi(2) <= f_measured as f64 * phi.l2_norm().powi(2) + 1e-9);
        }
    }
}

fn star_star_table(g: &ArtinGroup, radius: usize, trials: usize, seed: u64) -> String {
    let ball = g.complete_ball(radius, 1_000_000).unwrap();
    let rows = ratio_table(g, &ball, radius, trials, seed).unwrap();
    artin::sweep::to_csv(RatioRow::CSV_HEADER, &rows, RatioRow::csv)
}

#[test]
fn star_star_table_matches_fixture() {
    let g = ArtinGroup::new(dihedral(3)).unwrap();
    let table = star_star_table(&g, 4, 40, 1);
    assert_eq!(table, star_star_table(&g, 4, 40, 1));
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/star_star_da3.csv");
    if std::env::var_os("ARTIN_BLESS").is_some() {
        std::fs::write(path, &table).unwrap();
    }
    assert_eq!(table, std::fs::read_to_string(path).unwrap());
}

#[test]
fn all_ones_ratio_from_matrix_counts() {
    let g = ArtinGroup::new(dihedral(3)).unwrap();
    let ball = g.complete_ball(4, 1_000_000).unwrap();
    let row = check_condition_star_star(&g, &ball, 2, 2, 2, 0, 0).unwrap();
    let model = LinearModel::Braid3;
    let lens = model.ball_lengths(4);
    let c2: Vec<_> = lens.iter().filter(|(_, &n)| n == 2).map(|(m, _)| m.clone()).collect();
    let mut counts: FxHashMap<_, f64> = FxHashMap::default();
    for a in &c2 {
        for b in &c2 {
            let p = a.mul(b);
            if lens.get(&p) == Some(&2) {
                *counts.entry(p).or_default() += 1.0;
            }
        }
    }
    let expected = counts.values().map(|x| x * x).sum::<f64>().sqrt() / c2.len() as f64;
    assert!((row.all_ones - expected).abs() < 1e-9, "{} vs {}", row.all_ones, expected);
}

/// Dense matrix of `ψ ↦ φ * ψ` on the ball, built one basis vector at a time.
fn dense_operator(g: &ArtinGroup, phi: &GroupFunction, radius: usize) -> DMatrix<f64> {
    let ball = g.complete_ball(radius, 1_000_000).unwrap();
    let elems: Vec<Word> = ball.elements().cloned().collect();
    let columns: Vec<GroupFunction> =
        elems.iter().map(|x| phi.convolve(&GroupFunction::delta(x.clone()), g, None).unwrap()).collect();
    let mut rows: Vec<Word> = columns.iter().flat_map(|f| f.support().cloned()).collect();
    rows.sort();
    rows.dedup();
    DMatrix::from_fn(rows.len(), elems.len(), |i, j| columns[j].get(&rows[i]).re)
}

#[test]
fn operator_norm_agrees_with_dense_singular_values() {
    for pres in [dihedral(3), triangle(4, 4, 4)] {
        let g = ArtinGroup::new(pres).unwrap();
        let ball = g.complete_ball(1, 100).unwrap();
        let phi = GroupFunction::indicator(ball.sphere(1))
            .scale(c(0.5))
            .convolve(&GroupFunction::indicator(ball.sphere(1)), &g, None)
            .unwrap();
        for radius in 1..=3 {
            let sigma = dense_operator(&g, &phi, radius).singular_values().max();
            let est = operator_norm_estimate(&g, &phi, radius, 400, 1_000_000).unwrap();
            assert!(est.estimate <= sigma + 1e-9);
            assert!(est.estimate >= sigma * (1.0 - 1e-6), "{} vs {}", est.estimate, sigma);
        }
    }
}

#[test]
fn free_group_generator_sum_approaches_its_norm() {
    let g = ArtinGroup::new(CoxeterPresentation::dihedral(Label::Infinite).unwrap()).unwrap();
    let ball = g.complete_ball(1, 100).unwrap();
    let phi = GroupFunction::indicator(ball.sphere(1));
    let est = operator_norm_estimate(&g, &phi, 7, 60, 1_000_000).unwrap();
    let limit = 2.0 * 3f64.sqrt();
    assert!(est.per_radius.windows(2).all(|w| w[0] <= w[1]));
    assert!(est.estimate < limit);
    assert!(est.estimate > 3.2, "{:?}", est.per_radius);
    // The dense computation at radius 4 bounds the iteration from above.
    let sigma = dense_operator(&g, &phi, 4).singular_values().max();
    assert!(est.per_radius[4] <= sigma + 1e-9 && sigma < limit);
    let scaled = operator_norm_estimate(&g, &phi.scale(Complex64::new(0.0, -3.0)), 7, 60, 1_000_000).unwrap();
    assert!((scaled.estimate - 3.0 * est.estimate).abs() < 1e-9);
}
