mod common;

use std::collections::BTreeSet;

use artin::large_type::sequences::rightward_to_last_letter;
use artin::large_type::ArtinGroup;
use artin::oracle::{BraidAction, ClosureOracle};
use artin::{Letter, Word};
use common::*;
use proptest::prelude::*;
use rayon::prelude::*;

/// `wa` geodesic implies `wa^k` geodesic.
#[test]
fn geodesic_extension_by_powers() {
    for pres in [triangle(3, 4, 5), triangle(4, 4, 4)] {
        let g = ArtinGroup::new(pres).unwrap();
        let bad: Vec<String> = reduced_words_upto(3, 6)
            .par_iter()
            .filter(|w| g.is_geodesic(w))
            .flat_map_iter(|w| {
                let g = &g;
                g.letters().filter_map(move |a| {
                    let wa = [w.as_slice(), &[a]].concat();
                    if !g.is_geodesic(&wa) {
                        return None;
                    }
                    (2..=3)
                        .map(|k| [w.as_slice(), &vec![a; k]].concat())
                        .find(|wak| !g.is_geodesic(wak))
                        .map(|wak| Word::from(wak).to_string())
                })
            })
            .collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The same extension property with lengths from the closure oracle.
    #[test]
    fn geodesic_extension_by_powers_oracle(codes in prop::collection::vec(0u16..6, 0..6), a in 0u16..6) {
        let pres = triangle(3, 4, 5);
        let o = ClosureOracle::new(pres);
        let w = artin::word::free_reduce(&codes.iter().map(|&c| Letter::from_code(c)).collect::<Vec<_>>());
        let a = Letter::from_code(a);
        let wa = [w.as_slice(), &[a]].concat();
        prop_assume!(artin::word::is_freely_reduced(&wa) && o.geodesic_length(&wa).unwrap() == wa.len());
        for k in 2..=3 {
            let wak = [w.as_slice(), &vec![a; k]].concat();
            prop_assert_eq!(o.geodesic_length(&wak).unwrap(), wak.len());
        }
    }
}

/// Geodesics for one element that end differently are joined by one rightward critical sequence.
#[test]
fn different_last_letters_joined_by_rightward_sequence() {
    for pres in [triangle(3, 4, 5), triangle(4, 4, 4)] {
        let g = ArtinGroup::new(pres.clone()).unwrap();
        let ball = g.complete_ball(5, 100_000).unwrap();
        let elements: Vec<&Word> = ball.elements().filter(|x| !x.is_empty()).collect();
        let checked: usize = elements
            .par_iter()
            .map(|x| {
                let geos = g.geodesics(x, 10_000).unwrap();
                let lasts: BTreeSet<Letter> = geos.iter().filter_map(Word::last).collect();
                let mut n = 0;
                for v in &geos {
                    for &target in lasts.iter().filter(|&&b| Some(b) != v.last()) {
                        let seq = rightward_to_last_letter(&pres, v, target)
                            .unwrap_or_else(|| panic!("no rightward sequence from {v} to last letter {target}"));
                        let out = seq.apply_moves(v);
                        assert_eq!(out.last(), Some(&target), "{v}");
                        assert!(g.equal(&out, v) && out.len() == v.len(), "{v}");
                        n += 1;
                    }
                }
                n
            })
            .sum();
        assert!(checked > 0);
    }
}

/// With no pair divisor on the facing sides, a product inside the pair subgroup is trivial.
#[test]
fn facing_sides_without_pair_divisors() {
    for pres in [triangle(3, 4, 5), triangle(4, 4, 4)] {
        let g = ArtinGroup::new(pres).unwrap();
        let ball = g.complete_ball(5, 100_000).unwrap();
        let pairs: Vec<(usize, usize)> = g.presentation().pairs().collect();
        let mut hits = 0usize;
        for total in 1..=5usize {
            for k in 1..total {
                for g1 in ball.sphere(k) {
                    for g2 in ball.sphere(total - k) {
                        let prod = g.multiply(g1, g2);
                        for &(i, j) in &pairs {
                            if prod.iter().any(|a| a.gen() != i && a.gen() != j) {
                                continue;
                            }
                            if !g.ld_ij(g1, i, j).unwrap().is_empty() || !g.rd_ij(g2, i, j).unwrap().is_empty() {
                                continue;
                            }
                            hits += 1;
                            assert!(prod.is_empty(), "{g1} . {g2} = {prod}");
                        }
                    }
                }
            }
        }
        assert!(hits > 0);
    }
}

/// In a dihedral group the middles of all mergers of lengths `k, l` number at most `2 min(k, l) + 1`.
#[test]
fn middle_set_size_in_dihedral_groups() {
    for m in [3, 4, 5] {
        let g = ArtinGroup::new(dihedral(m)).unwrap();
        let ball = g.complete_ball(6, 100_000).unwrap();
        for k in 0..=3 {
            for l in 0..=3 {
                let mut middles = BTreeSet::new();
                for x in ball.elements().filter(|x| x.len() <= k + l) {
                    middles.extend(g.build_s_t(&ball, x, k, l).unwrap().t.into_iter().map(|(_, r)| r));
                }
                assert!(middles.len() <= 2 * k.min(l) + 1, "DA({m}) k={k} l={l}: {middles:?}");
            }
        }
    }
}

/// Dihedral normal forms agree with the braid group action.
#[test]
fn dihedral_normal_forms_match_braid_action() {
    for m in [3, 5, 6] {
        let g = ArtinGroup::new(dihedral(m)).unwrap();
        let act = BraidAction::new(m).unwrap();
        let words = reduced_words_upto(2, 6);
        let bad: Vec<String> =
            words.par_iter().filter(|w| !act.equal(w, &g.nf(w))).map(|w| Word::from(w.to_vec()).to_string()).collect();
        assert!(bad.is_empty(), "DA({m}): {bad:?}");
        let distinct: BTreeSet<Word> = words.iter().map(|w| g.nf(w)).collect();
        let images: BTreeSet<String> = words.iter().map(|w| format!("{:?}", act.image(w))).collect();
        assert_eq!(distinct.len(), images.len(), "DA({m})");
    }
}
