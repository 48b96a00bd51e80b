mod common;

use artin::large_type::ArtinGroup;
use artin::oracle::ClosureOracle;
use artin::CoxeterPresentation;
use common::*;
use rayon::prelude::*;

fn agree_upto(pres: CoxeterPresentation, len: usize) {
    let g = ArtinGroup::new(pres.clone()).unwrap();
    let o = ClosureOracle::new(pres);
    let words = reduced_words_upto(g.n(), len);
    let bad: Vec<String> = words
        .par_iter()
        .filter_map(|w| {
            let e = g.nf(w);
            let c = o.canonical(w).unwrap();
            (e != c).then(|| format!("{} -> engine {} oracle {}", artin::word::Letters(w), e, c))
        })
        .collect();
    assert!(bad.is_empty(), "{} disagreements, first: {:?}", bad.len(), &bad[..bad.len().min(5)]);
}

#[test]
fn dihedral_three() {
    agree_upto(dihedral(3), 8);
}

#[test]
fn dihedral_four() {
    agree_upto(dihedral(4), 8);
}

#[test]
fn triangle_345() {
    agree_upto(triangle(3, 4, 5), 6);
}

#[test]
fn triangle_444() {
    agree_upto(triangle(4, 4, 4), 6);
}

#[test]
fn triangle_555() {
    agree_upto(triangle(5, 5, 5), 6);
}
