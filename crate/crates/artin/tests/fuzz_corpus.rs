//! Replays the checked-in fuzz corpus through the fuzz targets' round-trip properties.

use std::path::PathBuf;

use artin::oracle::cache;
use artin::{parse_word, CoxeterPresentation};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap())
        .collect();
    out.sort();
    assert!(!out.is_empty());
    out
}

#[test]
fn word_seeds_round_trip() {
    for text in seeds("parse_word") {
        if let Ok(w) = parse_word(&text, 3) {
            assert_eq!(parse_word(&w.to_string(), 3).unwrap(), w, "{text:?}");
        }
    }
}

#[test]
fn presentation_seeds_round_trip() {
    let mut accepted = 0;
    for text in seeds("presentation_toml") {
        if let Ok(p) = CoxeterPresentation::from_toml_str(&text) {
            accepted += 1;
            assert_eq!(CoxeterPresentation::from_toml_str(&p.to_toml_string()).unwrap().hash_hex(), p.hash_hex());
        }
    }
    assert!(accepted >= 7);
}

#[test]
fn ball_seeds_round_trip() {
    for text in seeds("ball_cache") {
        let ball = cache::decode(&text).unwrap();
        assert_eq!(cache::decode(&cache::encode(&ball)).unwrap(), ball);
    }
}
