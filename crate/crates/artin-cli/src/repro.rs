//! Worked examples: alternating words, the (p, n) counts and τ in DA(3), the
//! length reducing sequence in the (3,4,5) triangle group, and the (4,3,3)
//! counterexample to the unique-tail property.

use std::fmt::Write as _;

use artin::dihedral::{tau, DihedralContext};
use artin::large_type::sequences::rightward_length_reducing;
use artin::large_type::ArtinGroup;
use artin::oracle::ClosureOracle;
use artin::word::{alternating, Side};
use artin::{parse_word, Error, Letter, Word};
use serde::Serialize;
use serde_json::json;

use crate::{Presets, Report, Result};

/// Outcome of one example.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub presentation: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = artin::Result<(bool, String)>;

fn w(text: &str, n: usize) -> Word {
    parse_word(text, n).expect("example words are well formed")
}

fn alternating_words() -> Outcome {
    let (a, b) = (Letter::pos(0), Letter::pos(1));
    let six = alternating(a, b, 6, Side::LeftStart)?;
    let five = alternating(a, b, 5, Side::LeftStart)?;
    let empty = [alternating(a, b, 0, Side::LeftStart)?, alternating(a, b, 0, Side::RightEnd)?];
    let ok = six.to_string() == "ababab" && five.to_string() == "ababa" && empty.iter().all(|e| e.is_empty());
    Ok((ok, format!("_6(a,b) = {six}, _5(a,b) = {five}, _0 empty on both sides")))
}

fn classification() -> Outcome {
    let good = Presets::get("tri-345").map_err(|_| Error::Shape("preset"))?;
    let bad = Presets::get("tri-433").map_err(|_| Error::Shape("preset"))?;
    let ok = good.is_large() && good.satisfies_33m() && bad.is_large() && !bad.satisfies_33m();
    Ok((ok, format!("(3,4,5): (3,3,m) {}; (4,3,3): (3,3,m) {}", good.satisfies_33m(), bad.satisfies_33m())))
}

fn dihedral_counts() -> Outcome {
    let ctx = DihedralContext::finite(3);
    let (aba, abba) = (w("aba", 2), w("abbA", 2));
    let pn = (ctx.pn(&aba)?, ctx.pn(&abba)?);
    let ok = pn == ((3, 0), (2, 1));
    Ok((ok, format!("p,n of aba = {:?}, of abbA = {:?}", pn.0, pn.1)))
}

fn dihedral_geodesics() -> Outcome {
    let ctx = DihedralContext::finite(3);
    let g1 = ctx.geodesics(&w("aba", 2))?;
    let g2 = ctx.geodesics(&w("abbA", 2))?;
    let names = |v: &[Word]| v.iter().map(Word::to_string).collect::<Vec<_>>();
    let (n1, n2) = (names(&g1), names(&g2));
    let ok = n1 == ["aba", "bab"]
        && n2 == ["abbA", "Baab"]
        && ctx.is_geodesic(&w("aba", 2))?
        && !ctx.is_unique_geodesic(&w("aba", 2))?;
    Ok((ok, format!("geodesics of aba: {}; of abbA: {}", n1.join(" "), n2.join(" "))))
}

fn tau_moves() -> Outcome {
    let pair = DihedralContext::finite(3).pair()?;
    let t1 = Word::from(tau(&w("aba", 2), &pair)?);
    let t2 = Word::from(tau(&w("abbA", 2), &pair)?);
    let ok = t1.to_string() == "bab" && t2.to_string() == "Baab";
    Ok((ok, format!("tau(aba) = {t1}, tau(abbA) = {t2}")))
}

/// The word of length 15 and the states of its rightward reducing sequence.
pub const TRIANGLE_345_INPUT: &str = "aBBAcbbCBacaacA";
pub const TRIANGLE_345_STATES: [&str; 4] = ["BAAbcbbCBacaacA", "BAACBccbcacaacA", "BAACBccbaccacaA", "BAACBccbaccac"];

fn rightward_sequence() -> Outcome {
    let pres = Presets::get("tri-345").map_err(|_| Error::Shape("preset"))?;
    let group = ArtinGroup::new(pres.clone())?;
    let input = w(TRIANGLE_345_INPUT, 3);
    let (prefix, last) = input.split_at(input.len() - 1);
    let seq = rightward_length_reducing(&pres, prefix, last[0]).ok_or(Error::Shape("no rightward sequence"))?;
    let mut states = Vec::new();
    let mut cur = prefix.to_vec();
    for mv in &seq.moves {
        cur.splice(mv.start..mv.end, mv.after.iter().copied());
        states.push(Word::from([cur.as_slice(), last].concat()));
    }
    cur.pop();
    states.push(Word::from(cur));
    let shown: Vec<String> = states.iter().map(Word::to_string).collect();
    let reduced = group.reduce(&input)?.word;
    let target = w(TRIANGLE_345_STATES[3], 3);
    let oracle = ClosureOracle::new(pres);
    let ok = shown == TRIANGLE_345_STATES
        && seq.free_cancellation
        && reduced.len() == 13
        && group.equal(&reduced, &target)
        && oracle.equal(&input, &target)?;
    Ok((ok, format!("states: {}; normal form {reduced}", shown.join(" -> "))))
}

fn counterexample() -> Outcome {
    let pres = Presets::get("tri-433").map_err(|_| Error::Shape("preset"))?;
    let guarded = ArtinGroup::new(pres.clone())?;
    let refused = matches!(guarded.ld_prime(&w("babacabab", 3), 0, 1), Err(Error::Hypothesis33m));
    let group = ArtinGroup::new(pres)?.allow_counterexample(true);
    let g = w("babacabab", 3);
    let ld = group.ld_ij(&g, 0, 1)?;
    let geodesics: Vec<String> = group.geodesics(&g, 10_000)?.iter().map(Word::to_string).collect();
    let both = ["babcacbab", "abacbcaba"].iter().all(|r| geodesics.iter().any(|x| x == r));
    let tail = group.ld_prime(&g, 0, 1);
    let ok = refused && group.equal(&ld, &w("baba", 3)) && both && matches!(tail, Err(Error::TailNotUnique { .. }));
    let tail_text = match tail {
        Ok(p) => format!("unexpected LD' {}", p.ld_prime),
        Err(e) => e.to_string(),
    };
    Ok((
        ok,
        format!("LD_12 = {ld}; {} geodesics; {tail_text}; guard refuses without opt-in: {refused}", geodesics.len()),
    ))
}

fn relations() -> Outcome {
    let group = ArtinGroup::new(Presets::get("tri-345").map_err(|_| Error::Shape("preset"))?)?;
    let aba = group.equal(&w("aba", 3), &w("bab", 3));
    let aca = group.equal(&w("aca", 3), &w("cac", 3));
    let bcb = group.equal(&w("bcb", 3), &w("cbc", 3));
    Ok((aba && !aca && !bcb, format!("aba = bab: {aba}; aca = cac: {aca}; bcb = cbc: {bcb}")))
}

/// Run every example. The report fails when any example does.
pub fn checks() -> Vec<Check> {
    let table: [(&'static str, &'static str, fn() -> Outcome); 8] = [
        ("alternating_words", "-", alternating_words),
        ("large_type_and_33m_classification", "tri-345,tri-433", classification),
        ("dihedral_pn_counts", "da3", dihedral_counts),
        ("dihedral_geodesic_sets", "da3", dihedral_geodesics),
        ("tau_moves", "da3", tau_moves),
        ("rightward_length_reducing_sequence", "tri-345", rightward_sequence),
        ("unique_tail_counterexample", "tri-433", counterexample),
        ("braid_relations", "tri-345", relations),
    ];
    table
        .into_iter()
        .map(|(name, presentation, f)| {
            let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
            Check { name, presentation, passed, detail }
        })
        .collect()
}

pub fn run() -> Result<Report> {
    let checks = checks();
    let ok = checks.iter().all(|c| c.passed);
    let mut out = String::new();
    for c in &checks {
        let _ =
            writeln!(out, "{} {} [{}]: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.presentation, c.detail);
    }
    let value = json!({ "command": "repro-paper", "passed": ok, "checks": checks });
    Ok(Report { ok, ..Report::new(out, value) })
}
