//! Acceptance checks, one PASS/FAIL line per criterion.
//!
//! Runs as part of `cargo test`. Failing criteria are reported but do not fail
//! the run unless `ARTIN_ACCEPTANCE_STRICT=1`.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use artin::dihedral::{classify_critical, tau, DihedralContext, DihedralMove};
use artin::harmonic::{ratio_table, ProjectionSide, RatioRow};
use artin::large_type::sequences::rightward_length_reducing;
use artin::large_type::ArtinGroup;
use artin::oracle::{pair_left_divisors, pair_right_divisors, BraidAction, ClosureOracle, LinearModel};
use artin::sweep::{compression_scan, fact_table, merger_scan, projection_scan, to_csv, FactRow};
use artin::word::sign_class;
use artin::{parse_word, CoxeterPresentation, Letter, SignClass, Word};
use artin_cli::Presets;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn preset(name: &str) -> CoxeterPresentation {
    Presets::get(name).expect("shipped preset")
}

fn group(name: &str) -> ArtinGroup {
    ArtinGroup::new(preset(name)).expect("large type")
}

fn w(text: &str, n: usize) -> Word {
    parse_word(text, n).expect("well formed")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    ensure(t.elapsed() < limit, || format!("took {:?}, limit {limit:?}", t.elapsed()))
}

/// Freely reduced words of length at most `len` on `n` generators.
fn reduced_words_upto(n: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut all = vec![Vec::new()];
    let mut level = vec![Vec::<Letter>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for u in &level {
            for code in 0..2 * n as u16 {
                let a = Letter::from_code(code);
                if u.last() != Some(&a.inverse()) {
                    let mut v = u.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

fn c1_length_reduction() -> Outcome {
    let t = Instant::now();
    let pres = preset("tri-345");
    let g = ArtinGroup::new(pres.clone()).map_err(|e| e.to_string())?;
    let input = w("aBBAcbbCBacaacA", 3);
    let target = w("BAACBccbaccac", 3);
    let expected_states = ["BAAbcbbCBacaacA", "BAACBccbcacaacA", "BAACBccbaccacaA"];
    let (prefix, last) = input.split_at(14);
    let seq = rightward_length_reducing(&pres, prefix, last[0]).ok_or("no rightward sequence")?;
    let mut cur = prefix.to_vec();
    let mut states = Vec::new();
    for mv in &seq.moves {
        cur.splice(mv.start..mv.end, mv.after.iter().copied());
        states.push(Word::from([cur.as_slice(), last].concat()).to_string());
    }
    ensure(states == expected_states, || format!("intermediate words {states:?}"))?;
    ensure(seq.free_cancellation && cur.last() == Some(&last[0].inverse()), || {
        "does not end in a free cancellation".into()
    })?;
    let reduced = g.reduce(&input).map_err(|e| e.to_string())?.word;
    ensure(input.len() == 15 && reduced.len() == 13, || format!("length {} -> {}", input.len(), reduced.len()))?;
    let oracle = ClosureOracle::new(pres);
    ensure(oracle.equal(&reduced, &target).map_err(|e| e.to_string())?, || {
        format!("{reduced} is not oracle-equal to the target")
    })?;
    within(t, Duration::from_secs(1))?;
    Ok(format!("15 -> 13, three tau-moves then a cancellation, {:?}", t.elapsed()))
}

fn c2_counterexample() -> Outcome {
    let t = Instant::now();
    let pres = preset("tri-433");
    let g = ArtinGroup::new(pres.clone()).map_err(|e| e.to_string())?.allow_counterexample(true);
    let oracle = ClosureOracle::new(pres);
    let x = w("babacabab", 3);
    let ld = g.ld_ij(&x, 0, 1).map_err(|e| e.to_string())?;
    let ld_oracle = pair_left_divisors(&oracle, &x, 0, 1).map_err(|e| e.to_string())?;
    let longest = ld_oracle.iter().map(|d| d.len()).max().unwrap_or(0);
    let tops: Vec<&Word> = ld_oracle.iter().filter(|d| d.len() == longest).collect();
    let baba = w("baba", 3);
    ensure(g.equal(&ld, &baba) && tops.len() == 1 && g.equal(tops[0], &baba), || {
        format!("LD_12 = {ld}, oracle maxima {tops:?}")
    })?;
    let geodesics = oracle.enumerate_geodesics(&x).map_err(|e| e.to_string())?;
    for rep in ["babcacbab", "abacbcaba"] {
        ensure(geodesics.contains(&w(rep, 3)), || format!("{rep} is not a geodesic for g"))?;
    }
    // The maximal {a,b}-prefixes bab and aba reach LD through different letters.
    let (v1, v2) = (w("bab", 3), w("aba", 3));
    ensure(
        g.equal(&[v1.letters(), &w("a", 3)].concat(), &ld) && g.equal(&[v2.letters(), &w("b", 3)].concat(), &ld),
        || "LD is not v1 a = v2 b".into(),
    )?;
    let tail = g.ld_prime(&x, 0, 1);
    ensure(matches!(tail, Err(artin::Error::TailNotUnique { .. })), || format!("unique-tail check returned {tail:?}"))?;
    within(t, Duration::from_secs(10))?;
    Ok(format!("LD_12 = baba; babcacbab and abacbcaba found; tail letters a and b, {:?}", t.elapsed()))
}

/// Engine equality and oracle equality induce the same partition of the words.
fn same_partition<K: Ord + Clone>(engine: &[Word], oracle: &[K]) -> Result<(), String> {
    let mut e_to_o: BTreeMap<&Word, &K> = BTreeMap::new();
    let mut o_to_e: BTreeMap<&K, &Word> = BTreeMap::new();
    for (e, o) in engine.iter().zip(oracle) {
        if *e_to_o.entry(e).or_insert(o) != o {
            return Err(format!("engine identifies elements the oracle separates, at {e}"));
        }
        if *o_to_e.entry(o).or_insert(e) != e {
            return Err(format!("oracle identifies elements the engine separates, at {e}"));
        }
    }
    Ok(())
}

fn c3_oracle_equivalence() -> Outcome {
    let mut report = Vec::new();
    for name in ["da3", "da4"] {
        let g = group(name);
        let m = g.presentation().finite_label(0, 1).ok_or("finite label")?;
        let act = BraidAction::new(m).ok_or("braid action")?;
        let words = reduced_words_upto(2, 6);
        let engine: Vec<Word> = words.par_iter().map(|u| g.nf(u)).collect();
        let oracle: Vec<_> = words.par_iter().map(|u| format!("{:?}", act.image(u))).collect();
        same_partition(&engine, &oracle).map_err(|e| format!("{name}: {e}"))?;
        report.push(format!("{name} {} words", words.len()));
    }
    for name in ["tri-345", "tri-444"] {
        let g = group(name);
        let o = ClosureOracle::new(preset(name));
        let words = reduced_words_upto(3, 6);
        let engine: Vec<Word> = words.par_iter().map(|u| g.nf(u)).collect();
        let oracle =
            words.par_iter().map(|u| o.canonical(u)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        same_partition(&engine, &oracle).map_err(|e| format!("{name}: {e}"))?;
        report.push(format!("{name} {} words", words.len()));
    }
    Ok(format!("all pairs agree: {}", report.join(", ")))
}

fn c4_dihedral_geodesics() -> Outcome {
    let mut report = Vec::new();
    for m in [3u32, 4] {
        let ctx = DihedralContext::finite(m);
        let model = LinearModel::for_label(Some(m)).ok_or("linear model")?;
        let lengths = model.ball_lengths(8);
        let words = reduced_words_upto(2, 8);
        for u in &words {
            let (p, n) = ctx.pn(u).map_err(|e| e.to_string())?;
            let bfs = model.length_in(&lengths, u).ok_or("word outside the ball")? == u.len();
            ensure((p + n <= m) == bfs, || {
                format!("DA({m}) {}: p+n = {}, BFS geodesic {bfs}", Word::from(u.clone()), p + n)
            })?;
        }
        report.push(format!("DA({m}) {} words", words.len()));
    }
    Ok(report.join(", "))
}

fn c5_tau_calculus() -> Outcome {
    let mut critical = 0usize;
    let mut qualifying = 0usize;
    for m in 3..=5u32 {
        let ctx = DihedralContext::finite(m);
        let pair = ctx.pair().map_err(|e| e.to_string())?;
        let act = BraidAction::new(m).ok_or("braid action")?;
        for u in reduced_words_upto(2, 10) {
            if classify_critical(&u, &pair).is_none() {
                continue;
            }
            critical += 1;
            let t = tau(&u, &pair).map_err(|e| e.to_string())?;
            let back = tau(&t, &pair).map_err(|e| e.to_string())?;
            let shown = Word::from(u.clone());
            ensure(back == u, || format!("DA({m}) tau is not an involution on {shown}"))?;
            ensure(act.equal(&u, &t), || format!("DA({m}) tau changes the element of {shown}"))?;
        }
        for u in reduced_words_upto(2, 8) {
            let (p, n) = artin::dihedral::pn_raw(&u, m);
            if p == 0 || n == 0 || p >= m || n >= m {
                continue;
            }
            qualifying += 1;
            let r = ctx.reduce(&u).map_err(|e| e.to_string())?;
            let shown = Word::from(u.clone());
            let unsigned_only = r.moves.iter().all(|mv| match mv {
                DihedralMove::Tau { occurrence } => occurrence.p < m && occurrence.n < m,
                DihedralMove::FreeCancel { .. } => false,
            });
            ensure(unsigned_only, || format!("DA({m}) {shown}: reduction uses a free cancellation or a signed move"))?;
            let (rp, rn) = ctx.pn(&r.word).map_err(|e| e.to_string())?;
            ensure(rp + rn <= m && r.word.is_freely_reduced(), || {
                format!("DA({m}) {shown}: result {} is not geodesic", r.word)
            })?;
            ensure(act.equal(&u, &r.word), || format!("DA({m}) {shown}: reduction changes the element"))?;
        }
    }
    Ok(format!("{critical} critical words, {qualifying} words with 0 < p, n < m"))
}

/// Right divisors `a^s b^t`, `s + t = l`, of a positive element of the pair.
fn count_two_letter_suffixes(
    ctx: &DihedralContext,
    h: &[Letter],
    a: Letter,
    b: Letter,
    l: usize,
) -> Result<usize, String> {
    let len = ctx.length(h).map_err(|e| e.to_string())?;
    let mut count = 0;
    for s in 0..=l {
        let mut inv: Vec<Letter> = vec![b.inverse(); l - s];
        inv.extend(std::iter::repeat(a.inverse()).take(s));
        let rest = ctx.length(&[h, &inv].concat()).map_err(|e| e.to_string())?;
        if rest + l == len {
            count += 1;
        }
    }
    Ok(count)
}

fn p1count_holds(ctx: &DihedralContext, h: &Word) -> Result<bool, String> {
    if h.is_empty() || sign_class(h) != SignClass::Positive {
        return Ok(true);
    }
    let d = ctx.delta_power(h).map_err(|e| e.to_string())? as usize;
    let (i, j) = ctx.gens();
    let (x, y) = (Letter::pos(i), Letter::pos(j));
    for l in 0..=h.len() {
        for (a, b) in [(x, y), (y, x)] {
            if count_two_letter_suffixes(ctx, h, a, b, l)? > d + 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn c6_divisor_structure() -> Outcome {
    let mut report = Vec::new();
    for name in ["tri-345", "tri-444"] {
        let g = group(name);
        let o = ClosureOracle::new(preset(name));
        let ball = g.complete_ball(6, 1_000_000).map_err(|e| e.to_string())?;
        let elements: Vec<&Word> = ball.elements().collect();
        let pairs: Vec<(usize, usize)> = g.presentation().pairs().collect();
        let failures: Vec<String> = elements
            .par_iter()
            .filter_map(|x| {
                let check = || -> Result<Option<String>, String> {
                    if !x.is_empty() {
                        let fin = g.final_letters(x).map_err(|e| e.to_string())?;
                        let geos = o.enumerate_geodesics(x).map_err(|e| e.to_string())?;
                        let mut oracle_fin: Vec<Letter> = geos.iter().filter_map(Word::last).collect();
                        oracle_fin.sort();
                        oracle_fin.dedup();
                        let mut engine_fin = fin.clone();
                        engine_fin.sort();
                        if engine_fin != oracle_fin {
                            return Ok(Some(format!("{x}: final letters differ from the oracle")));
                        }
                        if fin.len() > 2 || (fin.len() == 2 && fin[0].gen() == fin[1].gen()) {
                            return Ok(Some(format!("{x}: final letters {fin:?}")));
                        }
                    }
                    for &(i, j) in &pairs {
                        let ctx = g.parabolic(i, j).map_err(|e| e.to_string())?;
                        let ld = g.ld_ij(x, i, j).map_err(|e| e.to_string())?;
                        let rd = g.rd_ij(x, i, j).map_err(|e| e.to_string())?;
                        for (side, engine, divs) in [
                            ("LD", &ld, pair_left_divisors(&o, x, i, j)),
                            ("RD", &rd, pair_right_divisors(&o, x, i, j)),
                        ] {
                            let divs = divs.map_err(|e| e.to_string())?;
                            let top = divs.iter().map(|d| d.len()).max().unwrap_or(0);
                            let maxima: Vec<&Word> = divs.iter().filter(|d| d.len() == top).collect();
                            if maxima.len() != 1 || maxima[0] != engine {
                                return Ok(Some(format!(
                                    "{x}: {side}_{}{} = {engine}, oracle maxima {maxima:?}",
                                    i + 1,
                                    j + 1
                                )));
                            }
                        }
                        if !p1count_holds(&ctx, &rd)? || !p1count_holds(&ctx, &ld.inverse())? {
                            return Ok(Some(format!("{x}: suffix count exceeds d + 1 in pair ({},{})", i + 1, j + 1)));
                        }
                    }
                    Ok(None)
                };
                check().unwrap_or_else(|e| Some(format!("{x}: {e}")))
            })
            .collect();
        ensure(failures.is_empty(), || format!("{name}: {} failures, first {:?}", failures.len(), failures.first()))?;
        report.push(format!("{name} {} elements", elements.len()));
    }
    Ok(report.join(", "))
}

fn c7_merger_bounds() -> Outcome {
    let mut report = Vec::new();
    for name in ["da3", "tri-444"] {
        let g = group(name);
        let ball = g.complete_ball(6, 1_000_000).map_err(|e| e.to_string())?;
        let scan = merger_scan(&g, &ball, 6).map_err(|e| e.to_string())?;
        ensure(scan.violations.is_empty(), || {
            format!("{name}: {:?}", &scan.violations[..scan.violations.len().min(3)])
        })?;
        let pairs: usize = scan.rows.iter().map(|r| r.pairs).sum();
        let max_r = scan.rows.iter().map(|r| r.max_abs_r).max().unwrap_or(0);
        report.push(format!("{name} {pairs} factorisation pairs, max |r| {max_r}"));
    }
    Ok(report.join(", "))
}

fn c8_compression() -> Outcome {
    let mut report = Vec::new();
    for name in ["da3", "tri-444"] {
        let g = group(name);
        let ball = g.complete_ball(6, 1_000_000).map_err(|e| e.to_string())?;
        let oracle = ClosureOracle::new(preset(name));
        let scan = compression_scan(&g, &oracle, &ball, 6).map_err(|e| e.to_string())?;
        ensure(scan.violations.is_empty(), || {
            format!("{name}: {:?}", &scan.violations[..scan.violations.len().min(3)])
        })?;
        report.push(format!("{name} {} compressed ({} single-generator)", scan.compressed, scan.single_generator));
    }
    Ok(report.join(", "))
}

/// For each `min(k, l)`, the largest permissible count at each `k + l`.
fn plateau_series(rows: &[FactRow], s: usize) -> Vec<(usize, usize)> {
    let mut by_total: BTreeMap<usize, usize> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.k.min(r.l) == s) {
        let e = by_total.entry(r.k + r.l).or_default();
        *e = (*e).max(r.permissible);
    }
    by_total.into_iter().collect()
}

fn c9_d1_measurement() -> Outcome {
    let mut lines = Vec::new();
    let mut growth = Vec::new();
    for (name, radius) in [("da3", 7), ("da4", 7), ("tri-444", 7)] {
        let g = group(name);
        let ball = g.complete_ball(radius, 2_000_000).map_err(|e| e.to_string())?;
        let rows = fact_table(&g, &ball).map_err(|e| e.to_string())?;
        for s in 1..=3 {
            let series = plateau_series(&rows, s);
            let shown: Vec<String> = series.iter().map(|(t, f)| format!("{t}:{f}")).collect();
            lines.push(format!("{name} min={s} [{}]", shown.join(" ")));
            let first = series.first().map_or(0, |x| x.1);
            if series.iter().any(|&(_, f)| f > first) {
                growth.push(format!("{name} min={s}"));
            }
            let bound = artin::sweep::divisor_count_bound(g.presentation(), s);
            if let Some(b) = bound {
                ensure(series.iter().all(|&(_, f)| f as u64 <= b), || format!("{name} min={s} exceeds the bound {b}"))?;
            }
        }
    }
    let table = lines.join("; ");
    if growth.is_empty() {
        Ok(table)
    } else {
        Err(format!("counts grow with k+l for {}; table {table}", growth.join(", ")))
    }
}

fn c10_harmonic() -> Outcome {
    let mut report = Vec::new();
    // Support of convolutions of sphere functions lies in the annulus.
    for name in ["da3", "tri-444"] {
        let g = group(name);
        let ball = g.complete_ball(6, 1_000_000).map_err(|e| e.to_string())?;
        for k in 1..=3 {
            for l in 1..=3 {
                let weights = |sphere: &[Word], salt: f64| {
                    artin::harmonic::GroupFunction::from_normal_forms(sphere.iter().enumerate().map(|(idx, x)| {
                        (
                            x.clone(),
                            num_complex::Complex64::new(
                                (idx as f64 * 0.731 + salt).sin(),
                                (idx as f64 * 0.377 + salt).cos(),
                            ),
                        )
                    }))
                };
                let phi = weights(ball.sphere(k), 0.1);
                let psi = weights(ball.sphere(l), 0.7);
                let conv = phi.convolve(&psi, &g, Some(&ball)).map_err(|e| e.to_string())?;
                for (x, _) in conv.iter() {
                    let len = ball.length_of(x).ok_or("product outside the ball")?;
                    ensure(k.abs_diff(l) <= len && len <= k + l, || {
                        format!("{name}: {x} of length {len} in C{k}*C{l}")
                    })?;
                }
            }
        }
    }
    report.push("annulus support exact".to_string());
    // The projection inequalities, with F measured by the D1 sweep.
    for (name, radius) in [("da3", 6), ("da4", 6), ("tri-444", 5)] {
        let g = group(name);
        let ball = g.complete_ball(radius, 1_000_000).map_err(|e| e.to_string())?;
        let facts = fact_table(&g, &ball).map_err(|e| e.to_string())?;
        let f_of = |k: usize, l: usize| facts.iter().find(|r| r.k == k && r.l == l).map(|r| r.permissible);
        let rows = projection_scan(&g, &ball, radius, 1000, 0x5eed).map_err(|e| e.to_string())?;
        for r in &rows {
            ensure(r.violations == 0, || format!("{name}: projection bound fails at k={} p={}", r.k, r.p))?;
            let expected = match r.side {
                ProjectionSide::Right => f_of(r.k - r.p, r.p),
                ProjectionSide::Left => f_of(r.p, r.k - r.p),
            };
            ensure(expected == Some(r.f), || {
                format!("{name}: F at k={} p={} is {} but the D1 sweep gives {expected:?}", r.k, r.p, r.f)
            })?;
        }
        report.push(format!("{name} {} (k,p,side) cells x 1000 functions", rows.len()));
    }
    // Ratio tables are byte-stable and match the checked-in table.
    let g = group("da3");
    let ball = g.complete_ball(4, 100_000).map_err(|e| e.to_string())?;
    let table = || -> Result<String, String> {
        let rows = ratio_table(&g, &ball, 4, 40, 1).map_err(|e| e.to_string())?;
        Ok(to_csv(RatioRow::CSV_HEADER, &rows, RatioRow::csv))
    };
    let (first, second) = (table()?, table()?);
    ensure(first == second, || "ratio table differs between runs".into())?;
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("../artin/tests/fixtures/star_star_da3.csv");
    let stored = std::fs::read_to_string(&fixture).map_err(|e| format!("{}: {e}", fixture.display()))?;
    ensure(first == stored, || "ratio table differs from the stored table".into())?;
    report.push("ratio table byte-identical".to_string());
    Ok(report.join(", "))
}

fn run_cli(args: &[&str], out: &Path) -> Result<(Vec<u8>, BTreeMap<String, Vec<u8>>), String> {
    let output = Command::new(env!("CARGO_BIN_EXE_artin-rd"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("ARTIN_CACHE_DIR")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(output.status.success(), || {
        format!("{args:?} exited with {}: {}", output.status, String::from_utf8_lossy(&output.stderr))
    })?;
    let mut files = BTreeMap::new();
    if out.exists() {
        for entry in std::fs::read_dir(out).map_err(|e| e.to_string())? {
            let entry = entry.map_err(|e| e.to_string())?;
            files.insert(
                entry.file_name().to_string_lossy().into_owned(),
                std::fs::read(entry.path()).map_err(|e| e.to_string())?,
            );
        }
    }
    Ok((output.stdout, files))
}

fn c11_determinism() -> Outcome {
    let runs: [&[&str]; 5] = [
        &["repro-paper", "--json"],
        &["-p", "tri-444", "d1-scan", "--radius", "5"],
        &["-p", "da3", "d2-scan", "--radius", "6"],
        &["-p", "da4", "rd-check", "--radius", "4", "--trials", "50", "--seed", "7"],
        &["-p", "tri-345", "rd-check", "--radius", "3", "--trials", "20", "--seed", "7", "--json"],
    ];
    let scratch = std::env::temp_dir().join(format!("artin-acceptance-{}", std::process::id()));
    let mut compared = 0;
    for (idx, args) in runs.iter().enumerate() {
        let a = run_cli(args, &scratch.join(format!("{idx}a")))?;
        let b = run_cli(args, &scratch.join(format!("{idx}b")))?;
        ensure(a == b, || format!("{args:?} differs between runs"))?;
        compared += 1 + a.1.len();
    }
    let _ = std::fs::remove_dir_all(&scratch);
    Ok(format!("{} commands, {compared} outputs byte-identical", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("worked example reproduction", c1_length_reduction),
        ("counterexample reproduction", c2_counterexample),
        ("oracle equivalence", c3_oracle_equivalence),
        ("dihedral geodesic criterion", c4_dihedral_geodesics),
        ("tau calculus", c5_tau_calculus),
        ("divisor structure", c6_divisor_structure),
        ("merger bounds", c7_merger_bounds),
        ("compression soundness", c8_compression),
        ("D1 measurement", c9_d1_measurement),
        ("harmonic layer", c10_harmonic),
        ("determinism", c11_determinism),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {:>2} {name} ({:.1}s): {detail}", idx + 1, t.elapsed().as_secs_f64()),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.1}s): {detail}", idx + 1, t.elapsed().as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 && std::env::var("ARTIN_ACCEPTANCE_STRICT").as_deref() == Ok("1") {
        std::process::exit(1);
    }
}
