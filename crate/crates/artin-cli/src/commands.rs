//! The subcommands.

use std::fmt::Write as _;

use artin::dihedral::compress;
use artin::harmonic::{operator_norm_estimate, ratio_table, GroupFunction, RatioRow};
use artin::large_type::{ArtinGroup, ReductionStep};
use artin::oracle::ClosureOracle;
use artin::sweep::{
    compression_scan, fact_table, merger_scan, merger_violations, projection_scan, to_csv, FactRow, MergerRow,
    ProjectionRow,
};
use artin::{Error, Word};
use clap::Subcommand;
use serde_json::json;

use crate::{repro, Artifact, Report, Result, RunConfig};

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Shortlex normal form and the reduction log.
    Nf { word: String },
    /// Every geodesic spelling of an element.
    Geodesic {
        word: String,
        /// Stop after this many geodesics.
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Sphere sizes of the ball of radius R.
    Ball {
        radius: usize,
        /// Also list the normal forms, sphere by sphere.
        #[arg(long)]
        list: bool,
    },
    /// LD and RD in the subgroup on x_i, x_j, and the shortened divisor LD'.
    Divisors { word: String, i: usize, j: usize },
    /// Merger (f1, Δ^r, f2) of a pair of elements.
    Merge { w1: String, w2: String },
    /// Geodesic word for f1 Δ^r f2 in the subgroup on a pair of generators.
    Compress {
        f1: String,
        #[arg(allow_hyphen_values = true)]
        r: i64,
        f2: String,
        /// Generator pair, 1-based.
        #[arg(long, num_args = 2, value_names = ["I", "J"], default_values_t = [1, 2])]
        pair: Vec<usize>,
    },
    /// Maximal permissible factorisation counts per (k, l).
    D1Scan {
        #[arg(long, default_value_t = 6)]
        radius: usize,
    },
    /// Merger bounds and compression checks over all factorisations in a ball.
    D2Scan {
        #[arg(long, default_value_t = 6)]
        radius: usize,
        /// Skip the compression checks.
        #[arg(long)]
        no_compress: bool,
    },
    /// Convolution ratio tables, projection bounds and an operator norm estimate.
    RdCheck {
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Power iterations per radius for the operator norm of χ_1.
        #[arg(long, default_value_t = 50)]
        iterations: usize,
    },
    /// Check the worked examples and the counterexample to the unique-tail property.
    ReproPaper,
}

/// Run one command.
pub fn run(command: &Command, cfg: &RunConfig) -> Result<Report> {
    match command {
        Command::Nf { word } => nf(cfg, word),
        Command::Geodesic { word, cap } => geodesic(cfg, word, *cap),
        Command::Ball { radius, list } => ball(cfg, *radius, *list),
        Command::Divisors { word, i, j } => divisors(cfg, word, *i, *j),
        Command::Merge { w1, w2 } => merge(cfg, w1, w2),
        Command::Compress { f1, r, f2, pair } => compress_cmd(cfg, f1, *r, f2, pair[0], pair[1]),
        Command::D1Scan { radius } => d1_scan(cfg, *radius),
        Command::D2Scan { radius, no_compress } => d2_scan(cfg, *radius, !no_compress),
        Command::RdCheck { radius, trials, iterations } => rd_check(cfg, *radius, *trials, *iterations),
        Command::ReproPaper => repro::run(),
    }
}

fn pair_index(group: &ArtinGroup, i: usize, j: usize) -> Result<(usize, usize)> {
    if i == 0 || j == 0 || i == j || i > group.n() || j > group.n() {
        return Err(Error::BadPair { i, j }.into());
    }
    Ok((i - 1, j - 1))
}

fn step_text(step: &ReductionStep) -> String {
    match step {
        ReductionStep::FreeCancel { pos } => format!("free cancellation at {pos}"),
        ReductionStep::Rightward { prefix_len, letter, sequence } => {
            let moves: Vec<String> = sequence.moves.iter().map(|m| format!("{} -> {}", m.before, m.after)).collect();
            format!("rightward on prefix of length {prefix_len} before {letter}: [{}], then cancel", moves.join(", "))
        }
        ReductionStep::Leftward { prefix_len, sequence } => {
            let moves: Vec<String> = sequence.moves.iter().map(|m| format!("{} -> {}", m.before, m.after)).collect();
            format!("leftward on prefix of length {prefix_len}: [{}]", moves.join(", "))
        }
    }
}

fn nf(cfg: &RunConfig, text: &str) -> Result<Report> {
    let group = cfg.group()?;
    let w = group.parse(text)?;
    let r = group.reduce(&w)?;
    let mut out = format!("normal form: {}\nlength: {}\n", r.word, r.word.len());
    for (k, s) in r.steps.iter().enumerate() {
        let _ = writeln!(out, "  {}. {}", k + 1, step_text(s));
    }
    let value = json!({
        "command": "nf",
        "presentation": cfg.presentation.id(),
        "input": r.input,
        "normal_form": r.word,
        "length": r.word.len(),
        "steps": r.steps,
    });
    Ok(Report::new(out, value))
}

fn geodesic(cfg: &RunConfig, text: &str, cap: usize) -> Result<Report> {
    let group = cfg.group()?;
    let w = group.parse(text)?;
    let nf = group.nf(&w);
    let all = group.geodesics(&w, cap)?;
    let mut out = format!("normal form: {nf}\nlength: {}\ngeodesics: {}\n", nf.len(), all.len());
    for g in &all {
        let _ = writeln!(out, "  {g}");
    }
    let value = json!({
        "command": "geodesic",
        "presentation": cfg.presentation.id(),
        "input": w,
        "normal_form": nf,
        "length": nf.len(),
        "geodesics": all,
    });
    Ok(Report::new(out, value))
}

fn ball(cfg: &RunConfig, radius: usize, list: bool) -> Result<Report> {
    let group = cfg.group()?;
    let (ball, cached) = cfg.ball(&group, radius)?;
    let sizes: Vec<usize> = (0..=radius).map(|k| ball.sphere(k).len()).collect();
    let mut out = String::new();
    for (k, s) in sizes.iter().enumerate() {
        let _ = writeln!(out, "sphere {k}: {s}");
        if list {
            for w in ball.sphere(k) {
                let _ = writeln!(out, "  {w}");
            }
        }
    }
    let _ = writeln!(out, "total: {}", ball.len());
    let mut value = json!({
        "command": "ball",
        "presentation": cfg.presentation.id(),
        "radius": radius,
        "sphere_sizes": sizes,
        "total": ball.len(),
        "from_cache": cached,
    });
    if list {
        value["spheres"] = json!(ball.spheres());
    }
    Ok(Report::new(out, value))
}

fn divisors(cfg: &RunConfig, text: &str, i: usize, j: usize) -> Result<Report> {
    let group = cfg.group()?;
    let (i0, j0) = pair_index(&group, i, j)?;
    let w = group.parse(text)?;
    let ld = group.ld_ij(&w, i0, j0)?;
    let rd = group.rd_ij(&w, i0, j0)?;
    let mut out = format!("element: {}\nLD: {ld}\nRD: {rd}\n", group.nf(&w));
    let mut value = json!({
        "command": "divisors",
        "presentation": cfg.presentation.id(),
        "input": w,
        "pair": [i, j],
        "ld": ld,
        "rd": rd,
    });
    match group.ld_prime(&w, i0, j0) {
        Ok(p) => {
            let _ = writeln!(out, "LD': {}", p.ld_prime);
            let prefixes: Vec<String> = p.prefixes.iter().map(Word::to_string).collect();
            let _ = writeln!(out, "maximal pair prefixes: {}", prefixes.join(" "));
            value["ld_prime"] = json!(p);
        }
        Err(e @ Error::TailNotUnique { .. }) => {
            let _ = writeln!(out, "LD': undefined, {e}");
            value["ld_prime_error"] = json!(e.to_string());
        }
        Err(e) => return Err(e.into()),
    }
    Ok(Report::new(out, value))
}

fn merge(cfg: &RunConfig, w1: &str, w2: &str) -> Result<Report> {
    let group = cfg.group()?;
    let (g1, g2) = (group.parse(w1)?, group.parse(w2)?);
    let m = group.merge(&g1, &g2)?;
    let middle = group.merger_middle(&m)?;
    let violations = merger_violations(&group, &m)?;
    let pair = m.pair.map(|(i, j)| format!(" in pair ({},{})", i + 1, j + 1)).unwrap_or_default();
    let mut out =
        format!("f1: {}\nmiddle: {middle} (r = {}{pair})\nf2: {}\nh1: {}\nh2: {}\n", m.f1, m.r, m.f2, m.h1, m.h2);
    for v in &violations {
        let _ = writeln!(out, "violation: {v}");
    }
    let ok = violations.is_empty();
    let value = json!({
        "command": "merge",
        "presentation": cfg.presentation.id(),
        "merger": m,
        "middle": middle,
        "violations": violations,
    });
    Ok(Report { ok, ..Report::new(out, value) })
}

fn compress_cmd(cfg: &RunConfig, f1: &str, r: i64, f2: &str, i: usize, j: usize) -> Result<Report> {
    let group = cfg.group()?;
    let (i0, j0) = pair_index(&group, i, j)?;
    let ctx = group.parabolic(i0, j0)?;
    let (f1, f2) = (group.parse(f1)?, group.parse(f2)?);
    let c = compress(&ctx, &f1, r, &f2)?;
    let middle = ctx.garside_power(r)?;
    let equal = ctx.equal(&c.word, &[f1.letters(), middle.letters(), f2.letters()].concat())?;
    let geodesic = ctx.is_geodesic(&c.word)?;
    let out = format!("word: {}\nkappa: {}\ns: {}\nequal: {equal}\ngeodesic: {geodesic}\n", c.word, c.kappa, c.s);
    let value = json!({
        "command": "compress",
        "presentation": cfg.presentation.id(),
        "pair": [i, j],
        "compression": c,
        "equal": equal,
        "geodesic": geodesic,
    });
    Ok(Report { ok: equal && geodesic, ..Report::new(out, value) })
}

fn csv_name(cfg: &RunConfig, stem: &str, radius: usize) -> String {
    format!("{stem}_{}_r{radius}.csv", cfg.presentation.id())
}

fn d1_scan(cfg: &RunConfig, radius: usize) -> Result<Report> {
    let group = cfg.group()?;
    let (ball, _) = cfg.ball(&group, radius)?;
    let rows = fact_table(&group, &ball)?;
    let csv = to_csv(FactRow::CSV_HEADER, &rows, FactRow::csv);
    let value = json!({
        "command": "d1-scan",
        "presentation": cfg.presentation.id(),
        "radius": radius,
        "rows": rows,
    });
    let mut report = Report::new(csv.clone(), value);
    report.artifacts.push(Artifact { file_name: csv_name(cfg, "d1", radius), contents: csv });
    Ok(report)
}

fn d2_scan(cfg: &RunConfig, radius: usize, with_compression: bool) -> Result<Report> {
    let group = cfg.group()?;
    let (ball, _) = cfg.ball(&group, radius)?;
    let scan = merger_scan(&group, &ball, radius)?;
    let csv = to_csv(MergerRow::CSV_HEADER, &scan.rows, MergerRow::csv);
    let mut out = csv.clone();
    let mut ok = scan.violations.is_empty();
    for v in &scan.violations {
        let _ = writeln!(out, "violation: {v}");
    }
    let mut value = json!({
        "command": "d2-scan",
        "presentation": cfg.presentation.id(),
        "radius": radius,
        "mergers": scan,
    });
    if with_compression {
        let oracle = ClosureOracle::new(cfg.presentation.clone());
        let c = compression_scan(&group, &oracle, &ball, radius)?;
        let _ = writeln!(out, "compressed: {} (single generator: {})", c.compressed, c.single_generator);
        for v in &c.violations {
            let _ = writeln!(out, "violation: {v}");
        }
        ok &= c.violations.is_empty();
        value["compression"] = json!(c);
    }
    let mut report = Report { ok, ..Report::new(out, value) };
    report.artifacts.push(Artifact { file_name: csv_name(cfg, "d2", radius), contents: csv });
    Ok(report)
}

fn rd_check(cfg: &RunConfig, radius: usize, trials: usize, iterations: usize) -> Result<Report> {
    let group = cfg.group()?;
    let (ball, _) = cfg.ball(&group, radius)?;
    let ratios = ratio_table(&group, &ball, radius, trials, cfg.seed)?;
    let projections = projection_scan(&group, &ball, radius, trials, cfg.seed)?;
    let chi1 = GroupFunction::indicator(ball.sphere(1));
    let norm = operator_norm_estimate(&group, &chi1, radius, iterations, cfg.max_elements)?;
    let ratio_csv = to_csv(RatioRow::CSV_HEADER, &ratios, RatioRow::csv);
    let proj_csv = to_csv(ProjectionRow::CSV_HEADER, &projections, ProjectionRow::csv);
    let violations: usize = projections.iter().map(|p| p.violations).sum();
    let mut out = format!("{ratio_csv}\n{proj_csv}\n");
    let _ = writeln!(out, "operator norm of chi_1, radius {radius}: {:.12}", norm.estimate);
    let value = json!({
        "command": "rd-check",
        "presentation": cfg.presentation.id(),
        "radius": radius,
        "trials": trials,
        "seed": cfg.seed,
        "ratios": ratios,
        "projections": projections,
        "operator_norm_chi1": norm,
    });
    let mut report = Report { ok: violations == 0, ..Report::new(out, value) };
    report.artifacts.push(Artifact { file_name: csv_name(cfg, "rd_ratios", radius), contents: ratio_csv });
    report.artifacts.push(Artifact { file_name: csv_name(cfg, "rd_projections", radius), contents: proj_csv });
    Ok(report)
}
