//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::panic;
use std::time::{Duration, Instant};

use cubic_diophantine::cli::{self, output, parse_poly, render_poly, ParseError};
use cubic_diophantine::cubic::{self, CubicError, Mod3Class, SpecializedCubic};
use cubic_diophantine::intarith;
use cubic_diophantine::solver::Irreducibility;
use cubic_diophantine::{run_search, validate_hypotheses, CubicFamily, Poly, SearchConfig, SearchMode, SearchReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($fmt)+));
        }
    };
}

const CRITERION3_SEED: u64 = 0xC0BE_5EED;

fn instance_a() -> CubicFamily {
    CubicFamily::new(parse_poly("3*y").unwrap(), parse_poly("y - 1").unwrap())
}

fn obstructed() -> CubicFamily {
    CubicFamily::new(parse_poly("y^2 + 1").unwrap(), parse_poly("y").unwrap())
}

fn pairs(report: &SearchReport) -> BTreeSet<(i128, i128)> {
    report
        .solutions
        .iter()
        .map(|s| (s.y0.to_i128().unwrap(), s.x0.to_i128().unwrap()))
        .collect()
}

fn criterion_1() -> Outcome {
    let fam = instance_a();
    let h = validate_hypotheses(&fam).map_err(|e| e.to_string())?;
    ensure!(h.mod3 == Mod3Class::IdenticallyZero, "mod3 = {:?}", h.mod3);
    ensure!(fam.disc() == &Poly::from_i64s(&[-27, 54, -27, -108]), "D = {}", render_poly(fam.disc()));
    ensure!(h.simple_root_count == Some(3), "simple roots {:?}", h.simple_root_count);
    ensure!(matches!(h.irreducibility, Irreducibility::ProvenBySpecialization(_)), "no witness");
    ensure!(h.passed(), "violations {:?}", h.violations());

    let start = Instant::now();
    let report = run_search(&fam, &SearchConfig::new(10, SearchMode::Filtered)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();

    let oracle: BTreeSet<(i128, i128)> = common::brute_force(&[0, 3], &[-1, 1], 10, common::cauchy_box)
        .into_iter()
        .filter(|&(y, _)| common::passes_square_filter(&[0, 3], &[-1, 1], y))
        .collect();
    ensure!(pairs(&report) == oracle, "search {:?} != oracle {:?}", pairs(&report), oracle);
    let with_w: BTreeSet<(i64, i64, i64)> = report
        .solutions
        .iter()
        .map(|s| (s.x0.to_i64().unwrap(), s.y0.to_i64().unwrap(), s.w0.as_ref().unwrap().to_i64().unwrap()))
        .collect();
    for required in [(1, 0, 9), (0, 1, 18), (-1, -1, 0), (2, -1, 0)] {
        ensure!(with_w.contains(&required), "missing (x0, y0, w0) = {required:?}");
    }
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("{} solutions equal oracle, {elapsed:?}", report.solutions.len()))
}

fn criterion_2() -> Outcome {
    let fam = obstructed();
    ensure!(cubic::mod3_classify(fam.p()) == Mod3Class::NowhereZero, "not NowhereZero");
    for y0 in 0..3 {
        let d0 = fam.disc().eval_i64(y0);
        ensure!(&d0 % 3u8 != BigInt::from(0), "3 | D({y0})");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..1000 {
        let y0: i64 = rng.gen_range(-1_000_000_000..=1_000_000_000);
        let w2 = -3 * fam.disc().eval_i64(y0);
        ensure!(intarith::valuation(&w2, 3) == Some(1), "v3(-3D({y0})) != 1");
    }
    let start = Instant::now();
    let report = run_search(&fam, &SearchConfig::new(10_000, SearchMode::Filtered)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(report.filter_pass_count == 0, "filter passes {}", report.filter_pass_count);
    ensure!(report.tested_count == 20_001, "tested {}", report.tested_count);
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("0 of {} pass, {elapsed:?}", report.tested_count))
}

/// Families, exhaustive reports and filtered reports shared by criteria 3 and 7.
fn criterion_3_runs() -> Result<Vec<(common::RandomFamily, SearchReport, SearchReport)>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(CRITERION3_SEED);
    common::random_families(&mut rng, 50)
        .into_iter()
        .map(|fam| {
            let f = fam.family();
            let ex = run_search(&f, &SearchConfig::new(25, SearchMode::Exhaustive)).map_err(|e| e.to_string())?;
            let fi = run_search(&f, &SearchConfig::new(25, SearchMode::Filtered)).map_err(|e| e.to_string())?;
            Ok((fam, ex, fi))
        })
        .collect()
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let runs = criterion_3_runs()?;
    let search_time = start.elapsed();
    let mut total = 0;
    for (fam, ex, fi) in &runs {
        let oracle = common::brute_force(&fam.p, &fam.q, 25, common::tight_box);
        ensure!(pairs(ex) == oracle, "exhaustive mismatch for {fam:?}");
        let filtered_oracle: BTreeSet<_> = oracle
            .iter()
            .copied()
            .filter(|&(y, _)| common::passes_square_filter(&fam.p, &fam.q, y))
            .collect();
        ensure!(pairs(fi) == filtered_oracle, "filtered mismatch for {fam:?}");
        total += oracle.len();
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("50 families, {total} solutions match, search {search_time:?}"))
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let p0: i64 = rng.gen_range(-50..=50);
        let q0: i64 = rng.gen_range(-50..=50);
        let exact = cubic::cubic_discriminant(&BigInt::from(p0), &BigInt::from(q0)).to_f64().unwrap();
        let numeric = common::numeric_discriminant(p0 as f64, q0 as f64);
        let rel = (numeric - exact).abs() / exact.abs().max(1.0);
        worst = worst.max(rel);
        ensure!(rel <= 1e-6, "(p0, q0) = ({p0}, {q0}): {exact} vs {numeric}");
    }
    Ok(format!("200 pairs, worst relative error {worst:.2e}"))
}

fn criterion_5() -> Outcome {
    let spec = |p0: i64, q0: i64| SpecializedCubic::from_coeffs(BigInt::from(p0), BigInt::from(q0));
    let x = cubic::cardano_real_root(&spec(0, -8), 1e-12).map_err(|e| e.to_string())?;
    ensure!((x - 2.0).abs() <= 1e-12, "x^3 - 8 gave {x}");
    let x = cubic::cardano_real_root(&spec(0, -1), 1e-12).map_err(|e| e.to_string())?;
    ensure!((x - 1.0).abs() <= 1e-12, "x^3 - 1 gave {x}");
    let x = cubic::cardano_real_root(&spec(-6, -6), 1e-12).map_err(|e| e.to_string())?;
    let oracle = common::newton_real_root(-6.0, -6.0);
    ensure!((x - oracle).abs() <= 1e-9, "x^3 - 6x - 6 gave {x}, Newton {oracle}");
    match cubic::cardano_real_root(&spec(-3, 1), 1e-12) {
        Err(CubicError::CasusIrreducibilis(d0)) if d0 == BigInt::from(81) => {}
        other => return Err(format!("d0 > 0 gave {other:?}")),
    }
    Ok(format!("2, 1, {x:.12} (Newton {oracle:.12}), casus irreducibilis rejected"))
}

fn criterion_6() -> Outcome {
    let fam = instance_a();
    let report = run_search(&fam, &SearchConfig::new(10, SearchMode::Filtered)).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for s in &report.solutions {
        let spec = fam.specialize(&s.y0);
        let cof = s.cofactor.as_ref().ok_or("missing cofactor report")?;
        let expanded = cof.expand_with(&s.x0);
        let target = [spec.q0.clone(), spec.p0.clone(), BigInt::from(0), BigInt::from(1)];
        ensure!(expanded == target, "cofactor identity fails at {:?}", (&s.x0, &s.y0));
        checked += 1;
    }
    let at = report
        .solutions
        .iter()
        .find(|s| s.x0 == BigInt::from(1) && s.y0 == BigInt::from(0))
        .ok_or("(1, 0) missing")?;
    let cof = at.cofactor.as_ref().unwrap();
    let one = BigInt::from(1);
    ensure!(cof.cofactor == [one.clone(), one.clone(), one.clone()], "cofactor {:?}", cof.cofactor);
    ensure!(cof.field_disc == Some(BigInt::from(-3)), "field disc {:?}", cof.field_disc);
    ensure!(cof.r == Some(one), "r {:?}", cof.r);
    ensure!(cof.comment_holds == Some(true), "comment_holds {:?}", cof.comment_holds);
    ensure!(cubic::comment_form_check(&BigInt::from(-3)), "form check on -3");
    Ok(format!("{checked} cofactor identities, (1, 0): disc -3 = -3*1"))
}

fn criterion_7() -> Outcome {
    let runs = criterion_3_runs()?;
    let mut rational = 0usize;
    let mut total = 0usize;
    for (fam, ex, _) in &runs {
        if ex.solutions.is_empty() {
            ensure!(ex.rational_w_fraction.is_none(), "fraction without solutions for {fam:?}");
            continue;
        }
        let f = ex.rational_w_fraction.ok_or_else(|| format!("no fraction for {fam:?}"))?;
        let r = ex.solutions.iter().filter(|s| s.w0.is_some()).count();
        ensure!((f - r as f64 / ex.solutions.len() as f64).abs() < 1e-15, "fraction mismatch");
        let line = output::summary_json(None, ex, Default::default());
        ensure!(line["rational_w_fraction"].as_f64() == Some(f), "fraction not emitted");
        rational += r;
        total += ex.solutions.len();
    }
    ensure!(total > 0, "no solutions at all");
    let aggregate = rational as f64 / total as f64;
    ensure!(aggregate < 1.0, "aggregate fraction {aggregate}");
    Ok(format!("aggregate rational w fraction {rational}/{total} = {aggregate:.4}"))
}

fn criterion_8() -> Outcome {
    let fam = instance_a();
    let render = |workers: usize| -> Result<String, String> {
        let cfg = SearchConfig::new(10, SearchMode::Filtered).with_workers(workers);
        let report = run_search(&fam, &cfg).map_err(|e| e.to_string())?;
        let check = cli::cardano_cross_check(&fam, &report, 1e-9);
        Ok(output::report_json_lines(None, &report, check))
    };
    let base = render(1)?;
    for k in [2, 8] {
        ensure!(render(k)? == base, "worker_count {k} differs");
    }
    Ok(format!("{} bytes identical for 1, 2, 8 workers", base.len()))
}

/// Malformed inputs with the 1-based column each error must point at.
const MALFORMED: [(&str, usize); 20] = [
    ("", 1),
    ("y^-1", 3),
    ("3y", 2),
    ("y +", 4),
    ("(y + 1", 7),
    ("y + 1)", 6),
    ("y ^ 2 ^ 3", 7),
    ("x + 1", 1),
    ("y*/2", 3),
    ("2 * * y", 5),
    ("()", 2),
    ("y^65", 3),
    ("y^y", 3),
    ("1.5*y", 2),
    ("y^", 3),
    ("(y)(y)", 4),
    ("+y", 1),
    ("y - ", 5),
    ("y^2 y", 5),
    ("7 % 2", 3),
];

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let deg = rng.gen_range(0..=8);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-1_000_000..=1_000_000)).collect();
        let p = Poly::from_i64s(&coeffs);
        let text = render_poly(&p);
        let back = parse_poly(&text).map_err(|e| format!("{text:?}: {e}"))?;
        ensure!(back == p, "round trip failed for {text:?}");
        ensure!(render_poly(&back) == text, "render not idempotent on {text:?}");
    }
    for (text, column) in MALFORMED {
        match parse_poly(text) {
            Err(e @ (ParseError::Unexpected { .. } | ParseError::ExponentOverflow { .. })) => {
                ensure!(e.column() == column, "{text:?}: column {} != {column} ({e})", e.column());
            }
            Ok(p) => return Err(format!("{text:?} parsed as {p:?}")),
        }
    }
    Ok("1000 round trips, 20 malformed inputs rejected at the right column".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 instance A end-to-end", criterion_1),
        ("2 mod-3 obstruction", criterion_2),
        ("3 oracle equivalence", criterion_3),
        ("4 discriminant identity", criterion_4),
        ("5 Cardano radicals", criterion_5),
        ("6 cofactor field discriminant", criterion_6),
        ("7 exhaustive-mode statistic", criterion_7),
        ("8 determinism", criterion_8),
        ("9 parser", criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, run) in criteria {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
