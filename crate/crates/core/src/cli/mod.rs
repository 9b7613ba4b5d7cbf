//! Command-line front end: `solve`, `batch`, `check` and `cardano`.
//!
//! Exit codes: 0 clean run, 1 usage or input error, 2 hypothesis violation
//! under `--strict`, 3 divisor budget exhausted so that candidates were skipped.

pub mod instance;
pub mod output;
pub mod parser;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde_json::json;

pub use parser::{parse_poly, ParseError};
pub use render::render_poly;

use crate::cubic::{self, CubicFamily, SpecializedCubic};
use crate::intarith::DivisorBudget;
use crate::solver::{self, SearchConfig, SearchMode, SearchReport, SolverError};
use output::CardanoCheck;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const ABOUT: &str = "Integer solutions of x^3 + p(y)*x + q(y) = 0 by the discriminant square filter";

const LONG_ABOUT: &str = "\
Finds integer points (x0, y0) with |y0| <= B on the cubic family
    f(x, y) = x^3 + p(y)*x + q(y)
whose discriminant satisfies w0^2 = -3*D(y0), D = -4p^3 - 27q^2.

The coefficient of x is entered with a plus sign. A family written as
x^3 - p(y)*x + q(y) is entered by negating p. Completeness holds only for
|y0| <= B; B must be supplied.

Polynomials use integers, the variable y, + - *, ^ with a literal exponent
and parentheses. Multiplication must be explicit: 3*y, not 3y.";

#[derive(Debug, Parser)]
#[command(name = "cubicdio", version, about = ABOUT, long_about = LONG_ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search one family for integer solutions.
    Solve(SolveArgs),
    /// Run every instance of a JSON instance file.
    Batch(BatchArgs),
    /// Report the hypotheses (mod-3 class, simple roots of D, irreducibility) only.
    Check(CheckArgs),
    /// Evaluate the real root of x^3 + p0*x + q0 by Cardano's radicals.
    Cardano(CardanoArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Filtered,
    Exhaustive,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Filtered => SearchMode::Filtered,
            ModeArg::Exhaustive => SearchMode::Exhaustive,
        }
    }
}

#[derive(Debug, Args)]
struct SearchOpts {
    /// Emit JSON lines instead of a table.
    #[arg(long)]
    json: bool,
    /// Treat hypothesis violations as errors (exit 2).
    #[arg(long)]
    strict: bool,
    /// Worker threads for the y-range.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Residual tolerance for the Cardano cross-check.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Largest trial divisor used when factoring q(y0).
    #[arg(long, default_value_t = DivisorBudget::DEFAULT_MAX_TRIAL)]
    max_trial: u64,
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Coefficient of x, as a polynomial in y.
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Constant term, as a polynomial in y.
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Search bound B on |y0|.
    #[arg(long)]
    bound: u64,
    #[arg(long, value_enum, default_value = "filtered")]
    mode: ModeArg,
    #[command(flatten)]
    opts: SearchOpts,
}

#[derive(Debug, Args)]
struct BatchArgs {
    /// JSON instance file.
    #[arg(long)]
    file: PathBuf,
    /// Bound for records without one.
    #[arg(long)]
    bound: Option<u64>,
    /// Mode for records without one.
    #[arg(long, value_enum, default_value = "filtered")]
    mode: ModeArg,
    #[command(flatten)]
    opts: SearchOpts,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long)]
    json: bool,
    /// Exit 2 when a hypothesis is violated.
    #[arg(long)]
    strict: bool,
}

#[derive(Debug, Args)]
struct CardanoArgs {
    #[arg(long, allow_hyphen_values = true)]
    p0: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    q0: BigInt,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Solve(args) => solve(args, out, err),
        Command::Batch(args) => batch(args, out, err),
        Command::Check(args) => check(args, out, err),
        Command::Cardano(args) => cardano(args, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn parse_family(p: &str, q: &str) -> Result<CubicFamily, String> {
    let p = parse_poly(p).map_err(|e| format!("--p: {e}"))?;
    let q = parse_poly(q).map_err(|e| format!("--q: {e}"))?;
    Ok(CubicFamily::new(p, q))
}

fn search_config(bound: u64, mode: SearchMode, opts: &SearchOpts) -> Result<SearchConfig, String> {
    let budget = DivisorBudget::new(opts.max_trial).map_err(|e| e.to_string())?;
    if !(opts.tol.is_finite() && opts.tol > 0.0) {
        return Err(format!("--tol must be positive, got {}", opts.tol));
    }
    Ok(SearchConfig::new(bound, mode)
        .with_budget(budget)
        .strict(opts.strict)
        .with_workers(opts.workers as usize))
}

/// Every solution whose specialization has `D(y0) < 0` has `x0` as its only
/// real root, so the radical formula must round to it.
pub fn cardano_cross_check(fam: &CubicFamily, report: &SearchReport, tol: f64) -> CardanoCheck {
    let mut check = CardanoCheck::default();
    for s in &report.solutions {
        let spec = fam.specialize(&s.y0);
        if !spec.d0.is_negative() {
            continue;
        }
        check.checked += 1;
        let agrees = cubic::cardano_real_root(&spec, tol)
            .ok()
            .zip(s.x0.to_f64())
            .is_some_and(|(x, x0)| (x - x0).abs() < 0.5);
        if agrees {
            check.agree += 1;
        }
    }
    check
}

enum Outcome {
    Report(Box<SearchReport>, CardanoCheck),
    Violation,
}

/// Runs one family, writing diagnostics to `err`. Returns the exit code and
/// the report when the search ran.
fn run_instance(
    name: Option<&str>,
    fam: &CubicFamily,
    cfg: &SearchConfig,
    tol: f64,
    err: &mut dyn Write,
) -> Result<Outcome, SolverError> {
    let label = name.map(|n| format!("{n}: ")).unwrap_or_default();
    match solver::run_search(fam, cfg) {
        Ok(report) => {
            for w in report.hypotheses.violations() {
                let _ = writeln!(err, "{label}warning: hypothesis violated: {w}");
            }
            for w in report.hypotheses.warnings() {
                let _ = writeln!(err, "{label}warning: {w}");
            }
            for w in &report.budget_warnings {
                let _ = writeln!(err, "{label}warning: y0 = {}: {} ({})", w.y0, w.detail, w.kind.tag());
            }
            let check = cardano_cross_check(fam, &report, tol);
            if check.agree != check.checked {
                let _ = writeln!(
                    err,
                    "{label}warning: Cardano evaluation disagrees on {} solutions",
                    check.checked - check.agree
                );
            }
            Ok(Outcome::Report(Box::new(report), check))
        }
        Err(SolverError::HypothesisViolation(h)) => {
            let _ = write!(err, "{label}{}", output::hypotheses_text(fam, &h));
            let _ = writeln!(err, "{label}error: hypotheses violated under --strict");
            Ok(Outcome::Violation)
        }
        Err(e) => Err(e),
    }
}

fn exit_for(report: &SearchReport) -> i32 {
    if report.candidates_suppressed() {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn solve(args: SolveArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let fam = parse_family(&args.p, &args.q)?;
    let cfg = search_config(args.bound, args.mode.into(), &args.opts)?;
    match run_instance(None, &fam, &cfg, args.opts.tol, err)? {
        Outcome::Violation => Ok(EXIT_HYPOTHESIS),
        Outcome::Report(report, check) => {
            let text = if args.opts.json {
                output::report_json_lines(None, &report, check)
            } else {
                output::report_table(None, &fam, &report, check)
            };
            out.write_all(text.as_bytes())?;
            Ok(exit_for(&report))
        }
    }
}

fn batch(args: BatchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| format!("cannot read {}: {e}", args.file.display()))?;
    let instances = instance::parse_instance_file(&text)?;
    let mut prepared = Vec::with_capacity(instances.len());
    for (index, inst) in instances.iter().enumerate() {
        let bound = inst
            .bound
            .or(args.bound)
            .ok_or_else(|| format!("record index {index}: no bound in record and no --bound given"))?;
        let mode = inst.mode.unwrap_or_else(|| args.mode.into());
        let cfg = search_config(bound, mode, &args.opts)?;
        let fam = CubicFamily::new(inst.p.clone(), inst.q.clone());
        prepared.push((inst.name.as_str(), fam, cfg));
    }

    let mut worst = EXIT_OK;
    let mut solutions = 0usize;
    let mut obstructions = 0usize;
    for (name, fam, cfg) in &prepared {
        let code = match run_instance(Some(name), fam, cfg, args.opts.tol, err) {
            Ok(Outcome::Report(report, check)) => {
                solutions += report.solution_count();
                obstructions += usize::from(report.hypotheses.obstruction);
                let text = if args.opts.json {
                    output::report_json_lines(Some(name), &report, check)
                } else {
                    output::report_table(Some(name), fam, &report, check)
                };
                out.write_all(text.as_bytes())?;
                exit_for(&report)
            }
            Ok(Outcome::Violation) => {
                let obstructed = solver::validate_hypotheses(fam).is_ok_and(|h| h.obstruction);
                obstructions += usize::from(obstructed);
                EXIT_HYPOTHESIS
            }
            Err(e) => {
                writeln!(err, "{name}: error: {e}")?;
                EXIT_USAGE
            }
        };
        worst = worst.max(code);
    }

    if args.opts.json {
        let summary = json!({
            "instances": prepared.len(),
            "solutions": solutions,
            "obstructions": obstructions,
        });
        writeln!(out, "{summary}")?;
    } else {
        writeln!(
            out,
            "batch: {} instances, {solutions} solutions, {obstructions} obstructed",
            prepared.len()
        )?;
    }
    Ok(worst)
}

fn check(args: CheckArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let fam = parse_family(&args.p, &args.q)?;
    let h = solver::validate_hypotheses(&fam)?;
    if args.json {
        let mut v = output::hypotheses_json(&h);
        v["p"] = json!(render_poly(fam.p()));
        v["q"] = json!(render_poly(fam.q()));
        v["disc"] = json!(render_poly(fam.disc()));
        writeln!(out, "{v}")?;
    } else {
        out.write_all(output::hypotheses_text(&fam, &h).as_bytes())?;
    }
    Ok(if args.strict && !h.passed() { EXIT_HYPOTHESIS } else { EXIT_OK })
}

fn cardano(args: CardanoArgs, out: &mut dyn Write, _err: &mut dyn Write) -> CmdResult {
    let spec = SpecializedCubic::from_coeffs(args.p0, args.q0);
    let x = cubic::cardano_real_root(&spec, args.tol)?;
    if args.json {
        let v = json!({
            "p0": output::big_json(&spec.p0),
            "q0": output::big_json(&spec.q0),
            "d0": output::big_json(&spec.d0),
            "root": x,
        });
        writeln!(out, "{v}")?;
    } else {
        writeln!(out, "{x}")?;
    }
    Ok(EXIT_OK)
}
