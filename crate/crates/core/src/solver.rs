//! Search driver: hypothesis validation, enumeration of `|y0| <= B` with the
//! `w^2 = -3 D(y0)` filter, and solution extraction.
//!
//! Completeness holds only relative to the user-supplied bound `B`.

use std::collections::BTreeSet;
use std::thread;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::cubic::{
    self, CofactorReport, CubicError, CubicFamily, Mod3Class, RootClassification, SpecializedCubic,
};
use crate::intarith::DivisorBudget;

/// Specializations `y0 = 0, +-1, ..., +-WITNESS_RADIUS` scanned for an
/// irreducibility witness.
pub const WITNESS_RADIUS: i64 = 20;

/// Hypotheses the procedure needs: a family with `p = 0 (mod 3)` and a
/// discriminant with at least this many simple roots.
pub const REQUIRED_SIMPLE_ROOTS: usize = 3;

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("search bound must be at least 1 and at most {max}, got {got}")]
    InvalidBound { got: u64, max: u64 },
    #[error("worker count must be at least 1")]
    InvalidWorkerCount,
    #[error("p and q are both zero")]
    DegenerateFamily,
    #[error("hypotheses violated: {}", .0.violations().join("; "))]
    HypothesisViolation(Box<HypothesisReport>),
    #[error("emitted (x0, y0) = ({x0}, {y0}) does not satisfy the cubic")]
    Unsound { x0: BigInt, y0: BigInt },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Only `y0` passing the square filter are examined.
    Filtered,
    /// Every `y0` is examined; used as an oracle and to measure how often
    /// solutions pass the filter.
    Exhaustive,
}

impl SearchMode {
    pub fn tag(&self) -> &'static str {
        match self {
            SearchMode::Filtered => "filtered",
            SearchMode::Exhaustive => "exhaustive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub bound: u64,
    pub mode: SearchMode,
    pub divisor_budget: DivisorBudget,
    pub strict_hypotheses: bool,
    pub worker_count: usize,
}

impl SearchConfig {
    pub fn new(bound: u64, mode: SearchMode) -> Self {
        SearchConfig {
            bound,
            mode,
            divisor_budget: DivisorBudget::default(),
            strict_hypotheses: false,
            worker_count: 1,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.worker_count = workers;
        self
    }

    pub fn strict(mut self, strict: bool) -> Self {
        self.strict_hypotheses = strict;
        self
    }

    pub fn with_budget(mut self, budget: DivisorBudget) -> Self {
        self.divisor_budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    /// `f(x, y_witness)` has no integer root and nonzero discriminant, so it
    /// is irreducible over Q, hence `f` is irreducible over `Q(y)`.
    ProvenBySpecialization(i64),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub mod3: Mod3Class,
    /// `None` when `D(y)` is identically zero.
    pub simple_root_count: Option<usize>,
    pub irreducibility: Irreducibility,
    /// `p(y0)` is never divisible by 3, so no `y0` can pass the filter.
    pub obstruction: bool,
}

impl HypothesisReport {
    /// Failures that make the search unable to certify anything.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.obstruction {
            out.push("p(y0) is never divisible by 3: -3D(y0) has 3-adic valuation 1 and is never a square".to_string());
        }
        match self.simple_root_count {
            None => out.push("discriminant D(y) is identically zero".to_string()),
            Some(n) if n < REQUIRED_SIMPLE_ROOTS => {
                out.push(format!("D(y) has {n} simple roots, at least {REQUIRED_SIMPLE_ROOTS} required"))
            }
            Some(_) => {}
        }
        out
    }

    /// Conditions the search tolerates but reports.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Mod3Class::SometimesZero(residues) = &self.mod3 {
            out.push(format!(
                "p is not identically 0 mod 3; the filter can only pass for y0 mod 3 in {residues:?}"
            ));
        }
        if self.irreducibility == Irreducibility::Unknown {
            out.push(format!("no irreducibility witness found for |y0| <= {WITNESS_RADIUS}"));
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

pub fn validate_hypotheses(fam: &CubicFamily) -> Result<HypothesisReport, SolverError> {
    if fam.p().is_zero() && fam.q().is_zero() {
        return Err(SolverError::DegenerateFamily);
    }
    let mod3 = cubic::mod3_classify(fam.p());
    let simple_root_count = fam.disc().count_simple_roots().ok();
    let budget = DivisorBudget::default();
    let irreducibility = enumeration_order(WITNESS_RADIUS as u64)
        .find(|&y0| {
            let spec = fam.specialize(&BigInt::from(y0));
            !spec.d0.is_zero()
                && cubic::integer_roots(&spec, budget).is_ok_and(|roots| roots.is_empty())
        })
        .map_or(Irreducibility::Unknown, Irreducibility::ProvenBySpecialization);
    let obstruction = mod3 == Mod3Class::NowhereZero;
    Ok(HypothesisReport {
        mod3,
        simple_root_count,
        irreducibility,
        obstruction,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub y0: BigInt,
    pub x0: BigInt,
    pub w0: Option<BigInt>,
    pub classification: RootClassification,
    pub cofactor: Option<CofactorReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BudgetWarningKind {
    /// Divisors of `q(y0)` could not be enumerated; roots at this `y0` may be missing.
    RootsSuppressed,
    /// A solution was found but its cofactor discriminant could not be factored.
    CofactorSkipped,
}

impl BudgetWarningKind {
    pub fn tag(&self) -> &'static str {
        match self {
            BudgetWarningKind::RootsSuppressed => "roots_suppressed",
            BudgetWarningKind::CofactorSkipped => "cofactor_skipped",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BudgetWarning {
    pub y0: BigInt,
    pub kind: BudgetWarningKind,
    pub detail: String,
}

/// How the specializations that passed the filter split by root type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PassClassCounts {
    pub repeated_roots: usize,
    pub reducible: usize,
    pub irreducible_metacyclic: usize,
    pub irreducible_cyclic_q: usize,
}

impl PassClassCounts {
    fn record(&mut self, class: &RootClassification) {
        match class {
            RootClassification::RepeatedRoots => self.repeated_roots += 1,
            RootClassification::Reducible(_) => self.reducible += 1,
            RootClassification::IrreducibleMetacyclic { .. } => self.irreducible_metacyclic += 1,
            RootClassification::IrreducibleCyclicQ => self.irreducible_cyclic_q += 1,
        }
    }

    fn merge(&mut self, other: &PassClassCounts) {
        self.repeated_roots += other.repeated_roots;
        self.reducible += other.reducible;
        self.irreducible_metacyclic += other.irreducible_metacyclic;
        self.irreducible_cyclic_q += other.irreducible_cyclic_q;
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub bound: u64,
    pub mode: SearchMode,
    /// Sorted by `(y0, x0)`.
    pub solutions: Vec<Solution>,
    pub tested_count: u64,
    pub filter_pass_count: u64,
    pub pass_classes: PassClassCounts,
    /// Exhaustive mode only: share of solutions whose `-3 D(y0)` is a square.
    /// `None` in filtered mode or when there are no solutions.
    pub rational_w_fraction: Option<f64>,
    pub hypotheses: HypothesisReport,
    /// Sorted by `y0`.
    pub budget_warnings: Vec<BudgetWarning>,
}

impl SearchReport {
    pub fn solution_count(&self) -> usize {
        self.solutions.len()
    }

    /// Some candidate roots were never tested because factoring `q(y0)` ran out of budget.
    pub fn candidates_suppressed(&self) -> bool {
        self.budget_warnings
            .iter()
            .any(|w| w.kind == BudgetWarningKind::RootsSuppressed)
    }
}

/// `0, 1, -1, 2, -2, ..., bound, -bound`.
pub fn enumeration_order(bound: u64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=bound as i64).flat_map(|k| [k, -k]))
}

#[derive(Default)]
struct Partial {
    solutions: Vec<Solution>,
    tested: u64,
    passed: u64,
    pass_classes: PassClassCounts,
    warnings: Vec<BudgetWarning>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.solutions.extend(other.solutions);
        self.tested += other.tested;
        self.passed += other.passed;
        self.pass_classes.merge(&other.pass_classes);
        self.warnings.extend(other.warnings);
        self
    }
}

pub fn run_search(fam: &CubicFamily, cfg: &SearchConfig) -> Result<SearchReport, SolverError> {
    let max = i64::MAX as u64 / 2;
    if cfg.bound < 1 || cfg.bound > max {
        return Err(SolverError::InvalidBound { got: cfg.bound, max });
    }
    if cfg.worker_count == 0 {
        return Err(SolverError::InvalidWorkerCount);
    }
    let hypotheses = validate_hypotheses(fam)?;
    if cfg.strict_hypotheses && !hypotheses.passed() {
        return Err(SolverError::HypothesisViolation(Box::new(hypotheses)));
    }

    // Static partition of the enumeration order into contiguous chunks.
    let total = 2 * cfg.bound + 1;
    let workers = (cfg.worker_count as u64).min(total);
    let chunk = total.div_ceil(workers);
    let ranges: Vec<(u64, u64)> = (0..workers)
        .map(|w| (w * chunk, ((w + 1) * chunk).min(total)))
        .filter(|(lo, hi)| lo < hi)
        .collect();

    let partials: Vec<Result<Partial, SolverError>> = if ranges.len() == 1 {
        vec![search_range(fam, cfg, ranges[0])]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .iter()
                .map(|&range| scope.spawn(move || search_range(fam, cfg, range)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        })
    };
    let mut merged = Partial::default();
    for partial in partials {
        merged = merged.merge(partial?);
    }

    merged.solutions.sort_by(|a, b| (&a.y0, &a.x0).cmp(&(&b.y0, &b.x0)));
    merged
        .warnings
        .sort_by(|a, b| (&a.y0, a.kind.tag()).cmp(&(&b.y0, b.kind.tag())));

    let rational_w_fraction = match cfg.mode {
        SearchMode::Exhaustive if !merged.solutions.is_empty() => {
            let rational = merged.solutions.iter().filter(|s| s.w0.is_some()).count();
            Some(rational as f64 / merged.solutions.len() as f64)
        }
        _ => None,
    };

    Ok(SearchReport {
        bound: cfg.bound,
        mode: cfg.mode,
        solutions: merged.solutions,
        tested_count: merged.tested,
        filter_pass_count: merged.passed,
        pass_classes: merged.pass_classes,
        rational_w_fraction,
        hypotheses,
        budget_warnings: merged.warnings,
    })
}

/// Searches positions `[lo, hi)` of the enumeration order.
fn search_range(fam: &CubicFamily, cfg: &SearchConfig, (lo, hi): (u64, u64)) -> Result<Partial, SolverError> {
    let mut out = Partial::default();
    for pos in lo..hi {
        let y0 = position_to_y(pos);
        let spec = fam.specialize(&BigInt::from(y0));
        out.tested += 1;
        let w0 = cubic::w_filter(&spec);
        if w0.is_some() {
            out.passed += 1;
        } else if cfg.mode == SearchMode::Filtered {
            continue;
        }
        let roots = match cubic::integer_roots(&spec, cfg.divisor_budget) {
            Ok(roots) => roots,
            Err(err) => {
                out.warnings.push(BudgetWarning {
                    y0: spec.y0.clone(),
                    kind: BudgetWarningKind::RootsSuppressed,
                    detail: err.to_string(),
                });
                continue;
            }
        };
        let classification =
            cubic::classify_specialization(&spec, &roots).expect("roots come from integer_roots");
        if w0.is_some() {
            out.pass_classes.record(&classification);
        }
        emit_solutions(fam, cfg, &spec, &roots, w0, classification, &mut out)?;
    }
    Ok(out)
}

fn emit_solutions(
    fam: &CubicFamily,
    cfg: &SearchConfig,
    spec: &SpecializedCubic,
    roots: &BTreeSet<BigInt>,
    w0: Option<BigInt>,
    classification: RootClassification,
    out: &mut Partial,
) -> Result<(), SolverError> {
    for x0 in roots {
        // independent re-check from the family polynomials
        if !fam.eval(x0, &spec.y0).is_zero() {
            return Err(SolverError::Unsound { x0: x0.clone(), y0: spec.y0.clone() });
        }
        let cofactor = match cubic::cofactor_field_disc(spec, x0, cfg.divisor_budget) {
            Ok(report) => Some(report),
            Err(CubicError::Arith(err)) => {
                out.warnings.push(BudgetWarning {
                    y0: spec.y0.clone(),
                    kind: BudgetWarningKind::CofactorSkipped,
                    detail: err.to_string(),
                });
                None
            }
            Err(other) => unreachable!("x0 is a verified root: {other}"),
        };
        out.solutions.push(Solution {
            y0: spec.y0.clone(),
            x0: x0.clone(),
            w0: w0.clone(),
            classification: classification.clone(),
            cofactor,
        });
    }
    Ok(())
}

fn position_to_y(pos: u64) -> i64 {
    if pos == 0 {
        0
    } else if pos % 2 == 1 {
        pos.div_ceil(2) as i64
    } else {
        -((pos / 2) as i64)
    }
}
