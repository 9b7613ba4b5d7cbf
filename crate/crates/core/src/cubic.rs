//! The cubic family `f(x, y) = x^3 + p(y) x + q(y)` and its specializations.
//!
//! With this sign convention the discriminant is `D = -4p^3 - 27q^2` and the
//! real root of a specialization with `D <= 0` is given by Cardano's radicals.
//! A family written as `x^3 - p(y) x + q(y)` is recovered by negating `p`;
//! every mod-3 statement below is unchanged by that relabeling.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::intarith::{self, ArithError, DivisorBudget};
use crate::polyring::Poly;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CubicError {
    #[error("root set {roots:?} is not the integer root set of x^3 + {p0}x + {q0}")]
    InconsistentInput { p0: BigInt, q0: BigInt, roots: Vec<BigInt> },
    #[error("discriminant {0} > 0: three real roots need complex cube roots (casus irreducibilis)")]
    CasusIrreducibilis(BigInt),
    #[error("{x0} is not a root of x^3 + {p0}x + {q0}")]
    NotARoot { x0: BigInt, p0: BigInt, q0: BigInt },
    #[error("radical evaluation residual {residual:e} exceeds tolerance {tol:e}")]
    ResidualExceeded { residual: f64, tol: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// The pair `(p(y), q(y))` with its cached discriminant `D(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicFamily {
    p: Poly,
    q: Poly,
    disc: Poly,
}

impl CubicFamily {
    pub fn new(p: Poly, q: Poly) -> Self {
        let disc = discriminant_poly(&p, &q);
        CubicFamily { p, q, disc }
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn disc(&self) -> &Poly {
        &self.disc
    }

    pub fn specialize(&self, y0: &BigInt) -> SpecializedCubic {
        let p0 = self.p.eval(y0);
        let q0 = self.q.eval(y0);
        let d0 = self.disc.eval(y0);
        debug_assert_eq!(d0, cubic_discriminant(&p0, &q0));
        SpecializedCubic { y0: y0.clone(), p0, q0, d0 }
    }

    /// `f(x0, y0)` evaluated directly from `p` and `q`.
    pub fn eval(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        x0 * x0 * x0 + self.p.eval(y0) * x0 + self.q.eval(y0)
    }
}

/// `-4p^3 - 27q^2`.
pub fn discriminant_poly(p: &Poly, q: &Poly) -> Poly {
    let four = Poly::constant(BigInt::from(-4));
    let twenty_seven = Poly::constant(BigInt::from(-27));
    &(&four * &p.pow(3)) + &(&twenty_seven * &q.pow(2))
}

pub fn cubic_discriminant(p0: &BigInt, q0: &BigInt) -> BigInt {
    -4 * p0 * p0 * p0 - 27 * q0 * q0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mod3Class {
    /// Every coefficient of `p` is divisible by 3.
    IdenticallyZero,
    /// `p(y0)` is never divisible by 3.
    NowhereZero,
    /// `p(y0) = 0 (mod 3)` exactly when `y0 mod 3` is one of these residues.
    SometimesZero(Vec<u8>),
}

impl Mod3Class {
    pub fn tag(&self) -> &'static str {
        match self {
            Mod3Class::IdenticallyZero => "identically_zero",
            Mod3Class::NowhereZero => "nowhere_zero",
            Mod3Class::SometimesZero(_) => "sometimes_zero",
        }
    }

    pub fn vanishing_residues(&self) -> Vec<u8> {
        match self {
            Mod3Class::IdenticallyZero => vec![0, 1, 2],
            Mod3Class::NowhereZero => Vec::new(),
            Mod3Class::SometimesZero(r) => r.clone(),
        }
    }
}

pub fn mod3_classify(p: &Poly) -> Mod3Class {
    let three = BigInt::from(3);
    let reduced = Poly::new(p.coeffs().iter().map(|c| c.mod_floor(&three)).collect());
    if reduced.is_zero() {
        return Mod3Class::IdenticallyZero;
    }
    let residues: Vec<u8> = (0u8..3)
        .filter(|&r| reduced.eval(&BigInt::from(r)).mod_floor(&three).is_zero())
        .collect();
    if residues.is_empty() {
        Mod3Class::NowhereZero
    } else {
        Mod3Class::SometimesZero(residues)
    }
}

/// The integer cubic `x^3 + p0 x + q0` obtained at `y = y0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializedCubic {
    pub y0: BigInt,
    pub p0: BigInt,
    pub q0: BigInt,
    pub d0: BigInt,
}

impl SpecializedCubic {
    /// A specialization not tied to a family; `y0` is set to zero.
    pub fn from_coeffs(p0: BigInt, q0: BigInt) -> Self {
        let d0 = cubic_discriminant(&p0, &q0);
        SpecializedCubic { y0: BigInt::zero(), p0, q0, d0 }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        x * x * x + &self.p0 * x + &self.q0
    }

    pub fn is_root(&self, x: &BigInt) -> bool {
        self.eval(x).is_zero()
    }
}

/// `w0` with `w0^2 = -3 * d0`, when it exists.
pub fn w_filter(spec: &SpecializedCubic) -> Option<BigInt> {
    intarith::perfect_square(&(-3 * &spec.d0))
}

/// All integer roots of the specialization, ascending.
///
/// A monic integer cubic has only integer rational roots, each dividing the
/// constant term. When `q0 = 0` the cubic is `x (x^2 + p0)`.
pub fn integer_roots(spec: &SpecializedCubic, budget: DivisorBudget) -> Result<BTreeSet<BigInt>, CubicError> {
    let mut roots = BTreeSet::new();
    if spec.q0.is_zero() {
        roots.insert(BigInt::zero());
        if let Some(s) = intarith::perfect_square(&-&spec.p0) {
            roots.insert(-&s);
            roots.insert(s);
        }
        return Ok(roots);
    }
    for d in intarith::divisors(&spec.q0, budget)? {
        let neg = -&d;
        if spec.is_root(&d) {
            roots.insert(d);
        }
        if spec.is_root(&neg) {
            roots.insert(neg);
        }
    }
    Ok(roots)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootClassification {
    /// `d0 = 0`.
    RepeatedRoots,
    /// The specialization has these integer roots.
    Reducible(Vec<BigInt>),
    /// Irreducible with non-square discriminant: the splitting field has
    /// group S3. `c` is set when `d0 = -3 c^2`, in which case adjoining
    /// `i*sqrt(3)` makes the field cyclic.
    IrreducibleMetacyclic { c: Option<BigInt> },
    /// Irreducible with a positive square discriminant: a cyclic cubic over Q.
    IrreducibleCyclicQ,
}

impl RootClassification {
    pub fn tag(&self) -> &'static str {
        match self {
            RootClassification::RepeatedRoots => "repeated_roots",
            RootClassification::Reducible(_) => "reducible",
            RootClassification::IrreducibleMetacyclic { .. } => "irreducible_metacyclic",
            RootClassification::IrreducibleCyclicQ => "irreducible_cyclic_q",
        }
    }

    pub fn cyclic_over_q_i_sqrt3(&self) -> bool {
        matches!(self, RootClassification::IrreducibleMetacyclic { c: Some(_) })
    }
}

impl fmt::Display for RootClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Classifies a specialization given its integer root set.
///
/// Only the cheap consistency checks are made: each supplied root must be a
/// root, and an empty set is rejected when `x = 0` is a root.
pub fn classify_specialization(
    spec: &SpecializedCubic,
    roots: &BTreeSet<BigInt>,
) -> Result<RootClassification, CubicError> {
    let consistent =
        roots.iter().all(|r| spec.is_root(r)) && (spec.q0.is_zero() == roots.contains(&BigInt::zero()));
    if !consistent {
        return Err(CubicError::InconsistentInput {
            p0: spec.p0.clone(),
            q0: spec.q0.clone(),
            roots: roots.iter().cloned().collect(),
        });
    }
    if spec.d0.is_zero() {
        return Ok(RootClassification::RepeatedRoots);
    }
    if !roots.is_empty() {
        return Ok(RootClassification::Reducible(roots.iter().cloned().collect()));
    }
    if spec.d0.is_positive() && intarith::perfect_square(&spec.d0).is_some() {
        return Ok(RootClassification::IrreducibleCyclicQ);
    }
    let c = w_filter(spec).map(|w| w / 3);
    Ok(RootClassification::IrreducibleMetacyclic { c })
}

/// Evaluates the real root of `x^3 + p0 x + q0` with the radical formula
/// `(cbrt((-27 q0 + 3 s) / 2) + cbrt((-27 q0 - 3 s) / 2)) / 3`, `s = sqrt(-3 d0)`.
///
/// Only `d0 <= 0` is accepted: there `-3 d0 >= 0` and every intermediate is real.
pub fn cardano_real_root(spec: &SpecializedCubic, tol: f64) -> Result<f64, CubicError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CubicError::InvalidTolerance(tol));
    }
    if spec.d0.is_positive() {
        return Err(CubicError::CasusIrreducibilis(spec.d0.clone()));
    }
    let to_f64 = |n: &BigInt| n.to_f64().unwrap_or(f64::NAN);
    let s = match intarith::perfect_square(&(-3 * &spec.d0)) {
        Some(w) => to_f64(&w),
        None => to_f64(&(-3 * &spec.d0)).sqrt(),
    };
    let q = to_f64(&spec.q0);
    let p = to_f64(&spec.p0);
    let u = (-27.0 * q + 3.0 * s) / 2.0;
    let v = (-27.0 * q - 3.0 * s) / 2.0;
    let x = (u.cbrt() + v.cbrt()) / 3.0;
    let residual = (x * x * x + p * x + q).abs();
    let allowed = tol * (1.0 + x.abs()).powi(3);
    if residual.is_nan() || residual > allowed {
        return Err(CubicError::ResidualExceeded { residual, tol });
    }
    Ok(x)
}

/// Factorization `f(x, y0) = (x - x0) * (x^2 + x0 x + (p0 + x0^2))` and the
/// field discriminant of the quadratic cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofactorReport {
    /// Ascending coefficients `[p0 + x0^2, x0, 1]`.
    pub cofactor: [BigInt; 3],
    pub quad_disc: BigInt,
    pub field_disc: Option<BigInt>,
    pub r: Option<BigInt>,
    pub comment_holds: Option<bool>,
}

impl CofactorReport {
    /// The cofactor splits over Q.
    pub fn totally_reducible(&self) -> bool {
        self.field_disc.is_none()
    }

    /// `(x - x0) * cofactor` as ascending coefficients.
    pub fn expand_with(&self, x0: &BigInt) -> [BigInt; 4] {
        let [c0, c1, c2] = &self.cofactor;
        [-x0 * c0, c0 - x0 * c1, c1 - x0 * c2, c2.clone()]
    }
}

pub fn cofactor_field_disc(
    spec: &SpecializedCubic,
    x0: &BigInt,
    budget: DivisorBudget,
) -> Result<CofactorReport, CubicError> {
    if !spec.is_root(x0) {
        return Err(CubicError::NotARoot {
            x0: x0.clone(),
            p0: spec.p0.clone(),
            q0: spec.q0.clone(),
        });
    }
    let cofactor = [&spec.p0 + x0 * x0, x0.clone(), BigInt::from(1)];
    let quad_disc = -3 * x0 * x0 - 4 * &spec.p0;
    let mut report = CofactorReport {
        cofactor,
        quad_disc,
        field_disc: None,
        r: None,
        comment_holds: None,
    };
    if intarith::perfect_square(&report.quad_disc).is_some() {
        return Ok(report);
    }
    let m = intarith::squarefree_kernel(&report.quad_disc, budget)?;
    let field_disc = if m.mod_floor(&BigInt::from(4)) == BigInt::from(1) { m } else { 4 * m };
    let (r, rem) = (-&field_disc).div_rem(&BigInt::from(3));
    if rem.is_zero() {
        report.r = Some(r);
    }
    report.comment_holds = Some(comment_form_check(&field_disc));
    report.field_disc = Some(field_disc);
    Ok(report)
}

/// True iff `field_disc = -3r` with `r > 0` squarefree and prime to 3.
pub fn comment_form_check(field_disc: &BigInt) -> bool {
    let (r, rem) = (-field_disc).div_rem(&BigInt::from(3));
    if !rem.is_zero() || !r.is_positive() || (&r % 3u8).is_zero() {
        return false;
    }
    // a factorization that exceeds the budget cannot certify squarefreeness
    intarith::is_squarefree(&r, DivisorBudget::default()).unwrap_or(false)
}
