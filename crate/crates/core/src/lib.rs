//! Integer solutions of cubic families `x^3 + p(y) x + q(y) = 0`.
//!
//! A specialization `y = y0` is examined only when `-3 D(y0)` is a perfect
//! square, where `D = -4p^3 - 27q^2`; integer roots are then read off the
//! divisors of `q(y0)`. Families whose `p(y0)` is never divisible by 3 can
//! never pass that filter.

pub mod cli;
pub mod cubic;
pub mod intarith;
pub mod polyring;
pub mod solver;

pub use cubic::{CubicFamily, RootClassification, SpecializedCubic};
pub use intarith::DivisorBudget;
pub use polyring::Poly;
pub use solver::{run_search, validate_hypotheses, SearchConfig, SearchMode, SearchReport, Solution};
