//! Big-integer primitives: integer square roots, perfect-square detection,
//! trial-division factorization, divisor enumeration and squarefree kernels.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("square root of negative input {0}")]
    NegativeInput(BigInt),
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("unfactored cofactor {cofactor} exceeds trial-division budget (max trial {max_trial})")]
    BudgetExceeded { cofactor: BigUint, max_trial: u64 },
    #[error("divisor budget must be at least 2, got {0}")]
    InvalidBudget(u64),
}

/// Largest trial divisor attempted while factoring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorBudget {
    max_trial: u64,
}

impl DivisorBudget {
    pub const DEFAULT_MAX_TRIAL: u64 = 1 << 32;

    pub fn new(max_trial: u64) -> Result<Self, ArithError> {
        if max_trial < 2 {
            return Err(ArithError::InvalidBudget(max_trial));
        }
        Ok(DivisorBudget { max_trial })
    }

    pub fn max_trial(&self) -> u64 {
        self.max_trial
    }
}

impl Default for DivisorBudget {
    fn default() -> Self {
        DivisorBudget {
            max_trial: Self::DEFAULT_MAX_TRIAL,
        }
    }
}

pub fn isqrt(n: &BigInt) -> Result<BigInt, ArithError> {
    if n.is_negative() {
        return Err(ArithError::NegativeInput(n.clone()));
    }
    Ok(n.sqrt())
}

const fn square_residues<const M: usize>() -> [bool; M] {
    let mut table = [false; M];
    let mut i = 0;
    while i < M {
        table[(i * i) % M] = true;
        i += 1;
    }
    table
}

const SQ64: [bool; 64] = square_residues::<64>();
const SQ63: [bool; 63] = square_residues::<63>();
const SQ65: [bool; 65] = square_residues::<65>();
const SQ11: [bool; 11] = square_residues::<11>();

fn residue(n: &BigUint, m: u32) -> usize {
    (n % m).to_usize().expect("residue fits")
}

/// Returns `w >= 0` with `w^2 == n`, or `None` when `n` is not a square.
pub fn perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let mag = n.magnitude();
    if !SQ64[residue(mag, 64)] || !SQ63[residue(mag, 63)] {
        return None;
    }
    if !SQ65[residue(mag, 65)] || !SQ11[residue(mag, 11)] {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Prime factorization of `n > 0` as ascending `(prime, exponent)` pairs.
pub fn factorize(n: &BigUint, budget: DivisorBudget) -> Result<Vec<(BigUint, u32)>, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let max_trial = budget.max_trial();
    let mut factors = Vec::new();
    let mut rem = n.clone();
    let mut trial = TrialDivisors::new();

    // Cofactors above u128 are divided in bignum arithmetic until they shrink.
    let mut d = trial.next_divisor();
    let mut small = loop {
        if let Some(r) = rem.to_u128() {
            break r;
        }
        if d > max_trial {
            return Err(ArithError::BudgetExceeded { cofactor: rem, max_trial });
        }
        let mut exp = 0;
        while (&rem % d).is_zero() {
            rem /= d;
            exp += 1;
        }
        if exp > 0 {
            factors.push((BigUint::from(d), exp));
        }
        d = trial.next_divisor();
    };

    loop {
        let dd = u128::from(d);
        if dd * dd > small {
            break;
        }
        if d > max_trial {
            return Err(ArithError::BudgetExceeded {
                cofactor: BigUint::from(small),
                max_trial,
            });
        }
        let mut exp = 0;
        while small % dd == 0 {
            small /= dd;
            exp += 1;
        }
        if exp > 0 {
            factors.push((BigUint::from(d), exp));
        }
        d = trial.next_divisor();
    }
    if small > 1 {
        factors.push((BigUint::from(small), 1));
    }
    Ok(factors)
}

/// 2, 3, then numbers of the form 6k +- 1.
struct TrialDivisors {
    next: u64,
    step: u64,
}

impl TrialDivisors {
    fn new() -> Self {
        TrialDivisors { next: 2, step: 0 }
    }

    fn next_divisor(&mut self) -> u64 {
        let d = self.next;
        match d {
            2 => self.next = 3,
            3 => {
                self.next = 5;
                self.step = 2;
            }
            _ => {
                self.next = d.saturating_add(self.step);
                self.step = 6 - self.step;
            }
        }
        d
    }
}

/// All positive divisors of `|n|` in ascending order.
pub fn divisors(n: &BigInt, budget: DivisorBudget) -> Result<Vec<BigInt>, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let factors = factorize(n.magnitude(), budget)?;
    let mut divs = vec![BigUint::one()];
    for (prime, exp) in &factors {
        let base_len = divs.len();
        let mut power = BigUint::one();
        for _ in 0..*exp {
            power *= prime;
            for i in 0..base_len {
                divs.push(&divs[i] * &power);
            }
        }
    }
    divs.sort();
    Ok(divs.into_iter().map(BigInt::from).collect())
}

/// Product of the primes dividing `n` to an odd power, carrying the sign of `n`.
pub fn squarefree_kernel(n: &BigInt, budget: DivisorBudget) -> Result<BigInt, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let kernel = factorize(n.magnitude(), budget)?
        .into_iter()
        .filter(|(_, e)| e % 2 == 1)
        .fold(BigUint::one(), |acc, (p, _)| acc * p);
    let sign = if n.is_negative() { Sign::Minus } else { Sign::Plus };
    Ok(BigInt::from_biguint(sign, kernel))
}

pub fn is_squarefree(n: &BigInt, budget: DivisorBudget) -> Result<bool, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    Ok(factorize(n.magnitude(), budget)?.iter().all(|(_, e)| *e == 1))
}

/// Exponent of the prime `p` in `n`; `None` for `n == 0`.
pub fn valuation(n: &BigInt, p: u32) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let mut m = n.magnitude().clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    Some(v)
}
