//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `y^i`. The zero polynomial is the empty vector, and a
//! nonzero polynomial never carries a trailing zero coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// A polynomial in `Z[y]`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `y`.
    pub fn var() -> Self {
        Poly::monomial(BigInt::one(), 1)
    }

    /// `c * y^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `y^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (degree negative infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * n + c)
    }

    pub fn eval_i64(&self, n: i64) -> BigInt {
        self.eval(&BigInt::from(n))
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Splits `self` into a nonnegative content and a primitive part.
    ///
    /// The primitive part keeps the sign of the leading coefficient, so
    /// `content * primitive == self` always holds.
    pub fn content_primitive(&self) -> (BigInt, Poly) {
        let content = self
            .coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() {
            return (content, Poly::zero());
        }
        let primitive = Poly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        };
        (content, primitive)
    }

    /// Primitive part with a positive leading coefficient.
    fn normalized(&self) -> Poly {
        let (_, prim) = self.content_primitive();
        match prim.leading_coeff() {
            Some(lc) if lc.is_negative() => -prim,
            _ => prim,
        }
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`.
    ///
    /// The result equals `lc(divisor)^k * self mod divisor` for some `k >= 0`;
    /// it is zero exactly when `divisor` divides `self` over `Q[y]`.
    pub fn pseudo_rem(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        let db = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lb = divisor.leading_coeff().expect("nonzero divisor");
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.coeffs[dr].clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * lb).collect();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &lr * c;
            }
            r = Poly::new(coeffs);
        }
        Ok(r)
    }

    /// Exact division in `Z[y]`; `None` when the quotient is not integral
    /// or the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let db = divisor.degree()?;
        let lb = divisor.leading_coeff()?;
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return Some(Poly::zero());
        };
        if dr < db {
            return None;
        }
        let mut quot = vec![BigInt::zero(); dr - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (q, rem) = r.coeffs[dr].div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            let shift = dr - db;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r.coeffs[i + shift] -= &q * c;
            }
            quot[shift] = q;
            r.trim();
        }
        Some(Poly::new(quot))
    }

    /// Greatest common divisor over `Q[y]`, returned primitive with a positive
    /// leading coefficient. Uses the primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Poly::zero(),
            (false, true) => return self.normalized(),
            (true, false) => return other.normalized(),
            _ => {}
        }
        let (mut a, mut b) = (self.normalized(), other.normalized());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b).expect("b is nonzero in the loop");
            match r.degree() {
                None => return b,
                Some(0) => return Poly::one(),
                Some(_) => {
                    a = b;
                    b = r.normalized();
                }
            }
        }
    }

    /// `self / gcd(self, self')`, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Poly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        Ok(self
            .normalized()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .normalized())
    }

    /// Number of distinct complex roots of multiplicity exactly one.
    pub fn count_simple_roots(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let s = self
            .normalized()
            .div_exact(&g)
            .expect("gcd divides its argument");
        let repeated = s.gcd(&g);
        let deg = |p: &Poly| p.degree().expect("nonzero");
        Ok(deg(&s) - deg(&repeated))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter().map(|c| c.to_string())).finish()
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::new(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(mut self) -> Poly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
