//! Test-only oracles, independent of the library's search path.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cubic_diophantine::{CubicFamily, Poly};
use num_complex::Complex64;
use rand::Rng;

/// Plain i128 Horner evaluation.
pub fn eval_i128(coeffs: &[i64], y: i128) -> i128 {
    coeffs.iter().rev().fold(0i128, |acc, &c| acc * y + c as i128)
}

pub fn is_square_i128(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r * r == n
}

/// `(y0, x0)` pairs from a double loop over `|y| <= bound`, with `x` ranging
/// over `|x| <= x_box(p0, q0)`.
pub fn brute_force(p: &[i64], q: &[i64], bound: i64, x_box: impl Fn(i128, i128) -> i128) -> BTreeSet<(i128, i128)> {
    let mut out = BTreeSet::new();
    for y in -bound as i128..=bound as i128 {
        let p0 = eval_i128(p, y);
        let q0 = eval_i128(q, y);
        let xb = x_box(p0, q0);
        for x in -xb..=xb {
            if x * x * x + p0 * x + q0 == 0 {
                out.insert((y, x));
            }
        }
    }
    out
}

/// Cauchy bound `1 + max(|p0|, |q0|)`.
pub fn cauchy_box(p0: i128, q0: i128) -> i128 {
    1 + p0.abs().max(q0.abs())
}

/// For an integer root with `|x| >= 1`, `|x|^3 <= |p0||x| + |q0|` gives
/// `x^2 <= |p0| + |q0|`.
pub fn tight_box(p0: i128, q0: i128) -> i128 {
    let s = p0.abs() + q0.abs();
    let mut r = (s as f64).sqrt() as i128 + 1;
    while r * r > s {
        r -= 1;
    }
    r.max(1)
}

/// `-3 D(y0)` is a perfect square.
pub fn passes_square_filter(p: &[i64], q: &[i64], y: i128) -> bool {
    let p0 = eval_i128(p, y);
    let q0 = eval_i128(q, y);
    is_square_i128(-3 * (-4 * p0 * p0 * p0 - 27 * q0 * q0))
}

#[derive(Debug, Clone)]
pub struct RandomFamily {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl RandomFamily {
    pub fn family(&self) -> CubicFamily {
        CubicFamily::new(Poly::from_i64s(&self.p), Poly::from_i64s(&self.q))
    }
}

/// Degrees of p and q at most 3, coefficients in [-9, 9], never p = q = 0.
pub fn random_families(rng: &mut impl Rng, count: usize) -> Vec<RandomFamily> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut draw = || {
            let deg = rng.gen_range(0..=3);
            (0..=deg).map(|_| rng.gen_range(-9..=9)).collect::<Vec<i64>>()
        };
        let p = draw();
        let q = draw();
        if p.iter().all(|&c| c == 0) && q.iter().all(|&c| c == 0) {
            continue;
        }
        out.push(RandomFamily { p, q });
    }
    out
}

/// Complex roots of `x^3 + p x + q` by Durand-Kerner iteration.
pub fn numeric_cubic_roots(p: f64, q: f64) -> [Complex64; 3] {
    let f = |z: Complex64| z * z * z + z * p + q;
    let seed = Complex64::new(0.4, 0.9);
    let scale = 1.0 + p.abs().max(q.abs());
    let mut roots = [seed * scale, seed.powu(2) * scale, seed.powu(3) * scale];
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..3 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..3 {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = f(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * scale {
            break;
        }
    }
    roots
}

/// `prod_{i<j} (r_i - r_j)^2` from numerically computed roots.
pub fn numeric_discriminant(p: f64, q: f64) -> f64 {
    let r = numeric_cubic_roots(p, q);
    let prod = (r[0] - r[1]).powu(2) * (r[0] - r[2]).powu(2) * (r[1] - r[2]).powu(2);
    prod.re
}

/// Newton iteration on `x^3 + p x + q` started right of every real root.
pub fn newton_real_root(p: f64, q: f64) -> f64 {
    let mut x = 1.0 + p.abs().max(q.abs());
    for _ in 0..500 {
        let step = (x * x * x + p * x + q) / (3.0 * x * x + p);
        x -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    x
}
