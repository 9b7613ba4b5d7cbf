use std::fmt::Write;

use num_traits::{One, Signed};

use crate::polyring::Poly;

/// Descending-degree rendering that [`super::parse_poly`] reads back exactly,
/// e.g. `-y^2 + 2*y - 1`.
pub fn render_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.sign() == num_bigint::Sign::NoSign {
            continue;
        }
        let mag = c.abs();
        match (out.is_empty(), c.is_negative()) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let unit = mag.is_one() && k > 0;
        if !unit {
            write!(out, "{mag}").unwrap();
            if k > 0 {
                out.push('*');
            }
        }
        match k {
            0 => {}
            1 => out.push('y'),
            _ => write!(out, "y^{k}").unwrap(),
        }
    }
    out
}
