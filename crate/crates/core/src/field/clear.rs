//! Clearing denominators of rows of rational functions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{IntPoly, RatFun};

/// Scales a row of rational functions to a primitive row over `Z[z]`.
pub fn clear_row(row: &[RatFun]) -> Vec<IntPoly> {
    clear_row_with_lcm(row).0
}

/// Like [`clear_row`], also returning the denominator lcm that was
/// multiplied in (before the content was divided out).
pub fn clear_row_with_lcm(row: &[RatFun]) -> (Vec<IntPoly>, IntPoly) {
    let pairs: Vec<(IntPoly, IntPoly)> = row.iter().map(RatFun::to_int_pair).collect();
    let mut l = IntPoly::one();
    for (num, den) in &pairs {
        if num.is_zero() || den.is_one() {
            continue;
        }
        let g = l.gcd(den);
        l = &l * &den.exact_div(&g).expect("primitive gcd divides");
    }
    let mut out: Vec<IntPoly> = pairs
        .iter()
        .map(|(num, den)| {
            if num.is_zero() {
                IntPoly::zero()
            } else {
                (num * &l).exact_div(den).expect("lcm is a multiple")
            }
        })
        .collect();
    let content = out
        .iter()
        .fold(BigInt::from(0), |acc, p| acc.gcd(&p.content()));
    if content > BigInt::one() {
        for p in &mut out {
            if !p.is_zero() {
                *p = p.div_scalar(&content);
            }
        }
    }
    (out, l)
}

/// Like [`clear_row`], also dividing out the gcd of the entries in `Z[z]`,
/// so the row is determined by `row` up to a factor in `Q(z)`.
pub fn primitive_row(row: &[RatFun]) -> Vec<IntPoly> {
    let mut out = clear_row(row);
    let mut g = IntPoly::zero();
    for c in out.iter().filter(|c| !c.is_zero()) {
        g = g.gcd(c);
        if g.is_one() {
            return out;
        }
    }
    if !g.is_zero() {
        for c in out.iter_mut().filter(|c| !c.is_zero()) {
            *c = c.exact_div(&g).expect("gcd divides");
        }
    }
    out
}
