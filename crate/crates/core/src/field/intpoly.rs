//! Dense univariate polynomials over `Z`.
//!
//! These carry the gcd computations behind [`super::RatFun`] normalization and
//! the fraction-free elimination in the Hermite linear-system solver. Rational
//! coefficients never appear here, which keeps coefficient growth under
//! control.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Polynomial in `Z[z]`, coefficient `i` multiplies `z^i`. No trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lc().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &BigInt) -> IntPoly {
        debug_assert!(!c.is_zero());
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// Pseudo-remainder `prem(a, b)`: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo remainder by zero polynomial");
        let lb = b.lc().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let shift = dr - db;
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        IntPoly::from_coeffs(r)
    }

    /// Exact division in `Z[z]`. Returns `None` when `b` does not divide
    /// `self` exactly.
    pub fn exact_div(&self, b: &IntPoly) -> Option<IntPoly> {
        let db = b.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if db == 0 {
            let c = &b.coeffs[0];
            if self.coeffs.iter().any(|a| !(a % c).is_zero()) {
                return None;
            }
            return Some(self.div_scalar(c));
        }
        let da = self.degree()?;
        if da < db {
            return None;
        }
        let lb = b.lc().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= &qk * bc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Primitive gcd in `Z[z]` with positive leading coefficient; the gcd of
    /// zero and zero is zero.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return IntPoly::one();
        }
        if coprime_mod_p(self, other) {
            return IntPoly::one();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        if let Some(g) = gcd_heuristic(&a, &b) {
            return g;
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return IntPoly::one();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }
}

/// Heuristic gcd of primitive polynomials: the gcd of the values at a large
/// integer `xi`, read back in base `xi`, is the answer whenever it divides
/// both inputs and `xi > 2 min(|a|, |b|) + 2`.
fn gcd_heuristic(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let norm = |p: &IntPoly| p.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default();
    let mut xi = norm(a).min(norm(b)) * 2 + 29;
    for _ in 0..6 {
        let gamma = a.eval(&xi).gcd(&b.eval(&xi));
        let g = from_base(gamma, &xi).primitive_part();
        if !g.is_zero() && a.exact_div(&g).is_some() && b.exact_div(&g).is_some() {
            return Some(g);
        }
        xi = &xi * 73794 / 27011;
    }
    None
}

/// The polynomial whose value at `xi` is `v`, digits in `(-xi/2, xi/2]`.
fn from_base(mut v: BigInt, xi: &BigInt) -> IntPoly {
    let half = xi / 2;
    let mut coeffs = Vec::new();
    while !v.is_zero() {
        let mut d = v.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        v = (v - &d) / xi;
        coeffs.push(d);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Word-size primes for the modular coprimality test.
const PRIMES: [u64; 2] = [4_294_967_291, 4_294_967_279];

/// True when `a` and `b` are certainly coprime: for a prime dividing
/// neither leading coefficient, the degree of the gcd mod `p` bounds the
/// degree of the gcd over `Z`.
fn coprime_mod_p(a: &IntPoly, b: &IntPoly) -> bool {
    PRIMES.iter().any(|&p| {
        let (ra, rb) = (reduce_mod(a, p), reduce_mod(b, p));
        ra.len() == a.coeffs.len() && rb.len() == b.coeffs.len() && gcd_mod(ra, rb, p).len() == 1
    })
}

fn reduce_mod(a: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = a
        .coeffs
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn mul_mod(x: u64, y: u64, p: u64) -> u64 {
    ((x as u128 * y as u128) % p as u128) as u64
}

fn inv_mod(x: u64, p: u64) -> u64 {
    // Fermat, p prime
    let (mut base, mut e, mut acc) = (x, p - 2, 1);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Euclid over `Z/p`; a nonzero constant result has length one.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = inv_mod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().unwrap(), inv, p);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = (a[i + shift] + p - mul_mod(f, bc, p)) % p;
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(c)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut c = self.coeffs.clone();
        c.resize(n, BigInt::zero());
        for (a, b) in c.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        IntPoly::from_coeffs(c)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(c)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (z-1)(z+2) and (z-1)(3z+5)
        let a = p(&[-2, 1, 1]);
        let b = p(&[-5, 2, 3]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[3, 6])), p(&[1, 2]));
        assert_eq!(p(&[1, 1]).gcd(&p(&[1, 0, 1])), IntPoly::one());
    }

    #[test]
    fn modular_coprimality() {
        // z^2 - 1 and z + 2 are coprime, z^2 - 1 and z - 1 are not
        assert!(coprime_mod_p(&p(&[-1, 0, 1]), &p(&[2, 1])));
        assert!(!coprime_mod_p(&p(&[-1, 0, 1]), &p(&[-1, 1])));
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[2, 1])), IntPoly::one());
    }

    #[test]
    fn heuristic_gcd_finds_shared_factor() {
        // (z^2 + 3)(2z - 5) and (z^2 + 3)(z + 7)^2
        let f = p(&[3, 0, 1]);
        let a = &f * &p(&[-5, 2]);
        let b = &f * &(&p(&[7, 1]) * &p(&[7, 1]));
        assert_eq!(gcd_heuristic(&a, &b), Some(f.clone()));
        assert_eq!(a.gcd(&b), f);
    }

    #[test]
    fn exact_division() {
        let a = p(&[-2, 1, 1]);
        assert_eq!(a.exact_div(&p(&[-1, 1])), Some(p(&[2, 1])));
        assert_eq!(a.exact_div(&p(&[1, 1])), None);
        assert_eq!(p(&[4, 6]).exact_div(&p(&[2])), Some(p(&[2, 3])));
        assert_eq!(p(&[4, 5]).exact_div(&p(&[2])), None);
    }

    #[test]
    fn pseudo_remainder_identity() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[5, 0, 2]);
        let r = a.pseudo_rem(&b);
        assert!(r.degree() < b.degree());
        // lc(b)^2 * a - r is divisible by b
        let lhs = &a.scale(&BigInt::from(4)) - &r;
        assert!(lhs.exact_div(&b).is_some());
    }
}
