use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Polynomial in `Q[z]`; coefficient `i` multiplies `z^i`.
///
/// The leading coefficient is nonzero; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Rational>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly::constant(Rational::one())
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        UPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        UPoly::from_coeffs(vec![c])
    }

    pub fn from_i64(c: &[i64]) -> Self {
        UPoly::from_coeffs(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn monic(&self) -> UPoly {
        match self.lc() {
            None => UPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, mut e: u32) -> UPoly {
        let mut base = self.clone();
        let mut acc = UPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &UPoly) -> Result<(UPoly, UPoly)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv = b.lc().unwrap().recip();
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((UPoly::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let t = &r[k + db] * &inv;
            if t.is_zero() {
                continue;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] -= &t * bc;
            }
            q[k] = t;
        }
        r.truncate(db);
        Ok((UPoly::from_coeffs(q), UPoly::from_coeffs(r)))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `(d, n)` with `self = n / d` coefficientwise, `d` the lcm of the
    /// denominators.
    fn cleared(&self) -> (BigInt, Vec<BigInt>) {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        let nums = self
            .coeffs
            .iter()
            .map(|c| {
                if c.denom().is_one() {
                    c.numer() * &den
                } else {
                    c.numer() * (&den / c.denom())
                }
            })
            .collect();
        (den, nums)
    }

    /// Splits `self = c * p` with `p` primitive in `Z[z]` with positive
    /// leading coefficient. The zero polynomial yields `(0, 0)`.
    pub fn to_primitive(&self) -> (Rational, IntPoly) {
        if self.is_zero() {
            return (Rational::zero(), IntPoly::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let ip = IntPoly::from_coeffs(ints);
        let mut content = ip.content();
        if ip.lc().unwrap().is_negative() {
            content = -content;
        }
        let prim = ip.div_scalar(&content);
        (Rational::new(content, den), prim)
    }

    pub fn from_int(p: &IntPoly) -> UPoly {
        UPoly {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        }
    }

    /// Monic gcd over `Q[z]`, computed on primitive integer parts.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (_, a) = self.to_primitive();
        let (_, b) = other.to_primitive();
        UPoly::from_int(&a.gcd(&b)).monic()
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        UPoly::from_coeffs(c)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut c = self.coeffs.clone();
        c.resize(n, Rational::zero());
        for (a, b) in c.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        UPoly::from_coeffs(c)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    /// Multiplies the integer numerators over a common denominator, so that
    /// each output coefficient is reduced once.
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let (da, a) = self.cleared();
        let (db, b) = rhs.cleared();
        let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    c[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        UPoly::from_coeffs(
            c.into_iter()
                .map(|n| {
                    if den.is_one() {
                        Rational::from_integer(n)
                    } else {
                        Rational::new(n, den.clone())
                    }
                })
                .collect(),
        )
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

fn fmt_rational(c: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Descending powers without spaces, e.g. `z^2+2*z-1` or `7/2*z+1`.
impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if k == 0 {
                fmt_rational(&mag, f)?;
                continue;
            }
            if !mag.is_one() {
                fmt_rational(&mag, f)?;
                write!(f, "*")?;
            }
            if k == 1 {
                write!(f, "z")?;
            } else {
                write!(f, "z^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(UPoly::from_i64(&[-1, 2, 1]).to_string(), "z^2+2*z-1");
        assert_eq!(UPoly::from_i64(&[0, -1]).to_string(), "-z");
        assert_eq!(UPoly::zero().to_string(), "0");
        let half = UPoly::from_coeffs(vec![Rational::new(1.into(), 1.into()), Rational::new(7.into(), 2.into())]);
        assert_eq!(half.to_string(), "7/2*z+1");
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = UPoly::from_i64(&[3, 0, 2, 5]);
        let b = UPoly::from_i64(&[1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert_eq!(a.div_rem(&UPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_is_monic() {
        let a = UPoly::from_i64(&[-2, 0, 2]); // 2(z^2 - 1)
        let b = UPoly::from_i64(&[-3, 3]); // 3(z - 1)
        assert_eq!(a.gcd(&b), UPoly::from_i64(&[-1, 1]));
    }
}
