use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::intpoly::IntPoly;
use super::upoly::UPoly;
use super::Rational;
use crate::degree::Degree;
use crate::error::{Error, Result};

/// Element of `Q(z)`, stored as a coprime pair with monic denominator.
///
/// All `Q` content lives in the numerator, so two equal rational functions
/// always have identical representations and `==` is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: UPoly,
    den: UPoly,
}

impl RatFun {
    /// Builds the canonical representative of `num / den`.
    pub fn new(num: UPoly, den: UPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: UPoly, den: UPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFun::zero();
        }
        if let Some(c) = den.as_constant() {
            return RatFun {
                num: num.scale(&c.recip()),
                den: UPoly::one(),
            };
        }
        let (cn, pn) = num.to_primitive();
        let (cd, pd) = den.to_primitive();
        let g = pn.gcd(&pd);
        let (pn, pd) = if g.is_one() {
            (pn, pd)
        } else {
            (
                pn.exact_div(&g).expect("gcd divides numerator"),
                pd.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        // pd is primitive with positive lc; make it monic
        let lc = Rational::from_integer(pd.lc().unwrap().clone());
        let scale = cn / (cd * &lc);
        RatFun {
            num: UPoly::from_int(&pn).scale(&scale),
            den: UPoly::from_int(&pd).scale(&lc.recip()),
        }
    }

    pub fn zero() -> Self {
        RatFun {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun::constant(Rational::one())
    }

    pub fn z() -> Self {
        RatFun::from_poly(UPoly::z())
    }

    pub fn constant(c: Rational) -> Self {
        RatFun::from_poly(UPoly::constant(c))
    }

    pub fn from_i64(c: i64) -> Self {
        RatFun::constant(Rational::from_integer(c.into()))
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFun {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Returns the value as a rational constant, if it is one.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Size degree `max(deg num, deg den)`; `-∞` for zero.
    pub fn deg_z(&self) -> Degree {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Degree::NegInfinity,
            (Some(n), Some(d)) => Degree::Finite(n.max(d) as i64),
            (Some(n), None) => Degree::Finite(n as i64),
        }
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFun::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Numerator and denominator over `Z[z]` with `self = num / den`,
    /// `den` having positive leading coefficient.
    pub fn to_int_pair(&self) -> (IntPoly, IntPoly) {
        let (cn, pn) = self.num.to_primitive();
        let (cd, pd) = self.den.to_primitive();
        let q = cn / cd;
        (pn.scale(q.numer()), pd.scale(q.denom()))
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl Default for RatFun {
    fn default() -> Self {
        RatFun::zero()
    }
}

impl From<UPoly> for RatFun {
    fn from(p: UPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFun::from_poly(&self.num + &rhs.num);
            }
            return RatFun::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        RatFun::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { (&self).$m(&rhs) }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

/// `P` when the denominator is one, otherwise `(P)/(Q)`.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
