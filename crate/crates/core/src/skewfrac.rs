//! The skew field of fractions of the Ore ring, as right fractions
//! `f g^{-1}`.
//!
//! A fraction is stored through its right coefficients: `f = sum D^k f_k`,
//! which is `f` read in the opposite ring. There `f g^{-1}` is the left
//! fraction `g^{-1} f`, the right unit factor `(f c)(g c)^{-1}` scales
//! coefficients, and both parts are kept jointly primitive over `Z[z]`, so
//! arithmetic runs without denominators. The GCRD of `f` and `g` is divided
//! out, the leading integer coefficient of the denominator is positive, and
//! `==` is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Signed;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::euclid::{gcrd, lclm_cofactors};
use crate::field::{RatFun, RingSpec};
use crate::ore::{primitive_together, OrePoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewFraction {
    /// Numerator and denominator in the opposite ring.
    num: OrePoly,
    den: OrePoly,
    ring: Arc<RingSpec>,
}

impl SkewFraction {
    /// `num * den^{-1}` in reduced form.
    pub fn new(num: OrePoly, den: OrePoly) -> Result<Self> {
        num.check_ring(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = num.ring().clone();
        let op = Arc::new(ring.opposite());
        Ok(Self::reduce(num.to_opposite(&op), den.to_opposite(&op), ring))
    }

    /// Divides out the greatest common left divisor in the opposite ring,
    /// which is the GCRD in this one.
    fn reduce(num: OrePoly, den: OrePoly, ring: Arc<RingSpec>) -> Self {
        if num.is_zero() {
            return SkewFraction::zero(&ring);
        }
        if den.deg() == Some(0) || num.deg() == Some(0) {
            return Self::normalize(num, den, ring);
        }
        let (f, g) = (num.to_opposite(&ring), den.to_opposite(&ring));
        let h = gcrd(&f, &g).expect("denominator is nonzero");
        if h.is_one() {
            return Self::normalize(num, den, ring);
        }
        let op = num.ring().clone();
        let (qf, rf) = f.right_divmod(&h).expect("gcrd is nonzero");
        let (qg, rg) = g.right_divmod(&h).expect("gcrd is nonzero");
        debug_assert!(rf.is_zero() && rg.is_zero());
        Self::normalize(qf.to_opposite(&op), qg.to_opposite(&op), ring)
    }

    /// Fixes the right unit factor.
    fn normalize(num: OrePoly, den: OrePoly, ring: Arc<RingSpec>) -> Self {
        let [mut num, mut den]: [OrePoly; 2] = primitive_together(&[num, den])
            .try_into()
            .expect("two");
        let lc = den.lc().expect("nonzero denominator");
        if lc.num().lc().is_some_and(|c| c.is_negative()) {
            num = -&num;
            den = -&den;
        }
        SkewFraction { num, den, ring }
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        let op = Arc::new(ring.opposite());
        SkewFraction {
            num: OrePoly::zero(&op),
            den: OrePoly::one(&op),
            ring: ring.clone(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        SkewFraction::from_poly(OrePoly::one(ring))
    }

    /// Embeds `f` as `f * 1^{-1}`.
    pub fn from_poly(f: OrePoly) -> Self {
        let ring = f.ring().clone();
        let op = Arc::new(ring.opposite());
        Self::normalize(f.to_opposite(&op), OrePoly::one(&op), ring)
    }

    pub fn from_scalar(c: RatFun, ring: &Arc<RingSpec>) -> Self {
        SkewFraction::from_poly(OrePoly::constant(c, ring))
    }

    /// The numerator `f` of `f g^{-1}`.
    pub fn num(&self) -> OrePoly {
        self.num.to_opposite(&self.ring)
    }

    /// The denominator `g` of `f g^{-1}`.
    pub fn den(&self) -> OrePoly {
        self.den.to_opposite(&self.ring)
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den && self.den.deg() == Some(0)
    }

    /// The polynomial this fraction equals, if there is one.
    pub fn as_poly(&self) -> Option<OrePoly> {
        if self.den.deg() != Some(0) {
            return None;
        }
        let c = self.den.coeffs()[0].inv().expect("nonzero denominator");
        Some(self.num.left_scale(&c).to_opposite(&self.ring))
    }

    /// `deg num - deg den`, or `-∞` for zero.
    pub fn deg(&self) -> Degree {
        self.num.degree() - self.den.degree()
    }

    pub fn check_ring(&self, other: &SkewFraction) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            OrePoly::one(&self.ring).check_ring(&OrePoly::one(&other.ring))
        }
    }

    pub fn inv(&self) -> Result<SkewFraction> {
        if self.is_zero() {
            return Err(Error::ZeroOperand);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone(), self.ring.clone()))
    }

    pub fn try_add(&self, rhs: &SkewFraction) -> Result<SkewFraction> {
        self.check_ring(rhs)?;
        Ok(self + rhs)
    }

    pub fn try_mul(&self, rhs: &SkewFraction) -> Result<SkewFraction> {
        self.check_ring(rhs)?;
        Ok(self * rhs)
    }
}

/// Writes nonzero-denominator fractions over one right denominator:
/// returns `(f, l)` with `xs[k] = f[k] l^{-1}`.
pub fn common_denominator(xs: &[SkewFraction], ring: &Arc<RingSpec>) -> (Vec<OrePoly>, OrePoly) {
    let op = Arc::new(ring.opposite());
    let mut den = OrePoly::one(&op);
    let mut nums: Vec<OrePoly> = Vec::with_capacity(xs.len());
    for x in xs {
        if x.is_zero() {
            nums.push(OrePoly::zero(&op));
            continue;
        }
        if x.den == den {
            nums.push(x.num.clone());
            continue;
        }
        // s den = -t x.den in the opposite ring
        let (s, t) = lclm_cofactors(&den, &x.den).expect("nonzero denominators");
        for f in nums.iter_mut() {
            *f = &s * f;
        }
        nums.push(&(-&t) * &x.num);
        den = &s * &den;
    }
    (nums.iter().map(|f| f.to_opposite(ring)).collect(), den.to_opposite(ring))
}

// In the opposite ring a fraction reads `den^{-1} num`, and a common left
// multiple there is a common right multiple here.

impl Add for &SkewFraction {
    type Output = SkewFraction;
    fn add(self, rhs: &SkewFraction) -> SkewFraction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let ring = self.ring.clone();
        if self.den == rhs.den {
            return SkewFraction::reduce(&self.num + &rhs.num, self.den.clone(), ring);
        }
        // s g_x = -t g_y is the lcrm of the denominators
        let (s, t) = lclm_cofactors(&self.den, &rhs.den).expect("nonzero denominators");
        let num = &(&s * &self.num) - &(&t * &rhs.num);
        SkewFraction::reduce(num, &s * &self.den, ring)
    }
}

impl Neg for &SkewFraction {
    type Output = SkewFraction;
    fn neg(self) -> SkewFraction {
        SkewFraction {
            num: -&self.num,
            den: self.den.clone(),
            ring: self.ring.clone(),
        }
    }
}

impl Sub for &SkewFraction {
    type Output = SkewFraction;
    fn sub(self, rhs: &SkewFraction) -> SkewFraction {
        self + &(-rhs)
    }
}

impl Mul for &SkewFraction {
    type Output = SkewFraction;
    /// The product `x y` is `y x` in the opposite ring, where it reads
    /// `g_y^{-1} f_y g_x^{-1} f_x`.
    fn mul(self, rhs: &SkewFraction) -> SkewFraction {
        if self.is_zero() || rhs.is_zero() {
            return SkewFraction::zero(&self.ring);
        }
        let ring = self.ring.clone();
        if self.den.deg() == Some(0) {
            let c = self.den.coeffs()[0].inv().expect("nonzero denominator");
            let num = &rhs.num.right_scale(&c) * &self.num;
            return SkewFraction::reduce(num, rhs.den.clone(), ring);
        }
        // g_x^{-1} f_y = p q^{-1} where lcrm(g_x, f_y) = g_x p = f_y q,
        // which is s f_y = -t g_x here
        let (s, t) = lclm_cofactors(&rhs.num, &self.den).expect("nonzero operands");
        SkewFraction::reduce(&(-&t) * &self.num, &s * &rhs.den, ring)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SkewFraction {
            type Output = SkewFraction;
            fn $m(self, rhs: SkewFraction) -> SkewFraction { (&self).$m(&rhs) }
        }
        impl $tr<&SkewFraction> for SkewFraction {
            type Output = SkewFraction;
            fn $m(self, rhs: &SkewFraction) -> SkewFraction { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for SkewFraction {
    type Output = SkewFraction;
    fn neg(self) -> SkewFraction {
        -&self
    }
}

/// `f` when the denominator is one, otherwise `[f] / [g]`.
impl fmt::Display for SkewFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "[{}] / [{}]", self.num(), self.den()),
        }
    }
}
