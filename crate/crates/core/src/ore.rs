//! The Ore polynomial ring `Q(z)[D; sigma, delta]`.
//!
//! Elements are dense coefficient vectors in ascending powers of `D`. Products
//! follow the commutation rule `D a = sigma(a) D + delta(a)`, so `D^k g` is
//! built one commutation step at a time from `D^{k-1} g`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::degree::Degree;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{primitive_row, RatFun, Rational, RingSpec, UPoly};

#[derive(Debug, Clone)]
pub struct OrePoly {
    coeffs: Vec<RatFun>,
    ring: Arc<RingSpec>,
}

impl PartialEq for OrePoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_ring(&self.ring, &other.ring)
    }
}

impl Eq for OrePoly {}

pub(crate) fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn ring_mismatch(a: &RingSpec, b: &RingSpec) -> Error {
    Error::RingMismatch(a.to_string(), b.to_string())
}

impl OrePoly {
    pub fn new(mut coeffs: Vec<RatFun>, ring: Arc<RingSpec>) -> Self {
        while coeffs.last().is_some_and(RatFun::is_zero) {
            coeffs.pop();
        }
        OrePoly { coeffs, ring }
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        OrePoly {
            coeffs: Vec::new(),
            ring: ring.clone(),
        }
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        OrePoly::constant(RatFun::one(), ring)
    }

    /// The generator `D`.
    pub fn d(ring: &Arc<RingSpec>) -> Self {
        OrePoly::monomial(RatFun::one(), 1, ring)
    }

    pub fn constant(c: RatFun, ring: &Arc<RingSpec>) -> Self {
        OrePoly::new(vec![c], ring.clone())
    }

    /// `c D^k`.
    pub fn monomial(c: RatFun, k: usize, ring: &Arc<RingSpec>) -> Self {
        if c.is_zero() {
            return OrePoly::zero(ring);
        }
        let mut coeffs = vec![RatFun::zero(); k + 1];
        coeffs[k] = c;
        OrePoly {
            coeffs,
            ring: ring.clone(),
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    /// Coefficient of `D^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> RatFun {
        self.coeffs.get(k).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn degree(&self) -> Degree {
        Degree::of_len(self.coeffs.len())
    }

    /// Degree in `D` as an index; `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&RatFun> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(RatFun::is_one)
    }

    /// Largest `deg_z` over the coefficients.
    pub fn deg_z(&self) -> Degree {
        self.coeffs
            .iter()
            .map(RatFun::deg_z)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn check_ring(&self, other: &OrePoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(ring_mismatch(&self.ring, &other.ring))
        }
    }

    /// `c * self` for a scalar on the left.
    pub fn left_scale(&self, c: &RatFun) -> OrePoly {
        if c.is_zero() {
            return OrePoly::zero(&self.ring);
        }
        if c.is_one() {
            return self.clone();
        }
        OrePoly {
            coeffs: self.coeffs.iter().map(|a| c * a).collect(),
            ring: self.ring.clone(),
        }
    }

    /// `self * c` for a scalar on the right.
    pub fn right_scale(&self, c: &RatFun) -> OrePoly {
        if c.is_zero() {
            return OrePoly::zero(&self.ring);
        }
        if c.is_one() {
            return self.clone();
        }
        if !self.ring.is_commutative_sigma() {
            return self * &OrePoly::constant(c.clone(), &self.ring);
        }
        // Leibniz: D^k c = sum_j binom(k, j) delta^j(c) D^{k-j}
        let n = self.coeffs.len();
        let mut derivs = vec![c.clone()];
        for _ in 1..n {
            let next = self.ring.apply_delta(derivs.last().expect("nonempty"));
            if next.is_zero() {
                break;
            }
            derivs.push(next);
        }
        let mut out = vec![RatFun::zero(); n];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut binom = BigInt::one();
            for (j, d) in derivs.iter().enumerate().take(k + 1) {
                let term = (a * d).scale(&Rational::from_integer(binom.clone()));
                out[k - j] = &out[k - j] + &term;
                binom = binom * (k - j) / (j + 1);
            }
        }
        OrePoly::new(out, self.ring.clone())
    }

    /// One commutation step: `D * self`.
    pub fn d_times(&self) -> OrePoly {
        if self.is_zero() {
            return self.clone();
        }
        let ring = &self.ring;
        let mut out = vec![RatFun::zero(); self.coeffs.len() + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out[k + 1] = &out[k + 1] + &ring.apply_sigma(a);
            let da = ring.apply_delta(a);
            if !da.is_zero() {
                out[k] = &out[k] + &da;
            }
        }
        OrePoly::new(out, ring.clone())
    }

    /// `[self, D self, ..., D^m self]`, the rows of the multiplication matrix.
    pub fn d_powers_times(&self, m: usize) -> Vec<OrePoly> {
        let mut rows = Vec::with_capacity(m + 1);
        rows.push(self.clone());
        for k in 1..=m {
            let next = rows[k - 1].d_times();
            rows.push(next);
        }
        rows
    }

    pub fn try_add(&self, rhs: &OrePoly) -> Result<OrePoly> {
        self.check_ring(rhs)?;
        Ok(self + rhs)
    }

    pub fn try_mul(&self, rhs: &OrePoly) -> Result<OrePoly> {
        self.check_ring(rhs)?;
        Ok(self * rhs)
    }

    /// Right division with remainder: `self = q * g + r`, `deg r < deg g`.
    pub fn right_divmod(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check_ring(g)?;
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        let ring = &self.ring;
        let mut r = self.clone();
        let Some(df) = r.deg().filter(|&df| df >= dg) else {
            return Ok((OrePoly::zero(ring), r));
        };
        let shifted = g.d_powers_times(df - dg);
        let mut q = vec![RatFun::zero(); df - dg + 1];
        while let Some(dr) = r.deg().filter(|&dr| dr >= dg) {
            let k = dr - dg;
            let lead = shifted[k].lc().expect("nonzero");
            let c = r.lc().unwrap().checked_div(lead)?;
            r = &r - &shifted[k].left_scale(&c);
            debug_assert!(r.deg().map_or(true, |d| d < dr));
            q[k] = c;
        }
        Ok((OrePoly::new(q, ring.clone()), r))
    }

    /// Left division with remainder: `self = g * q + r`, `deg r < deg g`.
    ///
    /// The quotient coefficients are recovered with `sigma^{-1}`.
    pub fn left_divmod(&self, g: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.check_ring(g)?;
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        let ring = &self.ring;
        let lg_inv = g.lc().unwrap().inv()?;
        let mut r = self.clone();
        let mut q = vec![RatFun::zero(); r.deg().map_or(0, |d| d.saturating_sub(dg) + 1)];
        while let Some(dr) = r.deg().filter(|&dr| dr >= dg) {
            let k = dr - dg;
            // g * (c D^k) has leading coefficient lc(g) sigma^{dg}(c)
            let target = &lg_inv * r.lc().unwrap();
            let c = ring.apply_sigma_inv_pow(&target, dg);
            let term = &g.right_scale(&c) * &OrePoly::monomial(RatFun::one(), k, ring);
            r = &r - &term;
            debug_assert!(r.deg().map_or(true, |d| d < dr));
            q[k] = c;
        }
        Ok((OrePoly::new(q, ring.clone()), r))
    }

    /// Fraction-free right division: `c * self = q * g + r` with `deg r < deg
    /// g` and `c` a product of `sigma`-twisted leading coefficients of `g`.
    /// Returns `(c, q, r)`.
    pub fn right_pseudo_divmod(&self, g: &OrePoly) -> Result<(RatFun, OrePoly, OrePoly)> {
        self.check_ring(g)?;
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        let ring = &self.ring;
        let b = g.lc().expect("nonzero");
        let mut c = RatFun::one();
        let mut q = OrePoly::zero(ring);
        let mut r = self.clone();
        while let Some(dr) = r.deg().filter(|&dr| dr >= dg) {
            let k = dr - dg;
            let s = ring.apply_sigma_pow(b, k);
            let m = OrePoly::monomial(r.lc().unwrap().clone(), k, ring);
            r = &r.left_scale(&s) - &(&m * g);
            q = &q.left_scale(&s) + &m;
            c = &s * &c;
            debug_assert!(r.deg().map_or(true, |d| d < dr));
        }
        Ok((c, q, r))
    }

    /// Fraction-free left division: `self * e = g * q + r` with `deg r < deg
    /// g` and `e` a product of `sigma`-twisted leading coefficients of `g`.
    /// Returns `(e, q, r)`.
    pub fn left_pseudo_divmod(&self, g: &OrePoly) -> Result<(RatFun, OrePoly, OrePoly)> {
        self.check_ring(g)?;
        let dg = g.deg().ok_or(Error::DivisionByZero)?;
        let ring = &self.ring;
        let b = g.lc().expect("nonzero");
        let mut e = RatFun::one();
        let mut q = OrePoly::zero(ring);
        let mut r = self.clone();
        while let Some(dr) = r.deg().filter(|&dr| dr >= dg) {
            // r f and g D^k h both lead with lc(r) lc(g)
            let f = ring.apply_sigma_inv_pow(b, dr);
            let h = ring.apply_sigma_inv_pow(r.lc().unwrap(), dr);
            let m = &OrePoly::monomial(RatFun::one(), dr - dg, ring) * &OrePoly::constant(h, ring);
            r = &r.right_scale(&f) - &(g * &m);
            q = &q.right_scale(&f) + &m;
            e = &e * &f;
            debug_assert!(r.deg().map_or(true, |d| d < dr));
        }
        Ok((e, q, r))
    }

    /// The same element in the ring `op`, which must be the opposite of this
    /// ring: coefficients `b_k` with `self = sum D^k b_k`. Applying this with
    /// the original ring as `op` converts back.
    ///
    /// Horner's scheme on `(..(a_n D + a_{n-1}) D + ..) + a_0`, moving each
    /// coefficient across `D` by `c D = D sigma^{-1}(c) - delta(sigma^{-1}(c))`.
    pub fn to_opposite(&self, op: &Arc<RingSpec>) -> OrePoly {
        let ring = &self.ring;
        let mut acc: Vec<RatFun> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            let mut next = vec![RatFun::zero(); acc.len() + 1];
            for (j, c) in acc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let s = ring.apply_sigma_inv(c);
                let d = ring.apply_delta(&s);
                next[j + 1] = &next[j + 1] + &s;
                if !d.is_zero() {
                    next[j] = &next[j] - &d;
                }
            }
            next[0] = &next[0] + a;
            acc = next;
        }
        OrePoly::new(acc, op.clone())
    }

    /// `lc^{-1} * self`, the left-monic associate.
    pub fn monic_left(&self) -> OrePoly {
        match self.lc() {
            None => self.clone(),
            Some(lc) => self.left_scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// `self * c` with `c` chosen so the result is monic.
    pub fn monic_right(&self) -> OrePoly {
        match self.right_monic_factor() {
            None => self.clone(),
            Some(c) => self.right_scale(&c),
        }
    }

    /// The scalar `c` with `self * c` monic: `sigma^{-deg}(lc^{-1})`.
    pub fn right_monic_factor(&self) -> Option<RatFun> {
        let k = self.deg()?;
        let inv = self.lc()?.inv().ok()?;
        Some(self.ring.apply_sigma_inv_pow(&inv, k))
    }
}

/// Left-multiplies all of `polys` by the one element of `Q(z)` that makes
/// their coefficients, taken together, a primitive row over `Z[z]`.
pub fn primitive_together(polys: &[OrePoly]) -> Vec<OrePoly> {
    let flat: Vec<RatFun> = polys.iter().flat_map(|p| p.coeffs.iter().cloned()).collect();
    let mut it = primitive_row(&flat)
        .into_iter()
        .map(|c| RatFun::from_poly(UPoly::from_int(&c)));
    polys
        .iter()
        .map(|p| OrePoly::new(it.by_ref().take(p.coeffs.len()).collect(), p.ring.clone()))
        .collect()
}

/// Divides all of `polys` by the gcd of the rational contents of their
/// coefficients. Rational constants are central, so this is a scaling on
/// either side.
pub fn constant_content_free(polys: &[OrePoly]) -> Vec<OrePoly> {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for c in polys.iter().flat_map(|p| p.coeffs.iter()) {
        let (cn, _) = c.num().to_primitive();
        let (cd, _) = c.den().to_primitive();
        let q = cn / cd;
        num = num.gcd(q.numer());
        den = den.lcm(q.denom());
    }
    if num.is_zero() || (num.is_one() && den.is_one()) {
        return polys.to_vec();
    }
    let c = RatFun::constant(Rational::new(den, num));
    polys.iter().map(|p| p.left_scale(&c)).collect()
}

impl Add for &OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        debug_assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
        OrePoly::new(c, self.ring.clone())
    }
}

impl Sub for &OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self + &(-rhs)
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        OrePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ring: self.ring.clone(),
        }
    }
}

impl Mul for &OrePoly {
    type Output = OrePoly;
    fn mul(self, rhs: &OrePoly) -> OrePoly {
        assert!(same_ring(&self.ring, &rhs.ring), "ring mismatch");
        if self.is_zero() || rhs.is_zero() {
            return OrePoly::zero(&self.ring);
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![RatFun::zero(); n];
        let mut shifted = rhs.clone();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                shifted = shifted.d_times();
            }
            if a.is_zero() {
                continue;
            }
            for (k, b) in shifted.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[k] = &out[k] + &(a * b);
                }
            }
        }
        OrePoly::new(out, self.ring.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for OrePoly {
            type Output = OrePoly;
            fn $m(self, rhs: OrePoly) -> OrePoly { (&self).$m(&rhs) }
        }
        impl $tr<&OrePoly> for OrePoly {
            type Output = OrePoly;
            fn $m(self, rhs: &OrePoly) -> OrePoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        -&self
    }
}

/// Canonical form: ascending powers of `D`, parenthesized coefficients,
/// unit coefficients elided on `D^k` for `k >= 1`, e.g. `(z+2) + D^2`.
impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "({c})")?,
                (1, true) => write!(f, "D")?,
                (1, false) => write!(f, "({c})*D")?,
                (_, true) => write!(f, "D^{k}")?,
                (_, false) => write!(f, "({c})*D^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::UPoly;

    fn diff() -> Arc<RingSpec> {
        Arc::new(RingSpec::differential())
    }

    fn shift() -> Arc<RingSpec> {
        Arc::new(RingSpec::shift())
    }

    fn zp(c: &[i64]) -> RatFun {
        RatFun::from_poly(UPoly::from_i64(c))
    }

    fn ore(ring: &Arc<RingSpec>, cs: &[&[i64]]) -> OrePoly {
        OrePoly::new(cs.iter().map(|c| zp(c)).collect(), ring.clone())
    }

    #[test]
    fn d_times_z() {
        let r = diff();
        let z = OrePoly::constant(RatFun::z(), &r);
        assert_eq!(&OrePoly::d(&r) * &z, ore(&r, &[&[1], &[0, 1]]));
        let s = shift();
        let z = OrePoly::constant(RatFun::z(), &s);
        assert_eq!(&OrePoly::d(&s) * &z, ore(&s, &[&[], &[1, 1]]));
    }

    #[test]
    fn right_and_left_division_examples() {
        let r = diff();
        let d2 = ore(&r, &[&[], &[], &[1]]);
        let d = OrePoly::d(&r);
        let (q, rem) = d2.right_divmod(&d).unwrap();
        assert_eq!((q, rem.is_zero()), (d.clone(), true));
        let g = ore(&r, &[&[1, 2], &[0, 1]]);
        let (q, rem) = g.right_divmod(&g).unwrap();
        assert!(q.is_one() && rem.is_zero());
        assert_eq!(g.right_divmod(&OrePoly::zero(&r)), Err(Error::DivisionByZero));

        let s = shift();
        let d2 = ore(&s, &[&[], &[], &[1]]);
        let (q, rem) = d2.left_divmod(&OrePoly::d(&s)).unwrap();
        assert_eq!(q, OrePoly::d(&s));
        assert!(rem.is_zero());
        let small = ore(&s, &[&[1, 1]]);
        let (q, rem) = small.left_divmod(&d2).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, small);
    }

    #[test]
    fn mismatched_rings_error() {
        let a = OrePoly::d(&diff());
        let b = OrePoly::d(&shift());
        assert!(matches!(a.try_mul(&b), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn display_is_canonical() {
        let r = diff();
        let p = ore(&r, &[&[2, 1], &[], &[1]]);
        assert_eq!(p.to_string(), "(z+2) + D^2");
        let q = OrePoly::new(vec![RatFun::zero(), zp(&[-1])], r.clone());
        assert_eq!(q.to_string(), "(-1)*D");
        assert_eq!(OrePoly::zero(&r).to_string(), "0");
    }

    #[test]
    fn monic_right_is_monic() {
        let s = shift();
        let p = ore(&s, &[&[1], &[0, 3]]);
        let m = p.monic_right();
        assert!(m.is_monic());
        assert_eq!(m.deg(), Some(1));
    }
}
