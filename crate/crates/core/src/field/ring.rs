use std::fmt;

use num_traits::{One, Zero};

use super::{RatFun, Rational, UPoly};
use crate::error::{Error, Result};

/// The substitution `z -> (a z + b) / (c z + d)` with `ad - bc != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mobius {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Mobius {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return Err(Error::InvalidRing(
                "sigma must be an invertible Mobius map (ad - bc = 0)".into(),
            ));
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Mobius {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Mobius::identity()
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    /// Image of `z` as a rational function.
    pub fn image_of_z(&self) -> RatFun {
        RatFun::new(self.numerator(), self.denominator()).expect("Mobius denominator is nonzero")
    }

    fn numerator(&self) -> UPoly {
        UPoly::from_coeffs(vec![self.b.clone(), self.a.clone()])
    }

    fn denominator(&self) -> UPoly {
        UPoly::from_coeffs(vec![self.d.clone(), self.c.clone()])
    }

    /// Reads a Mobius map back from its image of `z`.
    pub fn from_image(img: &RatFun) -> Result<Mobius> {
        let (n, d) = (img.num(), img.den());
        if n.degree().unwrap_or(0) > 1 || d.degree().unwrap_or(0) > 1 {
            return Err(Error::InvalidRing(format!(
                "sigma(z) = {img} is not a Mobius map (az+b)/(cz+d)"
            )));
        }
        let at = |p: &UPoly, i: usize| p.coeffs().get(i).cloned().unwrap_or_else(Rational::zero);
        Mobius::new(at(n, 1), at(n, 0), at(d, 1), at(d, 0))
    }

    /// Substitutes `z -> sigma(z)` into a polynomial. Returns the numerator
    /// `P` of `p(sigma(z)) = P / (cz+d)^deg p`.
    fn substitute_poly(&self, p: &UPoly) -> UPoly {
        let Some(n) = p.degree() else {
            return UPoly::zero();
        };
        let num = self.numerator();
        let den = self.denominator();
        if self.c.is_zero() {
            // p((az+b)/d) by Horner
            let lin = num.scale(&self.d.recip());
            let mut acc = UPoly::zero();
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * &lin) + &UPoly::constant(c.clone());
            }
            return acc;
        }
        let mut num_pows = vec![UPoly::one()];
        let mut den_pows = vec![UPoly::one()];
        for k in 1..=n {
            num_pows.push(&num_pows[k - 1] * &num);
            den_pows.push(&den_pows[k - 1] * &den);
        }
        let mut acc = UPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&num_pows[k] * &den_pows[n - k]).scale(c);
        }
        acc
    }

    pub fn apply(&self, x: &RatFun) -> RatFun {
        if x.is_zero() || self.is_identity() {
            return x.clone();
        }
        if x.as_constant().is_some() {
            return x.clone();
        }
        let pn = self.substitute_poly(x.num());
        let pd = self.substitute_poly(x.den());
        if self.c.is_zero() {
            return RatFun::new(pn, pd).expect("automorphism keeps denominators nonzero");
        }
        let dn = x.num().degree().unwrap_or(0);
        let dd = x.den().degree().unwrap_or(0);
        let lin = self.denominator();
        let (pn, pd) = if dd >= dn {
            (&pn * &lin.pow((dd - dn) as u32), pd)
        } else {
            (pn, &pd * &lin.pow((dn - dd) as u32))
        };
        RatFun::new(pn, pd).expect("automorphism keeps denominators nonzero")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `sigma = id`, `delta = d/dz`.
    Differential,
    /// `sigma(z) = z + 1`, `delta = 0`.
    Shift,
    /// `sigma(z) = q z`, `delta = 0`.
    QShift(Rational),
    Custom,
}

/// Fixes the automorphism `sigma` and the `sigma`-derivation `delta` of
/// `Q(z)` that define the commutation rule `D a = sigma(a) D + delta(a)`.
///
/// `sigma` is a Mobius substitution, and `delta` is the unique
/// `sigma`-derivation vanishing on `Q` with the given value at `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    kind: RingKind,
    sigma: Mobius,
    sigma_inv: Mobius,
    delta_of_z: RatFun,
}

impl RingSpec {
    pub fn differential() -> Self {
        RingSpec {
            kind: RingKind::Differential,
            sigma: Mobius::identity(),
            sigma_inv: Mobius::identity(),
            delta_of_z: RatFun::one(),
        }
    }

    pub fn shift() -> Self {
        let sigma = Mobius {
            a: Rational::one(),
            b: Rational::one(),
            c: Rational::zero(),
            d: Rational::one(),
        };
        RingSpec {
            kind: RingKind::Shift,
            sigma_inv: sigma.inverse(),
            sigma,
            delta_of_z: RatFun::zero(),
        }
    }

    pub fn q_shift(q: Rational) -> Result<Self> {
        let sigma = Mobius::new(q.clone(), Rational::zero(), Rational::zero(), Rational::one())?;
        Ok(RingSpec {
            kind: RingKind::QShift(q),
            sigma_inv: sigma.inverse(),
            sigma,
            delta_of_z: RatFun::zero(),
        })
    }

    /// A ring given by `sigma(z)` (which must be Mobius) and `delta(z)`.
    pub fn custom(sigma_of_z: &RatFun, delta_of_z: RatFun) -> Result<Self> {
        let sigma = Mobius::from_image(sigma_of_z)?;
        Ok(RingSpec {
            kind: RingKind::Custom,
            sigma_inv: sigma.inverse(),
            sigma,
            delta_of_z,
        })
    }

    /// The ring `Q(z)[D; sigma^{-1}, -delta sigma^{-1}]`, isomorphic to the
    /// opposite ring: the element `sum a_k D^k` of one is `sum D^k a_k` of
    /// the other. Right ideals of one are left ideals of the other.
    pub fn opposite(&self) -> RingSpec {
        let delta_of_z = -&self.apply_delta(&self.sigma_inv.image_of_z());
        RingSpec {
            kind: RingKind::Custom,
            sigma: self.sigma_inv.clone(),
            sigma_inv: self.sigma.clone(),
            delta_of_z,
        }
    }

    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn sigma(&self) -> &Mobius {
        &self.sigma
    }

    pub fn sigma_of_z(&self) -> RatFun {
        self.sigma.image_of_z()
    }

    pub fn delta_of_z(&self) -> &RatFun {
        &self.delta_of_z
    }

    pub fn is_commutative_sigma(&self) -> bool {
        self.sigma.is_identity()
    }

    pub fn apply_sigma(&self, a: &RatFun) -> RatFun {
        self.sigma.apply(a)
    }

    pub fn apply_sigma_inv(&self, a: &RatFun) -> RatFun {
        self.sigma_inv.apply(a)
    }

    /// `sigma^k(a)` for `k >= 0`.
    pub fn apply_sigma_pow(&self, a: &RatFun, k: usize) -> RatFun {
        if self.sigma.is_identity() {
            return a.clone();
        }
        (0..k).fold(a.clone(), |acc, _| self.apply_sigma(&acc))
    }

    /// `sigma^{-k}(a)` for `k >= 0`.
    pub fn apply_sigma_inv_pow(&self, a: &RatFun, k: usize) -> RatFun {
        if self.sigma.is_identity() {
            return a.clone();
        }
        (0..k).fold(a.clone(), |acc, _| self.apply_sigma_inv(&acc))
    }

    fn delta_poly(&self, p: &UPoly) -> RatFun {
        if self.sigma.is_identity() {
            // an ordinary derivation, delta(z) d/dz
            return &self.delta_of_z * &RatFun::from_poly(p.derivative());
        }
        // delta(z^k) = sigma(z) delta(z^{k-1}) + delta(z) z^{k-1}
        let sz = self.sigma_of_z();
        let mut acc = RatFun::zero();
        let mut delta_pow = RatFun::zero(); // delta(z^0)
        let mut z_pow = RatFun::one(); // z^{k-1}
        for (k, c) in p.coeffs().iter().enumerate() {
            if k > 0 {
                delta_pow = &(&sz * &delta_pow) + &(&self.delta_of_z * &z_pow);
                z_pow = &z_pow * &RatFun::z();
            }
            if !c.is_zero() {
                acc = &acc + &delta_pow.scale(c);
            }
        }
        acc
    }

    pub fn apply_delta(&self, a: &RatFun) -> RatFun {
        if self.delta_of_z.is_zero() || a.as_constant().is_some() {
            return RatFun::zero();
        }
        let dp = self.delta_poly(a.num());
        if a.is_polynomial() {
            return dp;
        }
        if self.sigma.is_identity() {
            // quotient rule
            let n = a.num();
            let d = a.den();
            // with n/d reduced, gcd(n'd - nd', d^2) = gcd(d, d')
            let dd = d.derivative();
            let g = d.gcd(&dd);
            let num = &(&n.derivative() * d) - &(n * &dd);
            let (num, den) = if g.degree() == Some(0) {
                (num, d * d)
            } else {
                let exact = |p: &UPoly| p.div_rem(&g).expect("nonzero gcd").0;
                (exact(&num), d * &exact(d))
            };
            return &self.delta_of_z * &RatFun::new(num, den).expect("nonzero denominator");
        }
        // delta(p/q) = (delta(p) - sigma(p/q) delta(q)) / q
        let dq = self.delta_poly(a.den());
        let top = &dp - &(&self.apply_sigma(a) * &dq);
        top.checked_div(&RatFun::from_poly(a.den().clone()))
            .expect("nonzero denominator")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RingKind::Differential => write!(f, "differential"),
            RingKind::Shift => write!(f, "shift"),
            RingKind::QShift(q) => {
                if q.is_integer() {
                    write!(f, "qshift q={}", q.numer())
                } else {
                    write!(f, "qshift q={}/{}", q.numer(), q.denom())
                }
            }
            RingKind::Custom => write!(
                f,
                "custom sigma={} delta={}",
                self.sigma_of_z(),
                self.delta_of_z
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatFun {
        RatFun::from_poly(UPoly::from_i64(c))
    }

    fn inv_z_plus(k: i64) -> RatFun {
        RatFun::new(UPoly::one(), UPoly::from_i64(&[k, 1])).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let shift = RingSpec::shift();
        assert_eq!(shift.apply_sigma(&p(&[0, 0, 1])), p(&[1, 2, 1]));
        assert_eq!(shift.apply_sigma(&inv_z_plus(0)), inv_z_plus(1));
        let diff = RingSpec::differential();
        let x = inv_z_plus(3);
        assert_eq!(diff.apply_sigma(&x), x);
    }

    #[test]
    fn delta_examples() {
        let diff = RingSpec::differential();
        assert_eq!(diff.apply_delta(&p(&[0, 0, 1])), p(&[0, 2]));
        let minus_inv_z2 = RatFun::new(UPoly::from_i64(&[-1]), UPoly::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(diff.apply_delta(&inv_z_plus(0)), minus_inv_z2);
        let shift = RingSpec::shift();
        assert!(shift.apply_delta(&p(&[1, 2, 3])).is_zero());
    }

    #[test]
    fn custom_differential_matches_builtin() {
        let custom = RingSpec::custom(&RatFun::z(), RatFun::one()).unwrap();
        let diff = RingSpec::differential();
        let x = RatFun::new(UPoly::from_i64(&[1, 0, 3]), UPoly::from_i64(&[2, 1, 1])).unwrap();
        assert_eq!(custom.apply_delta(&x), diff.apply_delta(&x));
    }

    #[test]
    fn non_mobius_sigma_rejected() {
        assert!(RingSpec::custom(&p(&[0, 0, 1]), RatFun::zero()).is_err());
        assert!(RingSpec::q_shift(Rational::zero()).is_err());
    }

    #[test]
    fn general_mobius_inverse() {
        let sigma = RatFun::new(UPoly::from_i64(&[1, 2]), UPoly::from_i64(&[3, 1])).unwrap();
        let ring = RingSpec::custom(&sigma, RatFun::zero()).unwrap();
        let x = RatFun::new(UPoly::from_i64(&[1, 1, 1]), UPoly::from_i64(&[-2, 0, 1])).unwrap();
        assert_eq!(ring.apply_sigma_inv(&ring.apply_sigma(&x)), x);
        assert_eq!(ring.apply_sigma(&RatFun::z()), sigma);
    }
}
