//! One-sided Euclidean algorithms in the Ore ring.
//!
//! The right-division cascade yields the GCRD together with the cofactors
//! `u, v` (`u a + v b = g`) and the LCLM cofactors `s, t`
//! (`s a = -t b = lclm(a, b)`). The left-division mirror yields GCLD and
//! LCRM, by running the right-sided cascade in the opposite ring. Division
//! is fraction-free, remainders are kept primitive over `Z[z]` by left
//! scalar factors, and only the final results are made monic.

use crate::error::{Error, Result};
use std::sync::Arc;

use crate::ore::{primitive_together, OrePoly};

/// The 2x2 transform `W = [[u, v], [s, t]]` with `W (a, b)^T = (g, 0)^T`.
#[derive(Debug, Clone, PartialEq)]
pub struct GcrdCertificate {
    /// Monic greatest common right divisor.
    pub g: OrePoly,
    pub u: OrePoly,
    pub v: OrePoly,
    pub s: OrePoly,
    pub t: OrePoly,
}

impl GcrdCertificate {
    /// `s * a`, the monic LCLM (zero when either input is zero).
    pub fn lclm(&self, a: &OrePoly) -> OrePoly {
        &self.s * a
    }

    pub fn transform(&self) -> [[OrePoly; 2]; 2] {
        [
            [self.u.clone(), self.v.clone()],
            [self.s.clone(), self.t.clone()],
        ]
    }
}

/// Extended GCRD of `a` and `b`.
pub fn gcrd_ext(a: &OrePoly, b: &OrePoly) -> Result<GcrdCertificate> {
    a.check_ring(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let [r0, u0, v0, mut s, mut t] = cascade(a, b)?;
    let c = r0.lc().expect("nonzero gcrd").inv()?;
    let (r0, u0, v0) = (r0.left_scale(&c), u0.left_scale(&c), v0.left_scale(&c));
    if !a.is_zero() && !b.is_zero() {
        let m = &s * a;
        let c = m.lc().expect("lclm of nonzero operands").inv()?;
        s = s.left_scale(&c);
        t = t.left_scale(&c);
    }
    Ok(GcrdCertificate {
        g: r0,
        u: u0,
        v: v0,
        s,
        t,
    })
}

/// Cofactors `(s, t)` of nonzero `a` and `b` with `s a = -t b` a common left
/// multiple of least degree, not normalized.
pub fn lclm_cofactors(a: &OrePoly, b: &OrePoly) -> Result<(OrePoly, OrePoly)> {
    a.check_ring(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroOperand);
    }
    let [_, _, _, s, t] = cascade(a, b)?;
    Ok((s, t))
}

/// Primitive remainder sequence with cofactors. Returns `[g, u, v, s, t]`
/// with `u a + v b = g` and `s a + t b = 0`, all up to left scalars.
fn cascade(a: &OrePoly, b: &OrePoly) -> Result<[OrePoly; 5]> {
    let ring = a.ring();
    let prim = |r: OrePoly, u: OrePoly, v: OrePoly| {
        let [r, u, v]: [OrePoly; 3] = primitive_together(&[r, u, v]).try_into().expect("three");
        (r, u, v)
    };
    let (mut r0, mut u0, mut v0) = prim(a.clone(), OrePoly::one(ring), OrePoly::zero(ring));
    let (mut r1, mut u1, mut v1) = prim(b.clone(), OrePoly::zero(ring), OrePoly::one(ring));
    while !r1.is_zero() {
        let (c, q, r2) = r0.right_pseudo_divmod(&r1)?;
        let u2 = &u0.left_scale(&c) - &(&q * &u1);
        let v2 = &v0.left_scale(&c) - &(&q * &v1);
        let (r2, u2, v2) = prim(r2, u2, v2);
        r0 = std::mem::replace(&mut r1, r2);
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    Ok([r0, u0, v0, u1, v1])
}

/// Monic GCRD, from a primitive remainder sequence without cofactors.
pub fn gcrd(a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    a.check_ring(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let (_, _, r2) = r0.right_pseudo_divmod(&r1)?;
        let r2 = primitive_together(&[r2]).pop().expect("one");
        r0 = std::mem::replace(&mut r1, r2);
    }
    Ok(r0.monic_left())
}

/// Monic least common left multiple of two nonzero polynomials.
pub fn lclm(a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    if a.is_zero() || b.is_zero() {
        a.check_ring(b)?;
        return Err(Error::ZeroOperand);
    }
    let cert = gcrd_ext(a, b)?;
    Ok(cert.lclm(a))
}

/// Left-sided mirror of [`GcrdCertificate`]: `a u + b v = g`,
/// `a s = -b t = lcrm`, `a = g a_cof`, `b = g b_cof`.
#[derive(Debug, Clone, PartialEq)]
pub struct GcldCertificate {
    /// Greatest common left divisor, made monic by a right scalar factor.
    pub g: OrePoly,
    pub u: OrePoly,
    pub v: OrePoly,
    pub s: OrePoly,
    pub t: OrePoly,
    pub a_cof: OrePoly,
    pub b_cof: OrePoly,
    /// Least common right multiple `a s`, left as it comes out of the
    /// cascade. Making it monic needs high derivatives of a rational scalar
    /// and is rarely worth it. Zero when either input is zero.
    pub lcrm: OrePoly,
}

/// Runs the right-sided cascade in the opposite ring.
pub fn gcld_ext(a: &OrePoly, b: &OrePoly) -> Result<GcldCertificate> {
    a.check_ring(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let ring = a.ring();
    let op = Arc::new(ring.opposite());
    let (a_op, b_op) = (a.to_opposite(&op), b.to_opposite(&op));
    // The cascade output is content free, so converting back stays in
    // polynomial arithmetic. Normalizing scalars are applied afterwards on
    // the right, where the opposite ring would have them on the left.
    let [g, u, v, s, t] = cascade(&a_op, &b_op)?;
    let [g, u, v, s, t] = [g, u, v, s, t].map(|p| p.to_opposite(ring));
    let f = g.right_monic_factor().expect("nonzero gcld");
    let lcrm = if a.is_zero() || b.is_zero() { OrePoly::zero(ring) } else { a * &s };
    let g = g.right_scale(&f);
    Ok(GcldCertificate {
        a_cof: a.left_divmod(&g)?.0,
        b_cof: b.left_divmod(&g)?.0,
        u: u.right_scale(&f),
        v: v.right_scale(&f),
        g,
        s,
        t,
        lcrm,
    })
}

pub fn gcld(a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    a.check_ring(b)?;
    let op = Arc::new(a.ring().opposite());
    Ok(gcrd(&a.to_opposite(&op), &b.to_opposite(&op))?.to_opposite(a.ring()))
}

/// Least common right multiple of two nonzero polynomials (not normalized), with the
/// right cofactors `(abar, bbar)` such that `lcrm = a abar = b bbar`.
pub fn lcrm(a: &OrePoly, b: &OrePoly) -> Result<(OrePoly, OrePoly, OrePoly)> {
    if a.is_zero() || b.is_zero() {
        a.check_ring(b)?;
        return Err(Error::ZeroOperand);
    }
    let ring = a.ring();
    let op = Arc::new(ring.opposite());
    let (s, t) = lclm_cofactors(&a.to_opposite(&op), &b.to_opposite(&op))?;
    let (s, t) = (s.to_opposite(ring), t.to_opposite(ring));
    Ok((a * &s, s, -&t))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::field::{RatFun, RingSpec, UPoly};

    fn ring() -> Arc<RingSpec> {
        Arc::new(RingSpec::differential())
    }

    fn ore(r: &Arc<RingSpec>, cs: &[&[i64]]) -> OrePoly {
        OrePoly::new(
            cs.iter()
                .map(|c| RatFun::from_poly(UPoly::from_i64(c)))
                .collect(),
            r.clone(),
        )
    }

    #[test]
    fn gcrd_of_d2_and_d() {
        let r = ring();
        let cert = gcrd_ext(&ore(&r, &[&[], &[], &[1]]), &OrePoly::d(&r)).unwrap();
        assert_eq!(cert.g, OrePoly::d(&r));
    }

    #[test]
    fn gcrd_with_zero() {
        let r = ring();
        let f = ore(&r, &[&[1], &[0, 3]]);
        let cert = gcrd_ext(&f, &OrePoly::zero(&r)).unwrap();
        assert_eq!(cert.g, f.monic_left());
        assert_eq!(cert.u, OrePoly::constant(f.lc().unwrap().inv().unwrap(), &r));
        assert!(cert.v.is_zero());
        assert_eq!(
            gcrd_ext(&OrePoly::zero(&r), &OrePoly::zero(&r)),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn lclm_and_lcrm_trivial_cases() {
        let r = ring();
        let f = ore(&r, &[&[2], &[1, 1], &[3]]);
        assert_eq!(lclm(&f, &f).unwrap(), f.monic_left());
        let d = OrePoly::d(&r);
        assert_eq!(lclm(&d, &d).unwrap(), d);
        assert_eq!(lcrm(&d, &d).unwrap().0, d);
        assert_eq!(gcld(&f, &f).unwrap(), f.monic_right());
        assert_eq!(lclm(&f, &OrePoly::zero(&r)), Err(Error::ZeroOperand));
    }

    #[test]
    fn coprime_lclm_degree_adds() {
        let r = ring();
        let a = OrePoly::d(&r);
        let b = ore(&r, &[&[0, 1], &[1]]); // z + D
        assert!(gcrd(&a, &b).unwrap().is_one());
        assert_eq!(lclm(&a, &b).unwrap().deg(), Some(2));
    }
}
