//! Linear algebra over the skew field of fractions.
//!
//! Quasideterminants are evaluated by their recursive definition with a
//! per-call memo table; they are exponential in the dimension and serve as an
//! independent check on the elimination routines. Inverses, ranks and the
//! degree of the Dieudonne determinant come from Gaussian elimination with
//! left row operations, pivoting on an entry of minimal degree.

use std::collections::HashMap;
use std::ops::{Index, IndexMut};
use std::sync::Arc;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::RingSpec;
use crate::hermite::triangularize;
use crate::matrix::OreMatrix;
use crate::ore::{same_ring, OrePoly};
use crate::skewfrac::{common_denominator, SkewFraction};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    ring: Arc<RingSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<SkewFraction>,
}

impl SkewMatrix {
    pub fn new(ring: Arc<RingSpec>, rows: usize, cols: usize, entries: Vec<SkewFraction>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !same_ring(e.ring(), &ring)) {
            return Err(Error::RingMismatch(ring.to_string(), bad.ring().to_string()));
        }
        Ok(SkewMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// Embeds a polynomial matrix entrywise as `a * 1^{-1}`.
    pub fn from_ore(m: &OreMatrix) -> Self {
        SkewMatrix {
            ring: m.ring().clone(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().cloned().map(SkewFraction::from_poly).collect(),
        }
    }

    pub fn zeros(ring: &Arc<RingSpec>, rows: usize, cols: usize) -> Self {
        SkewMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![SkewFraction::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<RingSpec>, n: usize) -> Self {
        let mut m = SkewMatrix::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = SkewFraction::one(ring);
        }
        m
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[SkewFraction] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn try_mul(&self, rhs: &SkewMatrix) -> Result<SkewMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = SkewMatrix::zeros(&self.ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &a.try_mul(b)?;
                    }
                }
            }
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows == self.cols {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

impl Index<(usize, usize)> for SkewMatrix {
    type Output = SkewFraction;
    fn index(&self, (i, j): (usize, usize)) -> &SkewFraction {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for SkewMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut SkewFraction {
        &mut self.entries[i * self.cols + j]
    }
}

/// Value of a quasideterminant; `Undefined` is a legitimate outcome, not an
/// error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QdResult {
    Defined(SkewFraction),
    Undefined,
}

impl QdResult {
    pub fn value(&self) -> Option<&SkewFraction> {
        match self {
            QdResult::Defined(v) => Some(v),
            QdResult::Undefined => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, QdResult::Defined(_))
    }
}

type QdKey = (u64, u64, usize, usize);

struct QdEvaluator<'a> {
    m: &'a SkewMatrix,
    memo: HashMap<QdKey, Option<SkewFraction>>,
}

impl QdEvaluator<'_> {
    /// `|A|_{pq}` of the submatrix on the row set `rows` and column set
    /// `cols` (bit masks over the original labels).
    fn eval(&mut self, rows: u64, cols: u64, p: usize, q: usize) -> Option<SkewFraction> {
        if let Some(v) = self.memo.get(&(rows, cols, p, q)) {
            return v.clone();
        }
        let value = self.compute(rows, cols, p, q);
        self.memo.insert((rows, cols, p, q), value.clone());
        value
    }

    fn compute(&mut self, rows: u64, cols: u64, p: usize, q: usize) -> Option<SkewFraction> {
        let m = self.m;
        if rows.count_ones() == 1 {
            return Some(m[(p, q)].clone());
        }
        let sub_rows = rows & !(1 << p);
        let sub_cols = cols & !(1 << q);
        let row_ids: Vec<usize> = bits(sub_rows).collect();
        let col_ids: Vec<usize> = bits(sub_cols).collect();

        // Quasideterminants of A^{(pq)}; its inverse has entry (i, j) equal to
        // |A^{(pq)}|_{ji}^{-1}, or zero where undefined. The sum is only
        // meaningful when A^{(pq)} is invertible.
        let mut inner = HashMap::new();
        let mut row_hit = vec![false; row_ids.len()];
        let mut col_hit = vec![false; col_ids.len()];
        for (a, &j) in row_ids.iter().enumerate() {
            for (b, &i) in col_ids.iter().enumerate() {
                if let Some(v) = self.eval(sub_rows, sub_cols, j, i) {
                    if v.is_zero() {
                        return None;
                    }
                    row_hit[a] = true;
                    col_hit[b] = true;
                    inner.insert((j, i), v);
                }
            }
        }
        if !row_hit.iter().all(|&h| h) || !col_hit.iter().all(|&h| h) {
            return None;
        }
        let mut acc = m[(p, q)].clone();
        for (&(j, i), v) in &inner {
            let left = &m[(p, i)];
            let right = &m[(j, q)];
            if left.is_zero() || right.is_zero() {
                continue;
            }
            let term = &(left * &v.inv().expect("nonzero")) * right;
            acc = &acc - &term;
        }
        Some(acc)
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The `(p, q)` quasideterminant (zero-based indices) of a square matrix.
pub fn quasidet(m: &SkewMatrix, p: usize, q: usize) -> Result<QdResult> {
    let n = m.require_square()?;
    if p >= n || q >= n {
        return Err(Error::Dimension(format!("index ({p}, {q}) outside {n}x{n}")));
    }
    let mut ev = QdEvaluator {
        m,
        memo: HashMap::new(),
    };
    let mask = full_mask(n);
    Ok(match ev.eval(mask, mask, p, q) {
        Some(v) => QdResult::Defined(v),
        None => QdResult::Undefined,
    })
}

/// All `n^2` quasideterminants, sharing one memo table.
pub fn quasidet_table(m: &SkewMatrix) -> Result<Vec<Vec<QdResult>>> {
    let n = m.require_square()?;
    let mut ev = QdEvaluator {
        m,
        memo: HashMap::new(),
    };
    let mask = full_mask(n);
    Ok((0..n)
        .map(|p| {
            (0..n)
                .map(|q| match ev.eval(mask, mask, p, q) {
                    Some(v) => QdResult::Defined(v),
                    None => QdResult::Undefined,
                })
                .collect()
        })
        .collect())
}

fn min_degree_pivot(m: &SkewMatrix, rows: &[usize], cols: &[usize]) -> Option<(usize, usize)> {
    let mut best: Option<(Degree, usize, usize)> = None;
    for &i in rows {
        for &j in cols {
            let e = &m[(i, j)];
            if e.is_zero() {
                continue;
            }
            let d = e.deg();
            if best.as_ref().map_or(true, |(bd, _, _)| d < *bd) {
                best = Some((d, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Gaussian elimination by left row operations; returns the pivots in the
/// order they were chosen.
fn elimination_pivots(m: &SkewMatrix) -> Vec<SkewFraction> {
    let mut work = m.clone();
    let mut rows: Vec<usize> = (0..m.rows).collect();
    let mut cols: Vec<usize> = (0..m.cols).collect();
    let mut pivots = Vec::new();
    while let Some((pr, pc)) = min_degree_pivot(&work, &rows, &cols) {
        let pivot = work[(pr, pc)].clone();
        let pivot_inv = pivot.inv().expect("pivot is nonzero");
        rows.retain(|&r| r != pr);
        cols.retain(|&c| c != pc);
        for &r in &rows {
            let e = &work[(r, pc)];
            if e.is_zero() {
                continue;
            }
            let factor = e * &pivot_inv;
            work[(r, pc)] = SkewFraction::zero(&m.ring);
            for &c in &cols {
                let s = &work[(pr, c)];
                if s.is_zero() {
                    continue;
                }
                let upd = &work[(r, c)] - &(&factor * s);
                work[(r, c)] = upd;
            }
        }
        pivots.push(pivot);
    }
    pivots
}

/// Rank over the skew field of fractions.
pub fn rank(m: &SkewMatrix) -> usize {
    elimination_pivots(m).len()
}

/// Rank of a polynomial matrix, read off the Euclidean echelon form. Its
/// row operations are unimodular, so this agrees with [`rank`] on the
/// embedding while avoiding fraction arithmetic.
pub fn ore_rank(m: &OreMatrix) -> usize {
    triangularize(m).pivots.len()
}

/// Degree of the Dieudonne determinant: the sum of the pivot degrees, or
/// `-∞` for a singular matrix. The permutation sign is irrelevant to the
/// degree and is not tracked.
pub fn ddet_degree(m: &SkewMatrix) -> Result<Degree> {
    let n = m.require_square()?;
    let pivots = elimination_pivots(m);
    if pivots.len() < n {
        return Ok(Degree::NegInfinity);
    }
    Ok(pivots
        .iter()
        .map(SkewFraction::deg)
        .fold(Degree::Finite(0), |a, b| a + b))
}

/// [`ddet_degree`] of a polynomial matrix: the sum of the pivot degrees of
/// its Euclidean echelon form, which differs from `m` by a unimodular
/// factor.
pub fn ore_ddet_degree(m: &OreMatrix) -> Result<Degree> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let tri = triangularize(m);
    if tri.pivots.len() < m.rows() {
        return Ok(Degree::NegInfinity);
    }
    Ok(tri
        .pivots
        .iter()
        .map(|&(i, j)| tri.t[(i, j)].degree())
        .fold(Degree::Finite(0), |a, b| a + b))
}

/// A square polynomial matrix is unimodular exactly when its Dieudonne
/// determinant has degree zero. Non-square matrices are never unimodular.
pub fn is_unimodular(m: &OreMatrix) -> bool {
    m.is_square() && matches!(ore_ddet_degree(m), Ok(Degree::Finite(0)))
}

/// Checks `A B = I` for a square polynomial matrix `A`. Over a skew field a
/// one-sided inverse is two-sided. Each column of `B` is put over one right
/// denominator `L`, so `A B e_j = e_j` becomes the polynomial identity
/// `A F = e_j L` and no fraction is ever reduced.
pub fn is_inverse_of(a: &OreMatrix, b: &SkewMatrix) -> bool {
    let n = a.rows();
    if !a.is_square() || b.rows != n || b.cols != n || !same_ring(a.ring(), &b.ring) {
        return false;
    }
    (0..n).all(|j| {
        let col: Vec<SkewFraction> = (0..n).map(|k| b[(k, j)].clone()).collect();
        let (f, l) = common_denominator(&col, &b.ring);
        (0..n).all(|i| {
            let row = (0..n).fold(OrePoly::zero(a.ring()), |acc, k| &acc + &(&a[(i, k)] * &f[k]));
            if i == j {
                row == l
            } else {
                row.is_zero()
            }
        })
    })
}

/// Inverse over the skew field by Gauss-Jordan elimination.
pub fn skew_inverse(m: &SkewMatrix) -> Result<SkewMatrix> {
    let n = m.require_square()?;
    let ring = m.ring.clone();
    let mut a = m.clone();
    let mut b = SkewMatrix::identity(&ring, n);
    for c in 0..n {
        let pr = (c..n)
            .filter(|&r| !a[(r, c)].is_zero())
            .min_by_key(|&r| a[(r, c)].deg())
            .ok_or(Error::Singular)?;
        if pr != c {
            for j in 0..n {
                a.entries.swap(pr * n + j, c * n + j);
                b.entries.swap(pr * n + j, c * n + j);
            }
        }
        let inv = a[(c, c)].inv()?;
        for j in 0..n {
            a[(c, j)] = &inv * &a[(c, j)];
            b[(c, j)] = &inv * &b[(c, j)];
        }
        for r in 0..n {
            if r == c || a[(r, c)].is_zero() {
                continue;
            }
            let f = a[(r, c)].clone();
            for j in 0..n {
                if !a[(c, j)].is_zero() {
                    a[(r, j)] = &a[(r, j)] - &(&f * &a[(c, j)]);
                }
                if !b[(c, j)].is_zero() {
                    b[(r, j)] = &b[(r, j)] - &(&f * &b[(c, j)]);
                }
            }
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatFun, UPoly};

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

    fn matrix(r: &Arc<RingSpec>, n: usize, entries: Vec<OrePoly>) -> OreMatrix {
        OreMatrix::new(r.clone(), n, n, entries).unwrap()
    }

    #[test]
    fn one_by_one_quasidet_is_entry() {
        let r = ring();
        let m = SkewMatrix::from_ore(&matrix(&r, 1, vec![ore(&r, &[&[1], &[2]])]));
        assert_eq!(
            quasidet(&m, 0, 0).unwrap(),
            QdResult::Defined(m[(0, 0)].clone())
        );
    }

    #[test]
    fn two_by_two_quasidet() {
        let r = ring();
        let d = OrePoly::d(&r);
        let one = OrePoly::one(&r);
        let m = SkewMatrix::from_ore(&matrix(&r, 2, vec![d.clone(), one.clone(), one, d.clone()]));
        let QdResult::Defined(v) = quasidet(&m, 0, 0).unwrap() else {
            panic!("expected a defined quasideterminant");
        };
        assert_eq!(v.num(), ore(&r, &[&[-1], &[], &[1]]));
        assert_eq!(v.den(), d);
        assert_eq!(v.deg(), Degree::Finite(1));
    }

    #[test]
    fn antidiagonal_has_undefined_quasidets() {
        let r = ring();
        let (o, z) = (OrePoly::one(&r), OrePoly::zero(&r));
        let m = SkewMatrix::from_ore(&matrix(&r, 2, vec![z.clone(), o.clone(), o, z]));
        assert_eq!(quasidet(&m, 0, 0).unwrap(), QdResult::Undefined);
        assert!(quasidet(&m, 0, 1).unwrap().value().unwrap().is_one());
        assert!(matches!(
            quasidet(&SkewMatrix::zeros(&r, 2, 3), 0, 0),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn inverse_examples() {
        let r = ring();
        let id = SkewMatrix::identity(&r, 3);
        assert!(skew_inverse(&id).unwrap().is_identity());
        let d = OrePoly::d(&r);
        let a = matrix(&r, 2, vec![d.clone(), OrePoly::zero(&r), OrePoly::zero(&r), d]);
        let m = SkewMatrix::from_ore(&a);
        let inv = skew_inverse(&m).unwrap();
        assert_eq!(inv[(0, 0)].deg(), Degree::Finite(-1));
        assert!(inv[(0, 1)].is_zero());
        assert!(m.try_mul(&inv).unwrap().is_identity());
        assert!(inv.try_mul(&m).unwrap().is_identity());
        assert!(is_inverse_of(&a, &inv));
        assert!(!is_inverse_of(&a, &SkewMatrix::identity(&r, 2)));
        assert_eq!(skew_inverse(&SkewMatrix::zeros(&r, 2, 2)), Err(Error::Singular));
    }

    #[test]
    fn unimodularity_examples() {
        let r = ring();
        assert!(is_unimodular(&OreMatrix::identity(&r, 3)));
        let mut m = OreMatrix::identity(&r, 3);
        m[(0, 0)] = OrePoly::d(&r);
        assert!(!is_unimodular(&m));
        assert_eq!(ore_ddet_degree(&m).unwrap(), Degree::Finite(1));
        assert_eq!(ore_ddet_degree(&OreMatrix::zeros(&r, 2, 2)).unwrap(), Degree::NegInfinity);
    }

    #[test]
    fn permutation_has_degree_zero() {
        let r = ring();
        let (o, z) = (OrePoly::one(&r), OrePoly::zero(&r));
        let p = matrix(
            &r,
            3,
            vec![z.clone(), o.clone(), z.clone(), z.clone(), z.clone(), o.clone(), o, z.clone(), z],
        );
        assert_eq!(ore_ddet_degree(&p).unwrap(), Degree::Finite(0));
    }
}
