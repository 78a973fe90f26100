//! Hermite form by Euclidean elimination.
//!
//! Column by column, the row whose entry has least degree is subtracted from
//! the rows below by right division until only the pivot survives in that
//! column; then the entries above each pivot are reduced the same way and
//! the pivots made monic. Every step is applied to an identity matrix
//! alongside, which yields `U`. Rows are kept primitive over `Z[z]` until the
//! final scaling.

use super::HermitePair;
use crate::matrix::OreMatrix;
use crate::ore::{primitive_together, OrePoly};

/// Echelon form `T = P A` with monic pivots, entries above the pivots not
/// yet reduced.
#[derive(Debug, Clone)]
pub struct Triangular {
    pub t: OreMatrix,
    pub p: OreMatrix,
    /// `(row, col)` of every pivot, by increasing row.
    pub pivots: Vec<(usize, usize)>,
}

pub fn triangularize(a: &OreMatrix) -> Triangular {
    let mut tri = echelon(a);
    make_monic(&mut tri);
    tri
}

/// Echelon form with primitive rows over `Z[z]`.
fn echelon(a: &OreMatrix) -> Triangular {
    let m = a.rows();
    let mut t = a.clone();
    let mut p = OreMatrix::identity(a.ring(), m);
    let mut pivots = Vec::new();
    for i in 0..m {
        make_primitive(&mut t, &mut p, i);
    }
    let mut r = 0;
    for c in 0..a.cols() {
        if r == m {
            break;
        }
        loop {
            let Some(best) = (r..m)
                .filter(|&i| !t[(i, c)].is_zero())
                .min_by_key(|&i| t[(i, c)].deg())
            else {
                break;
            };
            t.swap_rows(r, best);
            p.swap_rows(r, best);
            let mut done = true;
            for i in r + 1..m {
                if t[(i, c)].is_zero() {
                    continue;
                }
                pseudo_reduce(&mut t, &mut p, i, r, c);
                done &= t[(i, c)].is_zero();
            }
            if done {
                pivots.push((r, c));
                r += 1;
                break;
            }
        }
    }
    Triangular { t, p, pivots }
}

/// Left-multiplies row `i` of `[t | p]` by the element of `Q(z)` that makes
/// every coefficient a polynomial in `Z[z]` and the row primitive. This is a
/// unimodular step and keeps the coefficients from swelling.
fn make_primitive(t: &mut OreMatrix, p: &mut OreMatrix, i: usize) {
    let row: Vec<OrePoly> = t.row(i).iter().chain(p.row(i)).cloned().collect();
    for (j, e) in primitive_together(&row).into_iter().enumerate() {
        if j < t.cols() {
            t[(i, j)] = e;
        } else {
            p[(i, j - t.cols())] = e;
        }
    }
}

/// Reduces entry `(i, c)` below the degree of the pivot `(r, c)` by steps
/// `row_i <- sigma^k(b) row_i - a D^k row_r`, where `a` and `b` are the
/// leading coefficients. Quotients never enter, so rows stay free of
/// denominators.
fn pseudo_reduce(t: &mut OreMatrix, p: &mut OreMatrix, i: usize, r: usize, c: usize) {
    let ring = t.ring().clone();
    let d = t[(r, c)].deg().expect("pivot is nonzero");
    let b = t[(r, c)].lc().expect("pivot is nonzero").clone();
    while let Some(k) = t[(i, c)].deg().filter(|&k| k >= d) {
        let a = t[(i, c)].lc().expect("nonzero").clone();
        let scale = OrePoly::constant(ring.apply_sigma_pow(&b, k - d), &ring);
        let q = OrePoly::monomial(a, k - d, &ring);
        t.scale_row(i, &scale);
        p.scale_row(i, &scale);
        t.sub_row_multiple(i, r, &q);
        p.sub_row_multiple(i, r, &q);
        make_primitive(t, p, i);
    }
}

fn make_monic(tri: &mut Triangular) {
    for &(r, c) in &tri.pivots {
        let lc = tri.t[(r, c)].lc().expect("pivot is nonzero").clone();
        if !lc.is_one() {
            let s = OrePoly::constant(lc.inv().expect("nonzero"), tri.t.ring());
            tri.t.scale_row(r, &s);
            tri.p.scale_row(r, &s);
        }
    }
}

/// Reduces the entries above each pivot of an echelon form in place.
/// Rows are handled bottom-up, so every pivot row used is already reduced.
fn reduce_above(tri: &mut Triangular) {
    let pivots = tri.pivots.clone();
    for i in (0..pivots.len()).rev() {
        for &(pr, pc) in &pivots[i + 1..] {
            pseudo_reduce(&mut tri.t, &mut tri.p, i, pr, pc);
        }
    }
}

/// Hermite form and transform of any matrix, with its rank.
pub fn hermite_naive(a: &OreMatrix) -> (HermitePair, usize) {
    let mut tri = echelon(a);
    reduce_above(&mut tri);
    make_monic(&mut tri);
    let rank = tri.pivots.len();
    (HermitePair { h: tri.t, u: tri.p }, rank)
}
