//! Fraction-free Gaussian elimination over `Z[z]`.
//!
//! Systems over `Q(z)` are cleared of denominators equation by equation and
//! then reduced with Bareiss' one-step scheme, using full pivoting on an
//! entry of minimal `z`-degree. One elimination answers the rank test, the
//! consistency test and, when the solution is unique, the solve itself.


use crate::error::{Error, Result};
use crate::field::{IntPoly, RatFun, UPoly};

/// Result of eliminating `M x = B`, where the first `unknowns` columns of
/// each equation row hold `M` and the rest hold the right-hand sides.
#[derive(Debug, Clone)]
pub(crate) struct Elimination {
    rows: Vec<Vec<IntPoly>>,
    unknowns: usize,
    /// `perm[k]` is the original unknown sitting in column `k`.
    perm: Vec<usize>,
    rank: usize,
}

impl Elimination {
    pub(crate) fn new(mut rows: Vec<Vec<IntPoly>>, unknowns: usize) -> Elimination {
        let width = rows.first().map_or(unknowns, Vec::len);
        debug_assert!(rows.iter().all(|r| r.len() == width));
        let m = rows.len();
        let mut perm: Vec<usize> = (0..unknowns).collect();
        let mut prev = IntPoly::one();
        let mut rank = 0;
        for k in 0..m.min(unknowns) {
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in rows.iter().enumerate().skip(k) {
                for (j, e) in row.iter().enumerate().take(unknowns).skip(k) {
                    if let Some(d) = e.degree() {
                        if best.map_or(true, |(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else { break };
            rows.swap(k, pi);
            if pj != k {
                for row in rows.iter_mut() {
                    row.swap(k, pj);
                }
                perm.swap(k, pj);
            }
            let (top, rest) = rows.split_at_mut(k + 1);
            let pivot_row = &top[k];
            let pivot = &pivot_row[k];
            for row in rest.iter_mut() {
                let factor = std::mem::take(&mut row[k]);
                for j in k + 1..width {
                    let mut v = pivot * &row[j];
                    if !factor.is_zero() && !pivot_row[j].is_zero() {
                        v = &v - &(&factor * &pivot_row[j]);
                    }
                    row[j] = if prev.is_one() || v.is_zero() {
                        v
                    } else {
                        v.exact_div(&prev).expect("Bareiss division is exact")
                    };
                }
            }
            prev = pivot.clone();
            rank += 1;
        }
        Elimination {
            rows,
            unknowns,
            perm,
            rank,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    pub(crate) fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub(crate) fn is_consistent(&self) -> bool {
        self.rows[self.rank..]
            .iter()
            .all(|row| row[self.unknowns..].iter().all(IntPoly::is_zero))
    }

    /// The unique solution for each right-hand side, indexed
    /// `[rhs][unknown]`. Requires full column rank and consistency.
    pub(crate) fn solve(&self) -> Result<Vec<Vec<RatFun>>> {
        let n = self.unknowns;
        if self.rank < n {
            return Err(Error::Solver("system is underdetermined".into()));
        }
        if !self.is_consistent() {
            return Err(Error::Solver("system is inconsistent".into()));
        }
        let width = self.rows.first().map_or(n, Vec::len);
        let det = if n == 0 {
            IntPoly::one()
        } else {
            self.rows[n - 1][n - 1].clone()
        };
        let den = UPoly::from_int(&det);
        let mut out = Vec::with_capacity(width - n);
        for rhs in n..width {
            // y_i = det * x_i, which is a polynomial by Cramer's rule
            let mut y = vec![IntPoly::zero(); n];
            for i in (0..n).rev() {
                let row = &self.rows[i];
                let mut acc = &det * &row[rhs];
                for j in i + 1..n {
                    if !row[j].is_zero() && !y[j].is_zero() {
                        acc = &acc - &(&row[j] * &y[j]);
                    }
                }
                y[i] = acc
                    .exact_div(&row[i])
                    .ok_or_else(|| Error::Solver("inexact back substitution".into()))?;
            }
            let mut x = vec![RatFun::zero(); n];
            for (k, yk) in y.iter().enumerate() {
                x[self.perm[k]] = RatFun::new(UPoly::from_int(yk), den.clone())?;
            }
            out.push(x);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::clear_row;
    use num_bigint::BigInt;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(UPoly::from_i64(n), UPoly::from_i64(d)).unwrap()
    }

    #[test]
    fn clears_denominators() {
        let row = clear_row(&[rf(&[1], &[0, 2]), rf(&[1], &[1, 1]), RatFun::zero()]);
        // 1/(2z), 1/(z+1) -> (z+1, z, 0) up to content
        assert_eq!(row, vec![ip(&[1, 1]), ip(&[0, 2]), IntPoly::zero()]);
    }

    #[test]
    fn solves_two_by_two() {
        // z x0 + x1 = 1, x0 - x1 = 0  ->  x0 = x1 = 1/(z+1)
        let e = Elimination::new(
            vec![vec![ip(&[0, 1]), ip(&[1]), ip(&[1])], vec![ip(&[1]), ip(&[-1]), ip(&[])]],
            2,
        );
        assert_eq!(e.rank(), 2);
        let x = e.solve().unwrap();
        assert_eq!(x[0], vec![rf(&[1], &[1, 1]), rf(&[1], &[1, 1])]);
    }

    #[test]
    fn detects_inconsistency_and_rank_defect() {
        let e = Elimination::new(
            vec![vec![ip(&[0, 1]), ip(&[1])], vec![ip(&[0, 2]), ip(&[3])]],
            1,
        );
        assert_eq!(e.rank(), 1);
        assert!(!e.is_consistent());
        let e = Elimination::new(vec![vec![ip(&[1]), ip(&[1]), ip(&[2])]], 2);
        assert_eq!(e.rank(), 1);
        assert!(e.is_consistent());
        assert!(e.solve().is_err());
    }
}
