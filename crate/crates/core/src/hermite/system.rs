//! The Hermite form of a square full-rank matrix as the unique solution of a
//! linear system over `Q(z)`, for a correctly guessed diagonal degree
//! sequence.
//!
//! The unknown transform `T` has entries of degree at most `rho`. Row `i`
//! of `T` is flattened to the coefficient vector `(t_ij0, ..., t_ijrho)`
//! over the blocks `j`, and `T A` becomes `T_hat A_hat` where block `(j, l)`
//! of `A_hat` has `D^k A_jl` in its row `k`. Only the coefficients of `T A`
//! that the Hermite shape pins down (the coefficients of `D^k` in column
//! `l` with `k >= d_l`) are kept.
//!
//! That system alone does not force `T A` to be triangular, and for some
//! guesses `d` not dominating the true degrees it is consistent, with a
//! solution in a Popov-like shape. Classification therefore also asks for
//! the entries below the diagonal to vanish. These extra equations differ
//! from row to row and are only set up when the shared system leaves the
//! question open.

use std::sync::Arc;

use super::solve::Elimination;
use super::verify::is_hermite_shape;
use super::{DegreeSequence, HermitePair, Trichotomy};
use crate::error::{Error, Result};
use crate::field::{clear_row, clear_row_with_lcm, RatFun, RingSpec};
use crate::matrix::OreMatrix;
use crate::ore::OrePoly;

/// The linear system `T_hat A_tilde = G_tilde`.
#[derive(Debug, Clone)]
pub struct ReducedSystem {
    ring: Arc<RingSpec>,
    n: usize,
    d_max: usize,
    rho: usize,
    degrees: Vec<usize>,
    a_hat: Vec<Vec<RatFun>>,
    retained: Vec<usize>,
    columns: Vec<(usize, usize)>,
}

/// Upper bounds on the `z`-degree of the entries of `U` and `H` obtained
/// from the reduced system, by Cramer's rule and Hadamard's bound on the
/// cleared equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZDegreeBound {
    pub u: i64,
    pub h: i64,
}

impl ReducedSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of unknowns in one row of `T_hat`.
    pub fn unknowns(&self) -> usize {
        self.n * (self.rho + 1)
    }

    /// The retained `(block, power)` pairs, one per column of `A_tilde`.
    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    /// `A_hat`, all `n (rho + d_max + 1)` columns.
    pub fn a_hat(&self) -> &[Vec<RatFun>] {
        &self.a_hat
    }

    pub fn a_tilde(&self) -> Vec<Vec<RatFun>> {
        self.a_hat
            .iter()
            .map(|row| self.retained.iter().map(|&c| row[c].clone()).collect())
            .collect()
    }

    pub fn g_tilde(&self) -> Vec<Vec<RatFun>> {
        (0..self.n)
            .map(|i| {
                self.columns
                    .iter()
                    .map(|&(j, k)| {
                        if j == i && k == self.degrees[i] {
                            RatFun::one()
                        } else {
                            RatFun::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Equation rows of the transposed system `A_tilde^T x = G_tilde^T`, one
    /// per retained column, with all `n` right-hand sides appended.
    fn equations(&self) -> Vec<Vec<RatFun>> {
        let g = self.g_tilde();
        self.retained
            .iter()
            .enumerate()
            .map(|(c, &col)| {
                let mut eq: Vec<RatFun> = self.a_hat.iter().map(|row| row[col].clone()).collect();
                eq.extend(g.iter().map(|gi| gi[c].clone()));
                eq
            })
            .collect()
    }

    /// The system for row `i` of `T_hat` alone, with the equations
    /// `(T A)_{il} = 0` for `l < i` added. Only its consistency is used.
    fn triangular_row(&self, i: usize) -> Elimination {
        let width = self.rho + self.d_max + 1;
        let g = self.g_tilde();
        let mut rows: Vec<Vec<RatFun>> = self
            .retained
            .iter()
            .enumerate()
            .map(|(c, &col)| {
                let mut eq: Vec<RatFun> = self.a_hat.iter().map(|row| row[col].clone()).collect();
                eq.push(g[i][c].clone());
                eq
            })
            .collect();
        for l in 0..i {
            for k in 0..self.degrees[l] {
                let mut eq: Vec<RatFun> = self.a_hat.iter().map(|row| row[l * width + k].clone()).collect();
                eq.push(RatFun::zero());
                rows.push(eq);
            }
        }
        Elimination::new(rows.iter().map(|eq| clear_row(eq)).collect(), self.unknowns())
    }

    pub(crate) fn eliminate(&self) -> Elimination {
        let rows = self.equations().iter().map(|eq| clear_row(eq)).collect();
        Elimination::new(rows, self.unknowns())
    }

    pub fn z_degree_bound(&self) -> ZDegreeBound {
        let mut row_degs: Vec<i64> = self
            .equations()
            .iter()
            .map(|eq| {
                clear_row(eq)
                    .iter()
                    .filter_map(|p| p.degree())
                    .max()
                    .map_or(0, |d| d as i64)
            })
            .collect();
        row_degs.sort_unstable_by(|a, b| b.cmp(a));
        let u: i64 = row_degs.iter().take(self.unknowns()).sum();
        let col_deg = (0..self.a_hat.first().map_or(0, Vec::len))
            .map(|c| {
                let col: Vec<RatFun> = self.a_hat.iter().map(|row| row[c].clone()).collect();
                let (cleared, l) = clear_row_with_lcm(&col);
                cleared
                    .iter()
                    .chain(std::iter::once(&l))
                    .filter_map(|p| p.degree())
                    .max()
                    .map_or(0, |d| d as i64)
            })
            .max()
            .unwrap_or(0);
        ZDegreeBound { u, h: u + col_deg }
    }

    /// Rebuilds `T` from a solution vector per row.
    fn assemble(&self, solution: &[Vec<RatFun>]) -> OreMatrix {
        let n = self.n;
        let mut t = OreMatrix::zeros(&self.ring, n, n);
        for (i, x) in solution.iter().enumerate() {
            for j in 0..n {
                let coeffs = x[j * (self.rho + 1)..(j + 1) * (self.rho + 1)].to_vec();
                t[(i, j)] = OrePoly::new(coeffs, self.ring.clone());
            }
        }
        t
    }
}

fn check_square(a: &OreMatrix) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

fn check_degrees(a: &OreMatrix, d: &DegreeSequence) -> Result<()> {
    let n = a.rows();
    if d.len() != n {
        return Err(Error::InvalidDegrees(format!(
            "{} degrees for a {n}x{n} matrix",
            d.len()
        )));
    }
    let cap = n * a.max_deg();
    if let Some(&bad) = d.as_slice().iter().find(|&&di| di > cap) {
        return Err(Error::InvalidDegrees(format!("degree {bad} exceeds the bound {cap}")));
    }
    Ok(())
}

/// `rho = (n - 1) d_max + max_i d_i`.
pub fn default_rho(a: &OreMatrix, d: &DegreeSequence) -> usize {
    a.rows().saturating_sub(1) * a.max_deg() + d.as_slice().iter().copied().max().unwrap_or(0)
}

pub fn build_reduced_system(a: &OreMatrix, d: &DegreeSequence) -> Result<ReducedSystem> {
    check_square(a)?;
    check_degrees(a, d)?;
    build_reduced_system_with_rho(a, d, default_rho(a, d))
}

/// Builds the system with an explicit bound `rho` on the degree of `T`.
/// Any `rho` at least the default yields the same solution set on `T A`.
pub fn build_reduced_system_with_rho(
    a: &OreMatrix,
    d: &DegreeSequence,
    rho: usize,
) -> Result<ReducedSystem> {
    let n = check_square(a)?;
    if d.len() != n {
        return Err(Error::InvalidDegrees(format!(
            "{} degrees for a {n}x{n} matrix",
            d.len()
        )));
    }
    let d_max = a.max_deg();
    let width = rho + d_max + 1;
    let mut a_hat = Vec::with_capacity(n * (rho + 1));
    let blocks: Vec<Vec<Vec<OrePoly>>> = (0..n)
        .map(|j| (0..n).map(|l| a[(j, l)].d_powers_times(rho)).collect())
        .collect();
    for block_row in &blocks {
        for k in 0..=rho {
            let mut row = Vec::with_capacity(n * width);
            for powers in block_row {
                let p = &powers[k];
                row.extend((0..width).map(|c| p.coeff(c)));
            }
            a_hat.push(row);
        }
    }
    let mut retained = Vec::new();
    let mut columns = Vec::new();
    for (l, &dl) in d.as_slice().iter().enumerate() {
        for k in dl..width {
            retained.push(l * width + k);
            columns.push((l, k));
        }
    }
    Ok(ReducedSystem {
        ring: a.ring().clone(),
        n,
        d_max,
        rho,
        degrees: d.as_slice().to_vec(),
        a_hat,
        retained,
        columns,
    })
}

pub fn hermite_given_degrees(a: &OreMatrix, d: &DegreeSequence) -> Result<Trichotomy> {
    let sys = build_reduced_system(a, d)?;
    classify(a, &sys)
}

pub fn hermite_given_degrees_with_rho(
    a: &OreMatrix,
    d: &DegreeSequence,
    rho: usize,
) -> Result<Trichotomy> {
    check_degrees(a, d)?;
    let sys = build_reduced_system_with_rho(a, d, rho)?;
    classify(a, &sys)
}

fn classify(a: &OreMatrix, sys: &ReducedSystem) -> Result<Trichotomy> {
    let elim = sys.eliminate();
    if !elim.is_consistent() {
        return Ok(Trichotomy::NotDominates);
    }
    if elim.rank() < elim.unknowns() {
        // row 0 gains no equations, so the solution stays non-unique
        let triangular = (1..sys.n)
            .filter(|&i| sys.degrees[..i].iter().any(|&d| d > 0))
            .all(|i| sys.triangular_row(i).is_consistent());
        return Ok(if triangular {
            Trichotomy::StrictlyDominates
        } else {
            Trichotomy::NotDominates
        });
    }
    let u = sys.assemble(&elim.solve()?);
    let h = u.try_mul(a)?;
    if !(0..sys.n).all(|i| (0..i).all(|l| h[(i, l)].is_zero())) {
        return Ok(Trichotomy::NotDominates);
    }
    let diag_ok = (0..sys.n).all(|i| h[(i, i)].deg() == Some(sys.degrees[i]));
    if !diag_ok || !is_hermite_shape(&h) {
        return Err(Error::RankDeficiency(
            "unique solution is not in Hermite form".into(),
        ));
    }
    Ok(Trichotomy::Exact(HermitePair { h, u }))
}

/// Finds the diagonal degrees of the Hermite form of a square full-rank
/// matrix, together with the Hermite pair from the final probe.
pub(crate) fn search_degrees(a: &OreMatrix) -> Result<(DegreeSequence, HermitePair)> {
    let n = check_square(a)?;
    let top = n * a.max_deg();
    let mut found: Vec<usize> = Vec::with_capacity(n);
    let probe = |found: &[usize], dk: usize| {
        let mut d = found.to_vec();
        d.push(dk);
        d.resize(n, top);
        let d = DegreeSequence::new(d);
        let t = hermite_given_degrees(a, &d)?;
        Ok::<_, Error>((d, t))
    };
    for _ in 0..n {
        // smallest d_k whose system is consistent; top is always consistent
        let (mut lo, mut hi) = (0, top);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match probe(&found, mid)? {
                (d, Trichotomy::Exact(pair)) => return Ok((d, pair)),
                (_, Trichotomy::NotDominates) => lo = mid + 1,
                (_, Trichotomy::StrictlyDominates) => hi = mid,
            }
        }
        found.push(lo);
    }
    let d = DegreeSequence::new(found);
    match hermite_given_degrees(a, &d)? {
        Trichotomy::Exact(pair) => Ok((d, pair)),
        _ => Err(Error::RankDeficiency(format!(
            "degree search ended at {d} without a unique solution"
        ))),
    }
}

pub fn find_degree_sequence(a: &OreMatrix) -> Result<DegreeSequence> {
    Ok(search_degrees(a)?.0)
}

