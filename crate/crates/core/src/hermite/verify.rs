//! Independent checks of a claimed Hermite pair.

use std::fmt;

use crate::degree::Degree;
use crate::detform::{is_unimodular, ore_rank};
use crate::matrix::OreMatrix;

/// Outcome of [`verify_hermite`]. The degree-bound checks only apply to a
/// square full-rank input and are reported as passing otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteReport {
    /// Number of nonzero rows of `H`.
    pub rank: usize,
    /// Degrees of the leading entries of the nonzero rows of `H`.
    pub diag_degrees: Vec<usize>,
    pub product: bool,
    pub zero_rows_last: bool,
    pub leading_monic: bool,
    pub zeros_below: bool,
    pub reduced_above: bool,
    pub unimodular: bool,
    pub diagonal_degree_bound: bool,
    pub row_degree_bound: bool,
    pub u_degree_bound: bool,
}

impl HermiteReport {
    pub fn checks(&self) -> [(&'static str, bool); 9] {
        [
            ("product", self.product),
            ("zero_rows_last", self.zero_rows_last),
            ("leading_monic", self.leading_monic),
            ("zeros_below", self.zeros_below),
            ("reduced_above", self.reduced_above),
            ("unimodular", self.unimodular),
            ("diagonal_degree_bound", self.diagonal_degree_bound),
            ("row_degree_bound", self.row_degree_bound),
            ("u_degree_bound", self.u_degree_bound),
        ]
    }

    pub fn verified(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }

    pub fn is_hermite_shape(&self) -> bool {
        self.zero_rows_last && self.leading_monic && self.zeros_below && self.reduced_above
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.checks()
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| *name)
            .collect()
    }
}

/// Key-value lines: `rank`, `diag_degrees`, `verified`, then every check.
impl fmt::Display for HermiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank={}", self.rank)?;
        let degs: Vec<String> = self.diag_degrees.iter().map(usize::to_string).collect();
        writeln!(f, "diag_degrees={}", degs.join(","))?;
        writeln!(f, "verified={}", self.verified())?;
        for (name, ok) in self.checks() {
            writeln!(f, "{name}={ok}")?;
        }
        Ok(())
    }
}

fn leading_col(h: &OreMatrix, i: usize) -> Option<usize> {
    (0..h.cols()).find(|&j| !h[(i, j)].is_zero())
}

struct Shape {
    zero_rows_last: bool,
    leading_monic: bool,
    zeros_below: bool,
    reduced_above: bool,
}

fn shape(h: &OreMatrix) -> Shape {
    let leads: Vec<Option<usize>> = (0..h.rows()).map(|i| leading_col(h, i)).collect();
    let r = leads.iter().filter(|l| l.is_some()).count();
    let zero_rows_last = leads.iter().take(r).all(Option::is_some);
    let mut leading_monic = true;
    let mut zeros_below = true;
    let mut reduced_above = true;
    for (i, lead) in leads.iter().enumerate() {
        let Some(c) = *lead else { continue };
        let pivot = &h[(i, c)];
        leading_monic &= pivot.is_monic();
        // staircase: everything below and to the left of the pivot vanishes
        zeros_below &= (i + 1..h.rows()).all(|k| (0..=c).all(|j| h[(k, j)].is_zero()));
        reduced_above &= (0..i).all(|k| h[(k, c)].degree() < pivot.degree());
    }
    Shape {
        zero_rows_last,
        leading_monic,
        zeros_below,
        reduced_above,
    }
}

/// Conditions (i)-(iv) of the Hermite form, with echelon staircase.
pub fn is_hermite_shape(h: &OreMatrix) -> bool {
    let s = shape(h);
    s.zero_rows_last && s.leading_monic && s.zeros_below && s.reduced_above
}

fn finite(d: Degree) -> i64 {
    d.finite().unwrap_or(0)
}

pub fn verify_hermite(a: &OreMatrix, h: &OreMatrix, u: &OreMatrix) -> HermiteReport {
    let product = u.try_mul(a).is_ok_and(|ua| &ua == h);
    let s = shape(h);
    let leads: Vec<(usize, usize)> = (0..h.rows())
        .filter_map(|i| leading_col(h, i).map(|c| (i, c)))
        .collect();
    let diag_degrees = leads
        .iter()
        .map(|&(i, c)| h[(i, c)].deg().unwrap_or(0))
        .collect::<Vec<_>>();
    let unimodular = is_unimodular(u);

    let n = a.rows();
    let applies = a.is_square() && h.rows() == n && leads.len() == n && ore_rank(a) == n;
    let cap = (n * a.max_deg()) as i64;
    let (mut diagonal_degree_bound, mut row_degree_bound, mut u_degree_bound) = (true, true, true);
    if applies {
        diagonal_degree_bound = diag_degrees.iter().sum::<usize>() as i64 <= cap;
        row_degree_bound = (0..n).all(|i| {
            let sum: i64 = h.row(i).iter().map(|e| finite(e.degree())).sum();
            sum <= cap
        });
        let u_cap = (n.saturating_sub(1) * a.max_deg()) as i64;
        u_degree_bound = u.degree() <= Degree::Finite(u_cap);
    }
    HermiteReport {
        rank: leads.len(),
        diag_degrees,
        product,
        zero_rows_last: s.zero_rows_last,
        leading_monic: s.leading_monic,
        zeros_below: s.zeros_below,
        reduced_above: s.reduced_above,
        unimodular,
        diagonal_degree_bound,
        row_degree_bound,
        u_degree_bound,
    }
}
