//! Hermite forms of matrices over the Ore ring.
//!
//! [`hermite_naive`] runs Euclidean elimination and serves as the oracle.
//! [`hermite`] solves linear systems over `Q(z)` for square full-rank
//! inputs, reduces wide inputs to a square column subset and rank-deficient
//! inputs to their nonzero echelon rows, and always verifies its answer.

mod naive;
mod solve;
mod system;
mod verify;

use std::fmt;

pub use naive::{hermite_naive, triangularize, Triangular};
pub use system::{
    build_reduced_system, build_reduced_system_with_rho, default_rho, find_degree_sequence,
    hermite_given_degrees, hermite_given_degrees_with_rho, ReducedSystem, ZDegreeBound,
};
pub use verify::{is_hermite_shape, verify_hermite, HermiteReport};

use crate::detform::ore_rank;
use crate::error::{Error, Result};
use crate::matrix::OreMatrix;

/// `U A = H` with `U` unimodular and `H` in Hermite form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitePair {
    pub h: OreMatrix,
    pub u: OreMatrix,
}

/// Proposed degrees of the diagonal entries of `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(d: Vec<usize>) -> Self {
        DegreeSequence(d)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Component-wise `self <= other`.
    pub fn dominated_by(&self, other: &DegreeSequence) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(d: Vec<usize>) -> Self {
        DegreeSequence(d)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// How a guessed degree sequence `d` compares to the true one `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trichotomy {
    /// `h <= d` component-wise and `h != d`: the system has many solutions.
    StrictlyDominates,
    /// `h <= d` fails: the system is inconsistent.
    NotDominates,
    /// `d = h`: the unique solution, already verified.
    Exact(HermitePair),
}

/// Hermite form of a square matrix of full rank by the linear-system method.
pub fn hermite_square(a: &OreMatrix) -> Result<HermitePair> {
    Ok(system::search_degrees(a)?.1)
}

/// Full row rank, at most as many rows as columns.
fn hermite_full_row_rank(a: &OreMatrix) -> Result<HermitePair> {
    let (m, n) = (a.rows(), a.cols());
    if m == n {
        return hermite_square(a);
    }
    for cols in Combinations::new(n, m) {
        let sub = a.select_cols(&cols);
        if ore_rank(&sub) < m {
            continue;
        }
        let pair = hermite_square(&sub)?;
        let h = pair.u.try_mul(a)?;
        if is_hermite_shape(&h) {
            return Ok(HermitePair { h, u: pair.u });
        }
    }
    Err(Error::RankDeficiency("no column subset of full rank".into()))
}

fn hermite_linear(a: &OreMatrix) -> Result<HermitePair> {
    let (m, n) = (a.rows(), a.cols());
    let r = ore_rank(a);
    if r == m && m <= n {
        return hermite_full_row_rank(a);
    }
    let tri = triangularize(a);
    let r = tri.pivots.len();
    let core = tri.t.select_rows(&(0..r).collect::<Vec<_>>());
    let top = hermite_full_row_rank(&core)?;
    let h = top.h.vstack(&OreMatrix::zeros(a.ring(), m - r, n))?;
    let u = top.u.pad_identity(m - r).try_mul(&tri.p)?;
    Ok(HermitePair { h, u })
}

/// Hermite form of any matrix. The linear-system result is verified; if
/// it cannot be produced or fails verification the Euclidean result is
/// returned instead.
pub fn hermite(a: &OreMatrix) -> HermitePair {
    if a.is_zero() {
        return HermitePair {
            h: a.clone(),
            u: OreMatrix::identity(a.ring(), a.rows()),
        };
    }
    match hermite_linear(a) {
        Ok(pair) if verify_hermite(a, &pair.h, &pair.u).verified() => pair,
        _ => hermite_naive(a).0,
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            next: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let k = cur.len();
        let mut nxt = cur.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if nxt[i] < self.n - k + i {
                nxt[i] += 1;
                for j in i + 1..k {
                    nxt[j] = nxt[j - 1] + 1;
                }
                self.next = Some(nxt);
                break;
            }
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_in_lex_order() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(Combinations::new(2, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn degree_sequence_order() {
        let h = DegreeSequence::new(vec![1, 0, 2]);
        assert!(h.dominated_by(&DegreeSequence::new(vec![1, 1, 2])));
        assert!(!h.dominated_by(&DegreeSequence::new(vec![0, 3, 3])));
        assert_eq!(h.to_string(), "(1, 0, 2)");
    }
}
