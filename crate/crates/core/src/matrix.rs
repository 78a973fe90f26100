use std::ops::{Index, IndexMut};
use std::sync::Arc;

use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::field::RingSpec;
use crate::ore::{same_ring, OrePoly};

/// Dense `rows x cols` matrix of Ore polynomials over one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreMatrix {
    ring: Arc<RingSpec>,
    rows: usize,
    cols: usize,
    entries: Vec<OrePoly>,
}

impl OreMatrix {
    /// Builds a matrix from row-major entries, checking shape and ring.
    pub fn new(ring: Arc<RingSpec>, rows: usize, cols: usize, entries: Vec<OrePoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !same_ring(e.ring(), &ring)) {
            return Err(Error::RingMismatch(ring.to_string(), bad.ring().to_string()));
        }
        Ok(OreMatrix {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: Arc<RingSpec>, rows: Vec<Vec<OrePoly>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        OreMatrix::new(ring, m, n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(ring: &Arc<RingSpec>, rows: usize, cols: usize) -> Self {
        OreMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![OrePoly::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<RingSpec>, n: usize) -> Self {
        let mut m = OreMatrix::zeros(ring, n, n);
        for i in 0..n {
            m[(i, i)] = OrePoly::one(ring);
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[OrePoly] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[OrePoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(OrePoly::is_zero)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(OrePoly::is_zero)
    }

    /// Largest `D`-degree of any entry.
    pub fn degree(&self) -> Degree {
        self.entries
            .iter()
            .map(OrePoly::degree)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Largest `D`-degree as an index, zero for the zero matrix.
    pub fn max_deg(&self) -> usize {
        self.degree().finite().map_or(0, |d| d as usize)
    }

    /// Largest `z`-degree of any coefficient of any entry.
    pub fn deg_z(&self) -> Degree {
        self.entries
            .iter()
            .map(OrePoly::deg_z)
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn try_mul(&self, rhs: &OreMatrix) -> Result<OreMatrix> {
        if !same_ring(&self.ring, &rhs.ring) {
            return Err(Error::RingMismatch(self.ring.to_string(), rhs.ring.to_string()));
        }
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = OreMatrix::zeros(&self.ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Replaces rows `i` and `j` by `(x r_i + y r_j, z r_i + w r_j)`.
    pub fn combine_rows(&mut self, i: usize, j: usize, w: &[[OrePoly; 2]; 2]) {
        for c in 0..self.cols {
            let a = self[(i, c)].clone();
            let b = self[(j, c)].clone();
            self[(i, c)] = &(&w[0][0] * &a) + &(&w[0][1] * &b);
            self[(j, c)] = &(&w[1][0] * &a) + &(&w[1][1] * &b);
        }
    }

    /// `r_target -= q * r_source`.
    pub fn sub_row_multiple(&mut self, target: usize, source: usize, q: &OrePoly) {
        for c in 0..self.cols {
            let s = &self[(source, c)];
            if s.is_zero() {
                continue;
            }
            let prod = q * s;
            self[(target, c)] = &self[(target, c)] - &prod;
        }
    }

    /// Left-multiplies row `i` by a polynomial.
    pub fn scale_row(&mut self, i: usize, c: &OrePoly) {
        for col in 0..self.cols {
            self[(i, col)] = c * &self[(i, col)];
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> OreMatrix {
        let entries = idx.iter().flat_map(|&i| self.row(i).iter().cloned()).collect();
        OreMatrix {
            ring: self.ring.clone(),
            rows: idx.len(),
            cols: self.cols,
            entries,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> OreMatrix {
        let mut entries = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            for &j in idx {
                entries.push(self[(i, j)].clone());
            }
        }
        OreMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: idx.len(),
            entries,
        }
    }

    /// Block-diagonal `diag(self, I_k)`.
    pub fn pad_identity(&self, k: usize) -> OreMatrix {
        let n = self.rows + k;
        let mut out = OreMatrix::zeros(&self.ring, n, self.cols + k);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..k {
            out[(self.rows + i, self.cols + i)] = OrePoly::one(&self.ring);
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &OreMatrix) -> Result<OreMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension("column counts differ".into()));
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        OreMatrix::new(self.ring.clone(), self.rows + other.rows, self.cols, entries)
    }
}

impl Index<(usize, usize)> for OreMatrix {
    type Output = OrePoly;
    fn index(&self, (i, j): (usize, usize)) -> &OrePoly {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for OreMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut OrePoly {
        &mut self.entries[i * self.cols + j]
    }
}
