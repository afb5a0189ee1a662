//! Sparse integer matrices and transform-free invariant factors.
//!
//! Boundary matrices of meshes are very sparse with unit entries. Homology
//! only needs their invariant factors, so the reduction here runs the same
//! smallest-pivot gcd elimination as [`super::smith_normal_form`] but keeps
//! the matrix sparse and skips the unimodular transforms.

use std::collections::{BTreeMap, BTreeSet};

use super::matrix::IntMatrix;
use crate::scalar::IntScalar;

/// Column-compressed integer matrix with small entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    /// Per column: (row, value), sorted by row, values nonzero.
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        assert_eq!(columns.len(), cols);
        let columns = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|&(_, v)| v != 0);
                c.sort_unstable_by_key(|&(r, _)| r);
                debug_assert!(c.iter().all(|&(r, _)| r < rows));
                c
            })
            .collect();
        Self {
            rows,
            cols,
            columns,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Vec::new(); cols])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j]
            .binary_search_by_key(&i, |&(r, _)| r)
            .map_or(0, |k| self.columns[j][k].1)
    }

    pub fn to_dense<T: IntScalar>(&self) -> IntMatrix<T> {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m[(i, j)] = T::from_i64(v).expect("entry fits");
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                cols[i].push((j, v));
            }
        }
        Self::new(self.cols, self.rows, cols)
    }

    /// Product `self · other`, exact in i64.
    pub fn matmul(&self, other: &SparseIntMatrix) -> SparseIntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let cols = other
            .columns
            .iter()
            .map(|ocol| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, b) in ocol {
                    for &(i, a) in &self.columns[k] {
                        *acc.entry(i).or_insert(0) += a * b;
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Self::new(self.rows, other.cols, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    /// Rank over the rationals (number of invariant factors).
    pub fn rank(&self) -> usize {
        invariant_factors::<num_bigint::BigInt>(self).len()
    }
}

struct Workspace<T> {
    rows: Vec<BTreeMap<usize, T>>,
    cols: Vec<BTreeSet<usize>>,
}

impl<T: IntScalar> Workspace<T> {
    fn from_sparse(a: &SparseIntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); a.rows];
        let mut cols = vec![BTreeSet::new(); a.cols];
        for (j, col) in a.columns.iter().enumerate() {
            for &(i, v) in col {
                rows[i].insert(j, T::from_i64(v).expect("entry fits"));
                cols[j].insert(i);
            }
        }
        Self { rows, cols }
    }

    fn set(&mut self, i: usize, j: usize, v: T) {
        if v.is_zero() {
            self.rows[i].remove(&j);
            self.cols[j].remove(&i);
        } else {
            self.rows[i].insert(j, v);
            self.cols[j].insert(i);
        }
    }

    /// row[dst] += factor * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, factor: &T) {
        let src_entries: Vec<(usize, T)> =
            self.rows[src].iter().map(|(&j, v)| (j, v.clone())).collect();
        for (j, v) in src_entries {
            let cur = self.rows[dst].get(&j).cloned().unwrap_or_else(T::zero);
            self.set(dst, j, cur + v * factor.clone());
        }
    }

    fn pick_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(T, usize, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, v) in row {
                let mag = v.abs();
                let cost = (row.len() - 1) * (self.cols[j].len() - 1);
                let better = match &best {
                    None => true,
                    Some((bm, bc, _, _)) => mag < *bm || (mag == *bm && cost < *bc),
                };
                if better {
                    let unit = mag.is_one() && cost == 0;
                    best = Some((mag, cost, i, j));
                    if unit {
                        return best.map(|(_, _, i, j)| (i, j));
                    }
                }
            }
        }
        best.map(|(_, _, i, j)| (i, j))
    }
}

/// Invariant factors (positive, with divisibility chain) of a sparse matrix.
pub fn invariant_factors<T: IntScalar>(a: &SparseIntMatrix) -> Vec<T> {
    let mut w = Workspace::<T>::from_sparse(a);
    let mut diag: Vec<T> = Vec::new();

    'outer: while let Some((r, c)) = w.pick_pivot() {
        let p = w.rows[r][&c].clone();

        let others: Vec<usize> = w.cols[c].iter().copied().filter(|&i| i != r).collect();
        let mut residual = false;
        for i in others {
            let q = w.rows[i][&c].clone() / p.clone();
            if !q.is_zero() {
                w.row_axpy(i, r, &(-q));
            }
            residual |= w.rows[i].contains_key(&c);
        }
        if residual {
            continue 'outer;
        }

        // Column c is now {r}; column operations only touch row r.
        let row_entries: Vec<(usize, T)> = w.rows[r]
            .iter()
            .filter(|(&j, _)| j != c)
            .map(|(&j, v)| (j, v.clone()))
            .collect();
        let mut residual = false;
        for (j, v) in row_entries {
            let rem = v % p.clone();
            residual |= !rem.is_zero();
            w.set(r, j, rem);
        }
        if residual {
            continue 'outer;
        }

        diag.push(p.abs());
        w.set(r, c, T::zero());
    }

    normalize_diagonal(diag)
}

/// Turns a list of diagonal entries into invariant factors via gcd/lcm.
pub fn normalize_diagonal<T: IntScalar>(mut diag: Vec<T>) -> Vec<T> {
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            if diag[j].is_multiple_of(&diag[i]) {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag.sort();
    diag
}
