//! Dense exact rational matrices: just enough linear algebra for kernel
//! computations (row reduction, nullspaces, solving against a spanning set).

use crate::scalar::Rat;
use num_traits::{One, Zero};

/// Row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_mat(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other[(k, j)].is_zero() {
                        let term = &self[(i, k)] * &other[(k, j)];
                        out[(i, j)] += term;
                    }
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let sub = &f * &self[(r, j)];
                        self[(i, j)] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one vector per free column, in column order.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (col, row) in pivot_set.iter().enumerate() {
                if let Some(row) = row {
                    vec[col] = -m[(*row, free)].clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

/// Tracks the row space of a growing set of vectors; used for span
/// saturation arguments (nilpotency index, coordinate solving).
#[derive(Debug, Clone)]
pub struct SpanBasis {
    dim: usize,
    /// Echelonized rows together with the original vectors they came from.
    rows: Vec<Vec<Rat>>,
    pivot_of_row: Vec<usize>,
}

impl SpanBasis {
    pub fn new(dim: usize) -> Self {
        SpanBasis {
            dim,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current span; returns the residual if it
    /// enlarges the span (and absorbs it), `None` if it was already inside.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivot_of_row) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.dim {
                    let sub = &f * &row[j];
                    v[j] -= sub;
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = v[p].recip();
                for x in v.iter_mut() {
                    *x = &*x * &inv;
                }
                self.rows.push(v);
                self.pivot_of_row.push(p);
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivot_of_row) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for j in 0..self.dim {
                    let sub = &f * &row[j];
                    v[j] -= sub;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

/// Expresses `target` in terms of the columns of `basis` (cols × n matrix
/// given as column vectors). Returns `None` when `target` is outside the span.
pub fn solve_in_span(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let n = target.len();
    let k = basis.len();
    // Augmented system [B | t] over the ambient dimension.
    let mut m = QMat::zeros(n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        assert_eq!(b.len(), n);
        for i in 0..n {
            m[(i, j)] = b[i].clone();
        }
    }
    for i in 0..n {
        m[(i, k)] = target[i].clone();
    }
    let pivots = m.rref();
    if pivots.contains(&k) {
        return None; // inconsistent
    }
    let mut coords = vec![Rat::zero(); k];
    for (row, &col) in pivots.iter().enumerate() {
        coords[col] = m[(row, k)].clone();
    }
    Some(coords)
}
