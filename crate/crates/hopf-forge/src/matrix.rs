//! Dense exact matrices, row-major. Columns are images of source basis
//! vectors, so composition of maps is `g.mul(&f)` for "apply f first".
//! Basis order for tensor words is lexicographic with the leftmost factor
//! most significant; `kron(a, b)` keeps `a` on the most significant digits.

use crate::scalar::{Domain, Scalar};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    pub rows: usize,
    pub cols: usize,
    pub domain: Domain,
    data: Vec<Scalar>,
}

/// Proof that a square matrix is singular: a nonzero kernel vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularWitness {
    pub kernel: Vec<Scalar>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, domain: Domain) -> Self {
        ExactMatrix { rows, cols, domain, data: vec![domain.zero(); rows * cols] }
    }

    pub fn identity(n: usize, domain: Domain) -> Self {
        let mut m = Self::zero(n, n, domain);
        for i in 0..n {
            m.set(i, i, domain.one());
        }
        m
    }

    pub fn from_rows(domain: Domain, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        ExactMatrix { rows: r, cols: c, domain, data }
    }

    pub fn from_fn(rows: usize, cols: usize, domain: Domain, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, domain, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    /// Nonzero entries of column `j` as `(row, value)` pairs.
    pub fn col_sparse(&self, j: usize) -> Vec<(usize, Scalar)> {
        (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                if v.is_zero() { None } else { Some((i, v.clone())) }
            })
            .collect()
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// `self * rhs`; as maps this applies `rhs` first.
    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        assert_eq!(self.domain, rhs.domain, "domain mismatch");
        let mut out = ExactMatrix::zero(self.rows, rhs.cols, self.domain);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, self.domain, |i, j| {
            self.get(i, j).add(rhs.get(i, j))
        })
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, self.domain, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product with `self` on the most significant index digits.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.domain, rhs.domain, "domain mismatch");
        let mut out = ExactMatrix::zero(self.rows * rhs.rows, self.cols * rhs.cols, self.domain);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![self.domain.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out[i] = out[i].add(&a.mul(x));
                }
            }
        }
        out
    }

    /// Reduced row echelon form. Returns `(rref, pivot_columns)`.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).neg();
                    m.add_scaled_row(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse by Gauss-Jordan, or a nonzero kernel vector if singular.
    pub fn invert(&self) -> Result<ExactMatrix, SingularWitness> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let (r, pivots) = self.rref();
        if pivots.len() == n {
            // Redo elimination on [A | I] to collect the inverse.
            let mut aug = ExactMatrix::zero(n, 2 * n, self.domain);
            for i in 0..n {
                for j in 0..n {
                    aug.set(i, j, self.get(i, j).clone());
                }
                aug.set(i, n + i, self.domain.one());
            }
            let (red, _) = aug.rref();
            let inv = ExactMatrix::from_fn(n, n, self.domain, |i, j| red.get(i, n + j).clone());
            return Ok(inv);
        }
        // Free column -> kernel vector: x[free] = 1, x[pivot_i] = -rref[i][free].
        let free = (0..n).find(|c| !pivots.contains(c)).expect("rank < n");
        let mut kernel = vec![self.domain.zero(); n];
        kernel[free] = self.domain.one();
        for (i, &pc) in pivots.iter().enumerate() {
            kernel[pc] = r.get(i, free).neg();
        }
        debug_assert!(self.apply(&kernel).iter().all(Scalar::is_zero));
        Err(SingularWitness { kernel })
    }

    /// Rank factorization of an idempotent `q = i * qbar` with
    /// `qbar * i = identity`. `i` is the pivot columns of `q`, `qbar` the
    /// nonzero rows of its reduced echelon form.
    pub fn split_idempotent(&self) -> (ExactMatrix, ExactMatrix) {
        assert_eq!(self.rows, self.cols, "idempotent must be square");
        debug_assert_eq!(self.mul(self), *self, "not idempotent");
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let i = ExactMatrix::from_fn(self.rows, rank, self.domain, |row, k| {
            self.get(row, pivots[k]).clone()
        });
        let qbar = ExactMatrix::from_fn(rank, self.cols, self.domain, |k, col| {
            r.get(k, col).clone()
        });
        debug_assert_eq!(qbar.mul(&i), ExactMatrix::identity(rank, self.domain));
        debug_assert_eq!(i.mul(&qbar), *self);
        (i, qbar)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let tmp = self.get(a, j).clone();
            let bv = self.get(b, j).clone();
            self.set(a, j, bv);
            self.set(b, j, tmp);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(r, j).mul(factor);
            self.set(r, j, v);
        }
    }

    fn add_scaled_row(&mut self, dst: usize, src: usize, factor: &Scalar) {
        for j in 0..self.cols {
            let v = self.get(dst, j).add(&self.get(src, j).mul(factor));
            self.set(dst, j, v);
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
