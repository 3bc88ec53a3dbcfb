use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{int, is_zero_vector, Scalar, Subspace, Vector};
use crate::error::{Error, Result};

/// Dense rational matrix, row-major. Acts on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a `rows x columns.len()` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        Ok(m)
    }

    /// Convenience constructor from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer rows")
    }

    /// Inverse of [`Matrix::flatten`] for square matrices.
    pub fn from_flat(n: usize, flat: &[Scalar]) -> Result<Self> {
        if flat.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: flat.len(),
            });
        }
        Ok(Self {
            rows: n,
            cols: n,
            data: flat.to_vec(),
        })
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

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening; the `(a, b)` entry lands at `a * cols + b`.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// Matrix-vector product. Panics on a length mismatch.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, exp: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn determinant(&self) -> Result<Scalar> {
        let n = self.ensure_square()?;
        let mut a = self.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..n {
                let f = a.get(r, col) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(col, c) * &f;
                    a.data[r * n + c] -= v;
                }
            }
        }
        Ok(det)
    }

    /// Matrix of this operator restricted to an invariant subspace, in the
    /// subspace's canonical basis. `None` if the subspace is not invariant.
    pub fn restrict_to(&self, space: &Subspace) -> Option<Matrix> {
        assert!(self.is_square() && self.rows == space.ambient_dim());
        let r = space.dim();
        let mut out = Matrix::zeros(r, r);
        for (j, u) in space.basis().iter().enumerate() {
            let image = self.apply(u);
            let coords = space.coordinates(&image)?;
            for (i, c) in coords.into_iter().enumerate() {
                out.data[i * r + j] = c;
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination.
pub fn rref(m: &Matrix) -> Rref {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        a.swap_rows(p, row);
        let inv = a.get(row, col).recip();
        for c in col..a.cols {
            let v = a.get(row, c) * &inv;
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let f = a.get(r, col).clone();
            for c in col..a.cols {
                let v = a.get(row, c) * &f;
                if !v.is_zero() {
                    a.data[r * a.cols + c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    Rref {
        reduced: a,
        rank: row,
        pivots,
    }
}

/// Null space `{v : M v = 0}` as a subspace of `Q^cols`.
pub fn kernel(m: &Matrix) -> Subspace {
    let Rref {
        reduced,
        rank,
        pivots,
    } = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let vectors = free.iter().map(|&f| {
        let mut v = super::zero_vector(m.cols);
        v[f] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -reduced.get(i, f);
        }
        v
    });
    let ker = Subspace::from_vectors(m.cols, vectors).expect("kernel vectors have ambient length");
    assert_eq!(ker.dim() + rank, m.cols, "rank-nullity");
    ker
}

/// Column space of `M` as a subspace of `Q^rows`.
pub fn image(m: &Matrix) -> Subspace {
    let im = Subspace::from_vectors(m.rows, m.transpose().row_vectors())
        .expect("columns have ambient length");
    assert_eq!(im.dim() + kernel_dim(m), m.cols, "rank-nullity");
    im
}

fn kernel_dim(m: &Matrix) -> usize {
    m.cols - rref(m).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit_vector;

    #[test]
    fn rref_identity_is_fixed() {
        let r = rref(&Matrix::identity(2));
        assert_eq!(r.reduced, Matrix::identity(2));
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
    }

    #[test]
    fn rref_zero_has_rank_zero() {
        let r = rref(&Matrix::zeros(3, 3));
        assert_eq!(r.reduced, Matrix::zeros(3, 3));
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let r = rref(&Matrix::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r.reduced, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_and_image_of_diagonal() {
        let d = Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(kernel(&Matrix::identity(3)), Subspace::zero(3));
        assert_eq!(
            kernel(&d),
            Subspace::from_vectors(3, [unit_vector(3, 0)]).unwrap()
        );
        assert_eq!(
            image(&d),
            Subspace::from_vectors(3, [unit_vector(3, 1), unit_vector(3, 2)]).unwrap()
        );
    }

    #[test]
    fn determinant_small() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), int(1));
        let m = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]]);
        assert_eq!(m.determinant().unwrap(), int(-5));
        assert!(Matrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn power_of_jordan_block_vanishes() {
        let j = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(!j.pow(2).is_zero());
        assert!(j.pow(3).is_zero());
        assert_eq!(j.pow(0), Matrix::identity(3));
    }
}
