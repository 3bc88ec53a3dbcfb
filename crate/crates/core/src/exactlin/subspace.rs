use std::fmt;

use num_traits::Zero;

use super::{format_vector, is_zero_vector, kernel, unit_vector, Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// A subspace of `Q^d` held by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal
/// exactly when their canonical bases are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            rows: (0..ambient).map(|i| unit_vector(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Span of the standard basis vectors with the given 0-based indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let mut vs = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    dim: ambient,
                });
            }
            vs.push(unit_vector(ambient, i));
        }
        Self::from_vectors(ambient, vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Canonical basis vectors (rows of the RREF basis matrix).
    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.ambient, self.rows.clone()).expect("rows have ambient length")
    }

    /// Pivot coordinate of each basis vector, strictly increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; they index a canonical complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .collect()
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    /// Remainder of `v` after eliminating every pivot coordinate; zero iff `v`
    /// lies in the subspace. Panics on a length mismatch.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_len(v)?;
        Ok(is_zero_vector(&self.reduce(v)))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if v.len() != self.ambient || !is_zero_vector(&self.reduce(v)) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> Result<bool> {
        self.check_len(&v)?;
        let mut r = self.reduce(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone())?;
        }
        Ok(s)
    }

    /// Vectors `w` with `u . w = 0` for every `u` in the subspace.
    pub fn annihilator(&self) -> Subspace {
        if self.rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        kernel(&self.basis_matrix())
    }

    /// `U ∩ W = (U° + W°)°` for the standard bilinear form.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let meet = self.annihilator().sum(&other.annihilator())?.annihilator();
        let join = self.sum(other)?;
        assert_eq!(
            join.dim() + meet.dim(),
            self.dim() + other.dim(),
            "dimension formula for sum and intersection"
        );
        Ok(meet)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.rows.iter().all(|v| is_zero_vector(&other.reduce(v))))
    }

    /// Matrix of the canonical projection `Q^d -> Q^d / U`, with the quotient
    /// coordinatised by [`Subspace::complement_coordinates`].
    pub fn quotient_matrix(&self) -> Matrix {
        let comp = self.complement_coordinates();
        let columns: Vec<Vector> = (0..self.ambient)
            .map(|j| {
                let r = self.reduce(&unit_vector(self.ambient, j));
                comp.iter().map(|&c| r[c].clone()).collect()
            })
            .collect();
        Matrix::from_columns(comp.len(), &columns).expect("columns have quotient length")
    }

    /// Image of the subspace under a linear map with `ambient_dim` columns.
    pub fn map(&self, m: &Matrix) -> Result<Subspace> {
        if m.cols() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: m.cols(),
            });
        }
        Subspace::from_vectors(m.rows(), self.rows.iter().map(|v| m.apply(v)))
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.rows
            .iter()
            .all(|v| is_zero_vector(&self.reduce(&m.apply(v))))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| format_vector(r)).collect();
        write!(f, "span{{{}}}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn e(d: usize, i: usize) -> Vector {
        unit_vector(d, i - 1)
    }

    fn span(d: usize, vs: &[Vector]) -> Subspace {
        Subspace::from_vectors(d, vs.to_vec()).unwrap()
    }

    #[test]
    fn sum_of_lines() {
        let s = span(3, &[e(3, 1)]).sum(&span(3, &[e(3, 2)])).unwrap();
        assert_eq!(s, span(3, &[e(3, 1), e(3, 2)]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = span(3, &[e(3, 1), e(3, 2)]);
        let b = span(3, &[e(3, 2), e(3, 3)]);
        assert_eq!(a.intersect(&b).unwrap(), span(3, &[e(3, 2)]));
    }

    #[test]
    fn membership() {
        let line = span(3, &[e(3, 1)]);
        let v: Vector = vec![int(1), int(1), int(0)];
        assert!(!line.contains(&v).unwrap());
        assert!(line.contains(&[int(-4), int(0), int(0)]).unwrap());
        assert!(line.contains(&[int(1)]).is_err());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert!(Subspace::zero(2).sum(&Subspace::zero(3)).is_err());
        assert!(Subspace::zero(2).intersect(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn canonical_basis_is_independent_of_spanning_set() {
        let a = span(
            3,
            &[vec![int(1), int(2), int(0)], vec![int(0), int(1), int(1)]],
        );
        let b = span(
            3,
            &[vec![int(1), int(3), int(1)], vec![int(2), int(4), int(0)]],
        );
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
        assert_eq!(a.complement_coordinates(), vec![2]);
    }

    #[test]
    fn quotient_matrix_kills_the_subspace() {
        let s = span(3, &[vec![int(1), int(1), int(0)]]);
        let q = s.quotient_matrix();
        assert_eq!((q.rows(), q.cols()), (2, 3));
        assert!(q.apply(&[int(2), int(2), int(0)]).iter().all(Zero::is_zero));
        assert_eq!(s.map(&q).unwrap(), Subspace::zero(2));
    }
}
