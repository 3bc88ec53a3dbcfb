//! Leibniz n-algebras presented by a structure tensor.
//!
//! Basis indices are 0-based throughout the Rust API; the text format and all
//! human-facing output use the 1-based names `e1, e2, ...`.

mod derivations;
mod identities;

pub use derivations::{
    check_rmult_identities, derivation_space, inner_derivation_space, is_derivation, RmultReport,
};
pub use identities::{
    check_fundamental_identity, check_fundamental_identity_with_cap, skew_check, Counterexample,
    Report, SkewReport, DEFAULT_CASE_CAP,
};

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{
    format_vector, int, is_zero_vector, unit_vector, zero_vector, Matrix, Scalar, Vector,
};

/// Largest product table (`dim^arity` entries) an algebra may carry.
const MAX_TABLE_LEN: usize = 1 << 24;

/// Sparse vector: `(basis index, nonzero coefficient)` sorted by index.
pub(crate) type SparseVec = Vec<(usize, Scalar)>;

pub(crate) fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// A finite-dimensional n-ary algebra over the rationals.
///
/// The product of basis vectors `[e_{i1}, ..., e_{in}]` is stored for every
/// index tuple in lexicographic order; absent products are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NAlgebra {
    name: String,
    arity: usize,
    dim: usize,
    products: Vec<SparseVec>,
    /// Flat indices of the nonzero products, ascending.
    support: Vec<usize>,
}

impl NAlgebra {
    /// Builds an algebra from `(index tuple, value)` pairs with 0-based indices.
    /// Repeated tuples are rejected.
    pub fn new<I>(name: impl Into<String>, arity: usize, dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Vector)>,
    {
        let mut algebra = Self::zero(name, arity, dim)?;
        let mut seen = vec![false; algebra.products.len()];
        for (tuple, value) in entries {
            if tuple.len() != arity {
                return Err(Error::Arity {
                    expected: arity,
                    found: tuple.len(),
                });
            }
            if let Some(&bad) = tuple.iter().find(|&&i| i >= dim) {
                return Err(Error::IndexOutOfRange {
                    index: bad + 1,
                    dim,
                });
            }
            if value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: value.len(),
                });
            }
            let at = algebra.flat_index(&tuple);
            if seen[at] {
                return Err(Error::DuplicateTuple(tuple.iter().map(|i| i + 1).collect()));
            }
            seen[at] = true;
            algebra.products[at] = to_sparse(&value);
        }
        algebra.support = (0..algebra.products.len())
            .filter(|&i| !algebra.products[i].is_empty())
            .collect();
        Ok(algebra)
    }

    /// The algebra with every product zero.
    pub fn zero(name: impl Into<String>, arity: usize, dim: usize) -> Result<Self> {
        if arity < 2 {
            return Err(Error::InvalidParameter(format!(
                "arity must be at least 2, got {arity}"
            )));
        }
        let len = u32::try_from(arity)
            .ok()
            .and_then(|a| dim.checked_pow(a))
            .filter(|&len| len <= MAX_TABLE_LEN)
            .ok_or_else(|| {
                Error::InvalidParameter(format!("product table of {dim}^{arity} is too large"))
            })?;
        Ok(Self {
            name: name.into(),
            arity,
            dim,
            products: vec![Vec::new(); len],
            support: Vec::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Same arity, dimension and structure constants, ignoring the name.
    pub fn same_structure(&self, other: &NAlgebra) -> bool {
        self.arity == other.arity && self.dim == other.dim && self.products == other.products
    }

    pub(crate) fn flat_index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &i| acc * self.dim + i)
    }

    pub(crate) fn basis_product(&self, tuple: &[usize]) -> &SparseVec {
        &self.products[self.flat_index(tuple)]
    }

    /// `[e_{i1}, ..., e_{in}]` as a dense vector (0-based indices).
    pub fn product(&self, tuple: &[usize]) -> Result<Vector> {
        if tuple.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.dim) {
            return Err(Error::IndexOutOfRange {
                index: bad + 1,
                dim: self.dim,
            });
        }
        Ok(self.densify(self.basis_product(tuple)))
    }

    /// Nonzero products in lexicographic tuple order.
    pub fn entries(&self) -> impl Iterator<Item = (Vec<usize>, Vector)> + '_ {
        basis_tuples(self.dim, self.arity)
            .zip(&self.products)
            .filter(|(_, p)| !p.is_empty())
            .map(|(t, p)| (t, self.densify(p)))
    }

    pub fn nonzero_products(&self) -> usize {
        self.support.len()
    }

    pub(crate) fn densify(&self, sparse: &SparseVec) -> Vector {
        let mut v = zero_vector(self.dim);
        for (i, c) in sparse {
            v[*i] = c.clone();
        }
        v
    }

    pub(crate) fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_tuple(&self, x: &ElementTuple) -> Result<()> {
        if x.len() + 1 != self.arity {
            return Err(Error::Arity {
                expected: self.arity - 1,
                found: x.len(),
            });
        }
        x.components().iter().try_for_each(|v| self.check_vector(v))
    }

    /// Multilinear bracket `[a_1, ..., a_n]` of arbitrary vectors.
    pub fn bracket(&self, args: &[Vector]) -> Result<Vector> {
        if args.len() != self.arity {
            return Err(Error::Arity {
                expected: self.arity,
                found: args.len(),
            });
        }
        args.iter().try_for_each(|v| self.check_vector(v))?;
        let sparse: Vec<SparseVec> = args.iter().map(|v| to_sparse(v)).collect();
        Ok(self.bracket_sparse(&sparse))
    }

    /// Multilinear expansion over the supports of sparse arguments.
    pub(crate) fn bracket_sparse(&self, args: &[SparseVec]) -> Vector {
        let mut out = zero_vector(self.dim);
        if args.iter().any(|a| a.is_empty()) {
            return out;
        }
        let combos = args
            .iter()
            .try_fold(1usize, |acc, a| acc.checked_mul(a.len()))
            .unwrap_or(usize::MAX);
        if combos > self.support.len() {
            let dense: Vec<Vector> = args.iter().map(|a| self.densify(a)).collect();
            self.contract_support(&dense, 0, |_, coeff, value| {
                for (k, c) in value {
                    out[*k] += &coeff * c;
                }
            });
            return out;
        }
        let mut pos = vec![0usize; args.len()];
        let mut tuple = vec![0usize; args.len()];
        loop {
            let mut coeff = Scalar::from_integer(1.into());
            for (slot, arg) in args.iter().enumerate() {
                let (i, c) = &arg[pos[slot]];
                tuple[slot] = *i;
                coeff *= c;
            }
            for (k, c) in self.basis_product(&tuple) {
                out[*k] += &coeff * c;
            }
            // advance the odometer, last slot fastest
            let mut slot = args.len();
            loop {
                if slot == 0 {
                    return out;
                }
                slot -= 1;
                pos[slot] += 1;
                if pos[slot] < args[slot].len() {
                    break;
                }
                pos[slot] = 0;
            }
        }
    }

    /// Walks the nonzero products, calling `f(first index, coefficient, value)`
    /// where the coefficient is the product of `args[slot][t_slot]` over the
    /// slots from `skip` on. Zero coefficients are skipped.
    fn contract_support<F>(&self, args: &[Vector], skip: usize, mut f: F)
    where
        F: FnMut(usize, Scalar, &SparseVec),
    {
        let mut tuple = vec![0usize; self.arity];
        'outer: for &flat in &self.support {
            let mut rest = flat;
            for slot in (0..self.arity).rev() {
                tuple[slot] = rest % self.dim;
                rest /= self.dim;
            }
            let mut coeff = int(1);
            for slot in skip..self.arity {
                let c = &args[slot - skip][tuple[slot]];
                if c.is_zero() {
                    continue 'outer;
                }
                coeff *= c;
            }
            f(tuple[0], coeff, &self.products[flat]);
        }
    }

    /// Matrix of `R(x): z -> [z, x_2, ..., x_n]` in the standard basis.
    pub fn right_mult_matrix(&self, x: &ElementTuple) -> Result<Matrix> {
        self.check_tuple(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        self.contract_support(x.components(), 1, |j, coeff, value| {
            for (k, c) in value {
                let entry = m.get(*k, j) + &coeff * c;
                m.set(*k, j, entry);
            }
        });
        Ok(m)
    }

    /// `R(e_{t_1}, ..., e_{t_{n-1}})` for a tuple of basis indices.
    pub(crate) fn right_mult_basis(&self, tuple: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        let mut full = Vec::with_capacity(self.arity);
        full.push(0);
        full.extend_from_slice(tuple);
        for j in 0..self.dim {
            full[0] = j;
            for (k, c) in self.basis_product(&full) {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    /// All basis element tuples `(e_{t_2}, ..., e_{t_n})` in lexicographic order.
    pub fn basis_element_tuples(&self) -> impl Iterator<Item = ElementTuple> + '_ {
        basis_tuples(self.dim, self.arity - 1).map(|t| ElementTuple::basis(self.dim, &t))
    }
}

impl fmt::Display for NAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} (arity {}, dim {}, {} nonzero products)",
            self.name,
            self.arity,
            self.dim,
            self.nonzero_products()
        )?;
        for (t, v) in self.entries() {
            let args: Vec<String> = t.iter().map(|i| format!("e{}", i + 1)).collect();
            writeln!(f, "  [{}] = {}", args.join(", "), format_vector(&v))?;
        }
        Ok(())
    }
}

/// An element `(x_2, ..., x_n)` of `L^{n-1}`, the argument of a right multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementTuple {
    components: Vec<Vector>,
}

impl ElementTuple {
    pub fn new(components: Vec<Vector>) -> Self {
        Self { components }
    }

    /// Tuple of standard basis vectors with 0-based indices.
    pub fn basis(dim: usize, indices: &[usize]) -> Self {
        Self::new(indices.iter().map(|&i| unit_vector(dim, i)).collect())
    }

    pub fn components(&self) -> &[Vector] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn has_zero_component(&self) -> bool {
        self.components.iter().any(|v| is_zero_vector(v))
    }
}

impl fmt::Display for ElementTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|v| format_vector(v)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// All index tuples of the given length over `0..dim`, in lexicographic order.
pub fn basis_tuples(dim: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = if dim == 0 && len > 0 {
        None
    } else {
        Some(vec![0usize; len])
    };
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        let mut slot = len;
        while slot > 0 {
            slot -= 1;
            succ[slot] += 1;
            if succ[slot] < dim {
                next = Some(succ);
                break;
            }
            succ[slot] = 0;
        }
        Some(current)
    })
}

/// Deterministic generator for trial `index` of a run seeded with `seed`.
pub(crate) fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Vector with integer coordinates drawn uniformly from `[-bound, bound]`.
pub(crate) fn random_vector<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> Vector {
    (0..dim)
        .map(|_| int(rng.random_range(-bound..=bound)))
        .collect()
}

pub(crate) fn random_tuple<R: Rng>(
    rng: &mut R,
    dim: usize,
    len: usize,
    bound: i64,
) -> ElementTuple {
    ElementTuple::new((0..len).map(|_| random_vector(rng, dim, bound)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn e(m: usize, i: usize) -> Vector {
        unit_vector(m, i - 1)
    }

    #[test]
    fn tuples_are_lexicographic() {
        let ts: Vec<_> = basis_tuples(2, 2).collect();
        assert_eq!(ts, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(basis_tuples(0, 2).count(), 0);
        assert_eq!(basis_tuples(3, 0).count(), 1);
    }

    #[test]
    fn bracket_on_fixtures() {
        let c3 = catalog::c3();
        assert_eq!(c3.bracket(&[e(3, 2), e(3, 1), e(3, 1)]).unwrap(), e(3, 2));
        let a3 = catalog::a3();
        let minus_e2: Vector = e(4, 2).iter().map(|x| -x).collect();
        assert_eq!(a3.bracket(&[e(4, 2), e(4, 1), e(4, 2)]).unwrap(), minus_e2);
    }

    #[test]
    fn bracket_with_zero_argument_vanishes() {
        let a3 = catalog::a3();
        let out = a3.bracket(&[zero_vector(4), e(4, 1), e(4, 2)]).unwrap();
        assert!(is_zero_vector(&out));
    }

    #[test]
    fn bracket_rejects_bad_input() {
        let c3 = catalog::c3();
        assert!(matches!(
            c3.bracket(&[e(3, 1), e(3, 1)]),
            Err(Error::Arity { .. })
        ));
        assert!(matches!(
            c3.bracket(&[e(3, 1), e(3, 1), e(4, 1)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn right_multiplications() {
        let c3 = catalog::c3();
        let r = c3
            .right_mult_matrix(&ElementTuple::basis(3, &[0, 0]))
            .unwrap();
        assert_eq!(r, Matrix::diagonal(&[int(0), int(1), int(1)]));

        let d3 = catalog::d3();
        let r = d3
            .right_mult_matrix(&ElementTuple::basis(4, &[0, 1]))
            .unwrap();
        assert_eq!(r, Matrix::diagonal(&[int(1), int(-1), int(2), int(3)]));

        let x = ElementTuple::new(vec![zero_vector(4), e(4, 2)]);
        assert!(d3.right_mult_matrix(&x).unwrap().is_zero());
        assert!(d3.right_mult_matrix(&ElementTuple::basis(4, &[0])).is_err());
    }

    #[test]
    fn construction_errors() {
        let dup = vec![(vec![0, 0], vec![int(1)]), (vec![0, 0], vec![int(2)])];
        assert_eq!(
            NAlgebra::new("x", 2, 1, dup),
            Err(Error::DuplicateTuple(vec![1, 1]))
        );
        assert!(matches!(
            NAlgebra::new("x", 2, 1, [(vec![0, 1], vec![int(1)])]),
            Err(Error::IndexOutOfRange { index: 2, dim: 1 })
        ));
        assert!(NAlgebra::zero("x", 1, 3).is_err());
    }

    #[test]
    fn right_mult_basis_matches_general() {
        let w5 = catalog::w5();
        for t in [[2usize, 2, 2, 0], [0, 1, 2, 3], [3, 2, 2, 1]] {
            assert_eq!(
                w5.right_mult_basis(&t),
                w5.right_mult_matrix(&ElementTuple::basis(5, &t)).unwrap()
            );
        }
    }
}
