use num_traits::Zero;

use super::{charpoly, image, kernel, Matrix, Subspace};
use crate::error::{Error, Result};

/// Fitting components of a single operator `A` on `Q^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingComponents {
    /// `ker A^d`; `A` acts nilpotently here.
    pub null: Subspace,
    /// `im A^d`; `A` acts invertibly here.
    pub one: Subspace,
}

/// Fitting decomposition `Q^d = ker A^d ⊕ im A^d`.
///
/// The direct sum, invariance, nilpotency on the null component and
/// invertibility on the one component are asserted before returning.
pub fn fitting_single(a: &Matrix) -> Result<FittingComponents> {
    let d = a.ensure_square()?;
    let power = a.pow(d);
    let null = kernel(&power);
    let one = image(&power);

    assert_eq!(null.dim() + one.dim(), d, "Fitting components span");
    assert!(null.intersect(&one)?.is_zero(), "Fitting components meet");
    let on_null = a.restrict_to(&null).expect("null component is invariant");
    let on_one = a.restrict_to(&one).expect("one component is invariant");
    assert!(
        on_null.pow(d).is_zero(),
        "operator is nilpotent on null component"
    );
    assert!(
        !on_one.determinant()?.is_zero(),
        "operator is invertible on one component"
    );
    debug_assert_eq!(charpoly(a)?.zero_root_order()?, null.dim());

    Ok(FittingComponents { null, one })
}

/// Whether the Lie algebra generated by `gens` under the commutator is
/// nilpotent: close the span under commutators, then iterate the lower
/// central series until it vanishes or stabilizes.
pub fn matrix_lie_nilpotent(gens: &[Matrix]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    let d = first.ensure_square()?;
    for g in gens {
        let n = g.ensure_square()?;
        if n != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: n,
            });
        }
    }

    let mut span = Subspace::zero(d * d);
    let mut basis: Vec<Matrix> = Vec::new();
    for g in gens {
        if span.insert(g.flatten())? {
            basis.push(g.clone());
        }
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let c = basis[i].commutator(&basis[j]);
            if span.insert(c.flatten())? {
                basis.push(c);
            }
        }
        i += 1;
    }

    let mut term = span;
    loop {
        if term.is_zero() {
            return Ok(true);
        }
        let mut next = Subspace::zero(d * d);
        for x in &basis {
            for flat in term.basis() {
                let y = Matrix::from_flat(d, flat)?;
                next.insert(x.commutator(&y).flatten())?;
            }
        }
        if next.dim() == term.dim() {
            return Ok(false);
        }
        term = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, unit_vector};

    #[test]
    fn nilpotent_jordan_block() {
        let j = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let f = fitting_single(&j).unwrap();
        assert_eq!(f.null, Subspace::full(3));
        assert_eq!(f.one, Subspace::zero(3));
    }

    #[test]
    fn invertible_operator() {
        let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let f = fitting_single(&a).unwrap();
        assert_eq!(f.null, Subspace::zero(2));
        assert_eq!(f.one, Subspace::full(2));
    }

    #[test]
    fn diagonal_split() {
        let f = fitting_single(&Matrix::diagonal(&[int(0), int(1), int(1)])).unwrap();
        assert_eq!(f.null, Subspace::coordinate(3, &[0]).unwrap());
        assert_eq!(f.one, Subspace::coordinate(3, &[1, 2]).unwrap());
    }

    #[test]
    fn non_diagonal_split() {
        // generalized kernel of size 2 hidden behind a change of basis
        let a = Matrix::from_i64(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 3]]);
        let f = fitting_single(&a).unwrap();
        assert_eq!(f.null.dim(), 2);
        assert!(f.null.contains(&unit_vector(3, 0)).unwrap());
        assert_eq!(f.one.dim(), 1);
    }

    #[test]
    fn fitting_rejects_rectangular() {
        assert!(fitting_single(&Matrix::zeros(1, 2)).is_err());
    }

    #[test]
    fn lie_nilpotency() {
        let nil = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(matrix_lie_nilpotent(&[nil]).unwrap());
        // abelian, though not nilpotent as an operator
        let d = Matrix::diagonal(&[int(0), int(1), int(1)]);
        assert!(matrix_lie_nilpotent(&[d]).unwrap());
        let e12 = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let e23 = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(matrix_lie_nilpotent(&[e12, e23]).unwrap());
        assert!(matrix_lie_nilpotent(&[]).unwrap());
    }

    #[test]
    fn sl2_is_not_nilpotent() {
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let f = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert!(!matrix_lie_nilpotent(&[e, f]).unwrap());
        // ad-diagonalizable pair: span{h, e} is solvable but not nilpotent
        let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let e = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert!(!matrix_lie_nilpotent(&[h, e]).unwrap());
    }

    #[test]
    fn lie_nilpotent_dimension_mismatch() {
        assert!(matrix_lie_nilpotent(&[Matrix::identity(2), Matrix::identity(3)]).is_err());
    }
}
