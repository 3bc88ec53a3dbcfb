//! Subalgebra and ideal closures, the symmetrizer ideals and quotient algebras.

use crate::algebra::{basis_tuples, to_sparse, ElementTuple, NAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactlin::{int, unit_vector, zero_vector, Matrix, Subspace, Vector};

fn check_ambient(l: &NAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

fn basis_sparse(s: &Subspace) -> Vec<SparseVec> {
    s.basis().iter().map(|v| to_sparse(v)).collect()
}

/// Smallest subalgebra containing `s`.
pub fn subalgebra_closure(l: &NAlgebra, s: &Subspace) -> Result<Subspace> {
    check_ambient(l, s)?;
    let mut current = s.clone();
    loop {
        let basis = basis_sparse(&current);
        let mut next = current.clone();
        for t in basis_tuples(basis.len(), l.arity()) {
            let args: Vec<SparseVec> = t.iter().map(|&i| basis[i].clone()).collect();
            next.insert(l.bracket_sparse(&args))?;
        }
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

/// Whether `s` is closed under the bracket.
pub fn is_subalgebra(l: &NAlgebra, s: &Subspace) -> Result<bool> {
    Ok(subalgebra_closure(l, s)?.dim() == s.dim())
}

/// Linear maps `a -> [e_{t_1}, .., a (slot s), .., e_{t_n}]` for every choice of
/// basis vectors in the other slots. Zero maps are skipped. `slot` is 0-based.
pub(crate) fn slot_operators_at(l: &NAlgebra, slot: usize) -> Vec<Matrix> {
    let n = l.arity();
    let m = l.dim();
    let mut ops = Vec::new();
    for filler in basis_tuples(m, n - 1) {
        let mut tuple = filler;
        tuple.insert(slot, 0);
        let mut op = Matrix::zeros(m, m);
        for a in 0..m {
            tuple[slot] = a;
            for (k, c) in l.basis_product(&tuple) {
                op.set(*k, a, c.clone());
            }
        }
        if !op.is_zero() {
            ops.push(op);
        }
    }
    ops
}

fn slot_operators(l: &NAlgebra) -> Vec<Matrix> {
    (0..l.arity())
        .flat_map(|slot| slot_operators_at(l, slot))
        .collect()
}

/// Smallest subspace containing `s` and invariant under bracketing with
/// arbitrary elements in every slot (an n-sided ideal).
pub fn ideal_closure(l: &NAlgebra, s: &Subspace) -> Result<Subspace> {
    check_ambient(l, s)?;
    let ops = slot_operators(l);
    Ok(close_under(&ops, s.clone()))
}

/// Span of `start` together with every image of it under words in `ops`.
pub(crate) fn close_under(ops: &[Matrix], start: Subspace) -> Subspace {
    let mut current = start;
    // only vectors added in the previous round need new images
    let mut frontier: Vec<Vector> = current.basis().to_vec();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for v in &frontier {
            for op in ops {
                let w = op.apply(v);
                if current
                    .insert(w.clone())
                    .expect("operator preserves ambient dimension")
                {
                    fresh.push(w);
                }
            }
        }
        frontier = fresh;
    }
    current
}

pub fn is_ideal(l: &NAlgebra, s: &Subspace) -> Result<bool> {
    check_ambient(l, s)?;
    let ops = slot_operators(l);
    Ok(s.basis().iter().all(|v| {
        ops.iter()
            .all(|op| s.contains(&op.apply(v)).expect("same ambient"))
    }))
}

/// Ideal generated by all products with two equal arguments (any pair of slots).
///
/// The repeated argument ranges over `e_a` and `e_a + e_b`, which spans the
/// same generators as arbitrary repeated vectors.
pub fn ideal_i(l: &NAlgebra) -> Subspace {
    let n = l.arity();
    let m = l.dim();
    let mut gens = Subspace::zero(m);
    for i in 0..n {
        for j in i + 1..n {
            let others: Vec<usize> = (0..n).filter(|&s| s != i && s != j).collect();
            for a in 0..m {
                for b in a..m {
                    let support: Vec<usize> = if a == b { vec![a] } else { vec![a, b] };
                    for filler in basis_tuples(m, n - 2) {
                        let mut tuple = vec![0usize; n];
                        for (&slot, &idx) in others.iter().zip(&filler) {
                            tuple[slot] = idx;
                        }
                        let mut value = zero_vector(m);
                        for &x in &support {
                            for &y in &support {
                                tuple[i] = x;
                                tuple[j] = y;
                                for (k, c) in l.basis_product(&tuple) {
                                    value[*k] += c;
                                }
                            }
                        }
                        gens.insert(value).expect("length m");
                    }
                }
            }
        }
    }
    let ideal = close_under(&slot_operators(l), gens);
    debug_assert_eq!(
        ideal,
        ideal_j(l),
        "repeated-argument and symmetrizer ideals differ"
    );
    ideal
}

/// Ideal generated by the symmetrizers `[.., x_i, x_{i+1}, ..] + [.., x_{i+1}, x_i, ..]`
/// of adjacent slots.
pub fn ideal_j(l: &NAlgebra) -> Subspace {
    let n = l.arity();
    let m = l.dim();
    let mut gens = Subspace::zero(m);
    for t in basis_tuples(m, n) {
        for i in 0..n - 1 {
            let mut swapped = t.clone();
            swapped.swap(i, i + 1);
            let mut value = l.densify(l.basis_product(&t));
            for (k, c) in l.basis_product(&swapped) {
                value[*k] += c;
            }
            gens.insert(value).expect("length m");
        }
    }
    close_under(&slot_operators(l), gens)
}

/// The canonical projection `L -> L/K` together with the quotient algebra.
///
/// The quotient is coordinatised by the coordinates that are not pivots of
/// the ideal's canonical basis; `matrix` maps source coordinates to those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    pub source: NAlgebra,
    pub quotient: NAlgebra,
    pub ideal: Subspace,
    pub matrix: Matrix,
    /// Source basis indices whose images form the quotient basis.
    pub section: Vec<usize>,
}

/// Quotient of `l` by an n-sided ideal `k`.
pub fn quotient(l: &NAlgebra, k: &Subspace) -> Result<Projection> {
    check_ambient(l, k)?;
    if !is_ideal(l, k)? {
        return Err(Error::NotIdeal);
    }
    let n = l.arity();
    let section = k.complement_coordinates();
    let matrix = k.quotient_matrix();
    let q_dim = section.len();
    let mut entries = Vec::new();
    for t in basis_tuples(q_dim, n) {
        let src: Vec<usize> = t.iter().map(|&i| section[i]).collect();
        let value = matrix.apply(&l.densify(l.basis_product(&src)));
        if value.iter().any(|c| c != &int(0)) {
            entries.push((t, value));
        }
    }
    let quotient = NAlgebra::new(format!("{}/I", l.name()), n, q_dim, entries)?;

    // the bracket commutes with the projection on every basis tuple of the source
    let images: Vec<SparseVec> = (0..l.dim()).map(|j| to_sparse(&matrix.column(j))).collect();
    for t in basis_tuples(l.dim(), n) {
        let projected = matrix.apply(&l.densify(l.basis_product(&t)));
        let args: Vec<SparseVec> = t.iter().map(|&i| images[i].clone()).collect();
        assert_eq!(
            projected,
            quotient.bracket_sparse(&args),
            "projection is a homomorphism"
        );
    }

    Ok(Projection {
        source: l.clone(),
        quotient,
        ideal: k.clone(),
        matrix,
        section,
    })
}

impl Projection {
    pub fn project_vector(&self, v: &[crate::exactlin::Scalar]) -> Result<Vector> {
        self.source.check_vector(v)?;
        Ok(self.matrix.apply(v))
    }

    pub fn project_subspace(&self, w: &Subspace) -> Result<Subspace> {
        w.map(&self.matrix)
    }

    pub fn project_tuple(&self, x: &ElementTuple) -> Result<ElementTuple> {
        let comps = x
            .components()
            .iter()
            .map(|v| self.project_vector(v))
            .collect::<Result<_>>()?;
        Ok(ElementTuple::new(comps))
    }

    /// Image of the source basis vector `e_{index+1}`.
    pub fn project_basis(&self, index: usize) -> Vector {
        self.matrix.apply(&unit_vector(self.source.dim(), index))
    }
}

pub fn project_subspace(p: &Projection, w: &Subspace) -> Result<Subspace> {
    p.project_subspace(w)
}

pub fn project_tuple(p: &Projection, x: &ElementTuple) -> Result<ElementTuple> {
    p.project_tuple(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{check_fundamental_identity, skew_check};
    use crate::catalog;

    fn coord(m: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(m, idx).unwrap()
    }

    #[test]
    fn subalgebra_closures_in_c3() {
        let c3 = catalog::c3();
        assert_eq!(
            subalgebra_closure(&c3, &coord(3, &[0])).unwrap(),
            coord(3, &[0])
        );
        assert_eq!(
            subalgebra_closure(&c3, &coord(3, &[1])).unwrap(),
            coord(3, &[1])
        );
        assert_eq!(
            subalgebra_closure(&c3, &coord(3, &[0, 1])).unwrap(),
            coord(3, &[0, 1])
        );
    }

    #[test]
    fn closures_in_zero_algebra_are_trivial() {
        let z = catalog::make_zero(3, 3).unwrap();
        let s = Subspace::from_vectors(3, [vec![int(1), int(2), int(0)]]).unwrap();
        assert_eq!(subalgebra_closure(&z, &s).unwrap(), s);
        assert_eq!(ideal_closure(&z, &s).unwrap(), s);
    }

    #[test]
    fn ideal_closures() {
        let c3 = catalog::c3();
        assert_eq!(ideal_closure(&c3, &coord(3, &[1])).unwrap(), coord(3, &[1]));
        let d3 = catalog::d3();
        assert_eq!(
            ideal_closure(&d3, &coord(4, &[0])).unwrap(),
            Subspace::full(4)
        );
        assert_eq!(
            ideal_closure(&d3, &Subspace::zero(4)).unwrap(),
            Subspace::zero(4)
        );
        assert!(ideal_closure(&d3, &Subspace::zero(3)).is_err());
    }

    #[test]
    fn symmetrizer_ideals() {
        let c3 = catalog::c3();
        assert_eq!(ideal_i(&c3), coord(3, &[1, 2]));
        assert_eq!(ideal_j(&c3), coord(3, &[1, 2]));
        let d3 = catalog::d3();
        assert_eq!(ideal_i(&d3), Subspace::full(4));
        assert_eq!(ideal_j(&d3), Subspace::full(4));
        let z = catalog::make_zero(3, 2).unwrap();
        assert!(ideal_i(&z).is_zero());
    }

    #[test]
    fn quotient_of_c3() {
        let c3 = catalog::c3();
        let p = quotient(&c3, &ideal_i(&c3)).unwrap();
        assert_eq!(p.quotient.dim(), 1);
        assert_eq!(p.quotient.nonzero_products(), 0);
        assert_eq!(p.section, vec![0]);
        assert_eq!(
            p.project_subspace(&coord(3, &[0])).unwrap(),
            Subspace::full(1)
        );
        assert_eq!(p.project_subspace(&p.ideal).unwrap(), Subspace::zero(1));
        let x = ElementTuple::basis(3, &[0, 0]);
        assert_eq!(
            p.project_tuple(&x).unwrap(),
            ElementTuple::basis(1, &[0, 0])
        );
        assert!(skew_check(&p.quotient).all_hold());
    }

    #[test]
    fn quotient_of_d3_is_zero_dimensional() {
        let d3 = catalog::d3();
        let p = quotient(&d3, &ideal_i(&d3)).unwrap();
        assert_eq!(p.quotient.dim(), 0);
        assert!(check_fundamental_identity(&p.quotient).unwrap().passed);
    }

    #[test]
    fn quotient_by_zero_is_a_copy() {
        let a3 = catalog::a3();
        let p = quotient(&a3, &Subspace::zero(4)).unwrap();
        assert!(p.quotient.same_structure(&a3));
        assert_eq!(p.matrix, Matrix::identity(4));
    }

    #[test]
    fn quotient_requires_an_ideal() {
        let c3 = catalog::c3();
        assert_eq!(quotient(&c3, &coord(3, &[0])), Err(Error::NotIdeal));
    }
}
