//! Descending series, nilpotency predicates and restriction to subalgebras.

use std::fmt;

use crate::algebra::{basis_tuples, to_sparse, NAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};
use crate::structure::{is_subalgebra, slot_operators_at};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// Previous term re-inserted in one slot (1-based).
    Slot(usize),
    /// Sum over all slots.
    Full,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Slot(s) => write!(f, "slot {s}"),
            SeriesKind::Full => write!(f, "full"),
        }
    }
}

/// Terms of a descending series, starting with the whole algebra.
///
/// On stabilization the repeated term is kept as the last entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized: bool,
    /// 1-based position of the first zero term.
    pub nilpotency_index: Option<usize>,
}

impl SeriesResult {
    pub fn reaches_zero(&self) -> bool {
        self.nilpotency_index.is_some()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

impl fmt::Display for SeriesResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "series ({})", self.kind)?;
        for (k, t) in self.terms.iter().enumerate() {
            writeln!(f, "  {:>3}  dim {:>3}  {}", k + 1, t.dim(), t)?;
        }
        match self.nilpotency_index {
            Some(i) => write!(f, "nilpotent, index {i}"),
            None if self.stabilized => write!(f, "stabilized at a nonzero term"),
            None => write!(f, "undecided within the step limit"),
        }
    }
}

fn run_series(l: &NAlgebra, kind: SeriesKind, ops: &[Matrix], max_k: usize) -> SeriesResult {
    let mut terms = vec![Subspace::full(l.dim())];
    let mut stabilized = false;
    let mut nilpotency_index = None;
    loop {
        let current = terms.last().expect("nonempty");
        if current.is_zero() {
            nilpotency_index = Some(terms.len());
            break;
        }
        if terms.len() >= max_k {
            break;
        }
        let mut next = Subspace::zero(l.dim());
        for v in current.basis() {
            for op in ops {
                next.insert(op.apply(v)).expect("same ambient");
            }
        }
        debug_assert_eq!(next.is_subspace_of(current), Ok(true));
        let same = next.dim() == current.dim();
        terms.push(next);
        if same {
            stabilized = true;
            break;
        }
    }
    SeriesResult {
        kind,
        terms,
        stabilized,
        nilpotency_index,
    }
}

pub fn default_max_k(l: &NAlgebra) -> usize {
    l.dim() + 1
}

/// Series with the previous term in slot `s` (1-based) and the whole algebra elsewhere.
pub fn series_s(l: &NAlgebra, s: usize, max_k: usize) -> Result<SeriesResult> {
    if s == 0 || s > l.arity() {
        return Err(Error::SlotOutOfRange {
            slot: s,
            arity: l.arity(),
        });
    }
    let ops = slot_operators_at(l, s - 1);
    Ok(run_series(l, SeriesKind::Slot(s), &ops, max_k))
}

pub fn series_full(l: &NAlgebra, max_k: usize) -> SeriesResult {
    let ops: Vec<Matrix> = (0..l.arity())
        .flat_map(|slot| slot_operators_at(l, slot))
        .collect();
    run_series(l, SeriesKind::Full, &ops, max_k)
}

pub fn is_s_nilpotent(l: &NAlgebra, s: usize) -> Result<bool> {
    Ok(series_s(l, s, default_max_k(l))?.reaches_zero())
}

pub fn is_nilpotent(l: &NAlgebra) -> bool {
    series_full(l, default_max_k(l)).reaches_zero()
}

/// The subalgebra `h` as an algebra in its own canonical basis.
pub fn restrict(l: &NAlgebra, h: &Subspace) -> Result<NAlgebra> {
    if h.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: h.ambient_dim(),
        });
    }
    if !is_subalgebra(l, h)? {
        return Err(Error::NotSubalgebra);
    }
    let basis: Vec<SparseVec> = h.basis().iter().map(|v| to_sparse(v)).collect();
    let mut entries = Vec::new();
    for t in basis_tuples(h.dim(), l.arity()) {
        let args: Vec<SparseVec> = t.iter().map(|&i| basis[i].clone()).collect();
        let value = l.bracket_sparse(&args);
        let coords = h
            .coordinates(&value)
            .expect("subalgebra is closed under the bracket");
        if coords.iter().any(|c| !num_traits::Zero::is_zero(c)) {
            entries.push((t, coords));
        }
    }
    NAlgebra::new(format!("{}|H", l.name()), l.arity(), h.dim(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::{int, matrix_lie_nilpotent};
    use crate::structure::{ideal_i, quotient};

    fn coord(m: usize, idx: &[usize]) -> Subspace {
        Subspace::coordinate(m, idx).unwrap()
    }

    #[test]
    fn lpq_slot_series() {
        let a3 = catalog::a3();
        for s in [2, 3] {
            let r = series_s(&a3, s, 5).unwrap();
            assert_eq!(
                r.terms,
                vec![Subspace::full(4), coord(4, &[0, 1]), coord(4, &[0, 1])]
            );
            assert!(r.stabilized);
            assert_eq!(r.nilpotency_index, None);
        }
        // [e1,e1,e2] = e1 re-seeds the first slot
        let r1 = series_s(&a3, 1, 5).unwrap();
        assert!(!r1.reaches_zero());
        assert_eq!(r1.terms.last().unwrap(), &coord(4, &[0, 1]));
        assert!(!is_nilpotent(&a3));
    }

    #[test]
    fn zero_algebra_series() {
        let z = catalog::make_zero(3, 2).unwrap();
        for s in 1..=3 {
            let r = series_s(&z, s, 3).unwrap();
            assert_eq!(r.nilpotency_index, Some(2));
            assert_eq!(r.dims(), vec![2, 0]);
        }
        assert_eq!(series_full(&z, 3).nilpotency_index, Some(2));
        assert!(is_nilpotent(&z));
        let empty = catalog::make_zero(2, 0).unwrap();
        assert_eq!(series_full(&empty, 1).nilpotency_index, Some(1));
    }

    #[test]
    fn c3_full_series_stabilizes() {
        let c3 = catalog::c3();
        let r = series_full(&c3, 4);
        assert_eq!(r.terms.last().unwrap(), &coord(3, &[1, 2]));
        assert!(r.stabilized);
        assert!(!is_nilpotent(&c3));
    }

    #[test]
    fn slot_out_of_range() {
        let c3 = catalog::c3();
        assert!(matches!(
            series_s(&c3, 0, 4),
            Err(Error::SlotOutOfRange { slot: 0, arity: 3 })
        ));
        assert!(series_s(&c3, 4, 4).is_err());
    }

    #[test]
    fn step_limit_leaves_series_undecided() {
        let a3 = catalog::a3();
        let r = series_full(&a3, 1);
        assert_eq!(r.terms.len(), 1);
        assert!(!r.stabilized);
        assert_eq!(r.nilpotency_index, None);
    }

    #[test]
    fn slot_one_terms_lie_in_full_terms() {
        for l in [catalog::a3(), catalog::c3(), catalog::d3()] {
            let one = series_s(&l, 1, 10).unwrap();
            let full = series_full(&l, 10);
            for (k, t) in one.terms.iter().enumerate() {
                let f = full.terms.get(k).unwrap_or(full.terms.last().unwrap());
                assert_eq!(t.is_subspace_of(f), Ok(true));
            }
        }
    }

    #[test]
    fn restrictions() {
        let c3 = catalog::c3();
        let r = restrict(&c3, &coord(3, &[0])).unwrap();
        assert_eq!((r.arity(), r.dim(), r.nonzero_products()), (3, 1, 0));
        assert!(restrict(&c3, &Subspace::full(3))
            .unwrap()
            .same_structure(&c3));
        let a3 = catalog::a3();
        let r = restrict(&a3, &coord(4, &[2, 3])).unwrap();
        assert_eq!((r.dim(), r.nonzero_products()), (2, 0));
        let d3 = catalog::d3();
        assert_eq!(
            restrict(&d3, &coord(4, &[2])),
            Ok(catalog::make_zero(3, 1).unwrap().with_name("D3|H"))
        );
    }

    #[test]
    fn restrict_rejects_non_subalgebras() {
        let a3 = catalog::a3();
        assert!(restrict(&a3, &coord(4, &[0, 1])).is_ok());
        // the cube of e1 + e2 is e1 - e2
        let diag = Subspace::from_vectors(4, [vec![int(1), int(1), int(0), int(0)]]).unwrap();
        assert_eq!(restrict(&a3, &diag), Err(Error::NotSubalgebra));
    }

    #[test]
    fn n_lie_quotients_agree_across_slots() {
        for l in [catalog::a3(), catalog::c3(), catalog::d3()] {
            let p = quotient(&l, &ideal_i(&l)).unwrap();
            let q = &p.quotient;
            let flags: Vec<bool> = (1..=q.arity())
                .map(|s| is_s_nilpotent(q, s).unwrap())
                .collect();
            assert!(flags.iter().all(|&b| b == flags[0]), "{flags:?}");
        }
    }

    #[test]
    fn nilpotent_restriction_has_nilpotent_right_multiplications() {
        let c3 = catalog::c3();
        let r = restrict(&c3, &coord(3, &[0])).unwrap();
        assert!(is_nilpotent(&r));
        let ops: Vec<Matrix> = basis_tuples(r.dim(), r.arity() - 1)
            .map(|t| r.right_mult_basis(&t))
            .collect();
        assert!(matrix_lie_nilpotent(&ops).unwrap());
    }
}
