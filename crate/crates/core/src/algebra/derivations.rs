use super::{
    basis_tuples, random_tuple, random_vector, to_sparse, trial_rng, ElementTuple, NAlgebra,
    SparseVec,
};
use crate::algebra::{Counterexample, Report};
use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};

/// Pairs of basis tuples above this count are sampled instead of enumerated.
const EXHAUSTIVE_PAIR_CAP: usize = 1 << 16;

/// Checks `D[x_1..x_n] = sum_j [x_1.., D x_j, ..x_n]` on every basis tuple.
pub fn is_derivation(l: &NAlgebra, d: &Matrix) -> Result<Report> {
    let m = l.dim();
    if d.rows() != m || d.cols() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: if d.rows() != m { d.rows() } else { d.cols() },
        });
    }
    let images: Vec<SparseVec> = (0..m).map(|j| to_sparse(&d.column(j))).collect();
    let mut cases = 0u64;
    for t in basis_tuples(m, l.arity()) {
        cases += 1;
        let lhs = d.apply(&l.densify(l.basis_product(&t)));
        let mut rhs = zero_vector(m);
        let mut sub = t.clone();
        for slot in 0..t.len() {
            for (k, c) in &images[t[slot]] {
                sub[slot] = *k;
                for (j, v) in l.basis_product(&sub) {
                    rhs[*j] += c * v;
                }
            }
            sub[slot] = t[slot];
        }
        if lhs != rhs {
            let input = t.iter().map(|&i| unit_vector(m, i)).collect();
            return Ok(Report::new(cases, Some(Counterexample { input, lhs, rhs })));
        }
    }
    Ok(Report::new(cases, None))
}

/// `Der(L)` as a subspace of `Q^{m*m}`; a matrix `D` is flattened row-major,
/// so `D[a][b]` sits at coordinate `a * m + b`.
pub fn derivation_space(l: &NAlgebra) -> Subspace {
    let m = l.dim();
    let mut equations = Subspace::zero(m * m);
    for t in basis_tuples(m, l.arity()) {
        let head = l.basis_product(&t);
        for k in 0..m {
            let mut row = zero_vector(m * m);
            // (D [t])_k = sum_a D[k][a] c^a_t
            for (a, c) in head {
                row[k * m + a] += c;
            }
            // sum_j [.., D e_{t_j}, ..]_k = sum_j sum_b D[b][t_j] c^k_{t[j <- b]}
            let mut sub = t.clone();
            for slot in 0..t.len() {
                for b in 0..m {
                    sub[slot] = b;
                    if let Some((_, c)) = l.basis_product(&sub).iter().find(|(i, _)| *i == k) {
                        row[b * m + t[slot]] -= c;
                    }
                }
                sub[slot] = t[slot];
            }
            if !is_zero_vector(&row) {
                equations.insert(row).expect("equation has m*m coordinates");
            }
        }
    }
    equations.annihilator()
}

/// Span of all right multiplications, as a subspace of `Q^{m*m}`.
pub fn inner_derivation_space(l: &NAlgebra) -> Subspace {
    let m = l.dim();
    let mut span = Subspace::zero(m * m);
    for t in basis_tuples(m, l.arity() - 1) {
        span.insert(l.right_mult_basis(&t).flatten())
            .expect("flattened operator has m*m coordinates");
    }
    span
}

/// Results of the right-multiplication identity suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RmultReport {
    /// Commutators of derivations are derivations.
    pub derivation_commutator: Report,
    /// `[D, R(y)] = sum_i R(y_2.., D y_i, ..y_n)` for derivations `D`.
    pub derivation_action: Report,
    /// `[R(x), R(y)] = -sum_i R(x_2.., R(y) x_i, ..x_n)`.
    pub right_commutator: Report,
    /// Every right multiplication is a derivation.
    pub inner_in_derivations: Report,
    /// `[D, R(y)]` lies in the span of right multiplications.
    pub inner_ideal: Report,
}

impl RmultReport {
    pub fn passed(&self) -> bool {
        self.reports().iter().all(|(_, r)| r.passed)
    }

    pub fn reports(&self) -> [(&'static str, &Report); 5] {
        [
            (
                "Der(L) closed under commutator",
                &self.derivation_commutator,
            ),
            ("[D, R(y)] expansion", &self.derivation_action),
            ("[R(x), R(y)] expansion", &self.right_commutator),
            ("Inner(L) inside Der(L)", &self.inner_in_derivations),
            ("Inner(L) is an ideal of Der(L)", &self.inner_ideal),
        ]
    }
}

fn replace_slot(x: &ElementTuple, slot: usize, v: Vector) -> ElementTuple {
    let mut comps = x.components().to_vec();
    comps[slot] = v;
    ElementTuple::new(comps)
}

fn flatten_tuple(x: &ElementTuple) -> Vec<Vector> {
    x.components().to_vec()
}

fn membership_report<I>(space: &Subspace, elements: I) -> Report
where
    I: IntoIterator<Item = (Vec<Vector>, Matrix)>,
{
    let mut cases = 0u64;
    for (input, element) in elements {
        cases += 1;
        let flat = element.flatten();
        let remainder = space.reduce(&flat);
        if !is_zero_vector(&remainder) {
            return Report::new(
                cases,
                Some(Counterexample {
                    input,
                    lhs: flat,
                    rhs: remainder,
                }),
            );
        }
    }
    Report::new(cases, None)
}

/// Exact check of the right-multiplication identities.
///
/// All pairs of basis tuples are used when there are at most 2^16 of them;
/// `samples` seeded random integer tuples (coordinates in `[-3, 3]`) and random
/// combinations of derivation basis elements are always added on top.
pub fn check_rmult_identities(l: &NAlgebra, samples: usize, seed: u64) -> Result<RmultReport> {
    let m = l.dim();
    let k = l.arity() - 1;
    let der = derivation_space(l);
    let der_basis: Vec<Matrix> = der
        .basis()
        .iter()
        .map(|v| Matrix::from_flat(m, v))
        .collect::<Result<_>>()?;
    let inner = inner_derivation_space(l);

    let basis_tuples_list: Vec<ElementTuple> = l.basis_element_tuples().collect();
    let exhaustive = basis_tuples_list
        .len()
        .saturating_mul(basis_tuples_list.len())
        <= EXHAUSTIVE_PAIR_CAP;
    let mut tuples: Vec<ElementTuple> = if exhaustive {
        basis_tuples_list.clone()
    } else {
        Vec::new()
    };
    let mut derivations = der_basis.clone();
    for s in 0..samples {
        let mut rng = trial_rng(seed, s as u64);
        tuples.push(random_tuple(&mut rng, m, k, 3));
        if !der_basis.is_empty() {
            let coeffs = random_vector(&mut rng, der_basis.len(), 3);
            let combo = der_basis
                .iter()
                .zip(&coeffs)
                .fold(Matrix::zeros(m, m), |acc, (d, c)| &acc + &d.scale(c));
            derivations.push(combo);
        }
    }
    let rights: Vec<Matrix> = tuples
        .iter()
        .map(|x| l.right_mult_matrix(x))
        .collect::<Result<_>>()?;

    let derivation_commutator = membership_report(
        &der,
        der_basis.iter().enumerate().flat_map(|(i, a)| {
            der_basis[..i]
                .iter()
                .map(move |b| (Vec::new(), a.commutator(b)))
        }),
    );

    let mut cases = 0u64;
    let mut failure = None;
    'action: for d in &derivations {
        for (y, ry) in tuples.iter().zip(&rights) {
            cases += 1;
            let lhs = d.commutator(ry);
            let mut rhs = Matrix::zeros(m, m);
            for slot in 0..k {
                let moved = replace_slot(y, slot, d.apply(&y.components()[slot]));
                rhs = &rhs + &l.right_mult_matrix(&moved)?;
            }
            if lhs != rhs {
                failure = Some(Counterexample {
                    input: flatten_tuple(y),
                    lhs: lhs.flatten(),
                    rhs: rhs.flatten(),
                });
                break 'action;
            }
        }
    }
    let derivation_action = Report::new(cases, failure);

    let mut cases = 0u64;
    let mut failure = None;
    let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if exhaustive {
        Box::new((0..tuples.len()).flat_map(|i| (0..tuples.len()).map(move |j| (i, j))))
    } else {
        // sampled tuples paired with each other and with their neighbour
        let t = tuples.len();
        Box::new((0..t).flat_map(move |i| [(i, i), (i, (i + 1) % t.max(1))]))
    };
    for (i, j) in pairs {
        cases += 1;
        let (x, rx) = (&tuples[i], &rights[i]);
        let ry = &rights[j];
        let lhs = rx.commutator(ry);
        let mut rhs = Matrix::zeros(m, m);
        for slot in 0..k {
            let moved = replace_slot(x, slot, ry.apply(&x.components()[slot]));
            rhs = &rhs - &l.right_mult_matrix(&moved)?;
        }
        if lhs != rhs {
            let mut input = flatten_tuple(x);
            input.extend(flatten_tuple(&tuples[j]));
            failure = Some(Counterexample {
                input,
                lhs: lhs.flatten(),
                rhs: rhs.flatten(),
            });
            break;
        }
    }
    let right_commutator = Report::new(cases, failure);

    let inner_in_derivations = membership_report(
        &der,
        tuples
            .iter()
            .zip(&rights)
            .map(|(x, r)| (flatten_tuple(x), r.clone())),
    );
    let inner_ideal = membership_report(
        &inner,
        der_basis.iter().flat_map(|d| {
            tuples
                .iter()
                .zip(&rights)
                .map(move |(y, r)| (flatten_tuple(y), d.commutator(r)))
        }),
    );

    Ok(RmultReport {
        derivation_commutator,
        derivation_action,
        right_commutator,
        inner_in_derivations,
        inner_ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::{int, Subspace};

    #[test]
    fn zero_map_is_a_derivation() {
        let c3 = catalog::c3();
        assert!(is_derivation(&c3, &Matrix::zeros(3, 3)).unwrap().passed);
    }

    #[test]
    fn right_multiplication_is_a_derivation() {
        let c3 = catalog::c3();
        let r = c3
            .right_mult_matrix(&ElementTuple::basis(3, &[0, 0]))
            .unwrap();
        assert!(is_derivation(&c3, &r).unwrap().passed);
    }

    #[test]
    fn identity_is_not_a_derivation_of_c3() {
        let c3 = catalog::c3();
        let report = is_derivation(&c3, &Matrix::identity(3)).unwrap();
        assert!(!report.passed);
        let c = report.first_counterexample.unwrap();
        // first nonzero product is [e2, e1, e1] = e2; rhs picks it up once per slot
        assert_eq!(c.lhs, unit_vector(3, 1));
        assert_eq!(c.rhs, vec![int(0), int(3), int(0)]);
    }

    #[test]
    fn derivation_size_mismatch() {
        assert!(is_derivation(&catalog::c3(), &Matrix::identity(2)).is_err());
    }

    #[test]
    fn derivations_of_zero_algebra_are_everything() {
        let z = NAlgebra::zero("z", 3, 2).unwrap();
        assert_eq!(derivation_space(&z), Subspace::full(4));
        assert_eq!(inner_derivation_space(&z), Subspace::zero(4));
    }

    #[test]
    fn inner_derivations_of_c3() {
        let c3 = catalog::c3();
        let inner = inner_derivation_space(&c3);
        let r = Matrix::diagonal(&[int(0), int(1), int(1)]);
        assert_eq!(inner, Subspace::from_vectors(9, [r.flatten()]).unwrap());
        assert!(derivation_space(&c3).contains(&r.flatten()).unwrap());
    }

    #[test]
    fn derivation_space_members_pass_the_direct_check() {
        for l in [catalog::a3(), catalog::c3(), catalog::d3()] {
            let m = l.dim();
            for v in derivation_space(&l).basis() {
                let d = Matrix::from_flat(m, v).unwrap();
                assert!(is_derivation(&l, &d).unwrap().passed, "{}", l.name());
            }
        }
    }

    #[test]
    fn rmult_suite_on_fixtures() {
        for l in [catalog::a3(), catalog::c3(), catalog::d3()] {
            let r = check_rmult_identities(&l, 8, 11).unwrap();
            assert!(r.passed(), "{}: {:?}", l.name(), r);
        }
    }
}
