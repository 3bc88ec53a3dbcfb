use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use super::{basis_tuples, NAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::exactlin::{add_scaled, format_vector, int, unit_vector, zero_vector, Vector};

/// Exhaustive checks refuse inputs with more basis substitutions than this.
pub const DEFAULT_CASE_CAP: u128 = 1_000_000;

/// A failing instance of an identity: the substituted arguments and both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: Vec<Vector>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.input.iter().map(|v| format_vector(v)).collect();
        write!(
            f,
            "input ({}): lhs = {}, rhs = {}",
            args.join(", "),
            format_vector(&self.lhs),
            format_vector(&self.rhs)
        )
    }
}

/// Outcome of an exhaustive identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub passed: bool,
    pub checked_cases: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl Report {
    pub(crate) fn new(checked_cases: u64, first_counterexample: Option<Counterexample>) -> Self {
        Self {
            passed: first_counterexample.is_none(),
            checked_cases,
            first_counterexample,
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_counterexample {
            None => write!(f, "passed ({} cases)", self.checked_cases),
            Some(c) => write!(f, "FAILED after {} cases; {c}", self.checked_cases),
        }
    }
}

fn count_cases(dim: usize, exponent: usize) -> u128 {
    (dim as u128)
        .checked_pow(exponent as u32)
        .unwrap_or(u128::MAX)
}

/// Checks the fundamental identity
/// `[[x_1..x_n], y_2..y_n] = sum_i [x_1.., [x_i, y_2..y_n], ..x_n]`
/// on every substitution of basis vectors, refusing above [`DEFAULT_CASE_CAP`].
pub fn check_fundamental_identity(l: &NAlgebra) -> Result<Report> {
    check_fundamental_identity_with_cap(l, DEFAULT_CASE_CAP)
}

/// As [`check_fundamental_identity`] with an explicit case cap.
///
/// Work is split by the first argument; the reported counterexample is the
/// lexicographically least failing substitution `(x_1..x_n, y_2..y_n)`.
pub fn check_fundamental_identity_with_cap(l: &NAlgebra, cap: u128) -> Result<Report> {
    let n = l.arity();
    let m = l.dim();
    let cases = count_cases(m, 2 * n - 1);
    if cases > cap {
        return Err(Error::TooManyCases { cases, cap });
    }
    let failures: Vec<Option<Counterexample>> = (0..m)
        .into_par_iter()
        .map(|x1| scan_fundamental(l, x1))
        .collect();
    let first = failures.into_iter().flatten().next();
    Ok(Report::new(cases as u64, first))
}

fn scan_fundamental(l: &NAlgebra, x1: usize) -> Option<Counterexample> {
    let n = l.arity();
    let m = l.dim();
    let mut inner = vec![0usize; n];
    for rest in basis_tuples(m, 2 * n - 2) {
        let (xs_tail, ys) = rest.split_at(n - 1);
        let mut xs = Vec::with_capacity(n);
        xs.push(x1);
        xs.extend_from_slice(xs_tail);

        // [x_i, y_2..y_n] for every slot
        let slot_products: Vec<&SparseVec> = xs
            .iter()
            .map(|&xi| {
                inner[0] = xi;
                inner[1..].copy_from_slice(ys);
                l.basis_product(&inner)
            })
            .collect();
        let head = l.basis_product(&xs);
        if head.is_empty() && slot_products.iter().all(|p| p.is_empty()) {
            continue;
        }

        let mut lhs = zero_vector(m);
        for (k, c) in head {
            inner[0] = *k;
            inner[1..].copy_from_slice(ys);
            for (j, d) in l.basis_product(&inner) {
                lhs[*j] += c * d;
            }
        }

        let mut rhs = zero_vector(m);
        let mut sub = xs.clone();
        for (slot, prod) in slot_products.iter().enumerate() {
            for (k, c) in prod.iter() {
                sub[slot] = *k;
                for (j, d) in l.basis_product(&sub) {
                    rhs[*j] += c * d;
                }
            }
            sub[slot] = xs[slot];
        }

        if lhs != rhs {
            let input = xs.iter().chain(ys).map(|&i| unit_vector(m, i)).collect();
            return Some(Counterexample { input, lhs, rhs });
        }
    }
    None
}

/// The four antisymmetry conditions on an n-ary product:
/// 1. sign change under swapping adjacent arguments,
/// 2. sign change under swapping any two arguments,
/// 3. vanishing when any two arguments coincide,
/// 4. vanishing when two adjacent arguments coincide.
///
/// Conditions 1 and 2 are checked on all basis tuples. Conditions 3 and 4 are
/// checked with the repeated argument ranging over `e_a` and `e_a + e_b`
/// (`a < b`), which by polarization decides them for all vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewReport {
    pub adjacent_antisymmetry: Report,
    pub pairwise_antisymmetry: Report,
    pub repeated_vanish: Report,
    pub adjacent_repeated_vanish: Report,
}

impl SkewReport {
    pub fn flags(&self) -> [bool; 4] {
        [
            self.adjacent_antisymmetry.passed,
            self.pairwise_antisymmetry.passed,
            self.repeated_vanish.passed,
            self.adjacent_repeated_vanish.passed,
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.flags().iter().all(|&b| b)
    }

    pub fn reports(&self) -> [(&'static str, &Report); 4] {
        [
            ("adjacent swaps change sign", &self.adjacent_antisymmetry),
            ("all swaps change sign", &self.pairwise_antisymmetry),
            ("repeated arguments vanish", &self.repeated_vanish),
            (
                "adjacent repeated arguments vanish",
                &self.adjacent_repeated_vanish,
            ),
        ]
    }
}

pub fn skew_check(l: &NAlgebra) -> SkewReport {
    let n = l.arity();
    let adjacent: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    let all_pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    SkewReport {
        adjacent_antisymmetry: swap_check(l, &adjacent),
        pairwise_antisymmetry: swap_check(l, &all_pairs),
        repeated_vanish: repeat_check(l, &all_pairs),
        adjacent_repeated_vanish: repeat_check(l, &adjacent),
    }
}

fn swap_check(l: &NAlgebra, pairs: &[(usize, usize)]) -> Report {
    let m = l.dim();
    let mut cases = 0u64;
    for t in basis_tuples(m, l.arity()) {
        for &(i, j) in pairs {
            cases += 1;
            let mut swapped = t.clone();
            swapped.swap(i, j);
            let lhs = l.densify(l.basis_product(&t));
            let rhs: Vector = l
                .densify(l.basis_product(&swapped))
                .into_iter()
                .map(|c| -c)
                .collect();
            if lhs != rhs {
                let input = t.iter().map(|&k| unit_vector(m, k)).collect();
                return Report::new(cases, Some(Counterexample { input, lhs, rhs }));
            }
        }
    }
    Report::new(cases, None)
}

/// Repeated vectors used to decide "vanishes on equal arguments": `e_a` and `e_a + e_b`.
fn repeated_vectors(m: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..m).map(|a| vec![a]).collect();
    for a in 0..m {
        for b in a + 1..m {
            out.push(vec![a, b]);
        }
    }
    out
}

fn repeat_check(l: &NAlgebra, pairs: &[(usize, usize)]) -> Report {
    let n = l.arity();
    let m = l.dim();
    let one = int(1);
    let mut cases = 0u64;
    for &(i, j) in pairs {
        let others: Vec<usize> = (0..n).filter(|&s| s != i && s != j).collect();
        for support in repeated_vectors(m) {
            for filler in basis_tuples(m, n - 2) {
                cases += 1;
                let mut tuple = vec![0usize; n];
                for (&slot, &idx) in others.iter().zip(&filler) {
                    tuple[slot] = idx;
                }
                let mut value = zero_vector(m);
                for &a in &support {
                    for &b in &support {
                        tuple[i] = a;
                        tuple[j] = b;
                        add_scaled(&mut value, &one, &l.densify(l.basis_product(&tuple)));
                    }
                }
                if value.iter().any(|c| !c.is_zero()) {
                    let mut v = zero_vector(m);
                    for &a in &support {
                        v[a] = one.clone();
                    }
                    let input = (0..n)
                        .map(|s| {
                            if s == i || s == j {
                                v.clone()
                            } else {
                                unit_vector(m, tuple[s])
                            }
                        })
                        .collect();
                    let rhs = zero_vector(m);
                    return Report::new(
                        cases,
                        Some(Counterexample {
                            input,
                            lhs: value,
                            rhs,
                        }),
                    );
                }
            }
        }
    }
    Report::new(cases, None)
}
