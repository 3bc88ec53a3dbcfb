//! Fitting decompositions for families of right multiplications, normalizers,
//! Cartan subalgebras, regular elements and the quotient theorems.
//!
//! "Nilpotent" for subalgebras here means that the slot-1 series of the
//! restricted algebra reaches zero.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::{
    basis_tuples, check_fundamental_identity, random_tuple, skew_check, trial_rng, ElementTuple,
    NAlgebra, DEFAULT_CASE_CAP,
};
use crate::catalog::lift_leibniz;
use crate::error::{Error, Result};
use crate::exactlin::{
    charpoly, fitting_single, kernel, matrix_lie_nilpotent, unit_vector, Matrix, Subspace,
};
use crate::nilpotency::{is_s_nilpotent, restrict};
use crate::structure::{ideal_i, is_subalgebra, quotient, subalgebra_closure};

/// One named assertion inside a theorem check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TheoremReport {
    pub checks: Vec<Check>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check::new(name, passed, detail));
    }

    pub fn extend(&mut self, other: TheoremReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            writeln!(f, "{mark} {:<36} {}", c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn check_ambient(l: &NAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != l.dim() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

/// Whether `h` is a subalgebra whose restriction is nilpotent.
pub fn is_nilpotent_subalgebra(l: &NAlgebra, h: &Subspace) -> Result<bool> {
    check_ambient(l, h)?;
    if !is_subalgebra(l, h)? {
        return Ok(false);
    }
    is_s_nilpotent(&restrict(l, h)?, 1)
}

/// Right multiplications by all tuples of basis vectors of `h` (zero maps dropped).
pub fn right_mult_family(l: &NAlgebra, h: &Subspace) -> Result<Vec<Matrix>> {
    check_ambient(l, h)?;
    let basis = h.basis();
    let mut ops = Vec::new();
    for t in basis_tuples(basis.len(), l.arity() - 1) {
        let x = ElementTuple::new(t.iter().map(|&i| basis[i].clone()).collect());
        let op = l.right_mult_matrix(&x)?;
        if !op.is_zero() {
            ops.push(op);
        }
    }
    Ok(ops)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingPair {
    pub null: Subspace,
    pub one: Subspace,
}

/// Fitting decomposition of `l` relative to the right multiplications of a
/// nilpotent subalgebra `h`.
pub fn fitting_family(l: &NAlgebra, h: &Subspace) -> Result<FittingPair> {
    if !is_nilpotent_subalgebra(l, h)? {
        return Err(Error::Precondition(
            "subspace is not a nilpotent subalgebra".into(),
        ));
    }
    let ops = right_mult_family(l, h)?;
    if !matrix_lie_nilpotent(&ops)? {
        return Err(Error::Precondition(
            "right multiplications do not span a nilpotent Lie algebra".into(),
        ));
    }
    let m = l.dim();
    let mut null = Subspace::full(m);
    for op in &ops {
        null = null.intersect(&fitting_single(op)?.null)?;
    }
    let mut one = if ops.is_empty() {
        Subspace::zero(m)
    } else {
        Subspace::full(m)
    };
    loop {
        let mut next = Subspace::zero(m);
        for op in &ops {
            next = next.sum(&one.map(op)?)?;
        }
        if next.dim() == one.dim() {
            break;
        }
        one = next;
    }
    let direct = null.dim() + one.dim() == m && null.intersect(&one)?.is_zero();
    let invariant = ops
        .iter()
        .all(|op| null.is_invariant_under(op) && one.is_invariant_under(op));
    if !(direct && invariant) {
        return Err(Error::Precondition(format!(
            "Fitting components are not complementary invariant subspaces (null {}, one {})",
            null.dim(),
            one.dim()
        )));
    }
    Ok(FittingPair { null, one })
}

/// `{a : [x_1, .., a (slot s), .., x_n] in X for all x_i in X}` for a subspace `x`.
pub fn normalizer(l: &NAlgebra, x: &Subspace, s: usize) -> Result<Subspace> {
    check_ambient(l, x)?;
    let n = l.arity();
    if s == 0 || s > n {
        return Err(Error::SlotOutOfRange { slot: s, arity: n });
    }
    let m = l.dim();
    let q = x.quotient_matrix();
    if q.rows() == 0 {
        return Ok(Subspace::full(m));
    }
    let basis = x.basis();
    let mut rows = Vec::new();
    for filler in basis_tuples(basis.len(), n - 1) {
        let mut op = Matrix::zeros(m, m);
        for a in 0..m {
            let mut args: Vec<_> = filler.iter().map(|&i| basis[i].clone()).collect();
            args.insert(s - 1, unit_vector(m, a));
            let col = l.bracket(&args)?;
            for (k, c) in col.into_iter().enumerate() {
                op.set(k, a, c);
            }
        }
        rows.extend((&q * &op).row_vectors());
    }
    if rows.is_empty() {
        return Ok(Subspace::full(m));
    }
    Ok(kernel(&Matrix::from_rows(m, rows)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanVerdict {
    pub subalgebra: bool,
    pub nilpotent: bool,
    pub self_normalizing: bool,
    pub normalizer: Subspace,
}

impl CartanVerdict {
    pub fn is_cartan(&self) -> bool {
        self.subalgebra && self.nilpotent && self.self_normalizing
    }
}

impl fmt::Display for CartanVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "subalgebra: {}, nilpotent: {}, self-normalizing: {} (normalizer dim {})",
            self.subalgebra,
            self.nilpotent,
            self.self_normalizing,
            self.normalizer.dim()
        )
    }
}

pub fn is_cartan(l: &NAlgebra, h: &Subspace) -> Result<CartanVerdict> {
    check_ambient(l, h)?;
    let subalgebra = is_subalgebra(l, h)?;
    let nilpotent = subalgebra && is_s_nilpotent(&restrict(l, h)?, 1)?;
    let norm = normalizer(l, h, 1)?;
    Ok(CartanVerdict {
        subalgebra,
        nilpotent,
        self_normalizing: norm == *h,
        normalizer: norm,
    })
}

/// A nilpotent subalgebra is Cartan exactly when it equals the Fitting null
/// component of its own right multiplications.
pub fn check_prop31(l: &NAlgebra, h: &Subspace) -> Result<TheoremReport> {
    let pair = fitting_family(l, h)?;
    let cartan = is_cartan(l, h)?.is_cartan();
    let equals_null = pair.null == *h;
    let mut report = TheoremReport::default();
    report.push(
        "cartan iff equal to Fitting null component",
        cartan == equals_null,
        format!(
            "cartan {cartan}, equal {equals_null} (null dim {})",
            pair.null.dim()
        ),
    );
    Ok(report)
}

/// Fitting null component of a single right multiplication.
pub fn null_component(l: &NAlgebra, x: &ElementTuple) -> Result<Subspace> {
    let r = l.right_mult_matrix(x)?;
    let null = fitting_single(&r)?.null;
    assert_eq!(
        null.dim(),
        charpoly(&r)?.zero_root_order()?,
        "Fitting null dimension equals zero-root order"
    );
    Ok(null)
}

fn rank_of(l: &NAlgebra, x: &ElementTuple) -> Result<usize> {
    charpoly(&l.right_mult_matrix(x)?)?.zero_root_order()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSearchResult {
    pub best_tuple: ElementTuple,
    pub rank_upper_bound: usize,
    pub trials: usize,
    pub seed: u64,
}

impl fmt::Display for RegularSearchResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank_upper_bound {} witness ({}) [trials {}, seed {}]",
            self.rank_upper_bound, self.best_tuple, self.trials, self.seed
        )
    }
}

/// Minimizes the zero-root order of `R(x)` over all basis tuples followed by
/// `trials` random integer tuples with entries in `[-bound, bound]`.
///
/// Trial `t` draws from a generator seeded by `(seed, t)`, and ties go to the
/// earliest candidate, so the result does not depend on thread scheduling.
pub fn regular_search(
    l: &NAlgebra,
    trials: usize,
    seed: u64,
    bound: i64,
) -> Result<RegularSearchResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if bound < 0 {
        return Err(Error::InvalidParameter("bound must be non-negative".into()));
    }
    let m = l.dim();
    let len = l.arity() - 1;
    let basis_count = (m as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    let cap = DEFAULT_CASE_CAP;
    if m > 0 && basis_count > cap {
        return Err(Error::TooManyCases {
            cases: basis_count,
            cap,
        });
    }
    let basis: Vec<Vec<usize>> = basis_tuples(m, len).collect();
    let candidate = |index: usize| -> ElementTuple {
        if index < basis.len() {
            ElementTuple::basis(m, &basis[index])
        } else {
            let t = (index - basis.len()) as u64;
            random_tuple(&mut trial_rng(seed, t), m, len, bound)
        }
    };
    let total = basis.len() + trials;
    let (rank, index) = (0..total)
        .into_par_iter()
        .map(|i| rank_of(l, &candidate(i)).map(|r| (r, i)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min()
        .expect("at least one trial");
    Ok(RegularSearchResult {
        best_tuple: candidate(index),
        rank_upper_bound: rank,
        trials,
        seed,
    })
}

/// The null component of a regular element is a nilpotent subalgebra.
pub fn check_thm31(l: &NAlgebra, r: &RegularSearchResult) -> Result<TheoremReport> {
    let null = null_component(l, &r.best_tuple)?;
    let mut report = TheoremReport::default();
    report.push(
        "rank equals null component dimension",
        null.dim() == r.rank_upper_bound,
        format!("rank {}, null dim {}", r.rank_upper_bound, null.dim()),
    );
    let sub = is_subalgebra(l, &null)?;
    report.push("null component is a subalgebra", sub, format!("{null}"));
    let nil = sub && is_s_nilpotent(&restrict(l, &null)?, 1)?;
    report.push("null component is nilpotent", nil, "");
    Ok(report)
}

/// A Cartan subalgebra is a maximal nilpotent subalgebra: adjoining any basis
/// vector outside it yields a subalgebra that is not nilpotent.
pub fn check_maximality(l: &NAlgebra, h: &Subspace) -> Result<TheoremReport> {
    if !is_cartan(l, h)?.is_cartan() {
        return Err(Error::Precondition(
            "subspace is not a Cartan subalgebra".into(),
        ));
    }
    let mut report = TheoremReport::default();
    for a in 0..l.dim() {
        let v = unit_vector(l.dim(), a);
        if h.contains(&v)? {
            continue;
        }
        let extended = h.sum(&Subspace::from_vectors(l.dim(), [v])?)?;
        let closure = subalgebra_closure(l, &extended)?;
        let nil = is_s_nilpotent(&restrict(l, &closure)?, 1)?;
        report.push(
            format!("extension by e{} not nilpotent", a + 1),
            !nil,
            format!("closure dim {}", closure.dim()),
        );
    }
    Ok(report)
}

/// For a Cartan subalgebra `h` of an arity-2 algebra, `h` stays a nilpotent
/// subalgebra of the `n`-ary lift and its normalizer there is everything.
pub fn check_lift_normalizer(base: &NAlgebra, h: &Subspace, n: usize) -> Result<TheoremReport> {
    if base.arity() != 2 {
        return Err(Error::Arity {
            expected: 2,
            found: base.arity(),
        });
    }
    if n < 3 {
        return Err(Error::InvalidParameter(
            "lift arity must be at least 3".into(),
        ));
    }
    if !is_cartan(base, h)?.is_cartan() {
        return Err(Error::Precondition(
            "subspace is not a Cartan subalgebra of the base".into(),
        ));
    }
    let lift = lift_leibniz(base, n)?;
    let mut report = TheoremReport::default();
    report.push(
        "nilpotent subalgebra of the lift",
        is_nilpotent_subalgebra(&lift, h)?,
        format!("{h}"),
    );
    let norm = normalizer(&lift, h, 1)?;
    report.push(
        "normalizer in the lift is everything",
        norm.is_full(),
        format!("normalizer dim {} of {}", norm.dim(), lift.dim()),
    );
    Ok(report)
}

/// Checks on the quotient by the repeated-argument ideal: it is an n-Lie
/// algebra, the image of a Cartan subalgebra is Cartan, and the image of a
/// regular tuple attains the searched rank of the quotient.
pub fn verify_quotient_theorems(
    l: &NAlgebra,
    cartan: Option<&Subspace>,
    regular: Option<&RegularSearchResult>,
    bound: i64,
) -> Result<TheoremReport> {
    let p = quotient(l, &ideal_i(l))?;
    let q = &p.quotient;
    let mut report = TheoremReport::default();
    report.push(
        "quotient dimension",
        true,
        format!("{} -> {}", l.dim(), q.dim()),
    );
    let skew = skew_check(q);
    report.push(
        "quotient is antisymmetric",
        skew.all_hold(),
        format!("{:?}", skew.flags()),
    );
    let identity = check_fundamental_identity(q)?;
    report.push(
        "quotient satisfies the identity",
        identity.passed,
        format!("{} cases", identity.checked_cases),
    );

    if let Some(h) = cartan {
        if !is_cartan(l, h)?.is_cartan() {
            return Err(Error::Precondition(
                "subspace is not a Cartan subalgebra".into(),
            ));
        }
        let image = p.project_subspace(h)?;
        let verdict = is_cartan(q, &image)?;
        report.push(
            "image of Cartan subalgebra is Cartan",
            verdict.is_cartan(),
            format!("image dim {}; {verdict}", image.dim()),
        );
    }

    if let Some(r) = regular {
        let image = p.project_tuple(&r.best_tuple)?;
        let projected = rank_of(q, &image)?;
        let searched = regular_search(q, r.trials, r.seed, bound)?;
        report.push(
            "image of regular tuple attains quotient rank",
            projected == searched.rank_upper_bound,
            format!(
                "projected {projected}, searched {}",
                searched.rank_upper_bound
            ),
        );
    }
    Ok(report)
}
