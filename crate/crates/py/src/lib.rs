//! Python bindings. Vectors cross the boundary as literals such as `"2e1 + 1/3e4"`,
//! subspaces as lists of such literals, and exact scalars as strings.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use leibniz_core::algebra::{
    check_fundamental_identity_with_cap, check_rmult_identities, skew_check, DEFAULT_CASE_CAP,
};
use leibniz_core::cartan::{
    fitting_family, is_cartan, normalizer, null_component, regular_search, TheoremReport,
};
use leibniz_core::catalog::{lift_leibniz, Fixture};
use leibniz_core::cli::{self, parse_subspace, parse_tuple, parse_vector};
use leibniz_core::exactlin::{format_vector, Subspace};
use leibniz_core::nilpotency::{
    default_max_k, is_nilpotent, is_s_nilpotent, series_full, series_s,
};
use leibniz_core::structure::{ideal_i, ideal_j, quotient};
use leibniz_core::{Error, NAlgebra};

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn basis_literals(s: &Subspace) -> Vec<String> {
    s.basis().iter().map(|v| format_vector(v)).collect()
}

/// `(check name, passed, detail)` rows of a report.
type CheckRows = Vec<(String, bool, String)>;

fn checks(report: &TheoremReport) -> CheckRows {
    report
        .checks
        .iter()
        .map(|c| (c.name.clone(), c.passed, c.detail.clone()))
        .collect()
}

/// A finite-dimensional Leibniz n-algebra over the rationals.
#[pyclass(name = "Algebra", module = "leibniz", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyAlgebra {
    inner: NAlgebra,
}

impl PyAlgebra {
    fn subspace(&self, vectors: Vec<String>) -> PyResult<Subspace> {
        parse_subspace(&vectors.join(";"), self.inner.dim()).map_err(py_err)
    }
}

#[pymethods]
impl PyAlgebra {
    /// Parse the line-oriented algebra text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        cli::parse_algebra(text)
            .map(|inner| PyAlgebra { inner })
            .map_err(py_err)
    }

    /// A fixed fixture: "A3", "D3", "C3" or "W5".
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let fixture = Fixture::named(name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture `{name}`")))?;
        let inner = fixture
            .build()
            .map_err(py_err)?
            .with_name(name.to_ascii_uppercase());
        Ok(PyAlgebra { inner })
    }

    /// The all-zero algebra.
    #[staticmethod]
    fn zero(arity: usize, dim: usize) -> PyResult<Self> {
        NAlgebra::zero("zero", arity, dim)
            .map(|inner| PyAlgebra { inner })
            .map_err(py_err)
    }

    /// Lift of an arity-2 Leibniz algebra to arity `n` by nested brackets.
    fn lift(&self, n: usize) -> PyResult<Self> {
        lift_leibniz(&self.inner, n)
            .map(|inner| PyAlgebra { inner })
            .map_err(py_err)
    }

    fn to_text(&self) -> String {
        cli::serialize_algebra(&self.inner)
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn bracket(&self, args: Vec<String>) -> PyResult<String> {
        let vectors = args
            .iter()
            .map(|a| parse_vector(a, self.inner.dim()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(py_err)?;
        self.inner
            .bracket(&vectors)
            .map(|v| format_vector(&v))
            .map_err(py_err)
    }

    /// Exhaustive identity check: `(passed, cases, counterexample or None)`.
    #[pyo3(signature = (cap=None))]
    fn check(&self, cap: Option<u128>) -> PyResult<(bool, u64, Option<String>)> {
        let r = check_fundamental_identity_with_cap(&self.inner, cap.unwrap_or(DEFAULT_CASE_CAP))
            .map_err(py_err)?;
        Ok((
            r.passed,
            r.checked_cases,
            r.first_counterexample.map(|c| c.to_string()),
        ))
    }

    /// The four antisymmetry flags.
    fn skew(&self) -> Vec<bool> {
        skew_check(&self.inner).flags().to_vec()
    }

    /// Matrix of the right multiplication by a tuple, entries as strings.
    fn right_mult(&self, tuple: Vec<String>) -> PyResult<Vec<Vec<String>>> {
        let x =
            parse_tuple(&tuple.join(","), self.inner.dim(), self.inner.arity()).map_err(py_err)?;
        let r = self.inner.right_mult_matrix(&x).map_err(py_err)?;
        Ok(r.row_vectors()
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect())
    }

    fn rmult_identities_hold(&self, samples: usize, seed: u64) -> PyResult<bool> {
        Ok(check_rmult_identities(&self.inner, samples, seed)
            .map_err(py_err)?
            .passed())
    }

    fn ideal_i(&self) -> Vec<String> {
        basis_literals(&ideal_i(&self.inner))
    }

    fn ideal_j(&self) -> Vec<String> {
        basis_literals(&ideal_j(&self.inner))
    }

    /// Quotient by the repeated-argument ideal.
    fn quotient(&self) -> PyResult<Self> {
        let p = quotient(&self.inner, &ideal_i(&self.inner)).map_err(py_err)?;
        Ok(PyAlgebra { inner: p.quotient })
    }

    /// Dimensions of the series terms; slot series for `s`, else the full series.
    #[pyo3(signature = (s=None))]
    fn series(&self, s: Option<usize>) -> PyResult<Vec<usize>> {
        let max_k = default_max_k(&self.inner);
        let r = match s {
            Some(s) => series_s(&self.inner, s, max_k).map_err(py_err)?,
            None => series_full(&self.inner, max_k),
        };
        Ok(r.dims())
    }

    fn is_nilpotent(&self) -> bool {
        is_nilpotent(&self.inner)
    }

    fn is_s_nilpotent(&self, s: usize) -> PyResult<bool> {
        is_s_nilpotent(&self.inner, s).map_err(py_err)
    }

    fn is_cartan(&self, subspace: Vec<String>) -> PyResult<bool> {
        let h = self.subspace(subspace)?;
        Ok(is_cartan(&self.inner, &h).map_err(py_err)?.is_cartan())
    }

    /// `(L0, L1)` relative to the right multiplications of a nilpotent subalgebra.
    fn fitting(&self, subspace: Vec<String>) -> PyResult<(Vec<String>, Vec<String>)> {
        let h = self.subspace(subspace)?;
        let pair = fitting_family(&self.inner, &h).map_err(py_err)?;
        Ok((basis_literals(&pair.null), basis_literals(&pair.one)))
    }

    #[pyo3(signature = (subspace, s=1))]
    fn normalizer(&self, subspace: Vec<String>, s: usize) -> PyResult<Vec<String>> {
        let x = self.subspace(subspace)?;
        Ok(basis_literals(
            &normalizer(&self.inner, &x, s).map_err(py_err)?,
        ))
    }

    fn null_component(&self, tuple: Vec<String>) -> PyResult<Vec<String>> {
        let x =
            parse_tuple(&tuple.join(","), self.inner.dim(), self.inner.arity()).map_err(py_err)?;
        Ok(basis_literals(
            &null_component(&self.inner, &x).map_err(py_err)?,
        ))
    }

    /// `(rank upper bound, witness tuple)`.
    #[pyo3(signature = (trials=100, seed=0, bound=3))]
    fn regular_search(
        &self,
        trials: usize,
        seed: u64,
        bound: i64,
    ) -> PyResult<(usize, Vec<String>)> {
        let r = regular_search(&self.inner, trials, seed, bound).map_err(py_err)?;
        let witness = r
            .best_tuple
            .components()
            .iter()
            .map(|v| format_vector(v))
            .collect();
        Ok((r.rank_upper_bound, witness))
    }

    /// Full theorem suite: `(passed, [(check, passed, detail), ...])`.
    #[pyo3(signature = (trials=100, seed=0, bound=3, cap=None))]
    fn verify(
        &self,
        trials: usize,
        seed: u64,
        bound: i64,
        cap: Option<u128>,
    ) -> PyResult<(bool, CheckRows)> {
        let report = cli::verify_suite(
            &self.inner,
            trials,
            seed,
            bound,
            cap.unwrap_or(DEFAULT_CASE_CAP),
        )
        .map_err(py_err)?;
        Ok((report.passed(), checks(&report)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(name={:?}, arity={}, dim={})",
            self.inner.name(),
            self.inner.arity(),
            self.inner.dim()
        )
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner.same_structure(&other.inner)
    }
}

/// Exact computations in Leibniz n-algebras.
#[pymodule]
pub mod leibniz {
    #[pymodule_export]
    use super::PyAlgebra;
}
