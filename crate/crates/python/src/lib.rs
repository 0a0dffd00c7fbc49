//! Python bindings. Integers come back as Python `int`, exact rationals as
//! `fractions.Fraction`, and reports as plain dicts.

use hyperchrom::bounds::{
    certify_cor31, certify_len0, certify_prn1, certify_th41, check_sandwich_all,
    counting_lower_bound, f_axw, f_eta, threshold_bounds, verify_pp15, DEFAULT_SAMPLES,
};
use hyperchrom::deltacycles::chromatic_polynomial_from_family;
use hyperchrom::listcolor::count_l_colorings_from_family;
use hyperchrom::{
    chromatic_polynomial_ie, count_l_colorings, count_proper_colorings, plmin_exact, Assignment,
    Budget, EdgeSet, Error, Eta, NbFamily,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

create_exception!(hyperchrom_py, BudgetExceeded, PyRuntimeError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetExceeded::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, q: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.numer().clone(), q.denom().clone()))
}

fn to_python<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn sets(v: impl IntoIterator<Item = EdgeSet>) -> Vec<Vec<usize>> {
    v.into_iter().map(EdgeSet::to_vec).collect()
}

/// A hypergraph on vertices `0..n` together with the enumeration caps used
/// by every method.
#[pyclass(name = "Hypergraph", module = "hyperchrom_py")]
pub struct PyHypergraph {
    inner: hyperchrom::Hypergraph,
    budget: Budget,
}

impl PyHypergraph {
    fn eta(&self, eta: Option<Vec<usize>>) -> PyResult<Eta> {
        let eta = match eta {
            Some(ranks) => Eta::from_ranks(ranks).map_err(py_err)?,
            None => Eta::identity(self.inner.m()),
        };
        eta.check_for(&self.inner).map_err(py_err)?;
        Ok(eta)
    }

    fn family(&self, eta: Option<Vec<usize>>) -> PyResult<NbFamily> {
        NbFamily::compute(&self.inner, &self.eta(eta)?, &self.budget).map_err(py_err)
    }

    fn assignment(&self, lists: Vec<Vec<u32>>) -> PyResult<Assignment> {
        let k = lists.first().map_or(0, Vec::len);
        let l = Assignment::new(k, lists).map_err(py_err)?;
        l.check_for(&self.inner).map_err(py_err)?;
        Ok(l)
    }
}

#[pymethods]
impl PyHypergraph {
    #[new]
    #[pyo3(signature = (n, edges, budget_subsets=None, budget_colorings=None))]
    fn new(
        n: usize,
        edges: Vec<Vec<usize>>,
        budget_subsets: Option<u64>,
        budget_colorings: Option<u64>,
    ) -> PyResult<Self> {
        let mut budget = Budget::default();
        if let Some(s) = budget_subsets {
            budget.subsets = s;
        }
        if let Some(c) = budget_colorings {
            budget.colorings = c;
        }
        if budget.subsets == 0 || budget.colorings == 0 {
            return Err(PyValueError::new_err("budgets must be positive"));
        }
        let inner = hyperchrom::Hypergraph::new(n, edges).map_err(py_err)?;
        Ok(PyHypergraph { inner, budget })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    /// Common edge size, or `None` for mixed sizes.
    #[getter]
    fn uniformity(&self) -> Option<usize> {
        self.inner.uniformity()
    }

    fn stats<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let s = self.inner.struct_stats();
        let ew = s.per_edge_ew.map(sets);
        to_python(
            py,
            &serde_json::json!({ "r": s.r, "gamma": s.gamma, "rho": s.rho, "e_r1": ew }),
        )
    }

    /// Coefficients of `P(H,k)`, lowest power first, by inclusion-exclusion.
    fn chromatic_polynomial(&self) -> PyResult<Vec<BigInt>> {
        let p = chromatic_polynomial_ie(&self.inner, &self.budget).map_err(py_err)?;
        Ok(p.coeffs().to_vec())
    }

    /// Coefficients from the broken-cycle expansion under `eta`.
    #[pyo3(signature = (eta=None))]
    fn chromatic_polynomial_nbc(&self, eta: Option<Vec<usize>>) -> PyResult<Vec<BigInt>> {
        let nb = self.family(eta)?;
        Ok(chromatic_polynomial_from_family(&self.inner, &nb).coeffs().to_vec())
    }

    fn count_colorings(&self, k: u64) -> PyResult<BigInt> {
        Ok(count_proper_colorings(&self.inner, k, &self.budget)
            .map_err(py_err)?
            .to_bigint())
    }

    fn delta_cycles(&self) -> PyResult<Vec<Vec<usize>>> {
        let nb = self.family(None)?;
        Ok(sets(nb.delta_cycles().iter().map(|c| c.0)))
    }

    #[pyo3(signature = (eta=None))]
    fn broken_delta_cycles(&self, eta: Option<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
        let nb = self.family(eta)?;
        Ok(sets(nb.broken().iter().map(|b| b.0)))
    }

    /// Edge sets containing no broken delta-cycle.
    #[pyo3(signature = (eta=None))]
    fn nb_family(&self, eta: Option<Vec<usize>>) -> PyResult<Vec<Vec<usize>>> {
        Ok(sets(self.family(eta)?.members().iter().copied()))
    }

    /// `P(H,L)` by enumeration; `lists[v]` is the list of vertex `v`.
    fn count_list_colorings(&self, lists: Vec<Vec<u32>>) -> PyResult<BigInt> {
        let l = self.assignment(lists)?;
        Ok(count_l_colorings(&self.inner, &l, &self.budget)
            .map_err(py_err)?
            .to_bigint())
    }

    /// `P(H,L)` by the broken-cycle expansion.
    #[pyo3(signature = (lists, eta=None))]
    fn count_list_colorings_nbc(&self, lists: Vec<Vec<u32>>, eta: Option<Vec<usize>>) -> PyResult<BigInt> {
        let l = self.assignment(lists)?;
        let nb = self.family(eta)?;
        Ok(count_l_colorings_from_family(&self.inner, &l, &nb)
            .map_err(py_err)?
            .to_bigint())
    }

    /// `(P_l(H,k), minimising lists)`.
    fn plmin(&self, k: usize) -> PyResult<(BigInt, Vec<Vec<u32>>)> {
        let min = plmin_exact(&self.inner, k, &self.budget).map_err(py_err)?;
        Ok((min.value.to_bigint(), min.witness.lists().to_vec()))
    }

    /// The per-edge factor as a `Fraction`.
    #[pyo3(signature = (edge, k, eta=None))]
    fn factor<'py>(
        &self,
        py: Python<'py>,
        edge: usize,
        k: u64,
        eta: Option<Vec<usize>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let f = f_eta(&self.inner, &self.eta(eta)?, edge, k, &self.budget).map_err(py_err)?;
        fraction(py, &f.value)
    }

    fn threshold_bounds<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_python(py, &threshold_bounds(&self.inner))
    }

    /// Runs `cor31`, `len0`, `prn1` or `th41` and returns the report.
    #[pyo3(signature = (which, k, eta=None, lists=None, samples=DEFAULT_SAMPLES, seed=0))]
    #[allow(clippy::too_many_arguments)]
    fn certify<'py>(
        &self,
        py: Python<'py>,
        which: &str,
        k: u64,
        eta: Option<Vec<usize>>,
        lists: Option<Vec<Vec<u32>>>,
        samples: usize,
        seed: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let (h, b) = (&self.inner, &self.budget);
        let eta = self.eta(eta)?;
        let report = match which {
            "cor31" => certify_cor31(h, &eta, k, b),
            "len0" => certify_len0(h, &eta, k, b),
            "prn1" => certify_prn1(h, &eta, k, b),
            "th41" => {
                let l = lists.map(|l| self.assignment(l)).transpose()?;
                certify_th41(h, &eta, k, l.as_ref(), samples, seed, b)
            }
            other => return Err(PyValueError::new_err(format!("unknown certificate {other:?}"))),
        }
        .map_err(py_err)?;
        to_python(py, &report)
    }

    /// Difference against the factor bound for one assignment.
    #[pyo3(signature = (lists, eta=None))]
    fn verify_factor_bound<'py>(
        &self,
        py: Python<'py>,
        lists: Vec<Vec<u32>>,
        eta: Option<Vec<usize>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let l = self.assignment(lists)?;
        let report = verify_pp15(&self.inner, &self.eta(eta)?, &l, &self.budget).map_err(py_err)?;
        to_python(py, &report)
    }

    fn check_sandwich<'py>(&self, py: Python<'py>, lists: Vec<Vec<u32>>) -> PyResult<Bound<'py, PyAny>> {
        let l = self.assignment(lists)?;
        to_python(py, &check_sandwich_all(&self.inner, &l).map_err(py_err)?)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, edges={:?})", self.inner.n(), self.inner.edges())
    }
}

/// The envelope `f(a, x, w)`.
#[pyfunction(name = "f_axw")]
fn py_f_axw(a: f64, x: f64, w: f64) -> PyResult<f64> {
    f_axw(a, x, w).map_err(py_err)
}

/// Counting lower bound for `m` edges at rational size fraction
/// `num/den` and `k` colours, as a `Fraction`.
#[pyfunction(name = "counting_lower_bound")]
fn py_counting_lower_bound<'py>(
    py: Python<'py>,
    m: usize,
    num: i64,
    den: i64,
    k: u64,
) -> PyResult<Bound<'py, PyAny>> {
    if den == 0 {
        return Err(PyValueError::new_err("zero denominator"));
    }
    let a = BigRational::new(num.into(), den.into());
    fraction(py, &counting_lower_bound(m, &a, k).map_err(py_err)?)
}

/// Adds the classes and functions to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(py_f_axw, m)?)?;
    m.add_function(wrap_pyfunction!(py_counting_lower_bound, m)?)?;
    m.add("BudgetExceeded", m.py().get_type::<BudgetExceeded>())?;
    Ok(())
}

#[pymodule]
fn hyperchrom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
