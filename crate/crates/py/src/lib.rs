//! Python bindings. Exponents and multiplicities cross the boundary as
//! Python ints, coefficients as `fractions.Fraction`.

use lacunary::binomial::{binomial_factor_search, FoundFactor};
use lacunary::bounds::{test_linear_factor_adaptive, BoundReport, LinearCandidate};
use lacunary::dense::DensePoly2;
use lacunary::engine::{check_divides, factor as factor_impl, FactorOutput};
use lacunary::gap::{compute_c, decompose as decompose_impl, delta_absolute, delta_rational, GapPolicy};
use lacunary::univariate::find_low_degree_factors;
use lacunary::{Error, SparsePolynomial, Var};
use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyType;

create_exception!(pylacunary, DenseLimitError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DenseLimitExceeded { .. } => DenseLimitError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn policy(dense_limit: usize, heuristic_delta: Option<BigUint>) -> GapPolicy {
    GapPolicy {
        dense_limit,
        heuristic_delta,
    }
}

/// A sparse polynomial in `x` and `y` with rational coefficients.
#[pyclass(name = "Polynomial", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial {
    inner: SparsePolynomial,
}

#[pymethods]
impl PyPolynomial {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(|inner| PyPolynomial { inner }).map_err(to_py)
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        SparsePolynomial::from_json_str(text)
            .map(|inner| PyPolynomial { inner })
            .map_err(to_py)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner.to_json()).expect("serializable")
    }

    /// `(coefficient, ex, ey)` triples in canonical order.
    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Bound<'py, PyAny>, BigUint, BigUint)>> {
        let fraction = py.import("fractions")?.getattr("Fraction")?;
        self.inner
            .terms()
            .iter()
            .map(|t| {
                let c = fraction.call1((t.coeff.numer().clone(), t.coeff.denom().clone()))?;
                Ok((c, t.ex.clone(), t.ey.clone()))
            })
            .collect()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn total_degree(&self) -> BigUint {
        self.inner.total_degree()
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner * &other.inner,
        }
    }

    fn __add__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner + &other.inner,
        }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyPolynomial {
            inner: &self.inner - &other.inner,
        }
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }
}

impl PyPolynomial {
    fn dense(&self) -> PyResult<DensePoly2> {
        Ok(lacunary::dense::from_sparse(&self.inner, usize::MAX)
            .map_err(to_py)?
            .poly
            .primitive())
    }
}

fn found(factors: &[FoundFactor]) -> Vec<(PyPolynomial, usize, String)> {
    factors
        .iter()
        .map(|f| {
            (
                PyPolynomial {
                    inner: f.poly.to_sparse(),
                },
                f.multiplicity,
                f.class.as_str().to_string(),
            )
        })
        .collect()
}

/// Irreducible factors of degree at most `d` with their multiplicities.
#[pyclass(name = "FactorResult", frozen)]
pub struct PyFactorResult {
    #[pyo3(get)]
    x_multiplicity: BigUint,
    #[pyo3(get)]
    y_multiplicity: BigUint,
    /// `(factor, multiplicity, class)` with class one of `cyclotomic`,
    /// `binomial`, `general`.
    #[pyo3(get)]
    factors: Vec<(PyPolynomial, usize, String)>,
    /// Checks skipped because a dense form exceeded the limit.
    #[pyo3(get)]
    untested: Vec<String>,
    #[pyo3(get)]
    delta: BigUint,
    #[pyo3(get)]
    heuristic: bool,
    json: String,
}

#[pymethods]
impl PyFactorResult {
    fn to_json(&self) -> String {
        self.json.clone()
    }

    fn __repr__(&self) -> String {
        let fs: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e, _)| format!("({})^{e}", p.inner))
            .collect();
        format!(
            "FactorResult(x^{} * y^{} * [{}])",
            self.x_multiplicity,
            self.y_multiplicity,
            fs.join(", ")
        )
    }
}

impl From<FactorOutput> for PyFactorResult {
    fn from(out: FactorOutput) -> Self {
        PyFactorResult {
            json: serde_json::to_string(&out.to_json()).expect("serializable"),
            factors: found(&out.factors),
            untested: out.untested.iter().map(|u| u.to_string()).collect(),
            delta: out.parameters.delta,
            heuristic: out.heuristic,
            x_multiplicity: out.x_multiplicity,
            y_multiplicity: out.y_multiplicity,
        }
    }
}

#[pyfunction]
#[pyo3(signature = (f, d, dense_limit = 2000, heuristic_delta = None))]
fn factor(
    py: Python<'_>,
    f: &PyPolynomial,
    d: usize,
    dense_limit: usize,
    heuristic_delta: Option<BigUint>,
) -> PyResult<PyFactorResult> {
    let p = policy(dense_limit, heuristic_delta);
    let out = py.detach(|| factor_impl(&f.inner, d, &p)).map_err(to_py)?;
    Ok(out.into())
}

/// Factors that are products of binomials, as `(factor, multiplicity, class)`.
#[pyfunction]
#[pyo3(signature = (f, d, dense_limit = 2000))]
fn binomial_factors(py: Python<'_>, f: &PyPolynomial, d: usize, dense_limit: usize) -> PyResult<Vec<(PyPolynomial, usize, String)>> {
    let p = policy(dense_limit, None);
    let out = py
        .detach(|| {
            let (_, _, g) = f.inner.strip_monomial()?;
            binomial_factor_search(&g, d, &p)
        })
        .map_err(to_py)?;
    Ok(found(&out.factors))
}

/// Factors of a polynomial in one variable: `(var, z_multiplicity,
/// [(factor, multiplicity, cyclotomic)], untested)`.
#[pyfunction]
#[pyo3(signature = (f, d, dense_limit = 2000))]
#[allow(clippy::type_complexity)]
fn univariate_factors(
    py: Python<'_>,
    f: &PyPolynomial,
    d: usize,
    dense_limit: usize,
) -> PyResult<(String, BigUint, Vec<(PyPolynomial, usize, bool)>, Vec<String>)> {
    let p = policy(dense_limit, None);
    let out = py
        .detach(|| find_low_degree_factors(&f.inner, d, &p))
        .map_err(to_py)?;
    let var = match out.var {
        Var::X => "x",
        Var::Y => "y",
    };
    let factors = out
        .factors
        .iter()
        .map(|u| {
            let inner = u.poly.to_sparse(out.var);
            (PyPolynomial { inner }, u.multiplicity, u.cyclotomic)
        })
        .collect();
    let untested = out.untested.iter().map(|u| u.to_string()).collect();
    Ok((var.to_string(), out.z_multiplicity, factors, untested))
}

/// Pieces `(gamma, delta, piece)` with `f = sum x^gamma * y^delta * piece`.
#[pyfunction]
fn decompose(f: &PyPolynomial, delta_x: BigUint, delta_y: BigUint) -> PyResult<Vec<(BigUint, BigUint, PyPolynomial)>> {
    let dec = decompose_impl(&f.inner, &delta_x, &delta_y).map_err(to_py)?;
    Ok(dec
        .pieces
        .into_iter()
        .map(|p| (p.gamma, p.delta_off, PyPolynomial { inner: p.poly }))
        .collect())
}

/// Certified gap length for factors of degree at most `d`.
#[pyfunction]
#[pyo3(signature = (f, d, absolute = false))]
fn gap_length(f: &PyPolynomial, d: usize, absolute: bool) -> PyResult<BigUint> {
    let c = compute_c(&f.inner).map_err(to_py)?;
    Ok(if absolute {
        delta_absolute(d, &c)
    } else {
        delta_rational(d, &c)
    })
}

/// `(bound over Q, bound over the algebraic closure)` on the number of
/// non-cyclotomic factors, rounded up.
#[pyfunction]
fn factor_count_bounds(f: &PyPolynomial) -> PyResult<(String, String)> {
    let j = BoundReport::for_polynomial(&f.inner).map_err(to_py)?.to_json();
    Ok((j.bound_rational, j.bound_absolute))
}

/// Whether `p` divides `f`.
#[pyfunction]
#[pyo3(signature = (f, p, d = 1, dense_limit = 2000))]
fn divides(f: &PyPolynomial, p: &PyPolynomial, d: usize, dense_limit: usize) -> PyResult<bool> {
    let c = compute_c(&f.inner).map_err(to_py)?;
    let delta = delta_rational(d.max(p.dense()?.total_degree()), &c);
    check_divides(&f.inner, &p.dense()?, &delta, dense_limit).map_err(to_py)
}

/// Whether `a*x + b*y + c` divides `f`, using the gap adapted to the line.
#[pyfunction]
#[pyo3(signature = (f, a, b, c, dense_limit = 2000))]
fn test_linear(f: &PyPolynomial, a: BigInt, b: BigInt, c: BigInt, dense_limit: usize) -> PyResult<bool> {
    let p = LinearCandidate::new(a, b, c).map_err(to_py)?;
    test_linear_factor_adaptive(&f.inner, &p, dense_limit).map_err(to_py)
}

#[pymodule]
fn pylacunary(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyFactorResult>()?;
    m.add("DenseLimitError", m.py().get_type::<DenseLimitError>())?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_factors, m)?)?;
    m.add_function(wrap_pyfunction!(univariate_factors, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(gap_length, m)?)?;
    m.add_function(wrap_pyfunction!(factor_count_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(divides, m)?)?;
    m.add_function(wrap_pyfunction!(test_linear, m)?)?;
    Ok(())
}
