use dnc_core::arith::{parse_nat, parse_rational, BigNat, Rational};
use dnc_core::catalog;
use dnc_core::oracle::MemoTable;
use dnc_core::poly::{Recurrence as CoreRecurrence, TollPolynomial};
use dnc_core::solver::Solver;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: dnc_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Accepts anything whose `str()` is a rational literal: int, Fraction, "p/q".
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    parse_rational(&obj.str()?.to_cow()?).map_err(err)
}

fn natural(obj: &Bound<'_, PyAny>) -> PyResult<BigNat> {
    parse_nat(&obj.str()?.to_cow()?).map_err(err)
}

fn fraction<'py>(py: Python<'py>, x: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((x.numer().clone(), x.denom().clone()))
}

/// x_n = a x_ceil(n/2) + a x_floor(n/2) + P(ceil(n/2), floor(n/2)), x_1 given.
#[pyclass(frozen, module = "dnc_recurrence")]
struct Recurrence {
    solver: Solver,
}

#[pymethods]
impl Recurrence {
    #[new]
    #[pyo3(signature = (a, poly, x1 = None))]
    fn new(a: &Bound<'_, PyAny>, poly: &str, x1: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let x1 = match x1 {
            Some(v) => rational(v)?,
            None => Rational::from_integer(0.into()),
        };
        let poly: TollPolynomial = poly.parse().map_err(err)?;
        let rec = CoreRecurrence::new(rational(a)?, poly, x1).map_err(err)?;
        Ok(Self { solver: Solver::new(&rec).map_err(err)? })
    }

    #[getter]
    fn a<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.solver.recurrence().a)
    }

    #[getter]
    fn x1<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.solver.recurrence().x1)
    }

    #[getter]
    fn poly(&self) -> String {
        self.solver.recurrence().poly.to_string()
    }

    /// x_n from the closed form.
    fn solve<'py>(&self, py: Python<'py>, n: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let v = self.solver.solve(&natural(n)?).map_err(err)?;
        fraction(py, &v)
    }

    /// [x_1, ..., x_to].
    fn sequence<'py>(&self, py: Python<'py>, to: u64) -> PyResult<Vec<Bound<'py, PyAny>>> {
        (1..=to)
            .map(|n| fraction(py, &self.solver.solve(&BigNat::from(n)).map_err(err)?))
            .collect()
    }

    /// x_n by direct memoized recursion.
    fn oracle<'py>(&self, py: Python<'py>, n: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
        let v = MemoTable::new(self.solver.recurrence()).get(&natural(n)?).map_err(err)?;
        fraction(py, &v)
    }

    fn __repr__(&self) -> String {
        let r = self.solver.recurrence();
        format!("Recurrence(a='{}', poly='{}', x1='{}')", r.a, r.poly, r.x1)
    }
}

/// x_n for the single toll ceil(n/2)^r floor(n/2)^t with x_1 = 0.
#[pyfunction]
fn x_rt<'py>(py: Python<'py>, r: u32, t: u32, n: &Bound<'py, PyAny>, a: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let v = dnc_core::solver::x_rt(r, t, &natural(n)?, &rational(a)?).map_err(err)?;
    fraction(py, &v)
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    catalog::names()
}

#[pyfunction]
fn catalog_eval<'py>(py: Python<'py>, name: &str, n: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let v = catalog::catalog_eval(name, &natural(n)?).map_err(err)?;
    fraction(py, &v)
}

#[pyfunction]
fn catalog_recurrence(name: &str) -> PyResult<Recurrence> {
    let rec = catalog::lookup(name).map_err(err)?.recurrence();
    Ok(Recurrence { solver: Solver::new(&rec).map_err(err)? })
}

#[pymodule]
fn dnc_recurrence(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Recurrence>()?;
    m.add_function(wrap_pyfunction!(x_rt, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_eval, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_recurrence, m)?)?;
    Ok(())
}
