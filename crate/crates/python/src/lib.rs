//! Python bindings. Vectors cross the boundary as lists of field-element
//! encodings, constant coordinate first.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use sympair::channel::correctability_experiment;
use sympair::codes::{distance_table, mds_exponents};
use sympair::oracle::{
    min_hamming_weight_bruteforce, min_pair_weight_bruteforce, EnumBudget, Status,
};
use sympair::pairmetrics::{self, pair_read};
use sympair::{CodeSpec, FieldSpec, Poly, RingElement};

create_exception!(sympair_py, BudgetExhausted, PyRuntimeError);

fn to_py(err: sympair::Error) -> PyErr {
    match err {
        sympair::Error::BudgetExhausted { .. } => BudgetExhausted::new_err(err.to_string()),
        sympair::Error::Internal(_) => PyRuntimeError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn budget(max_enum: Option<u64>) -> PyResult<EnumBudget> {
    match max_enum {
        Some(max) => EnumBudget::new(max).map_err(to_py),
        None => Ok(EnumBudget::default()),
    }
}

/// The field F_{p^m} under its default modulus, or an explicit one.
#[pyclass(name = "Field", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyField {
    inner: FieldSpec,
}

impl PyField {
    fn word(&self, values: &[u32]) -> PyResult<RingElement> {
        RingElement::from_encodings(&self.inner, values).map_err(to_py)
    }

    fn elem(&self, v: u32) -> PyResult<sympair::FieldElement> {
        self.inner.element(v).map_err(to_py)
    }
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (p, m = 1, modulus = None))]
    fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> PyResult<Self> {
        let inner = match modulus {
            Some(coeffs) => {
                let f = FieldSpec::with_modulus(p, coeffs).map_err(to_py)?;
                if f.m() != m {
                    return Err(PyValueError::new_err(format!(
                        "modulus has degree {}, expected {m}",
                        f.m()
                    )));
                }
                f
            }
            None => sympair::build_field(p, m).map_err(to_py)?,
        };
        Ok(PyField { inner })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn q(&self) -> u32 {
        self.inner.q()
    }

    #[getter]
    fn modulus(&self) -> Vec<u32> {
        self.inner.modulus().to_vec()
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.add(self.elem(a)?, self.elem(b)?).value())
    }

    fn sub(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.sub(self.elem(a)?, self.elem(b)?).value())
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.inner.mul(self.elem(a)?, self.elem(b)?).value())
    }

    fn neg(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.neg(self.elem(a)?).value())
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.inv(self.elem(a)?).map_err(to_py)?.value())
    }

    fn pow(&self, a: u32, k: u64) -> PyResult<u32> {
        Ok(self.inner.pow(self.elem(a)?, k).value())
    }

    /// Product in F_{p^m}[x]/(x^n - 1).
    fn ring_mul(&self, x: Vec<u32>, y: Vec<u32>) -> PyResult<Vec<u32>> {
        let prod = self
            .word(&x)?
            .mul(&self.inner, &self.word(&y)?)
            .map_err(to_py)?;
        Ok(prod.encodings())
    }

    fn hamming_weight(&self, x: Vec<u32>) -> PyResult<usize> {
        Ok(pairmetrics::hamming_weight(&self.word(&x)?))
    }

    fn pair_weight(&self, x: Vec<u32>) -> PyResult<usize> {
        pairmetrics::pair_weight(&self.word(&x)?).map_err(to_py)
    }

    fn hamming_distance(&self, x: Vec<u32>, y: Vec<u32>) -> PyResult<usize> {
        pairmetrics::hamming_distance(&self.word(&x)?, &self.word(&y)?).map_err(to_py)
    }

    fn pair_distance(&self, x: Vec<u32>, y: Vec<u32>) -> PyResult<usize> {
        pairmetrics::pair_distance(&self.word(&x)?, &self.word(&y)?).map_err(to_py)
    }

    /// Cyclic pairs `(x_j, x_{j+1})`.
    fn pair_read(&self, x: Vec<u32>) -> PyResult<Vec<(u32, u32)>> {
        let read = pair_read(&self.word(&x)?).map_err(to_py)?;
        Ok(read
            .pairs()
            .iter()
            .map(|(a, b)| (a.value(), b.value()))
            .collect())
    }

    /// `(support, run count)` of the disagreement set.
    fn run_count(&self, x: Vec<u32>, y: Vec<u32>) -> PyResult<(Vec<usize>, usize)> {
        let r = pairmetrics::run_count(&self.word(&x)?, &self.word(&y)?).map_err(to_py)?;
        Ok((r.support, r.block_count))
    }

    fn __repr__(&self) -> String {
        format!(
            "Field(p={}, m={}, modulus={:?})",
            self.inner.p(),
            self.inner.m(),
            self.inner.modulus()
        )
    }
}

/// The cyclic code generated by `(x - 1)^i` in length `p^e`.
#[pyclass(name = "CodeSpec", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyCodeSpec {
    inner: CodeSpec,
}

#[pymethods]
impl PyCodeSpec {
    #[new]
    #[pyo3(signature = (p, e, i, m = 1))]
    fn new(p: u32, e: u32, i: usize, m: u32) -> PyResult<Self> {
        Ok(PyCodeSpec {
            inner: CodeSpec::new(p, m, e, i).map_err(to_py)?,
        })
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn e(&self) -> u32 {
        self.inner.e()
    }

    #[getter]
    fn i(&self) -> usize {
        self.inner.i()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn field(&self) -> PyField {
        PyField {
            inner: self.inner.field().clone(),
        }
    }

    fn generator(&self) -> Vec<u32> {
        self.inner.generator().encodings()
    }

    fn encode(&self, message: Vec<u32>) -> PyResult<Vec<u32>> {
        let fs = self.inner.field();
        let coeffs = message
            .iter()
            .map(|&v| fs.element(v))
            .collect::<sympair::Result<Vec<_>>>()
            .map_err(to_py)?;
        Ok(self
            .inner
            .encode(&Poly::new(coeffs))
            .map_err(to_py)?
            .encodings())
    }

    fn contains(&self, v: Vec<u32>) -> PyResult<bool> {
        let word = RingElement::from_encodings(self.inner.field(), &v).map_err(to_py)?;
        self.inner.contains(&word).map_err(to_py)
    }

    fn hamming_distance(&self) -> PyResult<usize> {
        self.inner.closed_form_hamming_distance().map_err(to_py)
    }

    /// `(d_p, branch label)` from the closed form.
    fn pair_distance(&self) -> PyResult<(usize, String)> {
        let d = self.inner.closed_form_pair_distance().map_err(to_py)?;
        Ok((d.value, d.branch))
    }

    fn is_mds_pair(&self) -> PyResult<bool> {
        self.inner.is_mds_pair().map_err(to_py)
    }

    /// Brute-force minimum pair weight as `(weight, witness)`.
    #[pyo3(signature = (max_enum = None))]
    fn min_pair_weight(
        &self,
        py: Python<'_>,
        max_enum: Option<u64>,
    ) -> PyResult<(usize, Vec<u32>)> {
        let b = budget(max_enum)?;
        let spec = self.inner.clone();
        let min = py
            .detach(move || min_pair_weight_bruteforce(&spec, b))
            .map_err(to_py)?;
        Ok((min.weight, min.witness.encodings()))
    }

    #[pyo3(signature = (max_enum = None))]
    fn min_hamming_weight(
        &self,
        py: Python<'_>,
        max_enum: Option<u64>,
    ) -> PyResult<(usize, Vec<u32>)> {
        let b = budget(max_enum)?;
        let spec = self.inner.clone();
        let min = py
            .detach(move || min_hamming_weight_bruteforce(&spec, b))
            .map_err(to_py)?;
        Ok((min.weight, min.witness.encodings()))
    }

    /// `(successes, trials, success rate)` of a seeded decoding experiment.
    #[pyo3(signature = (t, trials, seed, max_enum = None))]
    fn simulate(
        &self,
        py: Python<'_>,
        t: usize,
        trials: usize,
        seed: u64,
        max_enum: Option<u64>,
    ) -> PyResult<(usize, usize, f64)> {
        let b = budget(max_enum)?;
        let spec = self.inner.clone();
        let report = py
            .detach(move || correctability_experiment(&spec, t, trials, seed, b))
            .map_err(to_py)?;
        Ok((report.successes, report.trials, report.success_rate))
    }

    fn __repr__(&self) -> String {
        format!(
            "CodeSpec(p={}, e={}, i={}, m={})",
            self.inner.p(),
            self.inner.e(),
            self.inner.i(),
            self.inner.m()
        )
    }
}

/// One row per exponent: `(i, dimension, d_h, d_p, branch, mds_pair)`.
#[pyfunction]
#[pyo3(signature = (p, e, m = 1))]
#[allow(clippy::type_complexity)]
fn table(
    p: u32,
    e: u32,
    m: u32,
) -> PyResult<Vec<(usize, usize, usize, usize, String, Option<bool>)>> {
    Ok(distance_table(p, e, m)
        .map_err(to_py)?
        .into_iter()
        .map(|r| (r.i, r.dimension, r.d_h, r.d_p, r.branch, r.mds_pair))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (p, e, m = 1))]
fn mds(p: u32, e: u32, m: u32) -> PyResult<Vec<usize>> {
    mds_exponents(p, e, m).map_err(to_py)
}

/// Closed forms against the oracle for every code of length `p^e`. Rows are
/// `(i, formula_d_h, oracle_d_h, formula_d_p, oracle_d_p, status)` with
/// `None` for oracle values skipped under the budget.
#[pyfunction]
#[pyo3(signature = (p, e, m = 1, max_enum = None))]
#[allow(clippy::type_complexity)]
fn verify(
    py: Python<'_>,
    p: u32,
    e: u32,
    m: u32,
    max_enum: Option<u64>,
) -> PyResult<
    Vec<(
        usize,
        usize,
        Option<usize>,
        usize,
        Option<usize>,
        &'static str,
    )>,
> {
    let b = budget(max_enum)?;
    let report = py
        .detach(move || sympair::oracle::verify_family(p, e, m, b))
        .map_err(to_py)?;
    Ok(report
        .entries
        .into_iter()
        .map(|x| {
            let status = match x.status {
                Status::Match => "match",
                Status::Mismatch => "mismatch",
                Status::Skipped => "skipped",
            };
            (
                x.i,
                x.formula_d_h,
                x.oracle_d_h,
                x.formula_d_p,
                x.oracle_d_p,
                status,
            )
        })
        .collect())
}

#[pymodule]
fn sympair_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_class::<PyCodeSpec>()?;
    m.add_function(wrap_pyfunction!(table, m)?)?;
    m.add_function(wrap_pyfunction!(mds, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    Ok(())
}
