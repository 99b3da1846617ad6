//! Python bindings for `combinadics`.
//!
//! Naturals cross the boundary as Python `int`s; combinations as lists of
//! ints in ascending order; representations as [`PyCombinadic`] objects whose
//! coefficients read `c_r` first.

use std::io::Cursor;

use ::combinadics::{binomial as core_binomial, cli, codec, ranking, verify};
use ::combinadics::{Combinadic, Combination, Error, Natural, VerifyReport};
use pyo3::basic::CompareOp;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(
    combinadics,
    CombinadicsError,
    PyValueError,
    "Domain error; the message starts with the error kind."
);

fn to_py(e: Error) -> PyErr {
    CombinadicsError::new_err(format!("{}: {}", e.kind(), e))
}

/// A degree-r representation, coefficients strictly decreasing.
#[pyclass(
    name = "Combinadic",
    module = "combinadics",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyCombinadic(Combinadic);

#[pymethods]
impl PyCombinadic {
    #[new]
    fn new(coefficients: Vec<Natural>) -> PyResult<Self> {
        codec::validate(coefficients)
            .map(PyCombinadic)
            .map_err(to_py)
    }

    /// The representation of zero, `(r-1, ..., 1, 0)`.
    #[staticmethod]
    fn zero(r: usize) -> PyResult<Self> {
        codec::zero_rep(r).map(PyCombinadic).map_err(to_py)
    }

    #[staticmethod]
    fn encode(m: Natural, r: usize) -> PyResult<Self> {
        codec::encode(&m, r).map(PyCombinadic).map_err(to_py)
    }

    /// Parses the `c_r,...,c_1` text form.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(PyCombinadic).map_err(to_py)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn coefficients(&self) -> Vec<Natural> {
        self.0.coefficients().to_vec()
    }

    fn decode(&self) -> Natural {
        codec::decode(&self.0)
    }

    fn successor(&self) -> Self {
        PyCombinadic(codec::successor(&self.0))
    }

    fn predecessor(&self) -> PyResult<Self> {
        codec::predecessor(&self.0).map(PyCombinadic).map_err(to_py)
    }

    /// Ascending combination view.
    fn to_combination(&self) -> Vec<Natural> {
        Combination::from(self.0.clone()).into_elements()
    }

    fn __richcmp__(&self, other: PyRef<'_, Self>, op: CompareOp) -> PyResult<bool> {
        let ord = match op {
            CompareOp::Eq => return Ok(self.0 == other.0),
            CompareOp::Ne => return Ok(self.0 != other.0),
            _ => codec::compare(&self.0, &other.0).map_err(to_py)?,
        };
        Ok(op.matches(ord))
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __len__(&self) -> usize {
        self.0.degree()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Combinadic({})", self.0)
    }
}

/// Lazy colex stream from `enumerate`.
#[pyclass(name = "CombinationStream", module = "combinadics")]
struct PyCombinationStream(ranking::Enumerate);

#[pymethods]
impl PyCombinationStream {
    fn __iter__(slf: PyRef<'_, Self>) -> PyRef<'_, Self> {
        slf
    }

    fn __next__(&mut self) -> Option<Vec<Natural>> {
        self.0.next().map(Combination::into_elements)
    }
}

#[pyclass(name = "VerifyReport", module = "combinadics", frozen, get_all)]
struct PyVerifyReport {
    r: Option<usize>,
    coefficient_bound: Option<usize>,
    values_covered: Natural,
    duplicates: Vec<(Natural, String, String)>,
    gaps: Vec<Natural>,
    identities_checked: u64,
    identities_failed: u64,
    text: String,
}

impl From<VerifyReport> for PyVerifyReport {
    fn from(report: VerifyReport) -> Self {
        PyVerifyReport {
            text: report.to_string(),
            r: report.r,
            coefficient_bound: report.coefficient_bound,
            values_covered: report.values_covered,
            duplicates: report
                .duplicates
                .into_iter()
                .map(|(v, a, b)| (v, a.to_string(), b.to_string()))
                .collect(),
            gaps: report.gaps,
            identities_checked: report.identities_checked,
            identities_failed: report.identities_failed,
        }
    }
}

#[pymethods]
impl PyVerifyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.duplicates.is_empty() && self.gaps.is_empty() && self.identities_failed == 0
    }

    fn __str__(&self) -> String {
        self.text.clone()
    }

    fn __repr__(&self) -> String {
        format!(
            "VerifyReport(passed={}, values_covered={})",
            if self.passed() { "True" } else { "False" },
            self.values_covered
        )
    }
}

fn combination(elements: Vec<Natural>) -> PyResult<Combination> {
    Combination::new(elements).map_err(to_py)
}

/// C(n, r), zero when n < r.
#[pyfunction]
fn binomial(n: Natural, r: Natural) -> Natural {
    core_binomial(&n, &r)
}

#[pyfunction]
fn pascal_lhs_rhs(n: Natural, r: usize) -> PyResult<(Natural, Natural)> {
    ::combinadics::binomial::pascal_lhs_rhs(&n, r).map_err(to_py)
}

#[pyfunction]
fn hockey_stick_lhs_rhs(n: Natural, r: usize) -> PyResult<(Natural, Natural)> {
    ::combinadics::binomial::hockey_stick_lhs_rhs(&n, r).map_err(to_py)
}

#[pyfunction]
fn corollary_gap(n: Natural, r: usize) -> PyResult<(Natural, Natural)> {
    ::combinadics::binomial::corollary_gap(&n, r).map_err(to_py)
}

#[pyfunction]
fn encode(m: Natural, r: usize) -> PyResult<PyCombinadic> {
    PyCombinadic::encode(m, r)
}

#[pyfunction]
fn decode(rep: PyRef<'_, PyCombinadic>) -> Natural {
    rep.decode()
}

#[pyfunction]
fn rank(elements: Vec<Natural>) -> PyResult<Natural> {
    Ok(ranking::rank(&combination(elements)?))
}

#[pyfunction]
fn unrank(x: Natural, r: usize) -> PyResult<Vec<Natural>> {
    ranking::unrank(&x, r)
        .map(Combination::into_elements)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (r, start = Natural::from(0u32), count = Natural::from(10u32)))]
fn enumerate(r: usize, start: Natural, count: Natural) -> PyResult<PyCombinationStream> {
    ranking::enumerate(r, &start, &count)
        .map(PyCombinationStream)
        .map_err(to_py)
}

#[pyfunction]
fn split_range(
    r: usize,
    start: Natural,
    end: Natural,
    parts: usize,
) -> PyResult<Vec<(Natural, Natural)>> {
    ranking::split_range(r, &start, &end, parts).map_err(to_py)
}

#[pyfunction]
fn to_bitstring(elements: Vec<Natural>, n: usize) -> PyResult<String> {
    ranking::to_bitstring(&combination(elements)?, n).map_err(to_py)
}

#[pyfunction]
fn from_bitstring(bits: &str) -> PyResult<Vec<Natural>> {
    ranking::from_bitstring(bits)
        .map(Combination::into_elements)
        .map_err(to_py)
}

#[pyfunction]
fn sweep_uniqueness(
    py: Python<'_>,
    r: usize,
    coefficient_bound: usize,
) -> PyResult<PyVerifyReport> {
    py.detach(|| verify::sweep_uniqueness(r, coefficient_bound))
        .map(PyVerifyReport::from)
        .map_err(to_py)
}

#[pyfunction]
fn sweep_roundtrip(py: Python<'_>, r: usize, m_max: Natural) -> PyResult<PyVerifyReport> {
    py.detach(|| verify::sweep_roundtrip(r, &m_max))
        .map(PyVerifyReport::from)
        .map_err(to_py)
}

#[pyfunction]
fn sweep_identities(py: Python<'_>, n_max: usize, r_max: usize) -> PyVerifyReport {
    py.detach(|| verify::sweep_identities(n_max, r_max)).into()
}

/// Runs the command-line front end in-process:
/// `run_cli(["encode", "7", "--terms", "3"])` returns `(0, "4,3,0\n", "")`.
#[pyfunction]
#[pyo3(signature = (args, stdin = ""))]
fn run_cli(args: Vec<String>, stdin: &str) -> (i32, String, String) {
    let mut input = Cursor::new(stdin.as_bytes());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("combinadics".to_owned()).chain(args);
    let code = cli::run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[pymodule]
#[pyo3(name = "combinadics")]
fn combinadics_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CombinadicsError", m.py().get_type::<CombinadicsError>())?;
    m.add_class::<PyCombinadic>()?;
    m.add_class::<PyCombinationStream>()?;
    m.add_class::<PyVerifyReport>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(pascal_lhs_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(hockey_stick_lhs_rhs, m)?)?;
    m.add_function(wrap_pyfunction!(corollary_gap, m)?)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(rank, m)?)?;
    m.add_function(wrap_pyfunction!(unrank, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(split_range, m)?)?;
    m.add_function(wrap_pyfunction!(to_bitstring, m)?)?;
    m.add_function(wrap_pyfunction!(from_bitstring, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_uniqueness, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_identities, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pyo3::types::PyDict;

    fn with_module(code: &str) {
        Python::attach(|py| {
            let module = pyo3::wrap_pymodule!(combinadics_module)(py);
            let globals = PyDict::new(py);
            globals.set_item("c", module).unwrap();
            let code = std::ffi::CString::new(code).unwrap();
            py.run(&code, Some(&globals), None)
                .unwrap_or_else(|e| panic!("{e}"));
        });
    }

    #[test]
    fn codec_round_trip() {
        with_module(
            r#"
rep = c.encode(7, 3)
assert str(rep) == "4,3,0", rep
assert rep.coefficients == [4, 3, 0]
assert rep.decode() == 7
assert str(rep.successor()) == "4,3,1"
assert str(c.Combinadic.zero(3).successor()) == "3,1,0"
assert c.Combinadic.parse("5,1,0") > rep
big = 10**80 + 12345
assert c.Combinadic.encode(big, 7).decode() == big
"#,
        );
    }

    #[test]
    fn errors_carry_kind() {
        with_module(
            r#"
for bad, kind in [(lambda: c.Combinadic([3, 3, 0]), "NotStrictlyDecreasing"),
                  (lambda: c.Combinadic.zero(3).predecessor(), "PredecessorOfZero"),
                  (lambda: c.from_bitstring("0000"), "EmptyCombination"),
                  (lambda: c.encode(1, 0), "ZeroDegree")]:
    try:
        bad()
    except c.CombinadicsError as e:
        assert str(e).startswith(kind), str(e)
        assert isinstance(e, ValueError)
    else:
        raise AssertionError(kind)
"#,
        );
    }

    #[test]
    fn ranking_and_reports() {
        with_module(
            r#"
assert c.rank([1, 2, 3]) == 3
assert c.unrank(7, 3) == [0, 3, 4]
assert list(c.enumerate(2, 0, 4)) == [[0, 1], [0, 2], [1, 2], [0, 3]]
assert c.split_range(3, 0, 10, 3) == [(0, 4), (4, 7), (7, 10)]
assert c.to_bitstring([2, 3], 4) == "1100"
rep = c.sweep_uniqueness(3, 20)
assert rep.passed and rep.values_covered == 1140
assert str(rep) == "RESULT pass\nCOVERED 1140\nIDENTITIES 0 0\n"
assert c.run_cli(["decode", "2,1,0"]) == (0, "0\n", "")
"#,
        );
    }
}
