//! Python bindings: the toolkit's operations on plain Python data.
//!
//! Scalars are strings ("7", "-3/4", or residues like "5"), points are
//! 3-sequences of scalar strings, decompositions are sequences of
//! (point, lambda) pairs. Reports come back as dicts with the same shape as
//! the CLI's JSON documents.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::IntoPyObjectExt;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use tercet::certifier::{certify as certify_rs, CertifyOptions};
use tercet::geometry::synthesize;
use tercet::gup::{gup_check as gup_check_rs, GupOptions};
use tercet::hilbert::profile as profile_rs;
use tercet::oracle::{all_decompositions, OracleOptions};
use tercet::prooflab::analyze_pair as analyze_pair_rs;
use tercet::{Decomposition, Field, Prefilter, ProjectivePoint, Scalar, TernaryForm};

type PyPoint = [String; 3];
type PyTerm = (PyPoint, String);

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(prime: Option<u32>) -> PyResult<Field> {
    match prime {
        None => Ok(Field::Rational),
        Some(p) => Field::prime(p).map_err(err),
    }
}

fn parse_point(raw: &PyPoint, field: Field) -> PyResult<ProjectivePoint> {
    let c: Vec<Scalar> = raw
        .iter()
        .map(|s| Scalar::parse(s, field))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ProjectivePoint::new(c[0].clone(), c[1].clone(), c[2].clone()).map_err(err)
}

fn parse_points(raw: &[PyPoint], field: Field) -> PyResult<Vec<ProjectivePoint>> {
    raw.iter().map(|p| parse_point(p, field)).collect()
}

fn parse_decomposition(d: u32, raw: &[PyTerm], field: Field) -> PyResult<Decomposition> {
    let terms = raw
        .iter()
        .map(|(point, lambda)| {
            Ok((
                parse_point(point, field)?,
                Scalar::parse(lambda, field).map_err(err)?,
            ))
        })
        .collect::<PyResult<Vec<_>>>()?;
    Decomposition::new(d, terms).map_err(err)
}

fn parse_form(d: u32, coeffs: &[String], field: Field) -> PyResult<TernaryForm> {
    let parsed: Vec<Scalar> = coeffs
        .iter()
        .map(|s| Scalar::parse(s, field))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    TernaryForm::new(d, parsed).map_err(err)
}

fn json_to_py(py: Python<'_>, value: &Value) -> PyResult<Py<PyAny>> {
    match value {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().expect("number fits f64").into_py_any(py)
            }
        }
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let json = serde_json::to_value(value).map_err(err)?;
    json_to_py(py, &json)
}

/// Run the identifiability pipeline; returns the certificate as a dict.
#[pyfunction]
#[pyo3(signature = (d, decomposition, form=None, prime=None, cap=None, prefilter=false))]
fn certify(
    py: Python<'_>,
    d: u32,
    decomposition: Vec<PyTerm>,
    form: Option<Vec<String>>,
    prime: Option<u32>,
    cap: Option<u64>,
    prefilter: bool,
) -> PyResult<Py<PyAny>> {
    let field = parse_field(prime)?;
    let dec = parse_decomposition(d, &decomposition, field)?;
    let form = form.map(|c| parse_form(d, &c, field)).transpose()?;
    let mut opts = CertifyOptions::default();
    if let Some(cap) = cap {
        opts.gup.cap = cap;
    }
    if prefilter {
        opts.gup.prefilter = Some(Prefilter::random());
    }
    let cert = certify_rs(form.as_ref(), &dec, &opts).map_err(err)?;
    to_py(py, &cert)
}

/// Decide general uniform position for a point set; returns the report dict.
#[pyfunction]
#[pyo3(signature = (points, prime=None, cap=None, prefilter=false))]
fn gup_check(
    py: Python<'_>,
    points: Vec<PyPoint>,
    prime: Option<u32>,
    cap: Option<u64>,
    prefilter: bool,
) -> PyResult<Py<PyAny>> {
    let field = parse_field(prime)?;
    let pts = parse_points(&points, field)?;
    let mut opts = GupOptions::default();
    if let Some(cap) = cap {
        opts.cap = cap;
    }
    if prefilter {
        opts.prefilter = Some(Prefilter::random());
    }
    let report = gup_check_rs(&pts, &opts).map_err(err)?;
    to_py(py, &report)
}

/// Hilbert profile of a point set as a dict of values and differences.
#[pyfunction]
#[pyo3(signature = (points, prime=None))]
fn hilbert_profile(
    py: Python<'_>,
    points: Vec<PyPoint>,
    prime: Option<u32>,
) -> PyResult<Py<PyAny>> {
    let field = parse_field(prime)?;
    let pts = parse_points(&points, field)?;
    let prof = profile_rs(&pts).map_err(err)?;
    to_py(py, &prof)
}

/// Instrument a pair of expressions of one form; returns the analysis dict.
#[pyfunction]
#[pyo3(signature = (d, decomposition, decomposition2, form=None, prime=None))]
fn analyze_pair(
    py: Python<'_>,
    d: u32,
    decomposition: Vec<PyTerm>,
    decomposition2: Vec<PyTerm>,
    form: Option<Vec<String>>,
    prime: Option<u32>,
) -> PyResult<Py<PyAny>> {
    let field = parse_field(prime)?;
    let dec1 = parse_decomposition(d, &decomposition, field)?;
    let dec2 = parse_decomposition(d, &decomposition2, field)?;
    let f = match form {
        Some(c) => parse_form(d, &c, field)?,
        None => synthesize(&dec1).map_err(err)?,
    };
    let analysis = analyze_pair_rs(&f, &dec1, &dec2).map_err(err)?;
    to_py(py, &analysis)
}

/// Exhaustively enumerate length-k expressions of a form over F_p.
#[pyfunction]
#[pyo3(signature = (prime, d, form, k, cap=None))]
fn oracle_search(
    py: Python<'_>,
    prime: u32,
    d: u32,
    form: Vec<String>,
    k: usize,
    cap: Option<u64>,
) -> PyResult<Py<PyAny>> {
    let field = parse_field(Some(prime))?;
    let f = parse_form(d, &form, field)?;
    let mut opts = OracleOptions::default();
    if let Some(cap) = cap {
        opts.cap = cap;
    }
    let result = all_decompositions(&f, k, &opts).map_err(err)?;
    to_py(py, &result)
}

/// Expand a decomposition into its form's coefficient strings.
#[pyfunction]
#[pyo3(signature = (d, decomposition, prime=None))]
fn synthesize_form(
    py: Python<'_>,
    d: u32,
    decomposition: Vec<PyTerm>,
    prime: Option<u32>,
) -> PyResult<Py<PyAny>> {
    let field = parse_field(prime)?;
    let dec = parse_decomposition(d, &decomposition, field)?;
    let f = synthesize(&dec).map_err(err)?;
    to_py(py, &f)
}

/// Largest certifiable length per degree: max k with 8k < d^2 + 2d.
#[pyfunction]
fn bound_table(py: Python<'_>, from: u32, to: u32) -> PyResult<Py<PyAny>> {
    if from < 1 || from > to {
        return Err(PyValueError::new_err("need 1 <= from <= to"));
    }
    let list = PyList::empty(py);
    for d in from..=to {
        let rhs = d as u64 * d as u64 + 2 * d as u64;
        let dict = PyDict::new(py);
        dict.set_item("d", d)?;
        dict.set_item("k_max", rhs.div_ceil(8).saturating_sub(1))?;
        list.append(dict)?;
    }
    list.into_py_any(py)
}

#[pymodule]
fn tercet_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(gup_check, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_profile, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_pair, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_search, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize_form, m)?)?;
    m.add_function(wrap_pyfunction!(bound_table, m)?)?;
    Ok(())
}
