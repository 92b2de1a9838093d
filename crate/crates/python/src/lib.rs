//! Python bindings for `cayley-core`.
//!
//! Rationals cross the boundary as `fractions.Fraction` on the way out and as
//! anything whose `str()` is `p/q` or an integer on the way in.

use cayley_core::deformations::{conical_cayley_dimension, twisted_cubic_coupled as coupled};
use cayley_core::eta::{eta_summary, expected_index as index, IndexQuery};
use cayley_core::frames::FrameData;
use cayley_core::riemann_roch::{
    genus_complete_intersection as genus_ci, h0 as core_h0, LineBundle,
};
use cayley_core::spectrum::{
    eigenvalue_membership as membership, enumerate_spectrum, SpectrumQuery,
};
use cayley_core::weights::{enumerate_weights as enumerate, weight_multiplicity as multiplicity};
use cayley_core::{arith, ConeProfile, Rational};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    cayley,
    CayleyError,
    PyValueError,
    "Rejected by the exact engine."
);

fn err(e: cayley_core::Error) -> PyErr {
    CayleyError::new_err(e.to_string())
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?;
    text.to_str()?.parse().map_err(err)
}

/// `(weight, value, multiplicity)` as handed to Python.
type WeightRow<'py> = (String, Option<Bound<'py, PyAny>>, u64);

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.to_string(),))
}

/// A cone over a complex curve in CP^3.
#[pyclass(name = "Profile", frozen)]
struct PyProfile {
    inner: ConeProfile,
}

#[pymethods]
impl PyProfile {
    /// One of the compiled-in profiles "c1", "c2", "c3".
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        ConeProfile::builtin(name)
            .map(|inner| PyProfile { inner })
            .map_err(err)
    }

    #[staticmethod]
    fn from_toml(text: &str) -> PyResult<Self> {
        text.parse().map(|inner| PyProfile { inner }).map_err(err)
    }

    fn to_toml(&self) -> String {
        self.inner.to_toml()
    }

    #[getter]
    fn name(&self) -> &str {
        self.inner.name()
    }

    #[getter]
    fn genus(&self) -> u32 {
        self.inner.genus()
    }

    #[getter]
    fn kappa<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.inner.kappa())
    }

    #[getter]
    fn lattice_denominator(&self) -> u32 {
        self.inner.lattice_denominator()
    }

    #[getter]
    fn connection(&self) -> String {
        self.inner.connection().to_string()
    }

    fn __repr__(&self) -> String {
        format!("Profile('{}')", self.inner.name())
    }
}

#[pyfunction]
fn h0(degree: i64, genus: u32) -> PyResult<u64> {
    core_h0(&LineBundle::new(degree, genus)).map_err(err)
}

#[pyfunction]
fn genus_complete_intersection(d1: u32, d2: u32) -> PyResult<u64> {
    genus_ci(d1, d2).map_err(err)
}

/// `zeta(-n)` as a Fraction.
#[pyfunction]
fn zeta_nonpositive<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &arith::zeta_nonpositive(n))
}

/// `[(q, eigenvalue, multiplicity), ...]` for levels `0..=q_max`.
#[pyfunction]
#[pyo3(signature = (degree, kappa, q_max=10))]
fn spectrum<'py>(
    py: Python<'py>,
    degree: i64,
    kappa: &Bound<'py, PyAny>,
    q_max: u64,
) -> PyResult<Vec<(u64, Bound<'py, PyAny>, u64)>> {
    let query = SpectrumQuery::new(degree, rational(kappa)?).map_err(err)?;
    enumerate_spectrum(&query, q_max)
        .into_iter()
        .map(|l| Ok((l.q, fraction(py, &l.eigenvalue)?, l.multiplicity)))
        .collect()
}

/// `(q, multiplicity)` if `target` is an eigenvalue, else `None`.
#[pyfunction]
fn eigenvalue_membership(
    degree: i64,
    kappa: &Bound<'_, PyAny>,
    target: &Bound<'_, PyAny>,
) -> PyResult<Option<(u64, u64)>> {
    let query = SpectrumQuery::new(degree, rational(kappa)?).map_err(err)?;
    Ok(membership(&query, &rational(target)?)
        .map_err(err)?
        .map(|l| (l.q, l.multiplicity)))
}

#[pyfunction]
fn weight_multiplicity(profile: &PyProfile, weight: &Bound<'_, PyAny>) -> PyResult<u64> {
    Ok(multiplicity(&profile.inner, &rational(weight)?)
        .map_err(err)?
        .multiplicity)
}

/// `[(weight, value, multiplicity), ...]`; `value` is a Fraction for
/// rational weights and `None` for surds, whose `weight` reads `-1 + sqrt(r)`.
#[pyfunction]
fn enumerate_weights<'py>(
    py: Python<'py>,
    profile: &PyProfile,
    min: &Bound<'py, PyAny>,
    max: &Bound<'py, PyAny>,
) -> PyResult<Vec<WeightRow<'py>>> {
    enumerate(&profile.inner, &rational(min)?, &rational(max)?)
        .map_err(err)?
        .into_iter()
        .map(|e| {
            let value = e.value.as_ref().map(|v| fraction(py, v)).transpose()?;
            Ok((e.weight.to_string(), value, e.multiplicity))
        })
        .collect()
}

/// `(complex_dim, cayley_dim)`.
#[pyfunction]
fn conical_dimensions(profile: &PyProfile) -> PyResult<(u64, u64)> {
    let r = conical_cayley_dimension(&profile.inner).map_err(err)?;
    Ok((r.complex_dim, r.cayley_dim))
}

#[pyfunction]
fn twisted_cubic_coupled(m: &Bound<'_, PyAny>) -> PyResult<u64> {
    Ok(coupled(&rational(m)?).map_err(err)?.total)
}

/// `{"eta": ..., "d0": ..., "correction": ...}`.
#[pyfunction]
#[pyo3(signature = (profile, k0=1))]
fn eta<'py>(py: Python<'py>, profile: &PyProfile, k0: u64) -> PyResult<Bound<'py, PyDict>> {
    let s = eta_summary(&profile.inner, k0).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("eta", fraction(py, &s.eta)?)?;
    out.set_item("d0", s.d0)?;
    out.set_item("correction", fraction(py, &s.correction)?)?;
    Ok(out)
}

#[pyfunction]
fn expected_index<'py>(
    py: Python<'py>,
    profile: &PyProfile,
    chi: i64,
    rate: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let query = IndexQuery {
        chi,
        rate: rational(rate)?,
        profile: profile.inner.clone(),
    };
    fraction(py, &index(&query).map_err(err)?.index)
}

/// `{equation name: passed}` for the twisted cubic link frame.
#[pyfunction]
fn verify_frames<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
    let report = FrameData::twisted_cubic_link()
        .verify_structure_equations()
        .map_err(err)?;
    let out = PyDict::new(py);
    for e in report.equations {
        out.set_item(e.name, e.passed)?;
    }
    Ok(out)
}

#[pymodule]
fn cayley(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CayleyError", m.py().get_type::<CayleyError>())?;
    m.add_class::<PyProfile>()?;
    m.add_function(wrap_pyfunction!(h0, m)?)?;
    m.add_function(wrap_pyfunction!(genus_complete_intersection, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_nonpositive, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(eigenvalue_membership, m)?)?;
    m.add_function(wrap_pyfunction!(weight_multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_weights, m)?)?;
    m.add_function(wrap_pyfunction!(conical_dimensions, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_cubic_coupled, m)?)?;
    m.add_function(wrap_pyfunction!(eta, m)?)?;
    m.add_function(wrap_pyfunction!(expected_index, m)?)?;
    m.add_function(wrap_pyfunction!(verify_frames, m)?)?;
    Ok(())
}
