//! Python bindings: the series ring, the product families, the identity
//! checkers, and the partition counters, as a `qlattice` extension module.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qlattice::binpart;
use qlattice::oracle;
use qlattice::qseries::{
    expand_f_det, expand_f_newton, expand_f_product, expand_g_det, expand_g_newton,
    expand_g_product, functional_eq_check, macmahon_specials, qbinom_product, qbinom_sum,
    quotient_5_6_check, ProductSpec,
};
use qlattice::report::{Status, VerificationReport};
use qlattice::series::{Rat, Series, VarTable};
use qlattice::vpv;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_rat(s: &str) -> PyResult<Rat> {
    s.trim().parse::<Rat>().map_err(value_err)
}

/// A truncated polynomial ring: variable names plus per-variable caps.
#[pyclass(name = "Ring", frozen)]
struct PyRing {
    inner: Arc<VarTable>,
}

#[pymethods]
impl PyRing {
    #[new]
    fn new(names: Vec<String>, caps: Vec<u32>) -> PyResult<PyRing> {
        if names.len() != caps.len() {
            return Err(value_err("names and caps must have the same length"));
        }
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Ok(PyRing {
            inner: VarTable::new(&refs, &caps),
        })
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    #[getter]
    fn caps(&self) -> Vec<u32> {
        self.inner.caps().to_vec()
    }

    fn zero(&self) -> PySeries {
        PySeries {
            inner: Series::zero(&self.inner),
        }
    }

    fn one(&self) -> PySeries {
        PySeries {
            inner: Series::one(&self.inner),
        }
    }

    fn var(&self, name: &str) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: Series::var(&self.inner, name).map_err(value_err)?,
        })
    }

    /// c * x1^e1 ... xn^en with c given as a rational string like "3/2".
    fn monomial(&self, exps: Vec<u32>, coeff: &str) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: Series::monomial(&self.inner, &exps, parse_rat(coeff)?).map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!(
            "Ring(names={:?}, caps={:?})",
            self.inner.names(),
            self.inner.caps()
        )
    }
}

/// An exact truncated multivariate power series.
#[pyclass(name = "Series", frozen, from_py_object)]
#[derive(Clone)]
struct PySeries {
    inner: Series,
}

#[pymethods]
impl PySeries {
    fn __add__(&self, other: &PySeries) -> PySeries {
        PySeries {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &PySeries) -> PySeries {
        PySeries {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &PySeries) -> PySeries {
        PySeries {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn __neg__(&self) -> PySeries {
        PySeries {
            inner: self.inner.neg(),
        }
    }

    fn __eq__(&self, other: &PySeries) -> bool {
        self.inner == other.inner
    }

    fn inverse(&self) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: self.inner.inverse().map_err(value_err)?,
        })
    }

    fn exp(&self) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: self.inner.exp0().map_err(value_err)?,
        })
    }

    fn log(&self) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: self.inner.log1().map_err(value_err)?,
        })
    }

    /// Raise a unit-constant-term series to a rational power like "1/2".
    fn pow(&self, exponent: &str) -> PyResult<PySeries> {
        Ok(PySeries {
            inner: self.inner.pow_const(&parse_rat(exponent)?).map_err(value_err)?,
        })
    }

    /// Coefficient of the given exponent vector, as a rational string.
    fn coeff(&self, exps: Vec<u32>) -> PyResult<String> {
        Ok(self.inner.coeff(&exps).map_err(value_err)?.to_string())
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<PySeries> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(value_err)?;
        Ok(PySeries {
            inner: Series::from_json(&v).map_err(value_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.inner)
    }
}

#[pyfunction]
fn expand_f(n: usize, x_cap: u32, a_cap: u32, t_cap: u32) -> PySeries {
    PySeries {
        inner: expand_f_product(&ProductSpec::new(n, x_cap, a_cap, t_cap)),
    }
}

#[pyfunction]
fn expand_g(n: usize, x_cap: u32, a_cap: u32, t_cap: u32) -> PySeries {
    PySeries {
        inner: expand_g_product(&ProductSpec::new(n, x_cap, a_cap, t_cap)),
    }
}

#[pyfunction]
fn qbinom(q_cap: u32, a_cap: u32, t_cap: u32) -> PySeries {
    PySeries {
        inner: qbinom_sum(q_cap, a_cap, t_cap),
    }
}

#[pyfunction]
fn binary_product(q_cap: u32, t_cap: u32) -> PySeries {
    PySeries {
        inner: binpart::lhs_expand(&binpart::bin_ring(q_cap, t_cap)),
    }
}

fn parse_region(name: &str) -> PyResult<vpv::Region> {
    match name {
        "hyperquadrant" => Ok(vpv::Region::Hyperquadrant),
        "axis" => Ok(vpv::Region::AxisExtended),
        "pyramid" => Ok(vpv::Region::Hyperpyramid),
        other => Err(value_err(format!("unknown region {other:?}"))),
    }
}

#[pyfunction]
fn visible_points(region: &str, caps: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
    Ok(vpv::visible_points(parse_region(region)?, &caps))
}

#[pyfunction]
#[pyo3(signature = (n, rows=None, trace=None))]
fn count_plane_partitions(n: u64, rows: Option<u64>, trace: Option<u64>) -> u64 {
    oracle::count_plane_partitions(n, rows, trace)
}

#[pyfunction]
fn count_vector_partitions(target: Vec<u64>, distinct: bool) -> u64 {
    let parts = oracle::parts_in_box(&target);
    let mode = if distinct {
        oracle::VectorMode::Distinct
    } else {
        oracle::VectorMode::Unrestricted
    };
    oracle::count_vector_partitions(&target, &parts, mode)
}

#[pyfunction]
fn count_b(j: u64, k: u64) -> (u64, u64) {
    binpart::count_b(j, k)
}

fn report_dict<'py>(py: Python<'py>, r: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("identity", &r.identity)?;
    d.set_item("status", r.status.to_string())?;
    if let Some(m) = &r.mismatch {
        d.set_item("monomial", m.monomial.clone())?;
        d.set_item("lhs", m.lhs.to_string())?;
        d.set_item("rhs", m.rhs.to_string())?;
    }
    if let Some(res) = r.residual {
        d.set_item("residual", res)?;
    }
    if let Some(t) = r.tail_estimate {
        d.set_item("tail_estimate", t)?;
    }
    d.set_item("ok", r.status == Status::Pass)?;
    Ok(d)
}

/// Run a named identity check; returns a dict with at least "status"/"ok".
#[pyfunction]
#[pyo3(signature = (identity, n=2, cap=4, k=0))]
fn verify<'py>(
    py: Python<'py>,
    identity: &str,
    n: usize,
    cap: u32,
    k: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let report = match identity {
        "qbinom" => {
            let lhs = qbinom_sum(cap, cap, cap);
            let rhs = qbinom_product(cap, cap, cap);
            VerificationReport::compare("qbinom", &lhs, &rhs)
        }
        "fn-det" => {
            let spec = ProductSpec::new(n, cap, cap, cap);
            let direct = expand_f_product(&spec);
            VerificationReport::compare("fn-det/determinant", &direct, &expand_f_det(&spec)).and(
                VerificationReport::compare("fn-det/recurrence", &direct, &expand_f_newton(&spec)),
            )
        }
        "gn-det" => {
            let spec = ProductSpec::new(n, cap, cap, cap);
            let direct = expand_g_product(&spec);
            VerificationReport::compare("gn-det/determinant", &direct, &expand_g_det(&spec)).and(
                VerificationReport::compare("gn-det/recurrence", &direct, &expand_g_newton(&spec)),
            )
        }
        "macmahon" => match macmahon_specials(k, cap) {
            Ok(_) => VerificationReport::pass("macmahon"),
            Err(r) => r,
        },
        "functional-eq" => functional_eq_check(&ProductSpec::new(n, cap, cap, cap)),
        "quotient-5-6" => quotient_5_6_check(cap, cap),
        "vpv-axis" | "vpv-pyramid" => {
            let caps = vec![cap; n];
            if identity == "vpv-axis" {
                vpv::axis_identity_check(n, &caps)
            } else {
                vpv::pyramid_identity_check(n, &caps)
            }
        }
        "binary-weights" => {
            let ring = binpart::bin_ring(cap, cap);
            let lhs = binpart::lhs_expand(&ring);
            VerificationReport::compare("binary-weights", &lhs, &binpart::rhs_expand(&ring))
                .and(binpart::functional_eq_check(&ring))
        }
        other => return Err(value_err(format!("unknown identity {other:?}"))),
    };
    report_dict(py, &report)
}

#[pymodule]
#[pyo3(name = "qlattice")]
fn qlattice_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PySeries>()?;
    m.add_function(wrap_pyfunction!(expand_f, m)?)?;
    m.add_function(wrap_pyfunction!(expand_g, m)?)?;
    m.add_function(wrap_pyfunction!(qbinom, m)?)?;
    m.add_function(wrap_pyfunction!(binary_product, m)?)?;
    m.add_function(wrap_pyfunction!(visible_points, m)?)?;
    m.add_function(wrap_pyfunction!(count_plane_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(count_vector_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(count_b, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
